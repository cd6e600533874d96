#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xisigma/document.hpp"

namespace xisigma {

enum class CheckStatus { Pass, Fail, Skip };

std::string_view to_string(CheckStatus status);

struct CheckReport {
  std::string id;
  std::string model;
  CheckStatus status = CheckStatus::Pass;
  std::vector<std::string> log;
  std::optional<std::string> counterexample;
  double elapsed_ms = 0;

  /// Equality ignoring the elapsed time.
  bool same_outcome(const CheckReport& other) const {
    return id == other.id && model == other.model && status == other.status && log == other.log &&
           counterexample == other.counterexample;
  }
};

struct CheckInfo {
  std::string_view id;
  std::string_view statement;
};

/// Every check, in registry order.
const std::vector<CheckInfo>& check_registry();

/// Throws NotApplicable when the document lacks what the check needs, and
/// InvalidArgument for an unknown id.
CheckReport run_check(std::string_view id, const ModelDocument& doc);

/// Every check in registry order; NotApplicable becomes Skip.
std::vector<CheckReport> run_all(const ModelDocument& doc);

bool any_failed(const std::vector<CheckReport>& reports);

std::string to_text(const std::vector<CheckReport>& reports);
std::string to_json(const std::vector<CheckReport>& reports);

}  // namespace xisigma
