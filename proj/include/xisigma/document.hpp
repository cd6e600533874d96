#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "xisigma/gelfand.hpp"
#include "xisigma/measures.hpp"
#include "xisigma/topology.hpp"

namespace xisigma {

struct AlgebraSpec {
  FunctionAlgebra algebra;
  QuasiNorm norm;
};

/// A parsed model document. See docs/model-format.md for the grammar.
struct ModelDocument {
  std::string name;
  std::uint64_t seed = 0;
  Field field = Field::Real;
  CarrierPtr carrier;
  /// Naturals named for sampling on nat carriers.
  std::size_t window = 8;
  std::vector<SymbolicSet> generators;
  std::optional<TopSpace> topology;
  std::optional<Measure> measure;
  std::optional<AlgebraSpec> algebra;

  /// The set algebra Σ the generators describe, by carrier kind.
  Model model() const;
};

/// Throws Error(Parse) on malformed text and the usual model errors on
/// unresolved references.
ModelDocument parse_document(const std::string& text);
ModelDocument load_document(const std::filesystem::path& path);
/// Emits a document that parses back to an equivalent one.
std::string emit_document(const ModelDocument& doc);

}  // namespace xisigma
