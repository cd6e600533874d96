#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "xisigma/checks.hpp"
#include "xisigma/document.hpp"
#include "xisigma/error.hpp"

using namespace xisigma;

namespace {

int cmd_atoms(const ModelDocument& doc) {
  const Model model = doc.model();
  const auto& atoms = model.algebra().atoms();
  std::cout << atoms.size() << " atoms on " << doc.carrier->describe() << "\n";
  for (std::size_t k = 0; k < atoms.size(); ++k) std::cout << "  A" << k << " = " << atoms[k].to_string() << "\n";
  return 0;
}

int cmd_spectrum(const ModelDocument& doc, bool dot) {
  const Spectrum sp = spectrum_of(doc.model());
  std::cout << (dot ? to_dot(sp) : to_listing(sp));
  return 0;
}

int cmd_lift(const ModelDocument& doc) {
  if (!doc.measure) throw Error(ErrorKind::UnsupportedModel, "the document has no measure section");
  const Model model = doc.model();
  const Spectrum sp = spectrum_of(model);
  const Measure lifted = lift(sp, *doc.measure);
  std::cout << "mu  = " << doc.measure->to_string() << "\n";
  std::cout << "*mu = " << lifted.to_string() << "\n";
  std::cout << "total " << to_string(lifted.total()) << " (mu: " << to_string(doc.measure->total()) << ")\n";
  std::cout << "support {";
  bool first = true;
  for (const auto& s : support(sp, lifted)) {
    std::cout << (first ? "" : ", ") << s.to_string();
    first = false;
  }
  std::cout << "}\n";
  Rng rng(doc.seed);
  const auto r = verify_lift(sp, *doc.measure, rng);
  std::cout << "identity on " << r.members << " members: " << (r.identity ? "ok" : "FAILED")
            << ", pairing on " << r.functions << " simple functions: " << (r.riesz ? "ok" : "FAILED") << "\n";
  if (model.has_singletons()) {
    const auto s = check_support_shift(sp, *doc.measure);
    std::cout << "support meets X in " << s.positive_atoms.size() << " mass points: "
              << (s.all() ? "ok" : "FAILED") << "\n";
    if (!s.all()) std::cout << "  " << s.counterexample.value_or("") << "\n";
    return r.all() && s.all() ? 0 : 1;
  }
  std::cout << "support shift not checked: singletons are not all members\n";
  return r.all() ? 0 : 1;
}

int cmd_check(const ModelDocument& doc, const std::string& id, bool json) {
  std::vector<CheckReport> reports;
  if (id == "all") {
    reports = run_all(doc);
  } else {
    try {
      reports.push_back(run_check(id, doc));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotApplicable) throw;
      CheckReport r;
      r.id = id;
      r.model = doc.name;
      r.status = CheckStatus::Skip;
      r.log.push_back(e.what());
      reports.push_back(std::move(r));
    }
  }
  std::cout << (json ? to_json(reports) : to_text(reports));
  return any_failed(reports) ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"xisigma: spectra of measurable function algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string model_path;
  std::optional<std::uint64_t> seed;
  bool json = false;
  app.add_option("--model", model_path, "model document (YAML)");
  app.add_option("--seed", seed, "override the document seed");
  app.add_flag("--json-report", json, "machine-readable check report");

  auto* atoms = app.add_subcommand("atoms", "list the atom partition");
  auto* spectrum = app.add_subcommand("spectrum", "list or draw the spectrum");
  bool dot = false;
  auto* as_dot = spectrum->add_flag("--dot", dot, "Graphviz output");
  spectrum->add_flag("--list", "structured listing (default)")->excludes(as_dot);
  auto* check = app.add_subcommand("check", "run a check, or all of them");
  std::string id = "all";
  check->add_option("id", id, "check id or 'all'");
  auto* lift_cmd = app.add_subcommand("lift", "lift the measure to the spectrum");
  auto* export_cmd = app.add_subcommand("export", "print the document in canonical form");
  auto* list_cmd = app.add_subcommand("list-checks", "print the check registry");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*list_cmd) {
      for (const auto& info : check_registry()) std::cout << info.id << "  " << info.statement << "\n";
      return 0;
    }
    if (model_path.empty()) throw Error(ErrorKind::InvalidArgument, "--model is required");
    ModelDocument doc = load_document(model_path);
    if (seed) doc.seed = *seed;
    if (*atoms) return cmd_atoms(doc);
    if (*spectrum) return cmd_spectrum(doc, dot);
    if (*check) return cmd_check(doc, id, json);
    if (*lift_cmd) return cmd_lift(doc);
    if (*export_cmd) {
      std::cout << emit_document(doc);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
