#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "xisigma/checks.hpp"
#include "xisigma/error.hpp"

using namespace xisigma;

namespace {

const std::filesystem::path kRoot = XISIGMA_SOURCE_DIR;

ModelDocument shipped(const std::string& name) { return load_document(kRoot / "models" / (name + ".yaml")); }
ModelDocument fixture(const std::string& name) { return load_document(kRoot / "tests" / "fixtures" / (name + ".yaml")); }

const char* const kShipped[] = {"finite", "nat", "omega", "convergent-sequence", "cofinite"};

ErrorKind parse_error_kind(const std::string& text) {
  try {
    parse_document(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("document parsed");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("registry order and ids") {
  std::vector<std::string> ids;
  for (const auto& info : check_registry()) {
    ids.emplace_back(info.id);
    CHECK_FALSE(info.statement.empty());
  }
  CHECK(ids == std::vector<std::string>{"quasi-norm-axioms", "cts-hom", "unit-cmpt", "non-unital", "jst-bndd",
                                        "img-of-meas", "mcmpt-1", "mcmpt-2", "mcmpt-3", "mcmpt-4", "not-metrizable",
                                        "complete-iff-extdisc", "cntbly-gen-note", "meas-fuc-alg", "meas-ext",
                                        "meas-shift", "supp-corollary", "open-halos", "semi-robinson"});
  CHECK_THROWS_AS(run_check("no-such-check", shipped("nat")), Error);
}

TEST_CASE("document parsing") {
  const auto doc = parse_document(R"(
name: tiny
seed: 4
field: complex
carrier: {kind: finite, points: [x, y]}
generators: ["{x}"]
measure: {atomic: {x: 1/3}}
algebra:
  class: generated
  unital: true
  generators: [{values: {x: 1+2i, y: 0}}]
  norm: {scaled: 2}
)");
  CHECK(doc.name == "tiny");
  CHECK(doc.seed == 4);
  CHECK(doc.field == Field::Complex);
  CHECK(doc.carrier->named().size() == 2);
  REQUIRE(doc.measure);
  CHECK(doc.measure->mass_at("x") == ratio(1, 3));
  REQUIRE(doc.algebra);
  CHECK(doc.algebra->norm == QuasiNorm::scaled(2));
  CHECK(doc.algebra->algebra.generators()[0].at("x") == Scalar(1, 2));

  CHECK(parse_error_kind("") == ErrorKind::Parse);
  CHECK(parse_error_kind("carrier: {kind: finite, points: [a]}\ncolour: red\n") == ErrorKind::Parse);
  CHECK(parse_error_kind("carrier: {kind: torus}\n") == ErrorKind::Parse);
  CHECK(parse_error_kind("carrier: {kind: finite, points: [a]}\ngenerators: ['{b}']\n") == ErrorKind::Parse);
  CHECK(parse_error_kind("carrier: {kind: finite, points: [a]}\nalgebra: {norm: limsup}\n") == ErrorKind::UnsupportedModel);
  CHECK(parse_error_kind("carrier: {kind: finite, points: [a]\n") == ErrorKind::Parse);
  CHECK(parse_error_kind("carrier: {kind: nat}\ntopology: {kind: convergent-sequence, limit: 3}\n") != ErrorKind::Parse);
}

TEST_CASE("every shipped document passes every applicable check") {
  for (const auto* name : kShipped) {
    const auto reports = run_all(shipped(name));
    CHECK(reports.size() == check_registry().size());
    for (const auto& r : reports) {
      INFO(name << " " << r.id << " " << r.counterexample.value_or(""));
      CHECK(r.status != CheckStatus::Fail);
    }
  }
}

TEST_CASE("reports are deterministic and survive export") {
  for (const auto* name : kShipped) {
    const auto doc = shipped(name);
    const auto again = parse_document(emit_document(doc));
    CHECK(emit_document(again) == emit_document(doc));
    const auto a = run_all(doc);
    const auto b = run_all(doc);
    const auto c = run_all(again);
    REQUIRE(a.size() == b.size());
    REQUIRE(a.size() == c.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
      CHECK(a[k].same_outcome(b[k]));
      CHECK(a[k].same_outcome(c[k]));
    }
  }
}

TEST_CASE("a squared sup norm breaks the triangle inequality") {
  const auto r = run_check("quasi-norm-axioms", fixture("broken-norm"));
  CHECK(r.status == CheckStatus::Fail);
  REQUIRE(r.counterexample);
  CHECK(r.counterexample->find("f =") != std::string::npos);
  CHECK(any_failed({r}));
}

TEST_CASE("the limsup model is not dense, and the verdicts agree") {
  const auto r = run_check("jst-bndd", fixture("nat-limsup"));
  CHECK(r.status == CheckStatus::Pass);
  const auto joined = to_text({r});
  CHECK(joined.find("D* finite: no, direct density: no") != std::string::npos);
}

TEST_CASE("applicability") {
  try {
    run_check("open-halos", shipped("cofinite"));
    FAIL("cofinite topology is not Hausdorff");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotApplicable);
  }
  const auto all = run_all(shipped("cofinite"));
  const auto it = std::find_if(all.begin(), all.end(), [](const CheckReport& r) { return r.id == "open-halos"; });
  REQUIRE(it != all.end());
  CHECK(it->status == CheckStatus::Skip);
  CHECK_FALSE(any_failed(all));

  const auto seq = run_check("semi-robinson", shipped("convergent-sequence"));
  CHECK(seq.status == CheckStatus::Pass);
  int families = 0;
  for (const auto& line : seq.log)
    for (const char* f : {"finite:", "cofinite:", "pattern:"})
      if (line.rfind(f, 0) == 0) ++families;
  CHECK(families == 3);
  CHECK(run_check("img-of-meas", shipped("nat")).status == CheckStatus::Pass);
}

TEST_CASE("report formats") {
  const auto reports = run_all(shipped("nat"));
  const auto text = to_text(reports);
  CHECK(text.find("PASS img-of-meas [naturals]") != std::string::npos);
  const auto json = to_json(reports);
  CHECK(json.find("\"id\": \"quasi-norm-axioms\"") != std::string::npos);
  CHECK(json.find("\"status\": \"SKIP\"") != std::string::npos);
}
