#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "xisigma/algebra.hpp"
#include "xisigma/error.hpp"

using namespace xisigma;

namespace {

PointLabel n(std::uint64_t v) { return PointLabel::natural(v); }

std::vector<PointLabel> labels(std::initializer_list<std::uint64_t> vs) {
  std::vector<PointLabel> out;
  for (auto v : vs) out.push_back(n(v));
  return out;
}

}  // namespace

TEST_CASE("two overlapping generators split four points") {
  const auto x = Carrier::finite(labels({1, 2, 3, 4}));
  const auto alg = generate_algebra(x, {SymbolicSet::of(x, labels({1, 2})), SymbolicSet::of(x, labels({2, 3}))});
  REQUIRE(alg.atoms().size() == 4);
  for (std::size_t k = 0; k < 4; ++k) CHECK(alg.atoms()[k] == SymbolicSet::of(x, labels({k + 1})));

  const auto points = x->named();
  const auto brute = oracle::boolean_closure(4, {oracle::mask_of(alg.generators()[0], points),
                                                 oracle::mask_of(alg.generators()[1], points)});
  CHECK(brute.size() == 16);
  CHECK(alg.members().size() == 16);
}

TEST_CASE("no generators give one atom") {
  for (const auto& c : {Carrier::finite({"a", "b"}), Carrier::naturals(), Carrier::omega({"p"})}) {
    const auto alg = generate_algebra(c, {});
    REQUIRE(alg.atoms().size() == 1);
    CHECK(alg.atoms()[0] == SymbolicSet::all(c));
  }
}

TEST_CASE("singleton generators on the naturals") {
  const auto nat = Carrier::naturals();
  const auto alg = generate_algebra(nat, {SymbolicSet::of(nat, {n(0)}), SymbolicSet::of(nat, {n(1)})});
  REQUIRE(alg.atoms().size() == 3);
  CHECK(alg.atoms()[0] == SymbolicSet::of(nat, {n(0)}));
  CHECK(alg.atoms()[1] == SymbolicSet::of(nat, {n(1)}));
  CHECK(alg.atoms()[2] == SymbolicSet::co(nat, labels({0, 1})));
  CHECK(alg.generic_atom() == 2u);
}

TEST_CASE("contains") {
  const auto nat = Carrier::naturals();
  std::vector<SymbolicSet> gens;
  for (std::uint64_t k = 0; k <= 3; ++k) gens.push_back(SymbolicSet::of(nat, {n(k)}));
  const auto alg = generate_algebra(nat, gens);
  CHECK(contains(alg, SymbolicSet::of(nat, labels({0, 1}))));
  CHECK(contains(alg, SymbolicSet::all(nat)));
  CHECK_FALSE(contains(alg, SymbolicSet::of(nat, labels({7}))));

  const auto x = Carrier::finite(labels({1, 2, 3, 4}));
  const auto split = generate_algebra(x, {SymbolicSet::of(x, labels({1})), SymbolicSet::of(x, labels({2}))});
  CHECK(split.atoms().size() == 3);
  CHECK_FALSE(contains(split, SymbolicSet::of(x, labels({1, 3}))));
  CHECK(contains(split, SymbolicSet::of(x, labels({1, 3, 4}))));
}

TEST_CASE("generators from another carrier are rejected") {
  const auto a = Carrier::finite({"a"});
  const auto b = Carrier::finite({"b"});
  CHECK_THROWS_AS(generate_algebra(a, {SymbolicSet::of(b, {"b"})}), Error);
}

TEST_CASE("completeness by model kind") {
  const auto x = Carrier::finite(labels({1, 2, 3}));
  CHECK(is_complete(Model::finite(generate_algebra(x, {}))).complete);
  CHECK(is_complete(generate_algebra(x, {})).complete);

  const auto nat = Carrier::naturals();
  const auto fc = is_complete(Model::finite_cofinite(nat, {}));
  CHECK_FALSE(fc.complete);
  REQUIRE(fc.witness);
  CHECK(fc.witness->find("even") != std::string::npos);
  CHECK_FALSE(fc.symbolic_witness);

  const auto om = is_complete(Model::countable_cocountable(Carrier::omega({"a", "b"}), {}));
  CHECK_FALSE(om.complete);
  CHECK(om.symbolic_witness);

  try {
    is_complete(generate_algebra(nat, {}));
    FAIL("expected UnsupportedModel");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedModel);
  }
}

TEST_CASE("random finite algebras match the brute-force Boolean closure") {
  Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t size = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
    const std::size_t count = std::uniform_int_distribution<std::size_t>(0, 5)(rng);
    std::vector<PointLabel> points;
    for (std::size_t k = 0; k < size; ++k) points.push_back(n(k));
    const auto x = Carrier::finite(points);
    std::vector<SymbolicSet> gens;
    std::vector<oracle::Mask> masks;
    for (std::size_t g = 0; g < count; ++g) {
      const auto bits = std::uniform_int_distribution<oracle::Mask>(0, (1u << size) - 1)(rng);
      std::vector<PointLabel> base;
      for (std::size_t k = 0; k < size; ++k)
        if (bits >> k & 1) base.push_back(points[k]);
      gens.push_back(SymbolicSet::of(x, base));
      masks.push_back(bits);
    }
    const auto alg = generate_algebra(x, gens);

    oracle::Mask seen = 0;
    for (const auto& a : alg.atoms()) {
      const auto m = oracle::mask_of(a, points);
      CHECK(m != 0);
      CHECK((seen & m) == 0);
      seen |= m;
    }
    CHECK(seen == (1u << size) - 1);
    for (const auto& g : gens) CHECK(contains(alg, g));

    std::set<oracle::Mask> unions;
    for (const auto& m : alg.members()) unions.insert(oracle::mask_of(m, points));
    CHECK(unions == oracle::boolean_closure(size, masks));

    if (!gens.empty()) {
      auto fewer = gens;
      fewer.pop_back();
      const auto coarse = generate_algebra(x, fewer);
      for (const auto& a : alg.atoms())
        CHECK(std::any_of(coarse.atoms().begin(), coarse.atoms().end(),
                          [&](const SymbolicSet& b) { return is_subset(a, b); }));
    }
  }
}

TEST_CASE("symbolic models contain every normal form") {
  const auto nat = Carrier::naturals();
  const auto m = Model::finite_cofinite(nat, {SymbolicSet::of(nat, {n(3)})});
  CHECK(m.contains(SymbolicSet::of(nat, {n(100)})));
  CHECK(m.contains(SymbolicSet::co(nat, {n(5)})));
  CHECK(m.has_singletons());
  const auto fin = Carrier::finite({"a", "b", "c"});
  CHECK_FALSE(Model::finite(generate_algebra(fin, {SymbolicSet::of(fin, {"a"})})).has_singletons());
  CHECK(Model::finite(generate_algebra(fin, {SymbolicSet::of(fin, {"a"}), SymbolicSet::of(fin, {"b"})})).has_singletons());
}
