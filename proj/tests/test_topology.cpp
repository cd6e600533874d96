#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "xisigma/error.hpp"
#include "xisigma/topology.hpp"

using namespace xisigma;

namespace {

PointLabel n(std::uint64_t v) { return PointLabel::natural(v); }
const PointLabel kOmega{"ω"};

TopSpace sequence() { return TopSpace::convergent_sequence(Carrier::naturals({kOmega}), kOmega); }

std::vector<PointLabel> points(std::size_t k) {
  std::vector<PointLabel> out;
  for (std::uint64_t v = 0; v < k; ++v) out.push_back(n(v));
  return out;
}

TopSpace from_masks(const CarrierPtr& c, const std::vector<std::uint32_t>& masks) {
  std::vector<SymbolicSet> nb;
  for (auto m : masks) {
    std::vector<PointLabel> base;
    for (std::size_t k = 0; k < c->named().size(); ++k)
      if (m >> k & 1) base.push_back(c->named()[k]);
    nb.push_back(SymbolicSet::of(c, base));
  }
  return TopSpace::finite_from_neighbourhoods(c, nb);
}

}  // namespace

TEST_CASE("number of labelled topologies") {
  const std::size_t expected[] = {1, 4, 29, 355, 6942};
  for (std::size_t k = 1; k <= 5; ++k) {
    std::size_t count = 0;
    for_each_finite_topology(k, [&](const std::vector<std::uint32_t>&) { ++count; });
    CHECK(count == expected[k - 1]);
  }
}

TEST_CASE("finite topologies are validated") {
  const auto x = Carrier::finite({n(1), n(2), n(3)});
  CHECK_THROWS_AS(TopSpace::finite(x, {SymbolicSet::of(x, {n(1)})}), Error);
  CHECK_THROWS_AS(TopSpace::finite(x, {SymbolicSet::empty(x), SymbolicSet::all(x), SymbolicSet::of(x, {n(1)}),
                                       SymbolicSet::of(x, {n(2)})}),
                  Error);
  const auto t = TopSpace::finite(x, {SymbolicSet::empty(x), SymbolicSet::all(x), SymbolicSet::of(x, {n(1), n(2)})});
  CHECK(t.minimal_neighbourhood(n(1)) == SymbolicSet::of(x, {n(1), n(2)}));
  CHECK(t.minimal_neighbourhood(n(3)) == SymbolicSet::all(x));
  CHECK_FALSE(t.is_hausdorff());
}

TEST_CASE("Borel algebras") {
  const auto x = Carrier::finite({n(1), n(2), n(3)});
  const auto discrete = TopSpace::finite_from_neighbourhoods(
      x, {SymbolicSet::of(x, {n(1)}), SymbolicSet::of(x, {n(2)}), SymbolicSet::of(x, {n(3)})});
  CHECK(borel_algebra(discrete).algebra().atoms().size() == 3);
  CHECK(discrete.is_hausdorff());

  const auto b = borel_algebra(sequence());
  CHECK(b.kind() == ModelKind::FiniteCofinite);
  const auto sp = spectrum_of(b);
  CHECK(sp.free_point());
  CHECK(std::count_if(sp.points().begin(), sp.points().end(), [](const SpectrumPoint& s) { return s.label == kOmega; }) == 1);

  const auto cof = borel_algebra(TopSpace::cofinite(Carrier::naturals()));
  CHECK(cof.kind() == ModelKind::FiniteCofinite);
  CHECK_FALSE(TopSpace::cofinite(Carrier::naturals()).is_hausdorff());
}

TEST_CASE("halos of the convergent sequence") {
  const auto t = sequence();
  const auto sp = spectrum_of(borel_algebra(t));
  const auto h5 = halo(t, sp, n(5));
  CHECK(h5 == SymbolicSet::of(sp.space(), {n(5)}));
  const auto hw = halo(t, sp, kOmega);
  CHECK(hw == SymbolicSet::of(sp.space(), {kOmega, kFreePoint}));

  auto r = check_open_halo(t, sp, kOmega);
  CHECK_FALSE(r.halo_open);
  CHECK_FALSE(r.singleton_open);
  CHECK(r.holds());
  r = check_open_halo(t, sp, n(5));
  CHECK(r.halo_open);
  CHECK(r.singleton_open);
  CHECK(r.holds());
}

TEST_CASE("halos of finite spaces") {
  const auto x = Carrier::finite({"a", "b"});
  const auto discrete = TopSpace::finite_from_neighbourhoods(x, {SymbolicSet::of(x, {"a"}), SymbolicSet::of(x, {"b"})});
  const auto sp = spectrum_of(borel_algebra(discrete));
  for (const auto& p : x->named()) {
    CHECK(halo(discrete, sp, p) == SymbolicSet::of(sp.space(), {p}));
    CHECK(check_open_halo(discrete, sp, p).holds());
  }
}

TEST_CASE("open halos need a Hausdorff space") {
  const auto t = TopSpace::cofinite(Carrier::naturals());
  const auto sp = spectrum_of(borel_algebra(t));
  try {
    check_open_halo(t, sp, n(1));
    FAIL("cofinite topology");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotHausdorff);
  }
}

TEST_CASE("compactness through halos on the convergent sequence") {
  const auto t = sequence();
  const auto sp = spectrum_of(borel_algebra(t));
  const auto c = t.carrier();

  auto r = robinson_check(t, sp, SymbolicSet::of(c, {n(1), n(2)}));
  CHECK(r.halo_cover);
  CHECK(r.oracle);

  r = robinson_check(t, sp, SymbolicSet::co(c, {kOmega}));
  CHECK_FALSE(r.halo_cover);
  CHECK_FALSE(r.oracle);
  CHECK(r.witness == kFreePoint);
  CHECK(member(kFreePoint, r.closure));

  r = robinson_check(t, sp, make_periodic(c, 2, {0}, {kOmega}));
  CHECK(r.halo_cover);
  CHECK(r.oracle);
  CHECK(member(kFreePoint, r.closure));
  CHECK(member(kFreePoint, r.cover));

  r = robinson_check(t, sp, evens(c));
  CHECK_FALSE(r.halo_cover);
  CHECK_FALSE(r.oracle);
}

TEST_CASE("compactness through halos on every small finite space") {
  for (std::size_t k = 1; k <= 4; ++k) {
    const auto c = Carrier::finite(points(k));
    for_each_finite_topology(k, [&](const std::vector<std::uint32_t>& masks) {
      const auto t = from_masks(c, masks);
      const auto sp = spectrum_of(borel_algebra(t));
      for (std::uint32_t ym = 0; ym < (1u << k); ++ym) {
        std::vector<PointLabel> ys;
        for (std::size_t i = 0; i < k; ++i)
          if (ym >> i & 1) ys.push_back(c->named()[i]);
        const auto r = robinson_check(t, sp, SymbolicSet::of(c, ys));
        CHECK(r.agree());
        CHECK(r.halo_cover);
      }
    });
  }
}

TEST_CASE("cofinite verdicts are informational") {
  const auto t = TopSpace::cofinite(Carrier::naturals());
  const auto sp = spectrum_of(borel_algebra(t));
  const auto r = robinson_check(t, sp, SymbolicSet::co(t.carrier(), {}));
  CHECK(r.informational);
  CHECK(r.oracle);
  CHECK_FALSE(r.note.empty());
}

TEST_CASE("measurability") {
  const auto x = Carrier::finite({n(1), n(2), n(3)});
  const auto coarse = TopSpace::finite(x, {SymbolicSet::empty(x), SymbolicSet::of(x, {n(1), n(2)}), SymbolicSet::all(x)});
  const auto chi1 = FnElement::indicator(SymbolicSet::of(x, {n(1)}));
  auto r = measurability_check(coarse, {chi1});
  CHECK_FALSE(r.level_sets);
  CHECK(r.agree());
  REQUIRE(r.witness);
  CHECK_FALSE(contains(borel_algebra(coarse).algebra(), *r.witness));
  CHECK(member(n(1), *r.witness) != member(n(2), *r.witness));

  r = measurability_check(coarse, {FnElement::constant(x, 4)});
  CHECK(r.level_sets);
  CHECK(r.agree());

  const auto discrete = TopSpace::finite_from_neighbourhoods(
      x, {SymbolicSet::of(x, {n(1)}), SymbolicSet::of(x, {n(2)}), SymbolicSet::of(x, {n(3)})});
  r = measurability_check(discrete, {chi1, FnElement(x, {{n(1), 1}, {n(2), 2}, {n(3), 3}})});
  CHECK(r.level_sets);
  CHECK(r.point_map);

  try {
    measurability_check(sequence(), {});
    FAIL("symbolic topology");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedModel);
  }
}
