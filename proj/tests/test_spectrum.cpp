#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "xisigma/error.hpp"
#include "xisigma/spectrum.hpp"

using namespace xisigma;

namespace {

PointLabel n(std::uint64_t v) { return PointLabel::natural(v); }

Model nat_model(std::size_t singletons = 4) {
  const auto nat = Carrier::naturals();
  std::vector<SymbolicSet> gens;
  for (std::uint64_t k = 0; k < singletons; ++k) gens.push_back(SymbolicSet::of(nat, {n(k)}));
  return Model::finite_cofinite(nat, gens);
}

Model omega_model() {
  const auto om = Carrier::omega({"a", "b"});
  return Model::countable_cocountable(om, {SymbolicSet::of(om, {"a"}), SymbolicSet::of(om, {"b"})});
}

Model finite_model() {
  const auto x = Carrier::finite({n(1), n(2), n(3), n(4)});
  return Model::finite(generate_algebra(x, {SymbolicSet::of(x, {n(1)}), SymbolicSet::of(x, {n(2)})}));
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Parse;
}

}  // namespace

TEST_CASE("finite spectra are the ultrafilters of the atom algebra") {
  const auto x = Carrier::finite({n(1), n(2), n(3)});
  const auto model = Model::finite(generate_algebra(x, {SymbolicSet::of(x, {n(1)}), SymbolicSet::of(x, {n(2)})}));
  const auto sp = spectrum_of(model);
  CHECK(sp.points().size() == 3);
  CHECK_FALSE(sp.free_point());

  const auto& pts = x->named();
  std::set<oracle::Mask> members;
  for (const auto& m : model.algebra().members()) members.insert(oracle::mask_of(m, pts));
  const auto ufs = oracle::ultrafilters(3, members);
  CHECK(ufs.size() == 3);
  for (const auto& s : sp.points()) {
    std::set<oracle::Mask> mine;
    for (const auto& m : model.algebra().members())
      if (sp.ultrafilter_contains(s, m)) mine.insert(oracle::mask_of(m, pts));
    CHECK(std::find(ufs.begin(), ufs.end(), mine) != ufs.end());
  }
}

TEST_CASE("coarse finite algebras: one spectrum point per atom") {
  Rng rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t size = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
    std::vector<PointLabel> pts;
    for (std::size_t k = 0; k < size; ++k) pts.push_back(n(k));
    const auto x = Carrier::finite(pts);
    std::vector<SymbolicSet> gens;
    std::vector<oracle::Mask> masks;
    for (int g = 0; g < 2; ++g) {
      const auto bits = std::uniform_int_distribution<oracle::Mask>(0, (1u << size) - 1)(rng);
      std::vector<PointLabel> base;
      for (std::size_t k = 0; k < size; ++k)
        if (bits >> k & 1) base.push_back(pts[k]);
      gens.push_back(SymbolicSet::of(x, base));
      masks.push_back(bits);
    }
    const auto model = Model::finite(generate_algebra(x, gens));
    CHECK(spectrum_of(model).points().size() == oracle::ultrafilters(size, oracle::boolean_closure(size, masks)).size());
  }
}

TEST_CASE("finite-cofinite naturals: the one-point compactification") {
  const auto sp = spectrum_of(nat_model());
  REQUIRE(sp.free_point());
  CHECK(sp.free_point()->kind == SpectrumPoint::Kind::FreeCofinite);
  CHECK(sp.free_point()->label == kFreePoint);
  const auto nat = sp.model().carrier();
  const auto cof = SymbolicSet::co(nat, {n(0), n(9)});
  CHECK(sp.ultrafilter_contains(*sp.free_point(), cof));
  CHECK_FALSE(sp.ultrafilter_contains(*sp.free_point(), complement(cof)));
  CHECK(sp.has_unnamed_principals());
}

TEST_CASE("countable/co-countable: named principals and one free point") {
  const auto sp = spectrum_of(omega_model());
  std::vector<std::string> names;
  for (const auto& s : sp.points()) names.push_back(s.label.text());
  CHECK(names == std::vector<std::string>{"a", "b", kFreePoint.text()});
  CHECK(sp.free_point()->kind == SpectrumPoint::Kind::FreeCocountable);
  CHECK(sp.has_unnamed_principals());
}

TEST_CASE("embedding") {
  const auto sp = spectrum_of(nat_model());
  CHECK(embed(sp, n(5)) == SpectrumPoint{SpectrumPoint::Kind::Principal, n(5)});
  CHECK_FALSE(embed(sp, n(5)) == embed(sp, n(6)));
  const auto so = spectrum_of(omega_model());
  CHECK(embed(so, "a").label == PointLabel("a"));
  CHECK(kind_of([&] { embed(so, "zz"); }) == ErrorKind::UnknownPoint);
}

TEST_CASE("tilde") {
  const auto model = nat_model();
  const auto sp = spectrum_of(model);
  const auto nat = model.carrier();
  const auto t2 = tilde(sp, SymbolicSet::of(nat, {n(2)}));
  CHECK(t2.is_finite());
  CHECK(t2.base() == std::vector<PointLabel>{n(2)});
  const auto t = tilde(sp, SymbolicSet::co(nat, {n(0)}));
  CHECK(member(kFreePoint, t));
  CHECK(member(n(1), t));
  CHECK_FALSE(member(n(0), t));
  CHECK(tilde(sp, SymbolicSet::all(nat)) == SymbolicSet::all(sp.space()));

  const auto fm = finite_model();
  const auto fs = spectrum_of(fm);
  const auto x = fm.carrier();
  CHECK(kind_of([&] { tilde(fs, SymbolicSet::of(x, {n(3)})); }) == ErrorKind::NotInAlgebra);
}

TEST_CASE("closure") {
  const auto sp = spectrum_of(nat_model());
  const auto space = sp.space();
  const Subset finite_set = SymbolicSet::of(space, {n(1), n(2)});
  CHECK(same_set(closure(sp, finite_set), finite_set));
  const Subset all_naturals = SymbolicSet::co(space, {kFreePoint});
  CHECK(same_set(closure(sp, all_naturals), Subset(SymbolicSet::all(space))));
  const auto t = tilde(sp, SymbolicSet::co(sp.model().carrier(), {n(3)}));
  CHECK(same_set(closure(sp, t), Subset(t)));
  CHECK(is_clopen(sp, t));
  CHECK(is_closed(sp, finite_set));
  CHECK_FALSE(is_closed(sp, all_naturals));
  const auto ev = closure(sp, evens(space));
  CHECK(member(kFreePoint, ev));
  CHECK_FALSE(is_open(sp, ev));
  CHECK(is_open(sp, evens(space)));
}

TEST_CASE("extreme disconnectedness") {
  CHECK(is_extremely_disconnected(spectrum_of(finite_model())).extremely_disconnected);
  const auto nat = is_extremely_disconnected(spectrum_of(nat_model()));
  CHECK_FALSE(nat.extremely_disconnected);
  REQUIRE(nat.open_set);
  CHECK(to_string(*nat.open_set).find("mod 2") != std::string::npos);
  const auto om = is_extremely_disconnected(spectrum_of(omega_model()));
  CHECK_FALSE(om.extremely_disconnected);
  CHECK(om.symbolic_witness);
  for (const auto& m : {finite_model(), nat_model(), omega_model()})
    CHECK(is_complete(m).complete == is_extremely_disconnected(spectrum_of(m)).extremely_disconnected);
}

TEST_CASE("X sits inside its spectrum as the structural corollary says") {
  Rng rng(3);
  for (const auto& m : {nat_model(), omega_model()}) {
    const auto r = check_mcmpt(spectrum_of(m), rng);
    CHECK(r.all());
    CHECK(r.log.size() == 4);
  }
  const auto x = Carrier::finite({"a", "b", "c"});
  const auto discrete = Model::finite(
      generate_algebra(x, {SymbolicSet::of(x, {"a"}), SymbolicSet::of(x, {"b"}), SymbolicSet::of(x, {"c"})}));
  CHECK(check_mcmpt(spectrum_of(discrete), rng).all());
  CHECK(check_mcmpt(spectrum_of(finite_model()), rng).all());
}

TEST_CASE("ultrafilter laws on sampled members") {
  Rng rng(11);
  for (const auto& m : {finite_model(), nat_model(), omega_model()}) {
    const auto sp = spectrum_of(m);
    for (int k = 0; k < 50; ++k) {
      const auto e = m.sample_member(rng);
      const auto f = m.sample_member(rng);
      for (const auto& s : sp.points()) {
        CHECK(sp.ultrafilter_contains(s, intersect(e, f)) ==
              (sp.ultrafilter_contains(s, e) && sp.ultrafilter_contains(s, f)));
        CHECK(sp.ultrafilter_contains(s, e) != sp.ultrafilter_contains(s, complement(e)));
      }
      CHECK(same_set(closure(sp, embed_set(sp, e)), Subset(tilde(sp, e))));
    }
  }
}

TEST_CASE("every nonempty clopen contains a principal point") {
  Rng rng(4);
  for (const auto& m : {nat_model(), omega_model()}) {
    const auto sp = spectrum_of(m);
    for (int k = 0; k < 50; ++k) {
      const auto e = m.sample_member(rng);
      if (e.is_empty()) continue;
      const auto t = tilde(sp, e);
      const bool named = std::any_of(m.named_points().begin(), m.named_points().end(),
                                     [&](const PointLabel& x) { return member(x, t); });
      CHECK((named || (!e.is_finite() && sp.has_unnamed_principals())));
    }
  }
}

TEST_CASE("disjoint indicators at distance one") {
  const auto fam = separability_defect(nat_model(), 4);
  REQUIRE(fam.size() == 4);
  CHECK(fam[2] == FnElement::indicator(SymbolicSet::of(nat_model().carrier(), {n(2)})));
  const auto x = Carrier::finite({n(1), n(2), n(3), n(4)});
  const auto m = Model::finite(generate_algebra(x, {SymbolicSet::of(x, {n(1)}), SymbolicSet::of(x, {n(2)})}));
  CHECK(separability_defect(m, 3).size() == 3);
  CHECK(kind_of([&] { separability_defect(m, 4); }) == ErrorKind::InsufficientDisjointSets);
  CHECK(kind_of([&] { separability_defect(omega_model(), 4); }) == ErrorKind::InsufficientDisjointSets);
}

TEST_CASE("exports") {
  const auto dot = to_dot(spectrum_of(nat_model()));
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("doublecircle") != std::string::npos);
  CHECK(dot.find("shape=circle") != std::string::npos);
  const auto listing = to_listing(spectrum_of(finite_model()));
  CHECK(listing.find("atom") != std::string::npos);
}
