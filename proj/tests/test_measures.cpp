#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "xisigma/error.hpp"
#include "xisigma/measures.hpp"

using namespace xisigma;

namespace {

PointLabel n(std::uint64_t v) { return PointLabel::natural(v); }

Model nat_model() {
  const auto nat = Carrier::naturals();
  std::vector<SymbolicSet> gens;
  for (std::uint64_t k = 0; k < 10; ++k) gens.push_back(SymbolicSet::of(nat, {n(k)}));
  return Model::finite_cofinite(nat, gens, 10);
}

std::vector<PointLabel> support_labels(const std::vector<SpectrumPoint>& s) {
  std::vector<PointLabel> out;
  for (const auto& p : s) out.push_back(p.label);
  return out;
}

}  // namespace

TEST_CASE("evaluation") {
  const auto nat = Carrier::naturals();
  const Measure half(nat, {{n(0), ratio(1, 2)}, {n(1), ratio(1, 2)}});
  CHECK(evaluate(half, SymbolicSet::of(nat, {n(0)})) == ratio(1, 2));
  CHECK(evaluate(Measure(nat, {}, 1), SymbolicSet::co(nat, {n(0), n(1)})) == 1);
  CHECK(evaluate(half, SymbolicSet::empty(nat)) == 0);
  CHECK_THROWS_AS(Measure(Carrier::finite({"a"}), {}, 1), Error);
  CHECK_THROWS_AS(Measure(nat, {{n(0), -1}}), Error);
}

TEST_CASE("additivity on disjoint members") {
  Rng rng(1);
  const auto model = nat_model();
  for (int k = 0; k < 100; ++k) {
    const auto mu = random_measure(model, rng);
    const auto e = model.sample_member(rng);
    const auto f = difference(model.sample_member(rng), e);
    CHECK(evaluate(mu, unite(e, f)) == evaluate(mu, e) + evaluate(mu, f));
  }
}

TEST_CASE("geometric masses with a diffuse remainder") {
  const auto model = nat_model();
  const auto sp = spectrum_of(model);
  std::map<PointLabel, Rational> atoms;
  Rational sum = 0;
  for (std::uint64_t k = 0; k <= 9; ++k) {
    const Rational m = ratio(1, 2l << k);
    atoms.emplace(n(k), m);
    sum += m;
  }
  const Measure mu(model.carrier(), atoms, 1 - sum);
  const auto star = lift(sp, mu);
  for (const auto& [x, m] : atoms) CHECK(star.mass_at(x) == m);
  CHECK(star.mass_at(kFreePoint) == ratio(1, 1024));
  CHECK(star.total() == 1);
  Rng rng(2);
  CHECK(verify_lift(sp, mu, rng).all());
}

TEST_CASE("purely diffuse measures lift to the free point") {
  const auto model = nat_model();
  const auto sp = spectrum_of(model);
  const Measure mu(model.carrier(), {}, 1);
  const auto star = lift(sp, mu);
  CHECK(star.atomic() == std::map<PointLabel, Rational>{{kFreePoint, 1}});
  CHECK(evaluate(star, tilde(sp, SymbolicSet::all(model.carrier()))) == 1);
  CHECK(evaluate(star, tilde(sp, SymbolicSet::of(model.carrier(), {n(3)}))) == 0);
  CHECK(support_labels(support(sp, star)) == std::vector<PointLabel>{kFreePoint});
  const auto r = check_support_shift(sp, mu);
  CHECK(r.all());
  CHECK(r.positive_atoms.empty());
}

TEST_CASE("point masses stay point masses") {
  const auto model = nat_model();
  const auto sp = spectrum_of(model);
  const Measure delta(model.carrier(), {{n(3), 1}});
  const auto star = lift(sp, delta);
  CHECK(star.atomic() == std::map<PointLabel, Rational>{{n(3), 1}});
  CHECK(support_labels(support(sp, star)) == std::vector<PointLabel>{n(3)});
}

TEST_CASE("support shift") {
  const auto model = nat_model();
  const auto sp = spectrum_of(model);
  const Measure three(model.carrier(), {{n(1), 1}, {n(4), 2}, {n(6), 3}});
  auto r = check_support_shift(sp, three);
  CHECK(r.all());
  CHECK(r.positive_atoms.size() == 3);

  std::map<PointLabel, Rational> ev;
  for (std::uint64_t k = 0; k < 10; k += 2) ev.emplace(n(k), ratio(1, 10));
  const Measure evens_mu(model.carrier(), ev, ratio(1, 2));
  const auto supp = support_labels(support(sp, lift(sp, evens_mu)));
  CHECK(std::find(supp.begin(), supp.end(), n(1)) == supp.end());
  CHECK(std::find(supp.begin(), supp.end(), n(4)) != supp.end());
  CHECK(std::find(supp.begin(), supp.end(), kFreePoint) != supp.end());

  const auto x = Carrier::finite({"a", "b", "c"});
  const auto discrete = Model::finite(
      generate_algebra(x, {SymbolicSet::of(x, {"a"}), SymbolicSet::of(x, {"b"}), SymbolicSet::of(x, {"c"})}));
  const auto fsp = spectrum_of(discrete);
  const Measure everywhere(x, {{"a", 1}, {"b", 2}, {"c", 3}});
  CHECK(support(fsp, lift(fsp, everywhere)).size() == 3);
  CHECK(check_support_shift(fsp, everywhere).all());

  const auto coarse = Model::finite(generate_algebra(x, {SymbolicSet::of(x, {"a"})}));
  try {
    check_support_shift(spectrum_of(coarse), everywhere);
    FAIL("coarse algebra");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedModel);
  }
}

TEST_CASE("lifting on every model kind") {
  Rng rng(3);
  const auto om = Carrier::omega({"p", "q"});
  const auto fin = Carrier::finite({"a", "b", "c", "d"});
  const std::vector<Model> models = {
      nat_model(), Model::countable_cocountable(om, {SymbolicSet::of(om, {"p"})}),
      Model::finite(generate_algebra(fin, {SymbolicSet::of(fin, {"a", "b"}), SymbolicSet::of(fin, {"b", "c"})}))};
  for (const auto& m : models) {
    const auto sp = spectrum_of(m);
    for (int k = 0; k < 20; ++k) {
      const auto mu = random_measure(m, rng);
      const auto r = verify_lift(sp, mu, rng, 100, 50);
      CHECK(r.all());
      CHECK(r.members >= 100);
      CHECK(r.functions == 50);
      CHECK(lift(sp, mu).total() == mu.total());
    }
  }
}

TEST_CASE("integration against simple functions") {
  const auto model = nat_model();
  const auto sp = spectrum_of(model);
  const auto c = model.carrier();
  const Measure mu(c, {{n(0), ratio(1, 4)}}, ratio(3, 4));
  const SimpleFunction f = {{Scalar(2), SymbolicSet::of(c, {n(0)})}, {Scalar(-1), SymbolicSet::co(c, {n(1)})}};
  CHECK(evaluate(mu, SymbolicSet::co(c, {n(1)})) == 1);
  CHECK(integrate(mu, as_function(c, f)) == Scalar(Rational(2 * ratio(1, 4) - evaluate(mu, SymbolicSet::co(c, {n(1)})))));
  CHECK(integrate(lift(sp, mu), gelfand_transform(sp, f)) == integrate(mu, as_function(c, f)));
}
