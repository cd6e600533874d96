#include "xisigma/measures.hpp"

#include <algorithm>

#include "xisigma/error.hpp"

namespace xisigma {

Measure::Measure(CarrierPtr carrier, std::map<PointLabel, Rational> atomic, Rational diffuse)
    : carrier_(std::move(carrier)), diffuse_(std::move(diffuse)) {
  for (auto& [x, m] : atomic) {
    require_point(*carrier_, x);
    if (sgn(m) < 0) throw Error(ErrorKind::InvalidArgument, "negative mass at '" + x.text() + "'");
    if (sgn(m) > 0) atomic_.emplace(x, std::move(m));
  }
  if (sgn(diffuse_) < 0) throw Error(ErrorKind::InvalidArgument, "negative diffuse mass");
  if (sgn(diffuse_) != 0 && !carrier_->is_infinite())
    throw Error(ErrorKind::InvalidArgument, "a finite carrier has no room for diffuse mass");
}

Rational Measure::total() const {
  Rational sum = diffuse_;
  for (const auto& [x, m] : atomic_) sum += m;
  return sum;
}

Rational Measure::mass_at(const PointLabel& x) const {
  require_point(*carrier_, x);
  auto it = atomic_.find(x);
  return it == atomic_.end() ? Rational(0) : it->second;
}

std::string Measure::to_string() const {
  std::string out = "{";
  for (const auto& [x, m] : atomic_) out += (out.size() > 1 ? ", " : "") + x.text() + ":" + xisigma::to_string(m);
  out += "}";
  if (carrier_->is_infinite()) out += " + diffuse " + xisigma::to_string(diffuse_);
  return out;
}

Rational evaluate(const Measure& mu, const SymbolicSet& e) {
  require_same_carrier(mu.carrier(), e.carrier());
  Rational sum = 0;
  for (const auto& x : e.base()) sum += mu.mass_at(x);
  return e.polarity() == Polarity::Positive ? sum : mu.total() - sum;
}

Scalar integrate(const Measure& mu, const FnElement& f) {
  require_same_carrier(mu.carrier(), f.carrier());
  Scalar sum = Scalar(mu.diffuse()) * f.default_value();
  for (const auto& [x, m] : mu.atomic()) sum += Scalar(m) * f.at(x);
  return sum;
}

Measure lift(const Spectrum& sp, const Measure& mu) {
  const Model& model = sp.model();
  require_same_carrier(model.carrier(), mu.carrier());
  std::map<PointLabel, Rational> masses;
  if (model.kind() == ModelKind::FiniteExplicit) {
    for (const auto& atom : model.algebra().atoms()) masses.emplace(atom.base().front(), evaluate(mu, atom));
    return Measure(sp.space(), std::move(masses));
  }
  masses = mu.atomic();
  masses.emplace(kFreePoint, mu.diffuse());
  return Measure(sp.space(), std::move(masses));
}

Measure random_measure(const Model& model, Rng& rng) {
  std::bernoulli_distribution coin(0.5);
  std::uniform_int_distribution<int> mass(1, 12);
  std::map<PointLabel, Rational> atomic;
  for (const auto& x : model.named_points())
    if (coin(rng)) atomic.emplace(x, ratio(mass(rng), 12));
  Rational diffuse = 0;
  if (model.carrier()->is_infinite() && coin(rng)) diffuse = ratio(mass(rng), 12);
  return Measure(model.carrier(), std::move(atomic), std::move(diffuse));
}

FnElement as_function(const CarrierPtr& carrier, const SimpleFunction& f) {
  FnElement out = FnElement::constant(carrier, 0);
  for (const auto& [c, e] : f) out = out + c * FnElement::indicator(e);
  return out;
}

FnElement gelfand_transform(const Spectrum& sp, const SimpleFunction& f) {
  SimpleFunction lifted;
  for (const auto& [c, e] : f) lifted.emplace_back(c, tilde(sp, e));
  return as_function(sp.space(), lifted);
}

LiftReport verify_lift(const Spectrum& sp, const Measure& mu, Rng& rng, std::size_t members, std::size_t functions) {
  LiftReport r;
  const Model& model = sp.model();
  const Measure star = lift(sp, mu);
  auto fail = [&](bool& flag, const std::string& what) {
    if (flag && !r.counterexample) r.counterexample = what;
    flag = false;
  };

  std::vector<SymbolicSet> sample(model.algebra().atoms());
  for (std::size_t k = 0; k < members; ++k) sample.push_back(model.sample_member(rng));
  for (const auto& e : sample) {
    const Rational lhs = evaluate(star, tilde(sp, e));
    const Rational rhs = evaluate(mu, e);
    if (lhs != rhs)
      fail(r.identity, "E = " + e.to_string() + ": lifted " + to_string(lhs) + " vs " + to_string(rhs));
    ++r.members;
  }

  if (star.total() != mu.total())
    fail(r.conservation, "total " + to_string(star.total()) + " vs " + to_string(mu.total()));

  std::uniform_int_distribution<int> terms(1, 4);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (std::size_t k = 0; k < functions; ++k) {
    SimpleFunction f;
    Scalar linear = 0;
    const int n = terms(rng);
    for (int t = 0; t < n; ++t) {
      const SymbolicSet e = model.sample_member(rng);
      const Scalar c(ratio(coeff(rng), 2));
      f.emplace_back(c, e);
      linear += c * Scalar(evaluate(mu, e));
    }
    const Scalar on_x = integrate(mu, as_function(model.carrier(), f));
    const Scalar on_spectrum = integrate(star, gelfand_transform(sp, f));
    if (on_x != on_spectrum || on_x != linear)
      fail(r.riesz, "simple function with " + std::to_string(n) + " terms: " + on_x.to_string() + ", " +
                        on_spectrum.to_string() + ", " + linear.to_string());
    ++r.functions;
  }
  return r;
}

std::vector<SpectrumPoint> support(const Spectrum& sp, const Measure& nu) {
  require_same_carrier(sp.space(), nu.carrier());
  std::vector<SpectrumPoint> out;
  for (const auto& p : sp.points()) {
    if (p.is_free()) {
      if (sgn(nu.mass_at(kFreePoint)) > 0 || sgn(nu.diffuse()) > 0) out.push_back(p);
    } else if (sgn(nu.mass_at(p.label)) > 0) {
      out.push_back(p);
    }
  }
  return out;
}

SupportReport check_support_shift(const Spectrum& sp, const Measure& mu) {
  const Model& model = sp.model();
  if (!model.has_singletons())
    throw Error(ErrorKind::UnsupportedModel, "support shift needs every singleton in the algebra");
  SupportReport r;
  const Measure star = lift(sp, mu);
  r.support = support(sp, star);
  for (const auto& [x, m] : mu.atomic()) r.positive_atoms.push_back(x);

  std::vector<PointLabel> on_x;
  for (const auto& s : r.support)
    if (!s.is_free()) on_x.push_back(s.label);
  if (on_x != r.positive_atoms) {
    r.shift_holds = false;
    r.counterexample = "support meets X in " + std::to_string(on_x.size()) + " points, " +
                       std::to_string(r.positive_atoms.size()) + " atoms carry mass";
  }

  // Neighbourhood definition: the smallest clopen around a principal point is
  // its singleton; around the free point the co-clopens shrink to the mass
  // outside every atom.
  std::vector<PointLabel> probes;
  for (const auto& p : sp.points()) probes.push_back(p.label);
  if (model.kind() == ModelKind::FiniteCofinite) {
    std::uint64_t next = 0;
    for (const auto& x : probes)
      if (x.is_natural()) next = std::max(next, x.value() + 1);
    probes.push_back(PointLabel::natural(next + 3));
  }
  std::vector<PointLabel> massive;
  for (const auto& [x, m] : mu.atomic()) massive.push_back(x);
  for (const auto& s : probes) {
    SymbolicSet nbhd = s == kFreePoint && model.kind() != ModelKind::FiniteExplicit
                           ? tilde(sp, SymbolicSet::co(model.carrier(), massive))
                           : tilde(sp, SymbolicSet::of(model.carrier(), {s}));
    const bool by_nbhd = sgn(evaluate(star, nbhd)) > 0;
    const bool by_mass = std::any_of(r.support.begin(), r.support.end(), [&](const auto& p) { return p.label == s; });
    if (by_nbhd != by_mass) {
      r.neighbourhoods_agree = false;
      if (!r.counterexample) r.counterexample = "support membership of " + s.text() + " disagrees with its neighbourhoods";
    }
    ++r.probes;
  }
  return r;
}

}  // namespace xisigma
