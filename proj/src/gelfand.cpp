#include "xisigma/gelfand.hpp"

#include <algorithm>
#include <sstream>

#include "xisigma/error.hpp"

namespace xisigma {

// ------------------------------------------------------------ quasi-norms

QuasiNorm QuasiNorm::scaled(Rational c) {
  if (c < 1) throw Error(ErrorKind::InvalidArgument, "scaled sup-norm needs c >= 1, got " + xisigma::to_string(c));
  QuasiNorm q(Kind::ScaledSup);
  q.scale_ = std::move(c);
  return q;
}

QuasiNorm QuasiNorm::weighted(std::map<PointLabel, Rational> weights, Rational default_weight) {
  auto valid = [](const Rational& w) { return sgn(w) == 0 || w >= 1; };
  for (const auto& [x, w] : weights)
    if (!valid(w)) throw Error(ErrorKind::InvalidArgument, "weight at '" + x.text() + "' must be 0 or at least 1");
  if (!valid(default_weight)) throw Error(ErrorKind::InvalidArgument, "default weight must be 0 or at least 1");
  QuasiNorm q(Kind::WeightedSup);
  q.weights_ = std::move(weights);
  q.default_weight_ = std::move(default_weight);
  return q;
}

Rational QuasiNorm::weight_at(const PointLabel& x) const {
  switch (kind_) {
    case Kind::WeightedSup: {
      auto it = weights_.find(x);
      return it == weights_.end() ? default_weight_ : it->second;
    }
    case Kind::LimSup: return x == kUnnamed ? 1 : 0;
    default: return 1;
  }
}

std::string QuasiNorm::to_string() const {
  switch (kind_) {
    case Kind::Sup: return "sup";
    case Kind::ScaledSup: return "scaled(" + xisigma::to_string(scale_) + ")";
    case Kind::WeightedSup: {
      std::string out = "weighted{";
      for (const auto& [x, w] : weights_) out += x.text() + ":" + xisigma::to_string(w) + ", ";
      return out + "else " + xisigma::to_string(default_weight_) + "}";
    }
    case Kind::LimSup: return "limsup";
    case Kind::SupSquared: return "sup-squared";
  }
  return "?";
}

namespace {

Rational max_norm_squared(const FnElement& f) {
  Rational best = 0;
  for (const auto& v : f.attained_values()) best = std::max(best, v.norm_squared());
  return best;
}

}  // namespace

Surd quasi_norm(const QuasiNorm& rho, const FnElement& f) {
  switch (rho.kind()) {
    case QuasiNorm::Kind::Sup: return Surd::sqrt(max_norm_squared(f));
    case QuasiNorm::Kind::ScaledSup: return Surd::sqrt(rho.scale() * rho.scale() * max_norm_squared(f));
    case QuasiNorm::Kind::WeightedSup: {
      const auto& carrier = f.carrier();
      Rational best = 0;
      auto offer = [&](const Rational& w, const Scalar& v) { best = std::max(best, Rational(w * w * v.norm_squared())); };
      for (const auto& [x, w] : rho.weights()) {
        require_point(*carrier, x);
        offer(w, f.at(x));
      }
      for (const auto& [x, v] : f.exceptions())
        if (!rho.weights().contains(x)) offer(rho.default_weight(), v);
      if (carrier->is_infinite()) offer(rho.default_weight(), f.default_value());
      return Surd::sqrt(best);
    }
    case QuasiNorm::Kind::LimSup:
      if (!f.carrier()->is_infinite())
        throw Error(ErrorKind::UnsupportedModel, "limsup needs an infinite carrier");
      return Surd::sqrt(f.default_value().norm_squared());
    case QuasiNorm::Kind::SupSquared: return Surd(max_norm_squared(f));
  }
  throw Error(ErrorKind::InvalidArgument, "unknown quasi-norm");
}

namespace {

Scalar random_scalar(Field field, Rng& rng, int bound, bool nonzero = false) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  for (;;) {
    Scalar z(Rational(dist(rng)), field == Field::Complex ? Rational(dist(rng)) : Rational(0));
    if (!nonzero || !z.is_zero()) return z;
  }
}

}  // namespace

FnElement random_element(const CarrierPtr& carrier, const std::vector<PointLabel>& points, Field field, Rng& rng) {
  std::bernoulli_distribution coin(0.5);
  const Scalar def = carrier->is_infinite() ? random_scalar(field, rng, 3) : Scalar(0);
  std::map<PointLabel, Scalar> values;
  for (const auto& x : points)
    if (!carrier->is_infinite() || coin(rng)) values.emplace(x, random_scalar(field, rng, 3));
  return FnElement(carrier, std::move(values), def);
}

AxiomReport check_quasi_norm_axioms(const QuasiNorm& rho, const CarrierPtr& carrier,
                                    const std::vector<PointLabel>& points, Field field, Rng& rng,
                                    std::size_t pairs) {
  AxiomReport r;
  auto note = [&](bool& flag, const std::string& what) {
    if (flag && !r.witness) r.witness = what;
    flag = false;
  };
  const Surd unit = quasi_norm(rho, FnElement::constant(carrier, 1));
  if (unit < Surd(1)) note(r.unit_at_least_one, "rho(1) = " + unit.to_string() + " < 1");
  std::uniform_int_distribution<int> den(1, 3);
  for (std::size_t k = 0; k < pairs; ++k) {
    const FnElement f = random_element(carrier, points, field, rng);
    const FnElement g = random_element(carrier, points, field, rng);
    Scalar lambda = random_scalar(field, rng, 3, true);
    lambda = lambda / Scalar(Rational(den(rng)));
    const Surd rf = quasi_norm(rho, f);
    const Surd rg = quasi_norm(rho, g);
    const std::string pair = "f = " + f.to_string() + ", g = " + g.to_string();
    if (Surd sum = quasi_norm(rho, f + g); sum > rf + rg)
      note(r.subadditive, pair + ": rho(f+g) = " + sum.to_string() + " > rho(f) + rho(g) = " + (rf + rg).to_string());
    if (Surd scaled = quasi_norm(rho, lambda * f); scaled != Surd::abs(lambda) * rf)
      note(r.homogeneous, "f = " + f.to_string() + ", lambda = " + lambda.to_string() + ": rho(lambda f) = " +
                              scaled.to_string() + " != |lambda| rho(f) = " + (Surd::abs(lambda) * rf).to_string());
    if (Surd star = quasi_norm(rho, f.conj()); star != rf)
      note(r.involutive, "f = " + f.to_string() + ": rho(f*) = " + star.to_string() + " != rho(f) = " + rf.to_string());
    if (Surd prod = quasi_norm(rho, f * g); prod > rf * rg)
      note(r.submultiplicative,
           pair + ": rho(fg) = " + prod.to_string() + " > rho(f) rho(g) = " + (rf * rg).to_string());
    ++r.pairs;
  }
  return r;
}

std::vector<FnElement> bounded_part(const std::vector<FnElement>& members, const QuasiNorm& rho) {
  // Every representable element has finite quasi-norm.
  std::vector<FnElement> out;
  for (const auto& f : members) {
    quasi_norm(rho, f);
    out.push_back(f);
  }
  return out;
}

std::pair<FnElement, FnElement> symmetric_decompose(const FnElement& f, Field field) {
  if (field == Field::Real) throw Error(ErrorKind::RealSession, "symmetric decomposition needs a complex session");
  const Scalar half(Rational(1, 2));
  FnElement s = half * (f + f.conj());
  FnElement t = Scalar(0, Rational(-1, 2)) * (f - f.conj());
  return {std::move(s), std::move(t)};
}

// ------------------------------------------------------ function algebras

namespace {

std::vector<PointLabel> sorted_unique(std::vector<PointLabel> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::optional<PointLabel> representative_for(const CarrierPtr& carrier, const std::vector<PointLabel>& window) {
  switch (carrier->kind()) {
    case CarrierKind::FiniteExplicit: return std::nullopt;
    case CarrierKind::UncountableOmega: return kUnnamed;
    case CarrierKind::CountableNat: {
      std::uint64_t next = 0;
      for (const auto& x : window)
        if (x.is_natural()) next = std::max(next, x.value() + 1);
      return PointLabel::natural(next);
    }
  }
  return std::nullopt;
}

FnElement point_indicator(const CarrierPtr& carrier, const PointLabel& x) {
  return FnElement::indicator(SymbolicSet::of(carrier, {x}));
}

}  // namespace

FunctionAlgebra FunctionAlgebra::generated(CarrierPtr carrier, std::vector<FnElement> generators, bool unital,
                                           Field field) {
  for (const auto& g : generators) {
    require_same_carrier(carrier, g.carrier());
    if (field == Field::Real && !g.is_real())
      throw Error(ErrorKind::InvalidArgument, "complex generator " + g.to_string() + " in a real session");
  }
  FunctionAlgebra a;
  a.kind_ = Kind::Generated;
  a.window_ = carrier->is_infinite() ? mentioned_points(generators) : carrier->named();
  a.representative_ = representative_for(carrier, a.window_);
  a.carrier_ = std::move(carrier);
  a.generators_ = std::move(generators);
  a.unital_ = unital;
  a.field_ = field;
  return a;
}

namespace {

FunctionAlgebra symbolic_checks(const CarrierPtr& carrier, const std::vector<PointLabel>& window) {
  if (carrier->kind() != CarrierKind::CountableNat)
    throw Error(ErrorKind::UnsupportedModel, "eventually constant and finitely supported classes need a nat carrier");
  for (const auto& x : window) require_point(*carrier, x);
  return FunctionAlgebra::generated(carrier, {}, false);
}

}  // namespace

FunctionAlgebra FunctionAlgebra::eventually_constant(CarrierPtr carrier, std::vector<PointLabel> window, Field field) {
  FunctionAlgebra a = symbolic_checks(carrier, window);
  a.kind_ = Kind::EventuallyConstant;
  a.unital_ = true;
  a.field_ = field;
  a.window_ = sorted_unique(std::move(window));
  a.representative_ = representative_for(carrier, a.window_);
  return a;
}

FunctionAlgebra FunctionAlgebra::finitely_supported(CarrierPtr carrier, std::vector<PointLabel> window, Field field) {
  FunctionAlgebra a = symbolic_checks(carrier, window);
  a.kind_ = Kind::FinitelySupported;
  a.unital_ = false;
  a.field_ = field;
  a.window_ = sorted_unique(std::move(window));
  a.representative_ = representative_for(carrier, a.window_);
  return a;
}

std::vector<FnElement> FunctionAlgebra::alphabet() const {
  std::vector<FnElement> out;
  if (unital_) out.push_back(FnElement::constant(carrier_, 1));
  if (kind_ == Kind::Generated) {
    for (const auto& g : generators_) out.push_back(g);
    if (field_ == Field::Complex)
      for (const auto& g : generators_)
        if (!g.is_symmetric()) out.push_back(g.conj());
    return out;
  }
  for (const auto& x : window_) out.push_back(point_indicator(carrier_, x));
  out.push_back(point_indicator(carrier_, *representative_));
  return out;
}

std::string FunctionAlgebra::to_string() const {
  std::string out;
  switch (kind_) {
    case Kind::Generated: out = "generated by " + std::to_string(generators_.size()) + " functions"; break;
    case Kind::EventuallyConstant: out = "eventually constant functions"; break;
    case Kind::FinitelySupported: out = "finitely supported functions"; break;
  }
  out += " on " + carrier_->describe();
  if (unital_ && kind_ == Kind::Generated) out += ", unital";
  return out;
}

// ------------------------------------------------------------- characters

Scalar Character::operator()(const FnElement& f) const {
  switch (kind) {
    case Kind::Evaluation: return point == kUnnamed ? f.default_value() : f.at(point);
    case Kind::DefaultValue: return f.default_value();
    case Kind::Adjoined: break;
  }
  throw Error(ErrorKind::InvalidArgument, "the adjoined character acts on unitized pairs only");
}

std::string Character::to_string() const {
  switch (kind) {
    case Kind::Evaluation: return "e(" + point.text() + ")" + (represents_unnamed ? "[unnamed]" : "");
    case Kind::DefaultValue: return "default";
    case Kind::Adjoined: return "adjoined";
  }
  return "?";
}

std::vector<Character> characters(const FunctionAlgebra& a) {
  std::vector<Character> out;
  const auto& rep = a.representative();
  if (a.kind() != FunctionAlgebra::Kind::Generated) {
    for (const auto& x : a.window()) out.push_back({Character::Kind::Evaluation, x, false});
    out.push_back({Character::Kind::Evaluation, *rep, true});
    if (a.kind() == FunctionAlgebra::Kind::EventuallyConstant) out.push_back({Character::Kind::DefaultValue, {}, false});
    return out;
  }
  std::vector<PointLabel> probes = a.window();
  if (rep) probes.push_back(*rep);
  std::vector<std::vector<Scalar>> seen;
  for (const auto& p : probes) {
    const Character e{Character::Kind::Evaluation, p, false};
    std::vector<Scalar> values;
    for (const auto& g : a.generators()) values.push_back(e(g));
    const bool zero = std::all_of(values.begin(), values.end(), [](const Scalar& v) { return v.is_zero(); });
    if (zero && !a.unital()) continue;
    auto it = std::find(seen.begin(), seen.end(), values);
    if (it != seen.end()) {
      if (rep && p == *rep) out[static_cast<std::size_t>(it - seen.begin())].represents_unnamed = true;
      continue;
    }
    seen.push_back(std::move(values));
    out.push_back({Character::Kind::Evaluation, p, rep && p == *rep});
  }
  return out;
}

std::vector<FnElement> test_family(const FunctionAlgebra& a, Rng& rng, std::size_t degree, std::size_t random) {
  const auto letters = a.alphabet();
  std::vector<FnElement> products;
  if (letters.empty()) return products;
  // Multisets of letters, built as non-decreasing index sequences.
  std::vector<std::pair<FnElement, std::size_t>> layer;
  for (std::size_t i = 0; i < letters.size(); ++i) layer.emplace_back(letters[i], i);
  for (std::size_t d = 1; d <= degree && !layer.empty(); ++d) {
    std::vector<std::pair<FnElement, std::size_t>> next;
    for (const auto& [f, last] : layer) {
      products.push_back(f);
      if (d < degree)
        for (std::size_t i = last; i < letters.size(); ++i) next.emplace_back(f * letters[i], i);
    }
    layer = std::move(next);
  }
  std::vector<FnElement> out = products;
  std::uniform_int_distribution<std::size_t> pick(0, products.size() - 1);
  std::uniform_int_distribution<int> terms(1, 3);
  for (std::size_t k = 0; k < random; ++k) {
    const int n = terms(rng);
    FnElement sum = random_scalar(a.field(), rng, 2, true) * products[pick(rng)];
    for (int t = 1; t < n; ++t) sum = sum + random_scalar(a.field(), rng, 2, true) * products[pick(rng)];
    out.push_back(std::move(sum));
  }
  return out;
}

ContinuityReport continuous_characters(const std::vector<Character>& chars, const QuasiNorm& rho,
                                       const std::vector<FnElement>& family) {
  std::vector<Surd> norms;
  norms.reserve(family.size());
  for (const auto& a : family) norms.push_back(quasi_norm(rho, a));
  ContinuityReport r;
  for (const auto& alpha : chars) {
    std::optional<FnElement> witness;
    for (std::size_t k = 0; k < family.size() && !witness; ++k)
      if (Surd::abs(alpha(family[k])) > norms[k]) witness = family[k];
    if (witness)
      r.rejected.emplace_back(alpha, *witness);
    else
      r.kept.push_back(alpha);
  }
  return r;
}

// ------------------------------------------------- kernel-based continuity

namespace {

/// Reduced row echelon form over the Gaussian rationals.
class Echelon {
 public:
  explicit Echelon(std::size_t width) : width_(width) {}

  bool insert(std::vector<Scalar> v) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Scalar c = v[pivots_[r]];
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < width_; ++j) v[j] -= c * rows_[r][j];
    }
    std::size_t p = 0;
    while (p < width_ && v[p].is_zero()) ++p;
    if (p == width_) return false;
    const Scalar lead = v[p];
    for (auto& x : v) x = x / lead;
    for (auto& row : rows_) {
      const Scalar c = row[p];
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < width_; ++j) row[j] -= c * v[j];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

  const std::vector<std::vector<Scalar>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  std::size_t width_;
  std::vector<std::vector<Scalar>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace

std::vector<bool> kernel_continuity(const FunctionAlgebra& a, const QuasiNorm& rho,
                                    const std::vector<Character>& chars) {
  // Coordinates: explicit points, then one for the unnamed remainder.
  std::vector<PointLabel> points = a.window();
  if (a.representative() && *a.representative() != kUnnamed) points.push_back(*a.representative());
  for (const auto& [x, w] : rho.weights())
    if (a.carrier()->contains(x)) points.push_back(x);
  points = sorted_unique(std::move(points));
  const bool remainder = a.carrier()->is_infinite();
  const std::size_t width = points.size() + (remainder ? 1 : 0);

  auto coords = [&](const FnElement& f) {
    std::vector<Scalar> v;
    v.reserve(width);
    for (const auto& x : points) v.push_back(f.at(x));
    if (remainder) v.push_back(f.default_value());
    return v;
  };
  auto weighted = [&](std::size_t j) { return sgn(rho.weight_at(j == points.size() ? kUnnamed : points[j])) > 0; };

  // Span of A: close the alphabet under multiplication by letters.
  const auto letters = a.alphabet();
  std::vector<std::vector<Scalar>> letter_coords;
  for (const auto& l : letters) letter_coords.push_back(coords(l));
  Echelon span(width);
  for (const auto& v : letter_coords) span.insert(v);
  for (std::size_t done = 0; done < span.rows().size(); ++done) {
    for (const auto& l : letter_coords) {
      std::vector<Scalar> prod(width);
      for (std::size_t j = 0; j < width; ++j) prod[j] = span.rows()[done][j] * l[j];
      span.insert(std::move(prod));
    }
  }

  // Reorder columns so the weighted ones come first; rows led by an
  // unweighted column then span ker ρ ∩ A.
  std::vector<std::size_t> order;
  for (std::size_t j = 0; j < width; ++j)
    if (weighted(j)) order.push_back(j);
  const std::size_t weighted_count = order.size();
  for (std::size_t j = 0; j < width; ++j)
    if (!weighted(j)) order.push_back(j);
  Echelon permuted(width);
  for (const auto& row : span.rows()) {
    std::vector<Scalar> v(width);
    for (std::size_t j = 0; j < width; ++j) v[j] = row[order[j]];
    permuted.insert(std::move(v));
  }
  std::vector<std::vector<Scalar>> kernel;
  for (std::size_t r = 0; r < permuted.rows().size(); ++r) {
    if (permuted.pivots()[r] < weighted_count) continue;
    std::vector<Scalar> v(width);
    for (std::size_t j = 0; j < width; ++j) v[order[j]] = permuted.rows()[r][j];
    kernel.push_back(std::move(v));
  }

  std::vector<bool> out;
  for (const auto& alpha : chars) {
    std::size_t j = points.size();
    if (alpha.kind == Character::Kind::Evaluation && alpha.point != kUnnamed)
      j = static_cast<std::size_t>(std::lower_bound(points.begin(), points.end(), alpha.point) - points.begin());
    else if (alpha.kind == Character::Kind::Adjoined)
      throw Error(ErrorKind::InvalidArgument, "kernel test applies to characters of A");
    out.push_back(std::all_of(kernel.begin(), kernel.end(), [&](const auto& k) { return k[j].is_zero(); }));
  }
  return out;
}

// ------------------------------------------------------------ unitization

Surd Unitization::norm(const UnitizedElement& x) const { return quasi_norm(rho, x.a) + Surd::abs(x.lambda); }

Scalar Unitization::evaluate(const Character& c, const UnitizedElement& x) const {
  if (c.kind == Character::Kind::Adjoined) return x.lambda;
  return c(x.a) + x.lambda;
}

Unitization unitize(const FunctionAlgebra& a, const QuasiNorm& rho) {
  Unitization u{a, rho, characters(a)};
  u.characters.push_back({Character::Kind::Adjoined, PointLabel("∞̂"), false});
  return u;
}

FunctionAlgebra realize_unitization(const FunctionAlgebra& a) {
  const PointLabel adjoined("∞̂");
  if (a.kind() == FunctionAlgebra::Kind::FinitelySupported)
    return FunctionAlgebra::eventually_constant(a.carrier(), a.window(), a.field());
  auto names = a.carrier()->named();
  names.push_back(adjoined);
  CarrierPtr carrier;
  switch (a.carrier()->kind()) {
    case CarrierKind::FiniteExplicit: carrier = Carrier::finite(names); break;
    case CarrierKind::CountableNat: carrier = Carrier::naturals(names); break;
    case CarrierKind::UncountableOmega: carrier = Carrier::omega(names); break;
  }
  if (a.kind() == FunctionAlgebra::Kind::EventuallyConstant) {
    auto window = a.window();
    window.push_back(adjoined);
    return FunctionAlgebra::eventually_constant(carrier, window, a.field());
  }
  auto extend = [&](const FnElement& f) {
    auto values = f.exceptions();
    values[adjoined] = 0;
    return FnElement(carrier, std::move(values), f.default_value());
  };
  std::vector<FnElement> gens;
  if (a.unital()) gens.push_back(extend(FnElement::constant(a.carrier(), 1)));
  for (const auto& g : a.generators()) gens.push_back(extend(g));
  return FunctionAlgebra::generated(carrier, std::move(gens), true, a.field());
}

// ----------------------------------------------------------- compactness

namespace {

/// min over the characters of |α(a)|², counting the whole unnamed family
/// behind a representative.
Rational min_value_squared(const std::vector<Character>& chars, const FnElement& a) {
  std::optional<Rational> best;
  auto offer = [&](const Rational& v) {
    if (!best || v < *best) best = v;
  };
  for (const auto& alpha : chars) {
    offer(alpha(a).norm_squared());
    if (alpha.represents_unnamed) offer(a.default_value().norm_squared());
  }
  return best.value_or(Rational(0));
}

}  // namespace

CompactnessReport compactness_witness(const FunctionAlgebra& a, const std::vector<Character>& continuous,
                                      const std::vector<FnElement>& family) {
  CompactnessReport r;
  if (continuous.empty()) {
    r.compact = true;
    r.evidence = "empty spectrum";
    return r;
  }
  if (a.unital()) {
    r.a0 = FnElement::constant(a.carrier(), 1);
    r.min_value = Surd::sqrt(min_value_squared(continuous, *r.a0));
    r.compact = *r.min_value >= Surd(1);
    r.evidence = "unit: |alpha(1)| = 1 for every continuous alpha";
    return r;
  }
  for (const auto& f : family) {
    const Rational m2 = min_value_squared(continuous, f);
    if (sgn(m2) == 0) continue;
    // q <= min|α(f)| because q = min(1, m²) and m² <= 1 implies m² <= m.
    const Rational q = std::min(Rational(1), m2);
    FnElement a0 = Scalar(Rational(1) / q) * f;
    r.min_value = Surd::sqrt(min_value_squared(continuous, a0));
    r.compact = *r.min_value >= Surd(1);
    r.a0 = std::move(a0);
    r.evidence = "min over continuous characters of |alpha(a0)| = " + r.min_value->to_string();
    return r;
  }
  r.evidence = "each of the " + std::to_string(family.size()) +
               " tested elements vanishes on some continuous character; every element has default 0, so "
               "e(n)(a) = 0 for all n beyond its support";
  return r;
}

// --------------------------------------------------------------- density

namespace {

FunctionAlgebra ambient_for(const FunctionAlgebra& a, const QuasiNorm& rho) {
  const auto& carrier = a.carrier();
  std::vector<PointLabel> points = a.window();
  if (a.representative() && *a.representative() != kUnnamed) points.push_back(*a.representative());
  for (const auto& [x, w] : rho.weights())
    if (carrier->contains(x)) points.push_back(x);
  points = sorted_unique(std::move(points));
  if (carrier->kind() == CarrierKind::CountableNat)
    return FunctionAlgebra::eventually_constant(carrier, points, a.field());
  std::vector<FnElement> gens;
  for (const auto& x : carrier->is_infinite() ? points : carrier->named()) gens.push_back(point_indicator(carrier, x));
  return FunctionAlgebra::generated(carrier, std::move(gens), true, a.field());
}

}  // namespace

DensityReport density_constant(const FunctionAlgebra& a, const QuasiNorm& rho, Rng& rng) {
  DensityReport r;
  const auto family = test_family(a, rng);
  if (family.empty()) throw Error(ErrorKind::EmptyTestFamily, "the algebra has no generators to test");

  // X_ρ: evaluations continuous on the ambient functions.
  const FunctionAlgebra ambient = ambient_for(a, rho);
  auto ambient_family = test_family(ambient, rng, 2, 200);
  std::vector<PointLabel> sample_points = ambient.window();
  for (int k = 0; k < 200; ++k) ambient_family.push_back(random_element(a.carrier(), sample_points, a.field(), rng));
  std::vector<Character> evaluations;
  for (const auto& c : characters(ambient))
    if (c.kind == Character::Kind::Evaluation) evaluations.push_back(c);
  const auto x_rho = continuous_characters(evaluations, rho, ambient_family).kept;
  for (const auto& e : x_rho) {
    if (e.represents_unnamed)
      r.x_rho_has_unnamed = true;
    else
      r.x_rho.push_back(e.point);
  }

  // D* = max ρ(a) / sup over X_ρ of |a|.
  r.d_star = Extended(Surd(0));
  for (const auto& f : family) {
    const Surd num = quasi_norm(rho, f);
    Rational den2 = 0;
    for (const auto& e : x_rho) {
      den2 = std::max(den2, e(f).norm_squared());
      if (e.represents_unnamed) den2 = std::max(den2, f.default_value().norm_squared());
    }
    if (sgn(den2) == 0) {
      if (num.sign() > 0 && !r.witness) {
        r.d_star = Extended::infinity();
        r.witness = f;
      }
      continue;
    }
    const Extended ratio(num.divided_by(Surd::sqrt(den2)));
    if (ratio > r.d_star) r.d_star = ratio;
  }
  r.dense = !r.d_star.is_infinite();

  // Direct check: every continuous character of A is the restriction of a
  // point of X_ρ, or a limit of the unnamed evaluations.
  r.spectrum = continuous_characters(characters(a), rho, family).kept;
  const auto letters = a.alphabet();
  r.direct_dense = true;
  for (const auto& alpha : r.spectrum) {
    bool covered = false;
    if (alpha.kind == Character::Kind::DefaultValue || alpha.point == kUnnamed) covered = r.x_rho_has_unnamed;
    for (const auto& e : x_rho) {
      if (covered) break;
      covered = std::all_of(letters.begin(), letters.end(), [&](const FnElement& l) { return e(l) == alpha(l); });
    }
    if (!covered) {
      r.direct_dense = false;
      r.log.push_back(alpha.to_string() + " is not in the closure of X_rho");
    }
  }
  std::string xs;
  for (const auto& x : r.x_rho) xs += (xs.empty() ? "" : ",") + x.text();
  r.log.push_back("X_rho = {" + xs + "}" + (r.x_rho_has_unnamed ? " plus every unnamed point" : ""));
  r.log.push_back("D* = " + r.d_star.to_string());
  return r;
}

}  // namespace xisigma
