#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xisigma/spectrum.hpp"

namespace xisigma {

/// Finite positive measure: point masses on named points plus one diffuse
/// mass on the unnamed remainder (always 0 on finite carriers).
class Measure {
 public:
  Measure(CarrierPtr carrier, std::map<PointLabel, Rational> atomic, Rational diffuse = 0);

  const CarrierPtr& carrier() const { return carrier_; }
  /// Strictly positive masses only.
  const std::map<PointLabel, Rational>& atomic() const { return atomic_; }
  const Rational& diffuse() const { return diffuse_; }
  Rational total() const;
  Rational mass_at(const PointLabel& x) const;

  std::string to_string() const;
  friend bool operator==(const Measure&, const Measure&) = default;

 private:
  CarrierPtr carrier_;
  std::map<PointLabel, Rational> atomic_;
  Rational diffuse_;
};

/// μ(base) for Positive sets, total − μ(base) for Co sets.
Rational evaluate(const Measure& mu, const SymbolicSet& e);

/// ∫ f dμ: point masses times values, plus the diffuse mass times the default.
Scalar integrate(const Measure& mu, const FnElement& f);

/// The lifted measure on the spectrum carrier: principal points keep their
/// (atom) masses, the diffuse mass moves to the free point.
Measure lift(const Spectrum& sp, const Measure& mu);

/// Random measure with masses k/12 on a random set of named points and, on
/// infinite carriers, a random diffuse part.
Measure random_measure(const Model& model, Rng& rng);

/// Simple function Σ cᵢ χ_{Eᵢ}.
using SimpleFunction = std::vector<std::pair<Scalar, SymbolicSet>>;

FnElement as_function(const CarrierPtr& carrier, const SimpleFunction& f);
/// The same combination of the clopens tilde(Eᵢ), on the spectrum carrier.
FnElement gelfand_transform(const Spectrum& sp, const SimpleFunction& f);

struct LiftReport {
  bool identity = true;      ///< *μ(tilde E) = μ(E)
  bool conservation = true;  ///< total masses agree
  bool riesz = true;         ///< ∫ f̃ d*μ = ∫ f dμ = Σ cᵢ μ(Eᵢ)
  std::size_t members = 0;
  std::size_t functions = 0;
  std::optional<std::string> counterexample;

  bool all() const { return identity && conservation && riesz; }
};

LiftReport verify_lift(const Spectrum& sp, const Measure& mu, Rng& rng, std::size_t members = 100,
                       std::size_t functions = 50);

/// Points s of the spectrum every clopen neighbourhood of which has positive
/// mass, for a measure on the spectrum carrier.
std::vector<SpectrumPoint> support(const Spectrum& sp, const Measure& nu);

struct SupportReport {
  std::vector<SpectrumPoint> support;
  std::vector<PointLabel> positive_atoms;  ///< {x : μ({x}) > 0}
  /// support ∩ X equals the positive-atom set.
  bool shift_holds = true;
  /// The mass formula agrees with the neighbourhood definition on every probe.
  bool neighbourhoods_agree = true;
  std::size_t probes = 0;
  std::optional<std::string> counterexample;

  bool all() const { return shift_holds && neighbourhoods_agree; }
};

/// Requires singletons in the algebra (UnsupportedModel otherwise).
SupportReport check_support_shift(const Spectrum& sp, const Measure& mu);

}  // namespace xisigma
