#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xisigma/algebra.hpp"
#include "xisigma/functions.hpp"

namespace xisigma {

/// Stand-in label for evaluation at an unnamed point of the uncountable
/// carrier; such an evaluation returns the default value.
inline const PointLabel kUnnamed{"<unnamed>"};

class QuasiNorm {
 public:
  enum class Kind { Sup, ScaledSup, WeightedSup, LimSup, SupSquared };

  static QuasiNorm sup() { return QuasiNorm(Kind::Sup); }
  /// c * sup|f|, c >= 1.
  static QuasiNorm scaled(Rational c);
  /// max over points of w(x)|f(x)|; unlisted points get `default_weight`.
  /// Every weight is 0 or at least 1.
  static QuasiNorm weighted(std::map<PointLabel, Rational> weights, Rational default_weight = 1);
  /// |default value|: the limit along the unnamed points. Infinite carriers only.
  static QuasiNorm limsup() { return QuasiNorm(Kind::LimSup); }
  /// (sup|f|)^2. Not a quasi-norm; kept as a user-supplied fault fixture.
  static QuasiNorm sup_squared() { return QuasiNorm(Kind::SupSquared); }

  Kind kind() const { return kind_; }
  bool builtin() const { return kind_ != Kind::SupSquared; }
  const Rational& scale() const { return scale_; }
  const std::map<PointLabel, Rational>& weights() const { return weights_; }
  const Rational& default_weight() const { return default_weight_; }
  /// Weight of the coordinate at x; kUnnamed is the coordinate of the
  /// unnamed remainder.
  Rational weight_at(const PointLabel& x) const;

  std::string to_string() const;
  friend bool operator==(const QuasiNorm&, const QuasiNorm&) = default;

 private:
  explicit QuasiNorm(Kind kind) : kind_(kind) {}

  Kind kind_;
  Rational scale_{1};
  std::map<PointLabel, Rational> weights_;
  Rational default_weight_{1};
};

/// Throws CarrierMismatch for weights off the carrier and UnsupportedModel for
/// LimSup on a finite carrier.
Surd quasi_norm(const QuasiNorm& rho, const FnElement& f);

struct AxiomReport {
  bool subadditive = true;
  bool homogeneous = true;
  bool involutive = true;
  bool submultiplicative = true;
  bool unit_at_least_one = true;
  std::size_t pairs = 0;
  std::optional<std::string> witness;

  bool axioms() const { return subadditive && homogeneous && involutive && submultiplicative; }
};

/// Random element on the given points (plus a random default on infinite
/// carriers) with small integer or Gaussian-integer values.
FnElement random_element(const CarrierPtr& carrier, const std::vector<PointLabel>& points, Field field, Rng& rng);

AxiomReport check_quasi_norm_axioms(const QuasiNorm& rho, const CarrierPtr& carrier,
                                    const std::vector<PointLabel>& points, Field field, Rng& rng,
                                    std::size_t pairs = 1000);

std::vector<FnElement> bounded_part(const std::vector<FnElement>& members, const QuasiNorm& rho);

/// f = s + i t with s, t symmetric. Throws RealSession.
std::pair<FnElement, FnElement> symmetric_decompose(const FnElement& f, Field field);

class FunctionAlgebra {
 public:
  enum class Kind { Generated, EventuallyConstant, FinitelySupported };

  static FunctionAlgebra generated(CarrierPtr carrier, std::vector<FnElement> generators, bool unital,
                                   Field field = Field::Real);
  /// Every eventually constant function on a nat carrier.
  static FunctionAlgebra eventually_constant(CarrierPtr carrier, std::vector<PointLabel> window,
                                             Field field = Field::Real);
  /// Every finitely supported function on a nat carrier; not unital.
  static FunctionAlgebra finitely_supported(CarrierPtr carrier, std::vector<PointLabel> window,
                                            Field field = Field::Real);

  Kind kind() const { return kind_; }
  const CarrierPtr& carrier() const { return carrier_; }
  const std::vector<FnElement>& generators() const { return generators_; }
  bool unital() const { return unital_; }
  Field field() const { return field_; }
  /// Points evaluated explicitly: every point of a finite carrier, the
  /// points the generators mention, or the declared window.
  const std::vector<PointLabel>& window() const { return window_; }
  /// Point standing for every unnamed point; nullopt on finite carriers.
  const std::optional<PointLabel>& representative() const { return representative_; }

  /// Generators (and conjugates in complex sessions), the unit first when
  /// unital. Symbolic classes: indicators of the window points and the
  /// representative.
  std::vector<FnElement> alphabet() const;

  std::string to_string() const;

 private:
  FunctionAlgebra() = default;

  Kind kind_ = Kind::Generated;
  CarrierPtr carrier_;
  std::vector<FnElement> generators_;
  bool unital_ = false;
  Field field_ = Field::Real;
  std::vector<PointLabel> window_;
  std::optional<PointLabel> representative_;
};

struct Character {
  enum class Kind { Evaluation, DefaultValue, Adjoined };

  Kind kind = Kind::Evaluation;
  PointLabel point;
  /// The evaluation stands for the whole family of unnamed evaluations.
  bool represents_unnamed = false;

  Scalar operator()(const FnElement& f) const;
  std::string to_string() const;
  friend bool operator==(const Character&, const Character&) = default;
};

/// Throws UnsupportedModel for a Generated algebra whose characters are not
/// decidable (never, currently).
std::vector<Character> characters(const FunctionAlgebra& a);

/// Products of alphabet letters up to `degree`, then `random` seeded linear
/// combinations of those products with small coefficients.
std::vector<FnElement> test_family(const FunctionAlgebra& a, Rng& rng, std::size_t degree = 3,
                                   std::size_t random = 1000);

struct ContinuityReport {
  std::vector<Character> kept;
  std::vector<std::pair<Character, FnElement>> rejected;  ///< |α(a)| > ρ(a)
};

ContinuityReport continuous_characters(const std::vector<Character>& chars, const QuasiNorm& rho,
                                       const std::vector<FnElement>& family);

/// Independent continuity decision: α is bounded iff it vanishes on
/// ker ρ ∩ A, computed by exact elimination over a spanning set of A.
std::vector<bool> kernel_continuity(const FunctionAlgebra& a, const QuasiNorm& rho,
                                    const std::vector<Character>& chars);

/// (a, λ) in the unitization.
struct UnitizedElement {
  FnElement a;
  Scalar lambda;

  friend UnitizedElement operator+(const UnitizedElement& x, const UnitizedElement& y) {
    return {x.a + y.a, x.lambda + y.lambda};
  }
  /// (a,λ)(b,γ) = (ab + γa + λb, λγ).
  friend UnitizedElement operator*(const UnitizedElement& x, const UnitizedElement& y) {
    return {x.a * y.a + y.lambda * x.a + x.lambda * y.a, x.lambda * y.lambda};
  }
};

struct Unitization {
  FunctionAlgebra base;
  QuasiNorm rho;
  /// Extensions α'(a,λ) = α(a) + λ of the characters of A, then the adjoined one.
  std::vector<Character> characters;

  Surd norm(const UnitizedElement& x) const;
  Scalar evaluate(const Character& c, const UnitizedElement& x) const;
};

Unitization unitize(const FunctionAlgebra& a, const QuasiNorm& rho);

/// A₁ realized as a function algebra: a + λ on the carrier, λ at one adjoined
/// point (finitely supported functions become the eventually constant ones).
FunctionAlgebra realize_unitization(const FunctionAlgebra& a);

struct CompactnessReport {
  bool compact = false;
  std::optional<FnElement> a0;
  std::optional<Surd> min_value;  ///< min over continuous α of |α(a0)|
  std::string evidence;
};

CompactnessReport compactness_witness(const FunctionAlgebra& a, const std::vector<Character>& continuous,
                                      const std::vector<FnElement>& family);

struct DensityReport {
  Extended d_star;
  bool dense = false;
  std::optional<FnElement> witness;
  /// Points whose evaluations on the ambient functions are ρ-continuous.
  std::vector<PointLabel> x_rho;
  /// The representative is in X_ρ, so every unnamed point is.
  bool x_rho_has_unnamed = false;
  std::vector<Character> spectrum;  ///< Sp_ρ(A)
  bool direct_dense = false;
  std::vector<std::string> log;
};

/// D* over the test family of A, with A included in the functions on its
/// carrier. Throws EmptyTestFamily.
DensityReport density_constant(const FunctionAlgebra& a, const QuasiNorm& rho, Rng& rng);

}  // namespace xisigma
