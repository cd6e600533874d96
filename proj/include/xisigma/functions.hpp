#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "xisigma/carriers.hpp"
#include "xisigma/numeric.hpp"

namespace xisigma {

/// Scalar function on a carrier: finitely many exceptional values plus a
/// default value on every other point.
///
/// Canonical form: on finite carriers every point is listed and the default
/// is 0 (unused); on infinite carriers only points whose value differs from
/// the default are listed. Structural equality is therefore function equality.
class FnElement {
 public:
  FnElement(CarrierPtr carrier, std::map<PointLabel, Scalar> values, Scalar default_value = 0);

  static FnElement constant(CarrierPtr carrier, Scalar value);
  static FnElement indicator(const SymbolicSet& e);

  const CarrierPtr& carrier() const { return carrier_; }
  const std::map<PointLabel, Scalar>& exceptions() const { return values_; }
  /// Value on every unlisted point; unused on finite carriers.
  const Scalar& default_value() const { return default_; }

  Scalar at(const PointLabel& x) const;
  /// Values at every listed point, plus the default when some point of the
  /// carrier is unlisted. The supremum of |f| is the max over these.
  std::vector<Scalar> attained_values() const;

  FnElement conj() const;
  bool is_symmetric() const { return conj() == *this; }
  bool is_real() const;

  FnElement operator-() const;
  friend FnElement operator+(const FnElement& a, const FnElement& b);
  friend FnElement operator-(const FnElement& a, const FnElement& b) { return a + (-b); }
  friend FnElement operator*(const FnElement& a, const FnElement& b);
  friend FnElement operator*(const Scalar& c, const FnElement& f);

  friend bool operator==(const FnElement& a, const FnElement& b) {
    return a.values_ == b.values_ && a.default_ == b.default_ && same_carrier(a.carrier_, b.carrier_);
  }

  /// `{0:1, 3:1+2i; else 0}`.
  std::string to_string() const;

 private:
  void canonicalize();
  template <class Op>
  static FnElement combine(const FnElement& a, const FnElement& b, Op op);

  CarrierPtr carrier_;
  std::map<PointLabel, Scalar> values_;
  Scalar default_;
};

/// Points where the function might differ from its default, merged across
/// several functions (finite carriers: every point).
std::vector<PointLabel> mentioned_points(const std::vector<FnElement>& fs);

}  // namespace xisigma
