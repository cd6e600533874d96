#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace xisigma {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Scalar field of a session: real (involution = identity) or complex
/// (involution = conjugation).
enum class Field { Real, Complex };

std::string_view to_string(Field field);

Rational parse_rational(std::string_view text);
/// num/den in lowest terms.
inline Rational ratio(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}
std::string to_string(const Rational& q);

/// Exact Gaussian rational `re + im*i`. Real sessions keep `im == 0`.
class Scalar {
 public:
  Scalar() = default;
  Scalar(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {}
  Scalar(long value) : re_(value), im_(0) {}

  static Scalar i() { return Scalar(0, 1); }

  /// Accepts "3", "-1/2", "2i", "1+2i", "1/3-i", "-i".
  static Scalar parse(std::string_view text);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  /// |z|^2, always rational.
  Rational norm_squared() const { return re_ * re_ + im_ * im_; }

  Scalar operator-() const { return Scalar(-re_, -im_); }
  friend Scalar operator+(const Scalar& a, const Scalar& b) { return Scalar(a.re_ + b.re_, a.im_ + b.im_); }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return Scalar(a.re_ - b.re_, a.im_ - b.im_); }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    return Scalar(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

  std::string to_string() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

/// Exact real number `sum_k c_k * sqrt(r_k)` with rational c_k and positive
/// integer radicands r_k. Closed under +, -, *; the sign is decided exactly.
///
/// Moduli of Gaussian rationals live here, so complex-session norms and the
/// inequalities between them stay exact.
class Surd {
 public:
  Surd() = default;
  Surd(Rational q);
  Surd(long value) : Surd(Rational(value)) {}

  /// sqrt(q) for q >= 0.
  static Surd sqrt(const Rational& q);
  /// |z| for a Gaussian rational.
  static Surd abs(const Scalar& z) { return sqrt(z.norm_squared()); }

  int sign() const;
  bool is_zero() const { return terms_.empty(); }
  bool is_single_term() const { return terms_.size() <= 1; }
  std::optional<Rational> as_rational() const;
  /// The square of a single-term value, which is rational.
  Rational square_of_single() const;

  Surd operator-() const;
  friend Surd operator+(const Surd& a, const Surd& b);
  friend Surd operator-(const Surd& a, const Surd& b) { return a + (-b); }
  friend Surd operator*(const Surd& a, const Surd& b);
  Surd& operator+=(const Surd& b) { return *this = *this + b; }
  Surd& operator*=(const Surd& b) { return *this = *this * b; }

  /// Division by a nonzero single-term value.
  Surd divided_by(const Surd& divisor) const;

  friend std::strong_ordering operator<=>(const Surd& a, const Surd& b);
  friend bool operator==(const Surd& a, const Surd& b) { return (a - b).sign() == 0; }

  std::string to_string() const;
  /// Display-only approximation.
  double approx() const;

  const std::map<BigInt, Rational>& terms() const { return terms_; }

 private:
  void add_term(BigInt radicand, Rational coeff);

  std::map<BigInt, Rational> terms_;  // radicand -> coefficient, no zero coefficients
};

Surd max(const Surd& a, const Surd& b);

/// A value in [0, +inf]; quasi-norms are allowed to take +inf.
class Extended {
 public:
  Extended() = default;
  Extended(Surd value) : value_(std::move(value)) {}
  static Extended infinity() {
    Extended e;
    e.infinite_ = true;
    return e;
  }

  bool is_infinite() const { return infinite_; }
  const Surd& value() const { return value_; }

  friend Extended operator+(const Extended& a, const Extended& b);
  friend Extended operator*(const Extended& a, const Extended& b);
  friend std::strong_ordering operator<=>(const Extended& a, const Extended& b);
  friend bool operator==(const Extended& a, const Extended& b) { return (a <=> b) == 0; }

  std::string to_string() const { return infinite_ ? "inf" : value_.to_string(); }

 private:
  Surd value_;
  bool infinite_ = false;
};

}  // namespace xisigma
