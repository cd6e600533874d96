#include "xisigma/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <utility>
#include <vector>

#include "xisigma/error.hpp"

namespace xisigma {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CarrierMismatch: return "CarrierMismatch";
    case ErrorKind::UnknownPoint: return "UnknownPoint";
    case ErrorKind::NotInAlgebra: return "NotInAlgebra";
    case ErrorKind::UnsupportedModel: return "UnsupportedModel";
    case ErrorKind::InsufficientDisjointSets: return "InsufficientDisjointSets";
    case ErrorKind::RealSession: return "RealSession";
    case ErrorKind::EmptyTestFamily: return "EmptyTestFamily";
    case ErrorKind::NotHausdorff: return "NotHausdorff";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "Parse";
  }
  return "Error";
}

std::string_view to_string(Field field) { return field == Field::Real ? "real" : "complex"; }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.empty()) throw Error(ErrorKind::Parse, "empty number");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  auto slash = s.find('/');
  auto digits_ok = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    return std::all_of(s.begin() + static_cast<long>(from), s.begin() + static_cast<long>(to),
                       [](unsigned char c) { return std::isdigit(c); });
  };
  bool ok = slash == std::string::npos ? digits_ok(start, s.size())
                                       : digits_ok(start, slash) && digits_ok(slash + 1, s.size());
  if (!ok) throw Error(ErrorKind::Parse, "not a rational number: '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw Error(ErrorKind::Parse, "not a rational number: '" + s + "'");
  if (q.get_den() == 0) throw Error(ErrorKind::Parse, "zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------- Scalar

Scalar operator/(const Scalar& a, const Scalar& b) {
  Rational d = b.norm_squared();
  if (sgn(d) == 0) throw Error(ErrorKind::InvalidArgument, "division by zero scalar");
  Scalar num = a * b.conj();
  return Scalar(num.re_ / d, num.im_ / d);
}

Scalar Scalar::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw Error(ErrorKind::Parse, "empty scalar");
  if (s.back() != 'i') return Scalar(parse_rational(s));
  // Split at the last sign that is not the leading one.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size() - 1; k > 0; --k) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  std::string re_part = split == std::string::npos ? "" : s.substr(0, split);
  std::string im_part = split == std::string::npos ? s : s.substr(split);
  im_part.pop_back();  // drop 'i'
  if (im_part.empty() || im_part == "+") im_part = "1";
  if (im_part == "-") im_part = "-1";
  if (!im_part.empty() && im_part.back() == '*') im_part.pop_back();
  Rational re = re_part.empty() ? Rational(0) : parse_rational(re_part);
  return Scalar(re, parse_rational(im_part));
}

std::string Scalar::to_string() const {
  if (is_real()) return re_.get_str();
  std::string out;
  if (sgn(re_) != 0) out = re_.get_str();
  Rational im = im_;
  if (sgn(im) < 0) {
    out += "-";
    im = -im;
  } else if (!out.empty()) {
    out += "+";
  }
  if (im != 1) out += im.get_str();
  out += "i";
  return out;
}

// ------------------------------------------------------------------ Surd

namespace {

bool is_perfect_square(const BigInt& n) { return mpz_perfect_square_p(n.get_mpz_t()) != 0; }

BigInt isqrt(const BigInt& n) {
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Pulls small square factors out of a radicand: sqrt(r) = k * sqrt(r').
void strip_small_squares(BigInt& radicand, Rational& coeff) {
  static constexpr int kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  for (int p : kPrimes) {
    const long sq = static_cast<long>(p) * p;
    while (radicand % sq == 0) {
      radicand /= sq;
      coeff *= p;
    }
  }
  if (radicand > 1 && is_perfect_square(radicand)) {
    coeff *= isqrt(radicand);
    radicand = 1;
  }
}

// Pairwise coprime refinement of the radicands, none a perfect square. Every
// input is a product of powers of the returned base elements.
std::vector<BigInt> coprime_base(std::vector<BigInt> values) {
  std::vector<BigInt> base;
  for (auto& v : values)
    if (v > 1) base.push_back(v);
  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());
    for (std::size_t i = 0; i < base.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < base.size() && !changed; ++j) {
        BigInt g = gcd(base[i], base[j]);
        if (g == 1) continue;
        BigInt a = base[i] / g;
        BigInt b = base[j] / g;
        base.erase(base.begin() + static_cast<long>(j));
        base.erase(base.begin() + static_cast<long>(i));
        for (BigInt* v : {&g, &a, &b})
          if (*v > 1) base.push_back(*v);
        changed = true;
      }
    }
  }
  for (auto& b : base)
    while (b > 1 && is_perfect_square(b)) b = isqrt(b);
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());
  base.erase(std::remove(base.begin(), base.end(), BigInt(1)), base.end());
  return base;
}

// Element of Q(sqrt(b_0), ..., sqrt(b_{k-1})) in the monomial basis indexed by
// bitmasks: mask m stands for prod_{i in m} sqrt(b_i).
using Poly = std::map<std::uint32_t, Rational>;

Poly poly_mul(const Poly& p, const Poly& q, const std::vector<BigInt>& base) {
  Poly out;
  for (const auto& [m1, c1] : p) {
    for (const auto& [m2, c2] : q) {
      Rational c = c1 * c2;
      const std::uint32_t common = m1 & m2;
      for (std::size_t i = 0; i < base.size(); ++i)
        if (common & (1u << i)) c *= Rational(base[i]);
      out[m1 ^ m2] += c;
    }
  }
  std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

// Sign of a tower element whose masks only use the lowest `k` generators.
int tower_sign(const Poly& p, const std::vector<BigInt>& base, std::size_t k) {
  if (p.empty()) return 0;
  if (k == 0) {
    auto it = p.find(0);
    return it == p.end() ? 0 : sgn(it->second);
  }
  const std::uint32_t bit = 1u << (k - 1);
  Poly a, b;
  for (const auto& [m, c] : p) {
    if (m & bit)
      b[m ^ bit] = c;
    else
      a[m] = c;
  }
  const int sb = tower_sign(b, base, k - 1);
  const int sa = tower_sign(a, base, k - 1);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // a + b*sqrt(t) with opposite signs: compare a^2 with b^2 t.
  Poly t;
  t[0] = Rational(base[k - 1]);
  Poly d = poly_mul(a, a, base);
  Poly bbt = poly_mul(poly_mul(b, b, base), t, base);
  for (const auto& [m, c] : bbt) d[m] -= c;
  std::erase_if(d, [](const auto& kv) { return sgn(kv.second) == 0; });
  const int sd = tower_sign(d, base, k - 1);
  if (sd == 0) return 0;
  return sd > 0 ? sa : sb;
}

}  // namespace

Surd::Surd(Rational q) {
  if (sgn(q) != 0) terms_.emplace(BigInt(1), std::move(q));
}

Surd Surd::sqrt(const Rational& q) {
  if (sgn(q) < 0) throw Error(ErrorKind::InvalidArgument, "square root of a negative number");
  Surd out;
  if (sgn(q) == 0) return out;
  // sqrt(p/d) = sqrt(p*d) / d
  BigInt radicand = q.get_num() * q.get_den();
  Rational coeff(1, 1);
  coeff /= Rational(q.get_den());
  strip_small_squares(radicand, coeff);
  out.add_term(radicand, coeff);
  return out;
}

void Surd::add_term(BigInt radicand, Rational coeff) {
  if (sgn(coeff) == 0) return;
  auto [it, inserted] = terms_.emplace(std::move(radicand), coeff);
  if (!inserted) {
    it->second += coeff;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

std::optional<Rational> Surd::as_rational() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.begin()->first == 1) return terms_.begin()->second;
  return std::nullopt;
}

Rational Surd::square_of_single() const {
  if (!is_single_term()) throw Error(ErrorKind::InvalidArgument, "square_of_single on a sum of surds");
  if (terms_.empty()) return 0;
  const auto& [r, c] = *terms_.begin();
  return c * c * Rational(r);
}

Surd Surd::operator-() const {
  Surd out = *this;
  for (auto& [r, c] : out.terms_) c = -c;
  return out;
}

Surd operator+(const Surd& a, const Surd& b) {
  Surd out = a;
  for (const auto& [r, c] : b.terms_) out.add_term(r, c);
  return out;
}

Surd operator*(const Surd& a, const Surd& b) {
  Surd out;
  for (const auto& [r1, c1] : a.terms_) {
    for (const auto& [r2, c2] : b.terms_) {
      BigInt g = gcd(r1, r2);
      BigInt radicand = (r1 / g) * (r2 / g);
      Rational coeff = c1 * c2 * Rational(g);
      strip_small_squares(radicand, coeff);
      out.add_term(radicand, coeff);
    }
  }
  return out;
}

Surd Surd::divided_by(const Surd& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero");
  if (!divisor.is_single_term())
    throw Error(ErrorKind::InvalidArgument, "division by a sum of surds is not supported");
  // 1 / (c sqrt(r)) = sqrt(r) / (c r)
  const auto& [r, c] = *divisor.terms_.begin();
  Surd inverse;
  Rational coeff = 1 / (c * Rational(r));
  BigInt radicand = r;
  inverse.add_term(radicand, coeff);
  return *this * inverse;
}

int Surd::sign() const {
  if (terms_.empty()) return 0;
  bool all_pos = true, all_neg = true;
  for (const auto& [r, c] : terms_) {
    if (sgn(c) < 0) all_pos = false;
    if (sgn(c) > 0) all_neg = false;
  }
  if (all_pos) return 1;
  if (all_neg) return -1;

  std::vector<BigInt> radicands;
  for (const auto& [r, c] : terms_) radicands.push_back(r);
  const std::vector<BigInt> base = coprime_base(radicands);
  if (base.size() > 24) throw Error(ErrorKind::InvalidArgument, "too many independent radicands");

  Poly p;
  for (const auto& [r, c] : terms_) {
    BigInt rest = r;
    Rational coeff = c;
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < base.size(); ++i) {
      unsigned e = 0;
      while (rest % base[i] == 0) {
        rest /= base[i];
        ++e;
      }
      for (unsigned k = 0; k < e / 2; ++k) coeff *= Rational(base[i]);
      if (e % 2 == 1) mask |= 1u << i;
    }
    p[mask] += coeff;
  }
  std::erase_if(p, [](const auto& kv) { return sgn(kv.second) == 0; });
  return tower_sign(p, base, base.size());
}

std::strong_ordering operator<=>(const Surd& a, const Surd& b) {
  const int s = (a - b).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Surd max(const Surd& a, const Surd& b) { return a < b ? b : a; }

std::string Surd::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [r, c] : terms_) {
    Rational coeff = c;
    if (!first) {
      os << (sgn(coeff) < 0 ? " - " : " + ");
      if (sgn(coeff) < 0) coeff = -coeff;
    }
    first = false;
    if (r == 1) {
      os << coeff.get_str();
    } else {
      if (coeff == -1)
        os << "-";
      else if (coeff != 1)
        os << coeff.get_str() << "*";
      os << "sqrt(" << r.get_str() << ")";
    }
  }
  return os.str();
}

double Surd::approx() const {
  double v = 0;
  for (const auto& [r, c] : terms_) v += c.get_d() * std::sqrt(r.get_d());
  return v;
}

// -------------------------------------------------------------- Extended

Extended operator+(const Extended& a, const Extended& b) {
  if (a.infinite_ || b.infinite_) return Extended::infinity();
  return Extended(a.value_ + b.value_);
}

Extended operator*(const Extended& a, const Extended& b) {
  // 0 * inf = 0, the measure-theoretic convention.
  if ((!a.infinite_ && a.value_.is_zero()) || (!b.infinite_ && b.value_.is_zero())) return Extended(Surd());
  if (a.infinite_ || b.infinite_) return Extended::infinity();
  return Extended(a.value_ * b.value_);
}

std::strong_ordering operator<=>(const Extended& a, const Extended& b) {
  if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
  if (a.infinite_) return std::strong_ordering::greater;
  if (b.infinite_) return std::strong_ordering::less;
  return a.value_ <=> b.value_;
}

}  // namespace xisigma
