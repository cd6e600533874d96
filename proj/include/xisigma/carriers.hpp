#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace xisigma {

/// Opaque point identifier. Decimal naturals order numerically and sort
/// before names; names order lexicographically.
class PointLabel {
 public:
  PointLabel() = default;
  PointLabel(std::string text);
  PointLabel(const char* text) : PointLabel(std::string(text)) {}
  static PointLabel natural(std::uint64_t n);

  const std::string& text() const { return text_; }
  bool is_natural() const { return is_natural_; }
  /// Only meaningful when is_natural().
  std::uint64_t value() const { return value_; }

  friend std::strong_ordering operator<=>(const PointLabel& a, const PointLabel& b);
  friend bool operator==(const PointLabel& a, const PointLabel& b) { return a.text_ == b.text_; }

 private:
  std::string text_;
  std::uint64_t value_ = 0;
  bool is_natural_ = false;
};

/// Label of the adjoined free point in every symbolic spectrum carrier.
/// Users may not declare it.
inline const PointLabel kFreePoint{"∞"};

enum class CarrierKind { FiniteExplicit, CountableNat, UncountableOmega };

std::string_view to_string(CarrierKind kind);

class Carrier;
using CarrierPtr = std::shared_ptr<const Carrier>;

/// A point universe.
///
/// FiniteExplicit lists every point. CountableNat is the naturals plus a
/// finite list of extra named (non-numeric) points. UncountableOmega names
/// finitely many points and carries an uncountable unnamed remainder.
class Carrier {
 public:
  static CarrierPtr finite(std::vector<PointLabel> points);
  static CarrierPtr naturals(std::vector<PointLabel> extra = {});
  static CarrierPtr omega(std::vector<PointLabel> named);

  CarrierKind kind() const { return kind_; }
  bool is_infinite() const { return kind_ != CarrierKind::FiniteExplicit; }
  /// FiniteExplicit: every point. CountableNat: the extra points.
  /// UncountableOmega: the named points. Sorted.
  const std::vector<PointLabel>& named() const { return named_; }
  bool contains(const PointLabel& x) const;
  std::string describe() const;

  friend bool operator==(const Carrier& a, const Carrier& b) {
    return a.kind_ == b.kind_ && a.named_ == b.named_;
  }

 private:
  Carrier(CarrierKind kind, std::vector<PointLabel> named);

  CarrierKind kind_;
  std::vector<PointLabel> named_;
};

bool same_carrier(const CarrierPtr& a, const CarrierPtr& b);
/// Throws CarrierMismatch unless the carriers are equal.
void require_same_carrier(const CarrierPtr& a, const CarrierPtr& b);
/// Throws UnknownPoint unless x belongs to the carrier.
void require_point(const Carrier& carrier, const PointLabel& x);

enum class Polarity { Positive, Co };

/// Normal-form subset of a carrier: `base` (Positive) or `carrier \ base` (Co).
///
/// `base` is finite and sorted. Finite carriers only use Positive. On the
/// uncountable carrier a Positive set stands for a countable set through its
/// named part.
class SymbolicSet {
 public:
  static SymbolicSet of(CarrierPtr carrier, std::vector<PointLabel> base);
  static SymbolicSet co(CarrierPtr carrier, std::vector<PointLabel> base);
  static SymbolicSet empty(CarrierPtr carrier) { return of(std::move(carrier), {}); }
  static SymbolicSet all(CarrierPtr carrier) { return co(std::move(carrier), {}); }

  const CarrierPtr& carrier() const { return carrier_; }
  const std::vector<PointLabel>& base() const { return base_; }
  Polarity polarity() const { return polarity_; }

  bool is_finite() const { return polarity_ == Polarity::Positive; }
  bool is_empty() const { return polarity_ == Polarity::Positive && base_.empty(); }

  /// `{1,2}` or `co{1,2}`.
  std::string to_string() const;

  friend bool operator==(const SymbolicSet& a, const SymbolicSet& b);

 private:
  SymbolicSet(CarrierPtr carrier, std::vector<PointLabel> base, Polarity polarity)
      : carrier_(std::move(carrier)), base_(std::move(base)), polarity_(polarity) {}

  CarrierPtr carrier_;
  std::vector<PointLabel> base_;
  Polarity polarity_;
};

SymbolicSet complement(const SymbolicSet& e);
SymbolicSet unite(const SymbolicSet& a, const SymbolicSet& b);
SymbolicSet intersect(const SymbolicSet& a, const SymbolicSet& b);
SymbolicSet difference(const SymbolicSet& a, const SymbolicSet& b);

bool member(const PointLabel& x, const SymbolicSet& e);
/// Membership of an unnamed point of an infinite carrier (one not listed in
/// any base).
bool member_generic(const SymbolicSet& e);
bool is_subset(const SymbolicSet& small, const SymbolicSet& big);
bool disjoint(const SymbolicSet& a, const SymbolicSet& b);

/// Boolean expression over SymbolicSet leaves.
class SetExpr {
 public:
  enum class Op { Leaf, Complement, Union, Intersection };

  static SetExpr leaf(SymbolicSet set);
  static SetExpr complement(SetExpr operand);
  static SetExpr unite(SetExpr lhs, SetExpr rhs);
  static SetExpr intersect(SetExpr lhs, SetExpr rhs);

  Op op() const { return op_; }
  const SymbolicSet& set() const { return *set_; }
  const SetExpr& lhs() const { return *lhs_; }
  const SetExpr& rhs() const { return *rhs_; }

 private:
  SetExpr() = default;

  Op op_ = Op::Leaf;
  std::shared_ptr<const SymbolicSet> set_;
  std::shared_ptr<const SetExpr> lhs_;
  std::shared_ptr<const SetExpr> rhs_;
};

/// Evaluates the expression to its normal form. Throws CarrierMismatch when
/// leaves live on different carriers.
SymbolicSet normalize(const SetExpr& expr);

/// Infinite and co-infinite family of naturals `{n : n mod m in residues}`
/// plus finitely many explicit extra points. Only CountableNat-type carriers
/// carry these; they witness non-closed and non-clopen sets that no
/// SymbolicSet can name (the evens, for instance).
struct PeriodicSet {
  CarrierPtr carrier;
  std::uint64_t modulus = 2;
  std::vector<std::uint64_t> residues;
  std::vector<PointLabel> extra;
};

/// A subset of a carrier that the engine can describe exactly.
using Subset = std::variant<SymbolicSet, PeriodicSet>;

/// Builds a periodic family, collapsing it to a SymbolicSet when the residue
/// set is empty or complete.
Subset make_periodic(CarrierPtr carrier, std::uint64_t modulus, std::vector<std::uint64_t> residues,
                     std::vector<PointLabel> extra = {});
Subset evens(CarrierPtr carrier);

const CarrierPtr& carrier_of(const Subset& s);
bool member(const PointLabel& x, const Subset& s);
bool is_finite(const Subset& s);
Subset unite(const Subset& a, const Subset& b);
/// small ⊆ big, decided exactly on a finite probe universe.
bool includes(const Subset& big, const Subset& small);
bool same_set(const Subset& a, const Subset& b);
/// A point of `a` outside `b`, if any; nullopt means the difference is empty.
/// The probe for the unnamed remainder of an uncountable carrier is reported
/// as the label "<unnamed>".
std::optional<PointLabel> witness_of_difference(const Subset& a, const Subset& b);
/// The same description over another carrier that contains every label used.
Subset rebase(const Subset& s, CarrierPtr carrier);
std::string to_string(const Subset& s);

/// Parses `{1,2}`, `co{1,3}`, `{}`, `all`, `empty` on the given carrier.
SymbolicSet parse_set(const CarrierPtr& carrier, std::string_view text);

}  // namespace xisigma
