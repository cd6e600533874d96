#include "xisigma/carriers.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "xisigma/error.hpp"

namespace xisigma {

// ------------------------------------------------------------ PointLabel

PointLabel::PointLabel(std::string text) : text_(std::move(text)) {
  if (text_.empty()) throw Error(ErrorKind::InvalidArgument, "empty point label");
  const bool digits = std::all_of(text_.begin(), text_.end(), [](unsigned char c) { return std::isdigit(c); });
  if (digits && (text_.size() == 1 || text_[0] != '0') && text_.size() <= 19) {
    is_natural_ = true;
    value_ = std::stoull(text_);
  }
}

PointLabel PointLabel::natural(std::uint64_t n) { return PointLabel(std::to_string(n)); }

std::strong_ordering operator<=>(const PointLabel& a, const PointLabel& b) {
  if (a.is_natural_ && b.is_natural_) return a.value_ <=> b.value_;
  if (a.is_natural_) return std::strong_ordering::less;
  if (b.is_natural_) return std::strong_ordering::greater;
  return a.text_ <=> b.text_;
}

// --------------------------------------------------------------- Carrier

std::string_view to_string(CarrierKind kind) {
  switch (kind) {
    case CarrierKind::FiniteExplicit: return "finite";
    case CarrierKind::CountableNat: return "nat";
    case CarrierKind::UncountableOmega: return "omega";
  }
  return "?";
}

namespace {

std::vector<PointLabel> sorted_unique(std::vector<PointLabel> v, bool reject_duplicates, const char* what) {
  std::sort(v.begin(), v.end());
  auto dup = std::adjacent_find(v.begin(), v.end());
  if (dup != v.end()) {
    if (reject_duplicates) throw Error(ErrorKind::InvalidArgument, std::string("duplicate ") + what + " '" + dup->text() + "'");
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  return v;
}

bool sorted_contains(const std::vector<PointLabel>& v, const PointLabel& x) {
  return std::binary_search(v.begin(), v.end(), x);
}

std::vector<PointLabel> set_union(const std::vector<PointLabel>& a, const std::vector<PointLabel>& b) {
  std::vector<PointLabel> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<PointLabel> set_intersection(const std::vector<PointLabel>& a, const std::vector<PointLabel>& b) {
  std::vector<PointLabel> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<PointLabel> set_difference(const std::vector<PointLabel>& a, const std::vector<PointLabel>& b) {
  std::vector<PointLabel> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

Carrier::Carrier(CarrierKind kind, std::vector<PointLabel> named) : kind_(kind), named_(std::move(named)) {}

CarrierPtr Carrier::finite(std::vector<PointLabel> points) {
  if (points.empty()) throw Error(ErrorKind::InvalidArgument, "a finite carrier needs at least one point");
  return CarrierPtr(new Carrier(CarrierKind::FiniteExplicit, sorted_unique(std::move(points), true, "point")));
}

CarrierPtr Carrier::naturals(std::vector<PointLabel> extra) {
  for (const auto& x : extra)
    if (x.is_natural())
      throw Error(ErrorKind::InvalidArgument, "extra point '" + x.text() + "' of a nat carrier must not be a natural");
  return CarrierPtr(new Carrier(CarrierKind::CountableNat, sorted_unique(std::move(extra), true, "point")));
}

CarrierPtr Carrier::omega(std::vector<PointLabel> named) {
  return CarrierPtr(new Carrier(CarrierKind::UncountableOmega, sorted_unique(std::move(named), true, "point")));
}

bool Carrier::contains(const PointLabel& x) const {
  if (kind_ == CarrierKind::CountableNat && x.is_natural()) return true;
  return sorted_contains(named_, x);
}

std::string Carrier::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case CarrierKind::FiniteExplicit: os << "finite{"; break;
    case CarrierKind::CountableNat: os << "nat+{"; break;
    case CarrierKind::UncountableOmega: os << "omega{"; break;
  }
  for (std::size_t k = 0; k < named_.size(); ++k) os << (k ? "," : "") << named_[k].text();
  os << "}";
  return os.str();
}

bool same_carrier(const CarrierPtr& a, const CarrierPtr& b) { return a == b || (a && b && *a == *b); }

void require_same_carrier(const CarrierPtr& a, const CarrierPtr& b) {
  if (!same_carrier(a, b))
    throw Error(ErrorKind::CarrierMismatch, (a ? a->describe() : "null") + " vs " + (b ? b->describe() : "null"));
}

void require_point(const Carrier& carrier, const PointLabel& x) {
  if (!carrier.contains(x)) throw Error(ErrorKind::UnknownPoint, "'" + x.text() + "' is not a point of " + carrier.describe());
}

// ----------------------------------------------------------- SymbolicSet

SymbolicSet SymbolicSet::of(CarrierPtr carrier, std::vector<PointLabel> base) {
  for (const auto& x : base) require_point(*carrier, x);
  return SymbolicSet(std::move(carrier), sorted_unique(std::move(base), false, "point"), Polarity::Positive);
}

SymbolicSet SymbolicSet::co(CarrierPtr carrier, std::vector<PointLabel> base) {
  for (const auto& x : base) require_point(*carrier, x);
  base = sorted_unique(std::move(base), false, "point");
  if (!carrier->is_infinite()) {
    auto rest = set_difference(carrier->named(), base);
    return SymbolicSet(std::move(carrier), std::move(rest), Polarity::Positive);
  }
  return SymbolicSet(std::move(carrier), std::move(base), Polarity::Co);
}

bool operator==(const SymbolicSet& a, const SymbolicSet& b) {
  return a.polarity_ == b.polarity_ && a.base_ == b.base_ && same_carrier(a.carrier_, b.carrier_);
}

std::string SymbolicSet::to_string() const {
  std::string out = polarity_ == Polarity::Co ? "co{" : "{";
  for (std::size_t k = 0; k < base_.size(); ++k) {
    if (k) out += ",";
    out += base_[k].text();
  }
  return out + "}";
}

SymbolicSet complement(const SymbolicSet& e) {
  if (e.polarity() == Polarity::Positive) return SymbolicSet::co(e.carrier(), e.base());
  return SymbolicSet::of(e.carrier(), e.base());
}

SymbolicSet unite(const SymbolicSet& a, const SymbolicSet& b) {
  require_same_carrier(a.carrier(), b.carrier());
  const bool pa = a.polarity() == Polarity::Positive, pb = b.polarity() == Polarity::Positive;
  if (pa && pb) return SymbolicSet::of(a.carrier(), set_union(a.base(), b.base()));
  if (pa) return SymbolicSet::co(a.carrier(), set_difference(b.base(), a.base()));
  if (pb) return SymbolicSet::co(a.carrier(), set_difference(a.base(), b.base()));
  return SymbolicSet::co(a.carrier(), set_intersection(a.base(), b.base()));
}

SymbolicSet intersect(const SymbolicSet& a, const SymbolicSet& b) {
  require_same_carrier(a.carrier(), b.carrier());
  const bool pa = a.polarity() == Polarity::Positive, pb = b.polarity() == Polarity::Positive;
  if (pa && pb) return SymbolicSet::of(a.carrier(), set_intersection(a.base(), b.base()));
  if (pa) return SymbolicSet::of(a.carrier(), set_difference(a.base(), b.base()));
  if (pb) return SymbolicSet::of(a.carrier(), set_difference(b.base(), a.base()));
  return SymbolicSet::co(a.carrier(), set_union(a.base(), b.base()));
}

SymbolicSet difference(const SymbolicSet& a, const SymbolicSet& b) { return intersect(a, complement(b)); }

bool member(const PointLabel& x, const SymbolicSet& e) {
  require_point(*e.carrier(), x);
  const bool in_base = sorted_contains(e.base(), x);
  return e.polarity() == Polarity::Positive ? in_base : !in_base;
}

bool member_generic(const SymbolicSet& e) { return e.polarity() == Polarity::Co; }

bool is_subset(const SymbolicSet& small, const SymbolicSet& big) { return difference(small, big).is_empty(); }

bool disjoint(const SymbolicSet& a, const SymbolicSet& b) { return intersect(a, b).is_empty(); }

// --------------------------------------------------------------- SetExpr

SetExpr SetExpr::leaf(SymbolicSet set) {
  SetExpr e;
  e.set_ = std::make_shared<const SymbolicSet>(std::move(set));
  return e;
}

SetExpr SetExpr::complement(SetExpr operand) {
  SetExpr e;
  e.op_ = Op::Complement;
  e.lhs_ = std::make_shared<const SetExpr>(std::move(operand));
  return e;
}

SetExpr SetExpr::unite(SetExpr lhs, SetExpr rhs) {
  SetExpr e;
  e.op_ = Op::Union;
  e.lhs_ = std::make_shared<const SetExpr>(std::move(lhs));
  e.rhs_ = std::make_shared<const SetExpr>(std::move(rhs));
  return e;
}

SetExpr SetExpr::intersect(SetExpr lhs, SetExpr rhs) {
  SetExpr e = unite(std::move(lhs), std::move(rhs));
  e.op_ = Op::Intersection;
  return e;
}

SymbolicSet normalize(const SetExpr& expr) {
  switch (expr.op()) {
    case SetExpr::Op::Leaf: return expr.set();
    case SetExpr::Op::Complement: return complement(normalize(expr.lhs()));
    case SetExpr::Op::Union: return unite(normalize(expr.lhs()), normalize(expr.rhs()));
    case SetExpr::Op::Intersection: return intersect(normalize(expr.lhs()), normalize(expr.rhs()));
  }
  throw Error(ErrorKind::InvalidArgument, "bad expression");
}

// --------------------------------------------------------------- Subsets

Subset make_periodic(CarrierPtr carrier, std::uint64_t modulus, std::vector<std::uint64_t> residues,
                     std::vector<PointLabel> extra) {
  if (carrier->kind() != CarrierKind::CountableNat)
    throw Error(ErrorKind::UnsupportedModel, "periodic families need a nat carrier");
  if (modulus == 0) throw Error(ErrorKind::InvalidArgument, "modulus must be positive");
  for (auto& r : residues) r %= modulus;
  std::sort(residues.begin(), residues.end());
  residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
  for (const auto& x : extra) require_point(*carrier, x);
  extra = sorted_unique(std::move(extra), false, "point");
  if (residues.empty()) return SymbolicSet::of(std::move(carrier), std::move(extra));
  if (residues.size() == modulus) {
    auto missing = set_difference(carrier->named(), extra);
    return SymbolicSet::co(std::move(carrier), std::move(missing));
  }
  std::erase_if(extra, [&](const PointLabel& x) {
    return x.is_natural() && std::binary_search(residues.begin(), residues.end(), x.value() % modulus);
  });
  return PeriodicSet{std::move(carrier), modulus, std::move(residues), std::move(extra)};
}

Subset evens(CarrierPtr carrier) { return make_periodic(std::move(carrier), 2, {0}); }

const CarrierPtr& carrier_of(const Subset& s) {
  return std::visit([](const auto& v) -> const CarrierPtr& {
    if constexpr (std::is_same_v<std::decay_t<decltype(v)>, SymbolicSet>)
      return v.carrier();
    else
      return v.carrier;
  }, s);
}

namespace {

bool periodic_member(const PointLabel& x, const PeriodicSet& p) {
  if (x.is_natural() && std::binary_search(p.residues.begin(), p.residues.end(), x.value() % p.modulus)) return true;
  return sorted_contains(p.extra, x);
}

// A probe is a label, or nullopt for the unnamed remainder of an
// uncountable carrier.
using Probe = std::optional<PointLabel>;

bool probe_member(const Probe& probe, const Subset& s) {
  if (!probe) {
    if (auto sym = std::get_if<SymbolicSet>(&s)) return member_generic(*sym);
    return false;
  }
  if (auto sym = std::get_if<SymbolicSet>(&s)) return member(*probe, *sym);
  return periodic_member(*probe, std::get<PeriodicSet>(s));
}

void collect_labels(const Subset& s, std::vector<PointLabel>& labels, std::uint64_t& period) {
  if (auto sym = std::get_if<SymbolicSet>(&s)) {
    labels.insert(labels.end(), sym->base().begin(), sym->base().end());
  } else {
    const auto& p = std::get<PeriodicSet>(s);
    labels.insert(labels.end(), p.extra.begin(), p.extra.end());
    period = std::lcm(period, p.modulus);
  }
}

// Both sets are eventually periodic with period `period` beyond the largest
// explicit natural, so this finite universe decides inclusion exactly.
std::vector<Probe> probes(const Subset& a, const Subset& b) {
  const CarrierPtr& carrier = carrier_of(a);
  std::vector<PointLabel> labels(carrier->named());
  std::uint64_t period = 1;
  collect_labels(a, labels, period);
  collect_labels(b, labels, period);
  labels = sorted_unique(std::move(labels), false, "point");
  std::vector<Probe> out(labels.begin(), labels.end());
  switch (carrier->kind()) {
    case CarrierKind::FiniteExplicit: break;
    case CarrierKind::CountableNat: {
      std::uint64_t max_nat = 0;
      bool any = false;
      for (const auto& x : labels)
        if (x.is_natural()) {
          max_nat = std::max(max_nat, x.value());
          any = true;
        }
      const std::uint64_t start = any ? (max_nat / period + 1) * period : 0;
      for (std::uint64_t k = 0; k < period; ++k) out.emplace_back(PointLabel::natural(start + k));
      break;
    }
    case CarrierKind::UncountableOmega: out.emplace_back(std::nullopt); break;
  }
  return out;
}

}  // namespace

bool member(const PointLabel& x, const Subset& s) {
  if (auto sym = std::get_if<SymbolicSet>(&s)) return member(x, *sym);
  const auto& p = std::get<PeriodicSet>(s);
  require_point(*p.carrier, x);
  return periodic_member(x, p);
}

bool is_finite(const Subset& s) {
  if (auto sym = std::get_if<SymbolicSet>(&s)) return sym->is_finite();
  return false;
}

Subset unite(const Subset& a, const Subset& b) {
  require_same_carrier(carrier_of(a), carrier_of(b));
  auto sa = std::get_if<SymbolicSet>(&a);
  auto sb = std::get_if<SymbolicSet>(&b);
  if (sa && sb) return unite(*sa, *sb);
  if (sa || sb) {
    const SymbolicSet& sym = sa ? *sa : *sb;
    const PeriodicSet& per = sa ? std::get<PeriodicSet>(b) : std::get<PeriodicSet>(a);
    if (sym.polarity() == Polarity::Positive)
      return make_periodic(per.carrier, per.modulus, per.residues, set_union(per.extra, sym.base()));
    std::vector<PointLabel> missing;
    for (const auto& x : sym.base())
      if (!periodic_member(x, per)) missing.push_back(x);
    return SymbolicSet::co(sym.carrier(), std::move(missing));
  }
  const auto& pa = std::get<PeriodicSet>(a);
  const auto& pb = std::get<PeriodicSet>(b);
  const std::uint64_t m = std::lcm(pa.modulus, pb.modulus);
  std::vector<std::uint64_t> residues;
  for (std::uint64_t r = 0; r < m; ++r) {
    if (std::binary_search(pa.residues.begin(), pa.residues.end(), r % pa.modulus) ||
        std::binary_search(pb.residues.begin(), pb.residues.end(), r % pb.modulus))
      residues.push_back(r);
  }
  return make_periodic(pa.carrier, m, std::move(residues), set_union(pa.extra, pb.extra));
}

bool includes(const Subset& big, const Subset& small) { return !witness_of_difference(small, big).has_value(); }

bool same_set(const Subset& a, const Subset& b) {
  if (!same_carrier(carrier_of(a), carrier_of(b))) return false;
  return includes(a, b) && includes(b, a);
}

std::optional<PointLabel> witness_of_difference(const Subset& a, const Subset& b) {
  require_same_carrier(carrier_of(a), carrier_of(b));
  for (const auto& probe : probes(a, b)) {
    if (probe_member(probe, a) && !probe_member(probe, b)) return probe ? *probe : PointLabel("<unnamed>");
  }
  return std::nullopt;
}

Subset rebase(const Subset& s, CarrierPtr carrier) {
  if (auto sym = std::get_if<SymbolicSet>(&s)) {
    if (sym->polarity() == Polarity::Positive) return SymbolicSet::of(std::move(carrier), sym->base());
    return SymbolicSet::co(std::move(carrier), sym->base());
  }
  const auto& p = std::get<PeriodicSet>(s);
  return make_periodic(std::move(carrier), p.modulus, p.residues, p.extra);
}

std::string to_string(const Subset& s) {
  if (auto sym = std::get_if<SymbolicSet>(&s)) return sym->to_string();
  const auto& p = std::get<PeriodicSet>(s);
  std::string out = "{n : n mod " + std::to_string(p.modulus) + " in {";
  for (std::size_t k = 0; k < p.residues.size(); ++k) out += (k ? "," : "") + std::to_string(p.residues[k]);
  out += "}}";
  if (!p.extra.empty()) out += " + " + SymbolicSet::of(p.carrier, p.extra).to_string();
  return out;
}

// ---------------------------------------------------------------- parsing

SymbolicSet parse_set(const CarrierPtr& carrier, std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s == "all") return SymbolicSet::all(carrier);
  if (s == "empty") return SymbolicSet::empty(carrier);
  bool co = false;
  if (s.rfind("co", 0) == 0) {
    co = true;
    s.erase(0, 2);
  }
  if (s.size() < 2 || s.front() != '{' || s.back() != '}')
    throw Error(ErrorKind::Parse, "set literal must look like {a,b} or co{a,b}: '" + std::string(text) + "'");
  std::vector<PointLabel> base;
  std::string inner = s.substr(1, s.size() - 2);
  std::size_t pos = 0;
  while (!inner.empty() && pos <= inner.size()) {
    auto comma = inner.find(',', pos);
    std::string item = inner.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (item.empty()) throw Error(ErrorKind::Parse, "empty item in set literal '" + std::string(text) + "'");
    base.emplace_back(item);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  try {
    return co ? SymbolicSet::co(carrier, std::move(base)) : SymbolicSet::of(carrier, std::move(base));
  } catch (const Error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

}  // namespace xisigma
