#include "xisigma/functions.hpp"

#include <algorithm>

#include "xisigma/error.hpp"

namespace xisigma {

FnElement::FnElement(CarrierPtr carrier, std::map<PointLabel, Scalar> values, Scalar default_value)
    : carrier_(std::move(carrier)), values_(std::move(values)), default_(std::move(default_value)) {
  for (const auto& [x, v] : values_) require_point(*carrier_, x);
  canonicalize();
}

void FnElement::canonicalize() {
  if (!carrier_->is_infinite()) {
    for (const auto& x : carrier_->named()) values_.try_emplace(x, default_);
    default_ = Scalar(0);
  } else {
    std::erase_if(values_, [&](const auto& kv) { return kv.second == default_; });
  }
}

FnElement FnElement::constant(CarrierPtr carrier, Scalar value) { return FnElement(std::move(carrier), {}, value); }

FnElement FnElement::indicator(const SymbolicSet& e) {
  const bool co = e.polarity() == Polarity::Co;
  std::map<PointLabel, Scalar> values;
  for (const auto& x : e.base()) values.emplace(x, Scalar(co ? 0 : 1));
  return FnElement(e.carrier(), std::move(values), Scalar(co ? 1 : 0));
}

Scalar FnElement::at(const PointLabel& x) const {
  require_point(*carrier_, x);
  auto it = values_.find(x);
  return it == values_.end() ? default_ : it->second;
}

std::vector<Scalar> FnElement::attained_values() const {
  std::vector<Scalar> out;
  out.reserve(values_.size() + 1);
  for (const auto& [x, v] : values_) out.push_back(v);
  if (carrier_->is_infinite()) out.push_back(default_);
  return out;
}

FnElement FnElement::conj() const {
  FnElement out = *this;
  for (auto& [x, v] : out.values_) v = v.conj();
  out.default_ = default_.conj();
  return out;
}

bool FnElement::is_real() const {
  return default_.is_real() && std::all_of(values_.begin(), values_.end(), [](const auto& kv) { return kv.second.is_real(); });
}

FnElement FnElement::operator-() const { return Scalar(-1) * *this; }

template <class Op>
FnElement FnElement::combine(const FnElement& a, const FnElement& b, Op op) {
  require_same_carrier(a.carrier_, b.carrier_);
  std::map<PointLabel, Scalar> values;
  for (const auto& [x, v] : a.values_) values.emplace(x, op(v, b.at(x)));
  for (const auto& [x, v] : b.values_) values.try_emplace(x, op(a.at(x), v));
  return FnElement(a.carrier_, std::move(values), op(a.default_, b.default_));
}

FnElement operator+(const FnElement& a, const FnElement& b) {
  return FnElement::combine(a, b, [](const Scalar& u, const Scalar& v) { return u + v; });
}

FnElement operator*(const FnElement& a, const FnElement& b) {
  return FnElement::combine(a, b, [](const Scalar& u, const Scalar& v) { return u * v; });
}

FnElement operator*(const Scalar& c, const FnElement& f) {
  FnElement out = f;
  for (auto& [x, v] : out.values_) v = c * v;
  out.default_ = c * f.default_;
  out.canonicalize();
  return out;
}

std::string FnElement::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [x, v] : values_) {
    if (!first) out += ", ";
    first = false;
    out += x.text() + ":" + v.to_string();
  }
  if (carrier_->is_infinite()) out += std::string(first ? "" : "; ") + "else " + default_.to_string();
  return out + "}";
}

std::vector<PointLabel> mentioned_points(const std::vector<FnElement>& fs) {
  std::vector<PointLabel> out;
  for (const auto& f : fs)
    for (const auto& [x, v] : f.exceptions()) out.push_back(x);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace xisigma
