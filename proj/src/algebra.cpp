#include "xisigma/algebra.hpp"

#include <algorithm>
#include <map>

#include "xisigma/error.hpp"

namespace xisigma {

FiniteAlgebra generate_algebra(CarrierPtr carrier, std::vector<SymbolicSet> generators) {
  for (const auto& g : generators) require_same_carrier(carrier, g.carrier());

  std::vector<PointLabel> relevant;
  if (carrier->is_infinite()) {
    for (const auto& g : generators) relevant.insert(relevant.end(), g.base().begin(), g.base().end());
    std::sort(relevant.begin(), relevant.end());
    relevant.erase(std::unique(relevant.begin(), relevant.end()), relevant.end());
  } else {
    relevant = carrier->named();
  }

  std::map<std::vector<bool>, std::vector<PointLabel>> cells;
  for (const auto& x : relevant) {
    std::vector<bool> signature;
    signature.reserve(generators.size());
    for (const auto& g : generators) signature.push_back(member(x, g));
    cells[signature].push_back(x);
  }

  FiniteAlgebra alg;
  alg.carrier_ = carrier;
  alg.generators_ = std::move(generators);

  std::optional<std::vector<bool>> generic;
  if (carrier->is_infinite()) {
    generic.emplace();
    for (const auto& g : alg.generators_) generic->push_back(member_generic(g));
  }
  std::vector<PointLabel> outside_generic;
  for (auto& [signature, labels] : cells) {
    if (generic && signature == *generic) continue;
    outside_generic.insert(outside_generic.end(), labels.begin(), labels.end());
    alg.atoms_.push_back(SymbolicSet::of(carrier, labels));
  }
  std::sort(alg.atoms_.begin(), alg.atoms_.end(),
            [](const SymbolicSet& a, const SymbolicSet& b) { return a.base().front() < b.base().front(); });
  if (generic) alg.atoms_.push_back(SymbolicSet::co(carrier, std::move(outside_generic)));
  return alg;
}

std::size_t FiniteAlgebra::atom_of(const PointLabel& x) const {
  require_point(*carrier_, x);
  for (std::size_t k = 0; k < atoms_.size(); ++k)
    if (member(x, atoms_[k])) return k;
  throw Error(ErrorKind::UnknownPoint, "'" + x.text() + "' lies in no atom");
}

std::optional<std::size_t> FiniteAlgebra::generic_atom() const {
  if (!carrier_->is_infinite()) return std::nullopt;
  return atoms_.size() - 1;
}

SymbolicSet FiniteAlgebra::union_of_atoms(std::uint64_t mask) const {
  SymbolicSet out = SymbolicSet::empty(carrier_);
  for (std::size_t k = 0; k < atoms_.size(); ++k)
    if (mask & (std::uint64_t{1} << k)) out = unite(out, atoms_[k]);
  return out;
}

std::vector<SymbolicSet> FiniteAlgebra::members() const {
  if (atoms_.size() > 20) throw Error(ErrorKind::InvalidArgument, "too many atoms to enumerate members");
  std::vector<SymbolicSet> out;
  out.reserve(std::size_t{1} << atoms_.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << atoms_.size()); ++mask) out.push_back(union_of_atoms(mask));
  return out;
}

bool contains(const FiniteAlgebra& algebra, const SymbolicSet& e) {
  require_same_carrier(algebra.carrier(), e.carrier());
  for (const auto& atom : algebra.atoms())
    if (!is_subset(atom, e) && !disjoint(atom, e)) return false;
  return true;
}

// ----------------------------------------------------------------- Model

std::string_view to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::FiniteExplicit: return "finite-explicit";
    case ModelKind::FiniteCofinite: return "finite-cofinite";
    case ModelKind::CountableCocountable: return "countable-cocountable";
  }
  return "?";
}

namespace {

std::vector<PointLabel> generator_labels(const std::vector<SymbolicSet>& generators) {
  std::vector<PointLabel> out;
  for (const auto& g : generators) out.insert(out.end(), g.base().begin(), g.base().end());
  return out;
}

std::vector<PointLabel> sorted_unique(std::vector<PointLabel> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

Model Model::finite(FiniteAlgebra algebra) {
  if (algebra.carrier()->is_infinite())
    throw Error(ErrorKind::UnsupportedModel, "finite-explicit models need a finite carrier");
  auto named = algebra.carrier()->named();
  return Model(ModelKind::FiniteExplicit, std::move(algebra), std::move(named));
}

Model Model::finite_cofinite(CarrierPtr carrier, std::vector<SymbolicSet> generators, std::size_t window) {
  if (carrier->kind() != CarrierKind::CountableNat)
    throw Error(ErrorKind::UnsupportedModel, "finite-cofinite models need a nat carrier");
  std::vector<PointLabel> named = carrier->named();
  for (std::size_t n = 0; n < window; ++n) named.push_back(PointLabel::natural(n));
  auto labels = generator_labels(generators);
  named.insert(named.end(), labels.begin(), labels.end());
  FiniteAlgebra alg = generate_algebra(carrier, std::move(generators));
  return Model(ModelKind::FiniteCofinite, std::move(alg), sorted_unique(std::move(named)));
}

Model Model::countable_cocountable(CarrierPtr carrier, std::vector<SymbolicSet> generators) {
  if (carrier->kind() != CarrierKind::UncountableOmega)
    throw Error(ErrorKind::UnsupportedModel, "countable-cocountable models need the uncountable carrier");
  std::vector<PointLabel> named = carrier->named();
  FiniteAlgebra alg = generate_algebra(carrier, std::move(generators));
  return Model(ModelKind::CountableCocountable, std::move(alg), std::move(named));
}

bool Model::contains(const SymbolicSet& e) const {
  require_same_carrier(carrier(), e.carrier());
  if (kind_ == ModelKind::FiniteExplicit) return xisigma::contains(algebra_, e);
  return true;
}

bool Model::has_singletons() const {
  if (kind_ != ModelKind::FiniteExplicit) return true;
  return std::all_of(algebra_.atoms().begin(), algebra_.atoms().end(),
                     [](const SymbolicSet& a) { return a.base().size() == 1; });
}

SymbolicSet Model::sample_member(Rng& rng) const {
  std::bernoulli_distribution coin(0.5);
  if (kind_ == ModelKind::FiniteExplicit) {
    std::uint64_t mask = 0;
    for (std::size_t k = 0; k < algebra_.atoms().size(); ++k)
      if (coin(rng)) mask |= std::uint64_t{1} << k;
    return algebra_.union_of_atoms(mask);
  }
  std::vector<PointLabel> base;
  for (const auto& x : named_)
    if (coin(rng)) base.push_back(x);
  return coin(rng) ? SymbolicSet::of(carrier(), std::move(base)) : SymbolicSet::co(carrier(), std::move(base));
}

CompletenessReport is_complete(const Model& model) {
  switch (model.kind()) {
    case ModelKind::FiniteExplicit: return {true, std::nullopt, false};
    case ModelKind::FiniteCofinite:
      return {false,
              "union of the singleton atoms {n} over the even naturals: infinite and co-infinite, "
              "so neither finite nor cofinite",
              false};
    case ModelKind::CountableCocountable:
      return {false,
              "split the unnamed uncountable remainder into two uncountable halves; the union of the "
              "singletons of one half is uncountable and co-uncountable (not nameable)",
              true};
  }
  throw Error(ErrorKind::UnsupportedModel, "unknown model");
}

CompletenessReport is_complete(const FiniteAlgebra& algebra) {
  if (algebra.carrier()->is_infinite())
    throw Error(ErrorKind::UnsupportedModel, "completeness of ad-hoc algebras on infinite carriers is not decided");
  return {true, std::nullopt, false};
}

}  // namespace xisigma
