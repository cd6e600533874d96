#include "xisigma/topology.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "xisigma/error.hpp"

namespace xisigma {

TopSpace TopSpace::finite(CarrierPtr carrier, std::vector<SymbolicSet> opens) {
  if (carrier->is_infinite()) throw Error(ErrorKind::UnsupportedModel, "explicit open families need a finite carrier");
  for (const auto& o : opens) require_same_carrier(carrier, o.carrier());
  auto has = [&](const SymbolicSet& s) { return std::find(opens.begin(), opens.end(), s) != opens.end(); };
  if (!has(SymbolicSet::empty(carrier)) || !has(SymbolicSet::all(carrier)))
    throw Error(ErrorKind::InvalidArgument, "a topology must contain the empty set and the whole carrier");
  for (std::size_t i = 0; i < opens.size(); ++i)
    for (std::size_t j = i + 1; j < opens.size(); ++j) {
      if (!has(unite(opens[i], opens[j])))
        throw Error(ErrorKind::InvalidArgument,
                    "not closed under union: " + opens[i].to_string() + " and " + opens[j].to_string());
      if (!has(intersect(opens[i], opens[j])))
        throw Error(ErrorKind::InvalidArgument,
                    "not closed under intersection: " + opens[i].to_string() + " and " + opens[j].to_string());
    }
  std::vector<SymbolicSet> nbhds;
  for (const auto& x : carrier->named()) {
    SymbolicSet u = SymbolicSet::all(carrier);
    for (const auto& o : opens)
      if (member(x, o)) u = intersect(u, o);
    nbhds.push_back(std::move(u));
  }
  return finite_from_neighbourhoods(std::move(carrier), std::move(nbhds));
}

TopSpace TopSpace::finite_from_neighbourhoods(CarrierPtr carrier, std::vector<SymbolicSet> neighbourhoods) {
  const auto& points = carrier->named();
  if (carrier->is_infinite() || neighbourhoods.size() != points.size())
    throw Error(ErrorKind::InvalidArgument, "need one neighbourhood per point of a finite carrier");
  for (std::size_t i = 0; i < points.size(); ++i) {
    require_same_carrier(carrier, neighbourhoods[i].carrier());
    if (!member(points[i], neighbourhoods[i]))
      throw Error(ErrorKind::InvalidArgument, "U(" + points[i].text() + ") must contain the point");
    for (const auto& y : neighbourhoods[i].base()) {
      const auto j = static_cast<std::size_t>(std::lower_bound(points.begin(), points.end(), y) - points.begin());
      if (!is_subset(neighbourhoods[j], neighbourhoods[i]))
        throw Error(ErrorKind::InvalidArgument, "U(" + y.text() + ") is not inside U(" + points[i].text() + ")");
    }
  }
  TopSpace t;
  t.kind_ = Kind::Finite;
  t.carrier_ = std::move(carrier);
  t.neighbourhoods_ = std::move(neighbourhoods);
  return t;
}

TopSpace TopSpace::cofinite(CarrierPtr carrier) {
  if (carrier->kind() != CarrierKind::CountableNat)
    throw Error(ErrorKind::UnsupportedModel, "the cofinite topology is modelled on nat carriers");
  TopSpace t;
  t.kind_ = Kind::CofiniteNat;
  t.carrier_ = std::move(carrier);
  return t;
}

TopSpace TopSpace::convergent_sequence(CarrierPtr carrier, PointLabel limit) {
  if (carrier->kind() != CarrierKind::CountableNat)
    throw Error(ErrorKind::UnsupportedModel, "a convergent sequence lives on a nat carrier");
  require_point(*carrier, limit);
  if (limit.is_natural()) throw Error(ErrorKind::InvalidArgument, "the limit point must be an extra named point");
  TopSpace t;
  t.kind_ = Kind::ConvergentSequence;
  t.carrier_ = std::move(carrier);
  t.limit_ = std::move(limit);
  return t;
}

const SymbolicSet& TopSpace::minimal_neighbourhood(const PointLabel& x) const {
  if (kind_ != Kind::Finite) throw Error(ErrorKind::UnsupportedModel, "no minimal neighbourhoods in " + describe());
  require_point(*carrier_, x);
  const auto& points = carrier_->named();
  return neighbourhoods_[static_cast<std::size_t>(std::lower_bound(points.begin(), points.end(), x) - points.begin())];
}

bool TopSpace::is_open(const Subset& s) const {
  require_same_carrier(carrier_, carrier_of(s));
  switch (kind_) {
    case Kind::Finite: {
      const auto& set = std::get<SymbolicSet>(s);
      return std::all_of(set.base().begin(), set.base().end(),
                         [&](const PointLabel& x) { return is_subset(minimal_neighbourhood(x), set); });
    }
    case Kind::CofiniteNat: {
      auto set = std::get_if<SymbolicSet>(&s);
      return set && (set->is_empty() || set->polarity() == Polarity::Co);
    }
    case Kind::ConvergentSequence: {
      if (!member(*limit_, s)) return true;
      auto set = std::get_if<SymbolicSet>(&s);
      return set && set->polarity() == Polarity::Co;
    }
  }
  return false;
}

bool TopSpace::is_hausdorff() const {
  switch (kind_) {
    case Kind::Finite:
      return std::all_of(neighbourhoods_.begin(), neighbourhoods_.end(),
                         [](const SymbolicSet& u) { return u.base().size() == 1; });
    case Kind::CofiniteNat: return false;
    case Kind::ConvergentSequence: return true;
  }
  return false;
}

std::string TopSpace::describe() const {
  switch (kind_) {
    case Kind::Finite: {
      std::string out = "finite topology {";
      for (std::size_t i = 0; i < neighbourhoods_.size(); ++i)
        out += (i ? ", " : "") + std::string("U(") + carrier_->named()[i].text() + ")=" + neighbourhoods_[i].to_string();
      return out + "}";
    }
    case Kind::CofiniteNat: return "cofinite topology on " + carrier_->describe();
    case Kind::ConvergentSequence: return "convergent sequence to " + limit_->text() + " on " + carrier_->describe();
  }
  return "?";
}

Model borel_algebra(const TopSpace& t, std::size_t window) {
  switch (t.kind()) {
    case TopSpace::Kind::Finite: return Model::finite(generate_algebra(t.carrier(), t.neighbourhoods()));
    case TopSpace::Kind::CofiniteNat: return Model::finite_cofinite(t.carrier(), {}, window);
    case TopSpace::Kind::ConvergentSequence:
      return Model::finite_cofinite(t.carrier(), {SymbolicSet::of(t.carrier(), {*t.limit()})}, window);
  }
  throw Error(ErrorKind::UnsupportedModel, "unknown topology kind");
}

SymbolicSet halo(const TopSpace& t, const Spectrum& sp, const PointLabel& x) {
  require_same_carrier(t.carrier(), sp.model().carrier());
  require_point(*t.carrier(), x);
  switch (t.kind()) {
    case TopSpace::Kind::Finite: return tilde(sp, t.minimal_neighbourhood(x));
    case TopSpace::Kind::ConvergentSequence:
      if (x == *t.limit()) return SymbolicSet::of(sp.space(), {x, kFreePoint});
      return SymbolicSet::of(sp.space(), {x});
    case TopSpace::Kind::CofiniteNat: return SymbolicSet::of(sp.space(), {x, kFreePoint});
  }
  throw Error(ErrorKind::UnsupportedModel, "unknown topology kind");
}

OpenHaloReport check_open_halo(const TopSpace& t, const Spectrum& sp, const PointLabel& x) {
  if (!t.is_hausdorff()) throw Error(ErrorKind::NotHausdorff, t.describe() + " is not Hausdorff");
  OpenHaloReport r;
  const SymbolicSet h = halo(t, sp, x);
  r.halo_open = is_open(sp, h);
  r.singleton_open = t.is_open(SymbolicSet::of(t.carrier(), {x}));
  std::vector<PointLabel> probes = sp.model().named_points();
  if (t.carrier()->kind() == CarrierKind::CountableNat) {
    std::uint64_t next = 0;
    for (const auto& y : probes)
      if (y.is_natural()) next = std::max(next, y.value() + 1);
    probes.push_back(PointLabel::natural(next));
  }
  for (const auto& y : probes) {
    if (y == x) continue;
    if (!disjoint(h, halo(t, sp, y))) {
      r.disjoint = false;
      r.overlapping = y;
      break;
    }
  }
  return r;
}

namespace {

bool subset_nonempty(const Subset& s) {
  auto set = std::get_if<SymbolicSet>(&s);
  return !set || !set->is_empty();
}

}  // namespace

RobinsonReport robinson_check(const TopSpace& t, const Spectrum& sp, const Subset& y) {
  require_same_carrier(t.carrier(), carrier_of(y));
  const Subset image = embed_set(sp, y);
  Subset cover = SymbolicSet::empty(sp.space());
  bool oracle = true;
  bool informational = false;
  std::string note;
  switch (t.kind()) {
    case TopSpace::Kind::Finite: {
      const auto& set = std::get<SymbolicSet>(y);
      for (const auto& x : set.base()) cover = unite(cover, Subset(halo(t, sp, x)));
      oracle = finite_subcover_exists(t, set);
      note = "finite subcover search over minimal neighbourhoods";
      break;
    }
    case TopSpace::Kind::ConvergentSequence:
      // Halos of isolated points are their singletons; the limit brings the free point.
      cover = image;
      if (member(*t.limit(), y)) cover = unite(cover, Subset(halo(t, sp, *t.limit())));
      oracle = is_finite(y) || member(*t.limit(), y);
      note = "compact iff finite or containing " + t.limit()->text();
      break;
    case TopSpace::Kind::CofiniteNat:
      cover = image;
      if (subset_nonempty(y)) cover = unite(cover, Subset(SymbolicSet::of(sp.space(), {kFreePoint})));
      informational = true;
      note = "every subset of a cofinite space is compact; halos overlap, verdict informational";
      break;
  }
  RobinsonReport r{false, oracle, closure(sp, image), cover, std::nullopt, informational, note};
  r.witness = witness_of_difference(r.closure, r.cover);
  r.halo_cover = !r.witness.has_value();
  return r;
}

bool finite_subcover_exists(const TopSpace& t, const SymbolicSet& y) {
  if (t.kind() != TopSpace::Kind::Finite) throw Error(ErrorKind::UnsupportedModel, "subcover search needs a finite space");
  const auto& points = t.carrier()->named();
  auto mask_of = [&](const SymbolicSet& s) {
    std::uint64_t m = 0;
    for (const auto& x : s.base())
      m |= std::uint64_t{1} << (std::lower_bound(points.begin(), points.end(), x) - points.begin());
    return m;
  };
  const std::uint64_t target = mask_of(y);
  std::vector<std::uint64_t> cover;
  for (const auto& x : y.base()) cover.push_back(mask_of(t.minimal_neighbourhood(x)));
  if (cover.size() > 20) throw Error(ErrorKind::InvalidArgument, "subcover search limited to 20 sets");
  // Smallest subfamily first.
  for (std::size_t size = 0; size <= cover.size(); ++size)
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << cover.size()); ++pick) {
      if (static_cast<std::size_t>(std::popcount(pick)) != size) continue;
      std::uint64_t covered = 0;
      for (std::size_t k = 0; k < cover.size(); ++k)
        if (pick & (std::uint64_t{1} << k)) covered |= cover[k];
      if ((covered & target) == target) return true;
    }
  return false;
}

MeasurabilityReport measurability_check(const TopSpace& t, const std::vector<FnElement>& images) {
  if (t.kind() != TopSpace::Kind::Finite)
    throw Error(ErrorKind::UnsupportedModel, "measurability is decided on finite topologies only");
  const Model borel = borel_algebra(t);
  MeasurabilityReport r;
  const auto& points = t.carrier()->named();
  for (const auto& f : images) {
    require_same_carrier(t.carrier(), f.carrier());
    std::map<std::string, std::vector<PointLabel>> levels;
    for (const auto& x : points) levels[f.at(x).to_string()].push_back(x);
    for (const auto& [value, xs] : levels) {
      SymbolicSet level = SymbolicSet::of(t.carrier(), xs);
      if (!borel.contains(level)) {
        if (r.level_sets) r.witness = level;
        r.level_sets = false;
      }
    }
  }
  std::map<std::vector<std::string>, std::vector<PointLabel>> fibers;
  for (const auto& x : points) {
    std::vector<std::string> key;
    for (const auto& f : images) key.push_back(f.at(x).to_string());
    fibers[key].push_back(x);
  }
  for (const auto& [key, xs] : fibers)
    if (!borel.contains(SymbolicSet::of(t.carrier(), xs))) r.point_map = false;
  return r;
}

void for_each_finite_topology(std::size_t n, const std::function<void(const std::vector<std::uint32_t>&)>& visit) {
  if (n == 0 || n > 8) throw Error(ErrorKind::InvalidArgument, "topology enumeration supports 1..8 points");
  // up[x] = {y : x <= y} for a preorder; the minimal neighbourhood of x.
  std::vector<std::uint32_t> up(n, 0);
  std::function<void(std::size_t)> extend = [&](std::size_t k) {
    if (k == n) {
      visit(up);
      return;
    }
    const std::uint32_t old = (std::uint32_t{1} << k) - 1;
    for (std::uint32_t below = 0; below <= old; ++below) {
      bool down_closed = true;
      for (std::size_t x = 0; x < k && down_closed; ++x)
        if (!(below >> x & 1))
          for (std::size_t d = 0; d < k; ++d)
            if ((below >> d & 1) && (up[x] >> d & 1)) down_closed = false;
      if (!down_closed) continue;
      for (std::uint32_t above = 0; above <= old; ++above) {
        bool ok = true;
        for (std::size_t u = 0; u < k && ok; ++u)
          if ((above >> u & 1) && (up[u] & ~above & old)) ok = false;
        for (std::size_t d = 0; d < k && ok; ++d)
          if ((below >> d & 1) && (above & ~up[d])) ok = false;
        if (!ok) continue;
        const auto saved = up;
        up[k] = above | (std::uint32_t{1} << k);
        for (std::size_t d = 0; d < k; ++d)
          if (below >> d & 1) up[d] |= up[k];
        extend(k + 1);
        up = saved;
      }
    }
  };
  extend(0);
}

}  // namespace xisigma
