#include "xisigma/spectrum.hpp"

#include <algorithm>
#include <sstream>

#include "xisigma/error.hpp"

namespace xisigma {

std::string SpectrumPoint::to_string() const {
  switch (kind) {
    case Kind::Principal: return "Principal(" + label.text() + ")";
    case Kind::FreeCofinite: return "FreeCofinite";
    case Kind::FreeCocountable: return "FreeCocountable";
  }
  return "?";
}

Spectrum spectrum_of(const Model& model) {
  std::vector<SpectrumPoint> points;
  switch (model.kind()) {
    case ModelKind::FiniteExplicit: {
      std::vector<PointLabel> reps;
      for (const auto& atom : model.algebra().atoms()) {
        reps.push_back(atom.base().front());
        points.push_back({SpectrumPoint::Kind::Principal, atom.base().front()});
      }
      return Spectrum(model, Carrier::finite(std::move(reps)), std::move(points));
    }
    case ModelKind::FiniteCofinite: {
      auto extra = model.carrier()->named();
      extra.push_back(kFreePoint);
      for (const auto& x : model.named_points()) points.push_back({SpectrumPoint::Kind::Principal, x});
      points.push_back({SpectrumPoint::Kind::FreeCofinite, kFreePoint});
      return Spectrum(model, Carrier::naturals(std::move(extra)), std::move(points));
    }
    case ModelKind::CountableCocountable: {
      auto named = model.carrier()->named();
      named.push_back(kFreePoint);
      for (const auto& x : model.named_points()) points.push_back({SpectrumPoint::Kind::Principal, x});
      points.push_back({SpectrumPoint::Kind::FreeCocountable, kFreePoint});
      return Spectrum(model, Carrier::omega(std::move(named)), std::move(points));
    }
  }
  throw Error(ErrorKind::UnsupportedModel, "unknown model kind");
}

std::optional<SpectrumPoint> Spectrum::free_point() const {
  switch (model_.kind()) {
    case ModelKind::FiniteExplicit: return std::nullopt;
    case ModelKind::FiniteCofinite: return SpectrumPoint{SpectrumPoint::Kind::FreeCofinite, kFreePoint};
    case ModelKind::CountableCocountable: return SpectrumPoint{SpectrumPoint::Kind::FreeCocountable, kFreePoint};
  }
  return std::nullopt;
}

SpectrumPoint Spectrum::point_at(const PointLabel& label) const {
  require_point(*space_, label);
  if (label == kFreePoint && model_.kind() != ModelKind::FiniteExplicit) return *free_point();
  return {SpectrumPoint::Kind::Principal, label};
}

bool Spectrum::ultrafilter_contains(const SpectrumPoint& s, const SymbolicSet& e) const {
  if (!model_.contains(e)) throw Error(ErrorKind::NotInAlgebra, e.to_string() + " is not a member of the algebra");
  if (s.is_free()) return e.polarity() == Polarity::Co;
  return member(s.label, e);
}

SpectrumPoint embed(const Spectrum& sp, const PointLabel& x) {
  const Model& m = sp.model();
  require_point(*m.carrier(), x);
  if (m.kind() == ModelKind::FiniteExplicit) {
    const auto& atom = m.algebra().atoms()[m.algebra().atom_of(x)];
    return {SpectrumPoint::Kind::Principal, atom.base().front()};
  }
  return {SpectrumPoint::Kind::Principal, x};
}

namespace {

std::vector<PointLabel> with_free(std::vector<PointLabel> v) {
  v.push_back(kFreePoint);
  return v;
}

std::vector<PointLabel> without_free(std::vector<PointLabel> v) {
  std::erase(v, kFreePoint);
  return v;
}

void require_on_space(const Spectrum& sp, const Subset& s) { require_same_carrier(sp.space(), carrier_of(s)); }

}  // namespace

Subset embed_set(const Spectrum& sp, const Subset& y) {
  const Model& m = sp.model();
  require_same_carrier(m.carrier(), carrier_of(y));
  if (m.kind() == ModelKind::FiniteExplicit) {
    std::vector<PointLabel> reps;
    for (const auto& x : std::get<SymbolicSet>(y).base()) reps.push_back(embed(sp, x).label);
    return SymbolicSet::of(sp.space(), std::move(reps));
  }
  if (auto sym = std::get_if<SymbolicSet>(&y)) {
    if (sym->polarity() == Polarity::Positive) return SymbolicSet::of(sp.space(), sym->base());
    return SymbolicSet::co(sp.space(), with_free(sym->base()));
  }
  return rebase(y, sp.space());
}

SymbolicSet tilde(const Spectrum& sp, const SymbolicSet& e) {
  const Model& m = sp.model();
  if (!m.contains(e)) throw Error(ErrorKind::NotInAlgebra, e.to_string() + " is not a union of atoms");
  if (m.kind() == ModelKind::FiniteExplicit) {
    std::vector<PointLabel> reps;
    for (const auto& atom : m.algebra().atoms())
      if (is_subset(atom, e)) reps.push_back(atom.base().front());
    return SymbolicSet::of(sp.space(), std::move(reps));
  }
  if (e.polarity() == Polarity::Positive) return SymbolicSet::of(sp.space(), e.base());
  return SymbolicSet::co(sp.space(), e.base());
}

Subset closure(const Spectrum& sp, const Subset& s) {
  require_on_space(sp, s);
  if (sp.model().kind() == ModelKind::FiniteExplicit) return s;
  if (auto sym = std::get_if<SymbolicSet>(&s)) {
    if (sym->polarity() == Polarity::Positive) return s;
    // An infinite set accumulates at the free point.
    return SymbolicSet::co(sp.space(), without_free(sym->base()));
  }
  const auto& p = std::get<PeriodicSet>(s);
  return make_periodic(p.carrier, p.modulus, p.residues, with_free(p.extra));
}

bool is_open(const Spectrum& sp, const Subset& s) {
  require_on_space(sp, s);
  if (sp.model().kind() == ModelKind::FiniteExplicit) return true;
  if (!member(kFreePoint, s)) return true;  // principal points are isolated
  // Every neighbourhood of the free point contains a co-type clopen.
  auto sym = std::get_if<SymbolicSet>(&s);
  return sym && sym->polarity() == Polarity::Co;
}

bool is_closed(const Spectrum& sp, const Subset& s) { return same_set(closure(sp, s), s); }

bool is_clopen(const Spectrum& sp, const Subset& s) { return is_open(sp, s) && is_closed(sp, s); }

ExtremalReport is_extremely_disconnected(const Spectrum& sp) {
  ExtremalReport r;
  switch (sp.model().kind()) {
    case ModelKind::FiniteExplicit:
      r.extremely_disconnected = true;
      r.note = "finite discrete spectrum: every set is clopen";
      return r;
    case ModelKind::FiniteCofinite: {
      Subset u = evens(sp.space());
      Subset cl = closure(sp, u);
      if (!is_open(sp, u)) throw Error(ErrorKind::InvalidArgument, "evens should be open");
      r.extremely_disconnected = is_open(sp, cl);
      r.open_set = u;
      r.closure_of_open = cl;
      r.note = "U = union of singleton clopens over the evens is open; its closure adds the free point and "
               "contains no co-type clopen, so it is not open";
      return r;
    }
    case ModelKind::CountableCocountable:
      r.extremely_disconnected = false;
      r.symbolic_witness = true;
      r.note = "U = union of singletons over one uncountable half of the unnamed remainder is open; its "
               "closure adds the free point but no co-countable clopen fits inside (not nameable)";
      return r;
  }
  return r;
}

// ---------------------------------------------------------- MCmpt checks

namespace {

PointLabel fresh_natural(const std::vector<PointLabel>& labels) {
  std::uint64_t next = 0;
  for (const auto& x : labels)
    if (x.is_natural()) next = std::max(next, x.value() + 1);
  return PointLabel::natural(next + 7);
}

std::vector<PointLabel> labels_of(const Subset& s) {
  if (auto sym = std::get_if<SymbolicSet>(&s)) return sym->base();
  return std::get<PeriodicSet>(s).extra;
}

Subset random_periodic(const CarrierPtr& carrier, Rng& rng, const std::vector<PointLabel>& pool) {
  std::uniform_int_distribution<std::uint64_t> mod_dist(2, 4);
  std::bernoulli_distribution coin(0.5);
  for (;;) {
    const std::uint64_t m = mod_dist(rng);
    std::vector<std::uint64_t> residues;
    for (std::uint64_t r = 0; r < m; ++r)
      if (coin(rng)) residues.push_back(r);
    std::vector<PointLabel> extra;
    for (const auto& x : pool)
      if (!x.is_natural() && coin(rng)) extra.push_back(x);
    Subset s = make_periodic(carrier, m, residues, extra);
    if (std::holds_alternative<PeriodicSet>(s)) return s;
  }
}

std::vector<SymbolicSet> sample_members(const Model& m, Rng& rng, std::size_t count) {
  std::vector<SymbolicSet> out(m.algebra().atoms());
  for (std::size_t k = 0; k < count; ++k) out.push_back(m.sample_member(rng));
  return out;
}

}  // namespace

McmptReport check_mcmpt(const Spectrum& sp, Rng& rng, std::size_t member_samples, std::size_t subset_samples) {
  McmptReport r;
  const Model& m = sp.model();
  auto fail = [&](bool& flag, std::string what) {
    if (flag && !r.counterexample) r.counterexample = what;
    flag = false;
  };

  const auto members = sample_members(m, rng, member_samples);

  // (1) every tilde(E) is clopen
  for (const auto& e : members) {
    SymbolicSet t = tilde(sp, e);
    if (!is_clopen(sp, t)) fail(r.clopen_images, "tilde(" + e.to_string() + ") = " + t.to_string() + " is not clopen");
  }
  r.log.push_back("clopen images: " + std::to_string(members.size()) + " members");

  // (2) clopens form a basis: each point of each sampled open set has a
  // clopen neighbourhood inside it
  std::vector<Subset> opens;
  for (const auto& e : members) opens.push_back(tilde(sp, e));
  std::bernoulli_distribution coin(0.5);
  for (std::size_t k = 0; k < member_samples; ++k) {
    std::vector<PointLabel> pts;
    for (const auto& p : sp.points())
      if (!p.is_free() && coin(rng)) pts.push_back(p.label);
    opens.push_back(SymbolicSet::of(sp.space(), pts));
  }
  if (m.kind() == ModelKind::FiniteCofinite) {
    for (std::size_t k = 0; k < subset_samples; ++k)
      opens.push_back(random_periodic(sp.space(), rng, without_free(sp.space()->named())));
  }
  std::size_t probes = 0;
  for (const auto& o : opens) {
    if (!is_open(sp, o)) {
      fail(r.basis, "sampled open set " + to_string(o) + " is not open");
      continue;
    }
    std::vector<PointLabel> candidates = labels_of(o);
    for (const auto& p : sp.points()) candidates.push_back(p.label);
    if (m.kind() == ModelKind::FiniteCofinite) candidates.push_back(fresh_natural(candidates));
    for (const auto& s : candidates) {
      if (!member(s, o)) continue;
      ++probes;
      SymbolicSet nbhd = SymbolicSet::empty(sp.space());
      if (s == kFreePoint && m.kind() != ModelKind::FiniteExplicit) {
        const auto& co = std::get<SymbolicSet>(o);
        nbhd = tilde(sp, SymbolicSet::co(m.carrier(), co.base()));
      } else if (m.kind() == ModelKind::FiniteExplicit) {
        nbhd = tilde(sp, m.algebra().atoms()[m.algebra().atom_of(s)]);
      } else {
        nbhd = tilde(sp, SymbolicSet::of(m.carrier(), {s}));
      }
      if (!member(s, nbhd) || !includes(o, nbhd))
        fail(r.basis, "no clopen neighbourhood of " + s.text() + " inside " + to_string(o));
    }
  }
  r.log.push_back("basis: " + std::to_string(opens.size()) + " open sets, " + std::to_string(probes) + " points");

  if (!m.has_singletons()) {
    r.log.push_back("open-dense-discrete and finite-iff-closed: vacuous (algebra lacks singletons)");
    return r;
  }

  // (3) X is open, dense and discrete
  Subset x_image = embed_set(sp, SymbolicSet::all(m.carrier()));
  if (!is_open(sp, x_image)) fail(r.open_dense_discrete, "X is not open in the spectrum");
  if (!same_set(closure(sp, x_image), SymbolicSet::all(sp.space())))
    fail(r.open_dense_discrete, "closure of X is " + to_string(closure(sp, x_image)));
  for (const auto& x : m.named_points()) {
    Subset single = embed_set(sp, SymbolicSet::of(m.carrier(), {x}));
    if (!is_clopen(sp, single)) fail(r.open_dense_discrete, "{" + x.text() + "} is not clopen in the spectrum");
  }
  r.log.push_back("open-dense-discrete: " + std::to_string(m.named_points().size()) + " named points");

  // (4) closure(Y) = Y iff Y finite
  std::vector<Subset> ys;
  for (std::size_t k = 0; k < subset_samples; ++k) {
    if (m.kind() == ModelKind::FiniteExplicit) {
      ys.push_back(m.sample_member(rng));
      continue;
    }
    std::vector<PointLabel> base;
    for (const auto& x : m.named_points())
      if (coin(rng)) base.push_back(x);
    switch (k % 3) {
      case 0: ys.push_back(SymbolicSet::of(m.carrier(), base)); break;
      case 1: ys.push_back(SymbolicSet::co(m.carrier(), base)); break;
      default:
        if (m.kind() == ModelKind::FiniteCofinite)
          ys.push_back(random_periodic(m.carrier(), rng, m.carrier()->named()));
        else
          ys.push_back(coin(rng) ? SymbolicSet::of(m.carrier(), base) : SymbolicSet::co(m.carrier(), base));
    }
  }
  if (m.kind() == ModelKind::FiniteCofinite) ys.push_back(evens(m.carrier()));
  for (const auto& y : ys) {
    Subset img = embed_set(sp, y);
    const bool closed = same_set(closure(sp, img), img);
    if (closed != is_finite(y))
      fail(r.finite_iff_closed, "Y = " + to_string(y) + ": closed=" + (closed ? "yes" : "no") +
                                    " finite=" + (is_finite(y) ? "yes" : "no"));
  }
  r.log.push_back("finite-iff-closed: " + std::to_string(ys.size()) + " subsets");
  return r;
}

std::vector<FnElement> separability_defect(const Model& model, std::size_t k) {
  std::vector<SymbolicSet> sets;
  switch (model.kind()) {
    case ModelKind::FiniteExplicit: sets = model.algebra().atoms(); break;
    case ModelKind::FiniteCofinite:
      for (std::size_t n = 0; n < k; ++n) sets.push_back(SymbolicSet::of(model.carrier(), {PointLabel::natural(n)}));
      break;
    case ModelKind::CountableCocountable:
      for (const auto& x : model.named_points()) sets.push_back(SymbolicSet::of(model.carrier(), {x}));
      sets.push_back(SymbolicSet::co(model.carrier(), model.named_points()));
      break;
  }
  if (sets.size() < k)
    throw Error(ErrorKind::InsufficientDisjointSets,
                "asked for " + std::to_string(k) + " disjoint members, the model has " + std::to_string(sets.size()));
  std::vector<FnElement> out;
  for (std::size_t n = 0; n < k; ++n) out.push_back(FnElement::indicator(sets[n]));
  return out;
}

// ---------------------------------------------------------------- export

namespace {

std::string dot_id(const std::string& prefix, const PointLabel& x) {
  std::string id = prefix;
  for (unsigned char c : x.text()) {
    if (std::isalnum(c))
      id.push_back(static_cast<char>(c));
    else
      id += "_" + std::to_string(static_cast<int>(c));
  }
  return id;
}

}  // namespace

std::string to_dot(const Spectrum& sp) {
  const Model& m = sp.model();
  std::ostringstream os;
  os << "digraph spectrum {\n  rankdir=LR;\n";
  os << "  subgraph cluster_X {\n    label=\"X\";\n";
  for (const auto& x : m.named_points()) os << "    " << dot_id("x_", x) << " [label=\"" << x.text() << "\", shape=plaintext];\n";
  os << "  }\n  subgraph cluster_S {\n    label=\"spectrum\";\n";
  for (const auto& p : sp.points()) {
    os << "    " << dot_id("s_", p.label) << " [label=\"" << (p.is_free() ? p.to_string() : p.label.text())
       << "\", shape=" << (p.is_free() ? "doublecircle" : "circle") << "];\n";
  }
  if (sp.has_unnamed_principals())
    os << "    s_unnamed [label=\"unnamed principals\", shape=circle, style=dashed];\n";
  os << "  }\n";
  for (const auto& x : m.named_points()) os << "  " << dot_id("x_", x) << " -> " << dot_id("s_", embed(sp, x).label) << ";\n";
  const auto& atoms = m.algebra().atoms();
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    SymbolicSet t = tilde(sp, atoms[k]);
    os << "  clopen_" << k << " [label=\"" << t.to_string() << "\", shape=box];\n";
    for (const auto& p : sp.points())
      if (member(p.label, t)) os << "  clopen_" << k << " -> " << dot_id("s_", p.label) << " [style=dashed];\n";
    if (sp.has_unnamed_principals() && member_generic(t)) os << "  clopen_" << k << " -> s_unnamed [style=dashed];\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_listing(const Spectrum& sp) {
  const Model& m = sp.model();
  std::ostringstream os;
  os << "model: " << to_string(m.kind()) << " on " << m.carrier()->describe() << "\n";
  os << "points:\n";
  for (const auto& p : sp.points()) os << "  " << (p.is_free() ? "free      " : "principal ") << p.to_string() << "\n";
  if (sp.has_unnamed_principals()) os << "  (plus unnamed principal points, not enumerated)\n";
  os << "atoms -> clopens:\n";
  for (const auto& atom : m.algebra().atoms()) os << "  " << atom.to_string() << " -> " << tilde(sp, atom).to_string() << "\n";
  return os.str();
}

}  // namespace xisigma
