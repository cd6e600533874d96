#include "xisigma/checks.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <sstream>

#include "xisigma/error.hpp"

namespace xisigma {

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skip: return "SKIP";
  }
  return "?";
}

namespace {

struct Outcome {
  std::vector<std::string> log;
  std::optional<std::string> counterexample;
  bool failed = false;

  void note(std::string line) { log.push_back(std::move(line)); }
  void require(bool ok, const std::string& what) {
    if (ok) return;
    failed = true;
    if (!counterexample) counterexample = what;
  }
};

using Routine = void (*)(const ModelDocument&, Rng&, Outcome&);

struct Entry {
  CheckInfo info;
  Routine routine;
};

[[noreturn]] void not_applicable(std::string_view id, const std::string& why) {
  throw Error(ErrorKind::NotApplicable, std::string(id) + ": " + why);
}

const AlgebraSpec& need_algebra(const ModelDocument& doc, std::string_view id) {
  if (!doc.algebra) not_applicable(id, "the document has no algebra section");
  return *doc.algebra;
}

const TopSpace& need_topology(const ModelDocument& doc, std::string_view id) {
  if (!doc.topology) not_applicable(id, "the document has no topology section");
  return *doc.topology;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::vector<PointLabel> norm_probe_points(const AlgebraSpec& alg) {
  std::vector<PointLabel> points = alg.algebra.window();
  const auto& rep = alg.algebra.representative();
  if (rep && *rep != kUnnamed) points.push_back(*rep);
  for (const auto& [x, w] : alg.norm.weights())
    if (alg.algebra.carrier()->contains(x)) points.push_back(x);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

// ------------------------------------------------------------------ gelfand

void quasi_norm_axioms(const ModelDocument& doc, Rng& rng, Outcome& out) {
  const auto& alg = need_algebra(doc, "quasi-norm-axioms");
  const auto r = check_quasi_norm_axioms(alg.norm, doc.carrier, norm_probe_points(alg), doc.field, rng, 1000);
  out.note("norm " + alg.norm.to_string() + (alg.norm.builtin() ? "" : " (user-supplied)") + ": " +
           std::to_string(r.pairs) + " random pairs");
  out.note("subadditive " + yes_no(r.subadditive) + ", homogeneous " + yes_no(r.homogeneous) + ", involutive " +
           yes_no(r.involutive) + ", submultiplicative " + yes_no(r.submultiplicative));
  out.require(r.axioms(), r.witness.value_or("axiom violated"));
  if (alg.norm.builtin())
    out.require(r.unit_at_least_one, "rho(1) < 1 for a built-in norm");
  else if (!r.unit_at_least_one)
    out.note("flagged: rho(1) < 1");

  if (doc.field == Field::Complex) {
    const auto points = norm_probe_points(alg);
    for (int k = 0; k < 100; ++k) {
      const FnElement f = random_element(doc.carrier, points, doc.field, rng);
      const auto [s, t] = symmetric_decompose(f, doc.field);
      out.require(s.is_symmetric() && t.is_symmetric() && s + Scalar::i() * t == f,
                  "symmetric decomposition fails for " + f.to_string());
    }
    out.note("symmetric decomposition: 100 random elements");
  }
}

void cts_hom(const ModelDocument& doc, Rng& rng, Outcome& out) {
  const auto& alg = need_algebra(doc, "cts-hom");
  const auto chars = characters(alg.algebra);
  const auto family = test_family(alg.algebra, rng);
  const auto cont = continuous_characters(chars, alg.norm, family);
  const auto kernel = kernel_continuity(alg.algebra, alg.norm, chars);
  out.note(std::to_string(chars.size()) + " characters, " + std::to_string(cont.kept.size()) + " continuous, " +
           std::to_string(family.size()) + " test elements");
  for (std::size_t i = 0; i < chars.size(); ++i) {
    const bool by_inequality =
        std::find(cont.kept.begin(), cont.kept.end(), chars[i]) != cont.kept.end();
    out.require(by_inequality == kernel[i], chars[i].to_string() + ": inequality test says " + yes_no(by_inequality) +
                                                ", kernel test says " + yes_no(kernel[i]));
  }
  for (const auto& [alpha, a] : cont.rejected)
    out.note("rejected " + alpha.to_string() + ": a = " + a.to_string() + ", |alpha(a)| = " +
             Surd::abs(alpha(a)).to_string() + " > rho(a) = " + quasi_norm(alg.norm, a).to_string());

  const std::size_t n = std::min<std::size_t>(family.size(), 60);
  for (const auto& alpha : chars)
    for (std::size_t i = 0; i < n; ++i) {
      out.require(alpha(family[i].conj()) == alpha(family[i]).conj(),
                  alpha.to_string() + " is not involutive on " + family[i].to_string());
      for (std::size_t j = i; j < n; j += 7)
        out.require(alpha(family[i] * family[j]) == alpha(family[i]) * alpha(family[j]),
                    alpha.to_string() + " is not multiplicative");
    }
}

void unit_cmpt(const ModelDocument& doc, Rng& rng, Outcome& out) {
  const auto& alg = need_algebra(doc, "unit-cmpt");
  const auto family = test_family(alg.algebra, rng);
  const auto cont = continuous_characters(characters(alg.algebra), alg.norm, family).kept;
  const auto r = compactness_witness(alg.algebra, cont, family);
  const bool infinite_discrete =
      alg.algebra.kind() == FunctionAlgebra::Kind::FinitelySupported &&
      std::any_of(cont.begin(), cont.end(), [](const Character& c) { return c.represents_unnamed; });
  out.note(std::string(alg.algebra.unital() ? "unital" : "not unital") + ", " + std::to_string(cont.size()) +
           " continuous characters");
  out.note(std::string(r.compact ? "compact" : "not compact") + ": " + r.evidence);
  if (r.a0) out.note("a0 = " + r.a0->to_string());
  out.require(r.compact == !infinite_discrete, "compactness verdict disagrees with the spectrum's shape");
  if (alg.algebra.unital())
    out.require(r.compact && r.a0 == FnElement::constant(doc.carrier, 1), "unital algebra without the unit witness");
}

void non_unital(const ModelDocument& doc, Rng& rng, Outcome& out) {
  const auto& alg = need_algebra(doc, "non-unital");
  const auto u = unitize(alg.algebra, alg.norm);
  const auto base = characters(alg.algebra);
  const auto realized = characters(realize_unitization(alg.algebra));
  out.note("characters: A has " + std::to_string(base.size()) + ", unitization " +
           std::to_string(u.characters.size()) + ", realized as functions " + std::to_string(realized.size()));
  out.require(u.characters.size() == base.size() + 1, "unitization does not add exactly one character");
  out.require(realized.size() == base.size() + 1, "function realization disagrees with the character count");
  out.require(std::count_if(u.characters.begin(), u.characters.end(),
                            [](const Character& c) { return c.kind == Character::Kind::Adjoined; }) == 1,
              "expected exactly one adjoined character");

  const auto family = test_family(alg.algebra, rng, 2, 100);
  std::uniform_int_distribution<std::size_t> pick(0, family.size() - 1);
  std::uniform_int_distribution<int> lam(-3, 3);
  std::size_t samples = 0;
  for (int k = 0; k < 200 && !family.empty(); ++k) {
    const UnitizedElement x{family[pick(rng)], Scalar(Rational(lam(rng)))};
    const UnitizedElement y{family[pick(rng)], Scalar(Rational(lam(rng)))};
    const UnitizedElement xy = x * y;
    for (const auto& c : u.characters) {
      out.require(u.evaluate(c, xy) == u.evaluate(c, x) * u.evaluate(c, y),
                  c.to_string() + " is not multiplicative on the unitization");
      if (c.kind == Character::Kind::Adjoined) out.require(u.evaluate(c, x) == x.lambda, "adjoined value is not lambda");
    }
    out.require(u.norm(xy) <= u.norm(x) * u.norm(y), "unitized norm is not submultiplicative at a = " + x.a.to_string());
    out.require(Surd::abs(x.lambda) <= u.norm(x), "adjoined character is not continuous");
    ++samples;
  }
  out.note(std::to_string(samples) + " sampled pairs (a, lambda)");
}

void jst_bndd(const ModelDocument& doc, Rng& rng, Outcome& out) {
  const auto& alg = need_algebra(doc, "jst-bndd");
  const auto r = density_constant(alg.algebra, alg.norm, rng);
  for (const auto& line : r.log) out.note(line);
  out.note(std::string("D* finite: ") + yes_no(r.dense) + ", direct density: " + yes_no(r.direct_dense));
  if (r.witness) out.note("witness a = " + r.witness->to_string());
  out.require(r.dense == r.direct_dense, "D* verdict and direct density check disagree");
}

// ----------------------------------------------------------------- spectrum

void img_of_meas(const ModelDocument& doc, Rng& rng, Outcome& out) {
  const Model model = doc.model();
  const Spectrum sp = spectrum_of(model);
  std::vector<SymbolicSet> sample(model.algebra().atoms());
  for (int k = 0; k < 100; ++k) sample.push_back(model.sample_member(rng));
  for (const auto& e : sample) {
    const Subset c = closure(sp, embed_set(sp, e));
    const SymbolicSet t = tilde(sp, e);
    out.require(same_set(c, t), "E = " + e.to_string() + ": closure " + to_string(c) + " vs tilde " + t.to_string());
  }
  out.note(std::to_string(sample.size()) + " members (" + std::to_string(model.algebra().atoms().size()) + " atoms)");

  std::size_t laws = 0;
  for (std::size_t i = 0; i + 1 < sample.size(); i += 2)
    for (const auto& s : sp.points()) {
      const auto& e = sample[i];
      const auto& f = sample[i + 1];
      out.require(sp.ultrafilter_contains(s, intersect(e, f)) ==
                      (sp.ultrafilter_contains(s, e) && sp.ultrafilter_contains(s, f)),
                  s.to_string() + " is not closed under intersection");
      out.require(sp.ultrafilter_contains(s, e) != sp.ultrafilter_contains(s, complement(e)),
                  s.to_string() + " does not decide " + e.to_string());
      ++laws;
    }
  out.note(std::to_string(laws) + " ultrafilter law instances");
}

template <int Part>
void mcmpt(const ModelDocument& doc, Rng& rng, Outcome& out) {
  const Model model = doc.model();
  if (Part >= 3 && !model.has_singletons())
    not_applicable("mcmpt-" + std::to_string(Part), "the algebra does not contain every singleton");
  const Spectrum sp = spectrum_of(model);
  const auto r = check_mcmpt(sp, rng);
  const bool flags[] = {r.clopen_images, r.basis, r.open_dense_discrete, r.finite_iff_closed};
  if (r.log.size() == 4)
    out.note(r.log[Part - 1]);
  else
    for (const auto& line : r.log) out.note(line);
  out.require(flags[Part - 1], r.counterexample.value_or("sub-check failed"));
}

void not_metrizable(const ModelDocument& doc, Rng&, Outcome& out) {
  const Model model = doc.model();
  if (model.kind() == ModelKind::FiniteExplicit) not_applicable("not-metrizable", "finite spectra are metrizable");
  const std::size_t k = model.kind() == ModelKind::FiniteCofinite ? 16 : model.named_points().size() + 1;
  const auto family = separability_defect(model, k);
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      out.require(quasi_norm(QuasiNorm::sup(), family[i] - family[j]) == Surd(1),
                  "indicators " + std::to_string(i) + " and " + std::to_string(j) + " are not at distance 1");
  out.note(std::to_string(family.size()) + " indicators of disjoint members at pairwise distance 1");
  if (model.kind() == ModelKind::CountableCocountable) {
    bool refused = false;
    try {
      separability_defect(model, k + 1);
    } catch (const Error& e) {
      refused = e.kind() == ErrorKind::InsufficientDisjointSets;
    }
    out.require(refused, "asking for more disjoint members than nameable should fail");
    out.note("the named part supports " + std::to_string(k) + " disjoint members; more need unnamed points");
  } else {
    out.note("k is unbounded on this model");
  }
}

void complete_iff_extdisc(const ModelDocument& doc, Rng&, Outcome& out) {
  const Model model = doc.model();
  const Spectrum sp = spectrum_of(model);
  const auto c = is_complete(model);
  const auto e = is_extremely_disconnected(sp);
  out.note(std::string("complete: ") + yes_no(c.complete) + ", extremely disconnected: " + yes_no(e.extremely_disconnected));
  if (c.witness) out.note("union witness: " + *c.witness);
  out.note(e.note);
  out.require(c.complete == e.extremely_disconnected, "completeness and extreme disconnectedness disagree");
  if (e.open_set) {
    const Subset cl = closure(sp, *e.open_set);
    out.note("U = " + to_string(*e.open_set) + ", closure " + to_string(cl));
    out.require(is_open(sp, *e.open_set), "witness U is not open");
    out.require(same_set(cl, *e.closure_of_open), "closure of the witness differs");
    out.require(!is_open(sp, cl), "closure of the witness is open");
    if (model.kind() == ModelKind::FiniteCofinite)
      out.require(member(kFreePoint, cl) && !member(PointLabel::natural(1), cl), "closure of the evens is wrong");
  }
}

// ------------------------------------------------------------------ topology

void cntbly_gen_note(const ModelDocument& doc, Rng&, Outcome& out) {
  const auto& t = need_topology(doc, "cntbly-gen-note");
  const Model borel = borel_algebra(t, doc.window);
  if (t.kind() == TopSpace::Kind::Finite) {
    const auto& nb = t.neighbourhoods();
    if (nb.size() > 16) not_applicable("cntbly-gen-note", "too many points to list every open set");
    std::vector<SymbolicSet> opens;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nb.size()); ++mask) {
      SymbolicSet u = SymbolicSet::empty(doc.carrier);
      for (std::size_t k = 0; k < nb.size(); ++k)
        if (mask >> k & 1) u = unite(u, nb[k]);
      opens.push_back(u);
    }
    const auto from_opens = generate_algebra(doc.carrier, opens);
    out.require(from_opens.atoms() == borel.algebra().atoms(),
                "minimal neighbourhoods and all open sets generate different algebras");
    out.note("generated by " + std::to_string(nb.size()) + " minimal neighbourhoods; " +
             std::to_string(borel.algebra().atoms().size()) + " atoms");
    return;
  }
  for (const auto& x : borel.named_points())
    out.require(borel.contains(SymbolicSet::of(doc.carrier, {x})), "{" + x.text() + "} is not Borel");
  out.note("generated by the countably many singletons; every member is finite or cofinite");
}

std::vector<FnElement> measurability_images(const ModelDocument& doc) {
  if (doc.algebra && doc.algebra->algebra.kind() == FunctionAlgebra::Kind::Generated &&
      !doc.algebra->algebra.generators().empty())
    return doc.algebra->algebra.generators();
  std::vector<FnElement> images;
  for (const auto& g : doc.generators) images.push_back(FnElement::indicator(g));
  return images;
}

void meas_fuc_alg(const ModelDocument& doc, Rng&, Outcome& out) {
  const auto& t = need_topology(doc, "meas-fuc-alg");
  if (t.kind() != TopSpace::Kind::Finite) not_applicable("meas-fuc-alg", "decided on finite topologies only");
  const auto images = measurability_images(doc);
  const auto r = measurability_check(t, images);
  out.note(std::to_string(images.size()) + " functions: level sets Borel " + yes_no(r.level_sets) +
           ", point map measurable " + yes_no(r.point_map));
  if (r.witness) out.note("non-Borel level set " + r.witness->to_string());
  out.require(r.agree(), "level-set and point-map measurability disagree");
  const auto discrete = TopSpace::finite_from_neighbourhoods(
      doc.carrier, [&] {
        std::vector<SymbolicSet> singletons;
        for (const auto& x : doc.carrier->named()) singletons.push_back(SymbolicSet::of(doc.carrier, {x}));
        return singletons;
      }());
  out.require(measurability_check(discrete, images).level_sets, "a discrete topology makes everything measurable");
}

void open_halos(const ModelDocument& doc, Rng&, Outcome& out) {
  const auto& t = need_topology(doc, "open-halos");
  if (!t.is_hausdorff()) not_applicable("open-halos", "NotHausdorff: " + t.describe());
  const Model borel = borel_algebra(t, doc.window);
  const Spectrum sp = spectrum_of(borel);
  for (const auto& x : borel.named_points()) {
    const auto r = check_open_halo(t, sp, x);
    out.require(member(embed(sp, x).label, halo(t, sp, x)), "h(" + x.text() + ") misses its own point");
    out.require(r.halo_open == r.singleton_open,
                "h(" + x.text() + ") open: " + yes_no(r.halo_open) + ", {" + x.text() + "} open: " + yes_no(r.singleton_open));
    out.require(r.disjoint, "h(" + x.text() + ") meets h(" + (r.overlapping ? r.overlapping->text() : "?") + ")");
    if (!r.singleton_open) out.note("h(" + x.text() + ") = " + halo(t, sp, x).to_string() + " is not open");
  }
  out.note(std::to_string(borel.named_points().size()) + " points: halo open iff singleton open; halos disjoint");
}

void semi_robinson(const ModelDocument& doc, Rng& rng, Outcome& out) {
  const auto& t = need_topology(doc, "semi-robinson");
  const Model borel = borel_algebra(t, doc.window);
  const Spectrum sp = spectrum_of(borel);
  auto run = [&](const Subset& y) {
    const auto r = robinson_check(t, sp, y);
    if (!r.informational)
      out.require(r.agree(), "Y = " + to_string(y) + ": halo cover " + yes_no(r.halo_cover) + ", oracle " + yes_no(r.oracle) +
                                 (r.witness ? ", witness " + r.witness->text() : ""));
    return r;
  };
  if (t.kind() == TopSpace::Kind::Finite) {
    const auto& points = doc.carrier->named();
    if (points.size() > 12) not_applicable("semi-robinson", "subset enumeration limited to 12 points");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << points.size()); ++mask) {
      std::vector<PointLabel> ys;
      for (std::size_t k = 0; k < points.size(); ++k)
        if (mask >> k & 1) ys.push_back(points[k]);
      run(SymbolicSet::of(doc.carrier, ys));
    }
    out.note("all " + std::to_string(std::uint64_t{1} << points.size()) + " subsets");
    return;
  }
  const auto& carrier = doc.carrier;
  std::bernoulli_distribution coin(0.5);
  auto random_named = [&] {
    std::vector<PointLabel> ys;
    for (const auto& x : borel.named_points())
      if (coin(rng)) ys.push_back(x);
    return ys;
  };
  std::vector<PointLabel> extras = carrier->named();

  std::vector<Subset> finite = {SymbolicSet::empty(carrier), SymbolicSet::of(carrier, {PointLabel::natural(1), PointLabel::natural(2)})};
  std::vector<Subset> cofinite = {SymbolicSet::all(carrier)};
  std::vector<Subset> pattern = {evens(carrier), make_periodic(carrier, 2, {0}, extras), make_periodic(carrier, 2, {1}, extras)};
  if (t.limit()) cofinite.push_back(SymbolicSet::co(carrier, {*t.limit()}));
  for (int k = 0; k < 10; ++k) {
    finite.push_back(SymbolicSet::of(carrier, random_named()));
    cofinite.push_back(SymbolicSet::co(carrier, random_named()));
    std::vector<std::uint64_t> residues;
    for (std::uint64_t r = 0; r < 3; ++r)
      if (coin(rng)) residues.push_back(r);
    pattern.push_back(make_periodic(carrier, 3, residues, coin(rng) ? extras : std::vector<PointLabel>{}));
  }
  auto family = [&](const std::string& name, const std::vector<Subset>& ys) {
    std::size_t compact = 0;
    for (const auto& y : ys) compact += run(y).halo_cover ? 1 : 0;
    out.note(name + ": " + std::to_string(ys.size()) + " cases, " + std::to_string(compact) + " compact");
  };
  family("finite", finite);
  family("cofinite", cofinite);
  family("pattern", pattern);
  if (t.limit()) {
    const auto r = run(SymbolicSet::co(carrier, {*t.limit()}));
    out.require(r.witness == kFreePoint, "the naturals should be non-compact with the free point as witness");
    out.note("Y = naturals: witness " + (r.witness ? r.witness->text() : std::string("none")));
  }
  if (t.kind() == TopSpace::Kind::CofiniteNat) out.note("cofinite topology: verdicts informational only");
}

// ----------------------------------------------------------------- measures

std::vector<Measure> sample_measures(const ModelDocument& doc, const Model& model, Rng& rng) {
  std::vector<Measure> out;
  if (doc.measure) out.push_back(*doc.measure);
  for (int k = 0; k < 20; ++k) out.push_back(random_measure(model, rng));
  if (doc.carrier->is_infinite()) out.emplace_back(doc.carrier, std::map<PointLabel, Rational>{}, Rational(1));
  return out;
}

void meas_ext(const ModelDocument& doc, Rng& rng, Outcome& out) {
  const Model model = doc.model();
  const Spectrum sp = spectrum_of(model);
  const auto measures = sample_measures(doc, model, rng);
  for (const auto& mu : measures) {
    const auto r = verify_lift(sp, mu, rng);
    out.require(r.all(), "mu = " + mu.to_string() + ": " + r.counterexample.value_or("lift check failed"));
  }
  out.note(std::to_string(measures.size()) + " measures, 100 members and 50 simple functions each");
  if (doc.measure) out.note("document measure lifts to " + lift(sp, *doc.measure).to_string());
}

void meas_shift(const ModelDocument& doc, Rng& rng, Outcome& out) {
  const Model model = doc.model();
  if (!model.has_singletons()) not_applicable("meas-shift", "the algebra does not contain every singleton");
  const Spectrum sp = spectrum_of(model);
  const auto measures = sample_measures(doc, model, rng);
  for (const auto& mu : measures) {
    const auto r = check_support_shift(sp, mu);
    out.require(r.all(), "mu = " + mu.to_string() + ": " + r.counterexample.value_or("support check failed"));
    if (mu.atomic().empty() && sgn(mu.diffuse()) > 0)
      out.require(r.support.size() == 1 && r.support.front().is_free(), "purely diffuse support is not the free point");
  }
  out.note(std::to_string(measures.size()) + " measures: support meets X exactly in the mass points");
}

void supp_corollary(const ModelDocument& doc, Rng& rng, Outcome& out) {
  const Model model = doc.model();
  if (!model.has_singletons()) not_applicable("supp-corollary", "the algebra does not contain every singleton");
  const Spectrum sp = spectrum_of(model);
  auto measures = sample_measures(doc, model, rng);
  if (model.kind() == ModelKind::FiniteCofinite) {
    std::map<PointLabel, Rational> evens_mass;
    for (std::uint64_t n = 0; n < 8; n += 2) evens_mass.emplace(PointLabel::natural(n), Rational(1, 8));
    measures.emplace_back(doc.carrier, evens_mass, Rational(1, 2));
  }
  std::size_t excluded = 0;
  for (const auto& mu : measures) {
    const auto supp = support(sp, lift(sp, mu));
    for (const auto& x : model.named_points()) {
      const bool in = std::any_of(supp.begin(), supp.end(), [&](const SpectrumPoint& s) { return s.label == x; });
      out.require(in == (sgn(mu.mass_at(x)) > 0), "Principal(" + x.text() + ") support membership is wrong for " + mu.to_string());
      excluded += in ? 0 : 1;
    }
  }
  out.note(std::to_string(measures.size()) + " measures; " + std::to_string(excluded) +
           " zero-mass points confirmed outside the support");
}

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = {
      {{"quasi-norm-axioms", "subadditive, homogeneous, involutive and submultiplicative on random pairs"}, quasi_norm_axioms},
      {{"cts-hom", "a character is continuous iff |alpha(a)| <= rho(a) for every a"}, cts_hom},
      {{"unit-cmpt", "a unital algebra has a compact spectrum, witnessed by the unit"}, unit_cmpt},
      {{"non-unital", "the unitization adds exactly one character, (a, lambda) -> lambda"}, non_unital},
      {{"jst-bndd", "X_rho is dense in the spectrum iff D* is finite"}, jst_bndd},
      {{"img-of-meas", "the closure of a member E in the spectrum is tilde(E)"}, img_of_meas},
      {{"mcmpt-1", "each tilde(E) is clopen"}, mcmpt<1>},
      {{"mcmpt-2", "the clopen sets form a basis"}, mcmpt<2>},
      {{"mcmpt-3", "X is open, dense and discrete in the spectrum"}, mcmpt<3>},
      {{"mcmpt-4", "a subset of X is closed in the spectrum iff it is finite"}, mcmpt<4>},
      {{"not-metrizable", "indicators of disjoint members stay at distance 1, so the spectrum is not separable"}, not_metrizable},
      {{"complete-iff-extdisc", "the algebra is complete iff the spectrum is extremely disconnected"}, complete_iff_extdisc},
      {{"cntbly-gen-note", "the Borel algebra is countably generated"}, cntbly_gen_note},
      {{"meas-fuc-alg", "level sets are Borel iff the induced point map is measurable"}, meas_fuc_alg},
      {{"meas-ext", "the lifted measure satisfies *mu(tilde E) = mu(E)"}, meas_ext},
      {{"meas-shift", "the support of the lifted measure meets X exactly in the atoms"}, meas_shift},
      {{"supp-corollary", "points of zero mass are outside the support"}, supp_corollary},
      {{"open-halos", "h(x) is open iff {x} is open; halos of distinct points are disjoint"}, open_halos},
      {{"semi-robinson", "Y is compact iff its closure is covered by the halos of its points"}, semi_robinson},
  };
  return table;
}

std::uint64_t seed_for(std::uint64_t seed, std::string_view id) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : id) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return seed ^ h;
}

}  // namespace

const std::vector<CheckInfo>& check_registry() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> v;
    for (const auto& e : entries()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

CheckReport run_check(std::string_view id, const ModelDocument& doc) {
  const auto& table = entries();
  auto it = std::find_if(table.begin(), table.end(), [&](const Entry& e) { return e.info.id == id; });
  if (it == table.end()) throw Error(ErrorKind::InvalidArgument, "unknown check '" + std::string(id) + "'");
  Rng rng(seed_for(doc.seed, id));
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    it->routine(doc, rng, out);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotApplicable) throw;
    out.require(false, e.what());
  }
  CheckReport r;
  r.id = std::string(id);
  r.model = doc.name;
  r.status = out.failed ? CheckStatus::Fail : CheckStatus::Pass;
  r.log = std::move(out.log);
  r.counterexample = std::move(out.counterexample);
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CheckReport> run_all(const ModelDocument& doc) {
  std::vector<CheckReport> out;
  for (const auto& info : check_registry()) {
    try {
      out.push_back(run_check(info.id, doc));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotApplicable) throw;
      CheckReport r;
      r.id = std::string(info.id);
      r.model = doc.name;
      r.status = CheckStatus::Skip;
      r.log.push_back(e.what());
      out.push_back(std::move(r));
    }
  }
  return out;
}

bool any_failed(const std::vector<CheckReport>& reports) {
  return std::any_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.status == CheckStatus::Fail; });
}

std::string to_text(const std::vector<CheckReport>& reports) {
  std::ostringstream os;
  for (const auto& r : reports) {
    os << to_string(r.status) << " " << r.id << " [" << r.model << "]";
    if (r.status != CheckStatus::Skip) os << " " << static_cast<long>(r.elapsed_ms) << " ms";
    os << "\n";
    for (const auto& line : r.log) os << "    " << line << "\n";
    if (r.counterexample) os << "    counterexample: " << *r.counterexample << "\n";
  }
  return os.str();
}

std::string to_json(const std::vector<CheckReport>& reports) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json j;
    j["id"] = r.id;
    j["model"] = r.model;
    j["status"] = std::string(to_string(r.status));
    j["log"] = r.log;
    j["counterexample"] = r.counterexample ? nlohmann::json(*r.counterexample) : nlohmann::json(nullptr);
    j["elapsed_ms"] = r.elapsed_ms;
    out.push_back(std::move(j));
  }
  return out.dump(2) + "\n";
}

}  // namespace xisigma
