#pragma once

#include <optional>
#include <string>
#include <vector>

#include "xisigma/algebra.hpp"
#include "xisigma/functions.hpp"

namespace xisigma {

/// A point of the spectrum of the bounded measurable functions, viewed as an
/// ultrafilter of the algebra.
struct SpectrumPoint {
  enum class Kind { Principal, FreeCofinite, FreeCocountable };

  Kind kind = Kind::Principal;
  /// Principal: the carrier point (an atom representative on finite models).
  /// Free: kFreePoint.
  PointLabel label;

  bool is_free() const { return kind != Kind::Principal; }
  std::string to_string() const;
  friend bool operator==(const SpectrumPoint&, const SpectrumPoint&) = default;
};

/// The spectrum of a supported model, itself stored as a carrier of the same
/// symbolic kind: the named points (atom representatives on finite models)
/// plus, on infinite models, the free point. Clopen and closed sets are then
/// ordinary Subsets of `space()`.
///
/// Finite-cofinite on a nat carrier gives the one-point compactification
/// (naturals plus one free point). Countable/co-countable gives the named
/// principals, the free point, and an unnamed-principal remainder that is
/// carried as the generic part of the space and never enumerated.
class Spectrum {
 public:
  const Model& model() const { return model_; }
  const CarrierPtr& space() const { return space_; }
  /// Enumerated points: every principal point of a finite model; named
  /// principals plus the free point otherwise.
  const std::vector<SpectrumPoint>& points() const { return points_; }
  std::optional<SpectrumPoint> free_point() const;
  /// Principal points exist that are not enumerated.
  bool has_unnamed_principals() const { return model_.kind() != ModelKind::FiniteExplicit; }

  SpectrumPoint point_at(const PointLabel& label) const;
  /// Ultrafilter membership: does the point's ultrafilter contain E?
  bool ultrafilter_contains(const SpectrumPoint& s, const SymbolicSet& e) const;

 private:
  friend Spectrum spectrum_of(const Model& model);

  Spectrum(Model model, CarrierPtr space, std::vector<SpectrumPoint> points)
      : model_(std::move(model)), space_(std::move(space)), points_(std::move(points)) {}

  Model model_;
  CarrierPtr space_;
  std::vector<SpectrumPoint> points_;
};

Spectrum spectrum_of(const Model& model);

/// Evaluation embedding x -> Principal(x).
SpectrumPoint embed(const Spectrum& sp, const PointLabel& x);
/// Image of Y ⊆ X under the embedding (not its closure).
Subset embed_set(const Spectrum& sp, const Subset& y);
/// The clopen set of ultrafilters containing E. Throws NotInAlgebra.
SymbolicSet tilde(const Spectrum& sp, const SymbolicSet& e);
/// Smallest closed set containing S (S is a Subset of the space).
Subset closure(const Spectrum& sp, const Subset& s);
bool is_open(const Spectrum& sp, const Subset& s);
bool is_closed(const Spectrum& sp, const Subset& s);
bool is_clopen(const Spectrum& sp, const Subset& s);

struct ExtremalReport {
  bool extremely_disconnected = false;
  /// Open set whose closure is not open, when nameable.
  std::optional<Subset> open_set;
  std::optional<Subset> closure_of_open;
  bool symbolic_witness = false;
  std::string note;
};

ExtremalReport is_extremely_disconnected(const Spectrum& sp);

struct McmptReport {
  bool clopen_images = true;    ///< each tilde(E) is clopen
  bool basis = true;            ///< clopens form a basis
  bool open_dense_discrete = true;
  bool finite_iff_closed = true;
  std::vector<std::string> log;
  std::optional<std::string> counterexample;

  bool all() const { return clopen_images && basis && open_dense_discrete && finite_iff_closed; }
};

/// Checks the four structural properties of X inside its spectrum on sampled
/// members, open sets and subsets Y. The last two need singletons in the
/// algebra; they are reported as passing vacuously otherwise with a log line.
McmptReport check_mcmpt(const Spectrum& sp, Rng& rng, std::size_t member_samples = 100,
                        std::size_t subset_samples = 50);

/// k characteristic functions of pairwise disjoint nonempty members; their
/// pairwise sup-distances are all exactly 1. Throws InsufficientDisjointSets.
std::vector<FnElement> separability_defect(const Model& model, std::size_t k);

/// Graphviz rendering: principal points as circles, the free point as a
/// double circle, embedding edges x -> Principal(x), atoms' clopens as boxes.
std::string to_dot(const Spectrum& sp);
/// Structured listing of points, atoms and their clopen images.
std::string to_listing(const Spectrum& sp);

}  // namespace xisigma
