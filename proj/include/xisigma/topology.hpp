#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "xisigma/gelfand.hpp"
#include "xisigma/spectrum.hpp"

namespace xisigma {

/// A topology on a carrier.
///
/// Finite: stored through the minimal open neighbourhood U(x) of each point.
/// CofiniteNat: the cofinite topology on a nat carrier. ConvergentSequence:
/// a nat carrier with one extra limit point; every set of naturals is open,
/// and the neighbourhoods of the limit are the cofinite sets containing it.
class TopSpace {
 public:
  enum class Kind { Finite, CofiniteNat, ConvergentSequence };

  /// Validates that `opens` contains ∅ and X and is closed under union and
  /// intersection.
  static TopSpace finite(CarrierPtr carrier, std::vector<SymbolicSet> opens);
  /// U(x) for every x; validated as a preorder (x ∈ U(x), y ∈ U(x) ⇒ U(y) ⊆ U(x)).
  static TopSpace finite_from_neighbourhoods(CarrierPtr carrier, std::vector<SymbolicSet> neighbourhoods);
  static TopSpace cofinite(CarrierPtr carrier);
  static TopSpace convergent_sequence(CarrierPtr carrier, PointLabel limit);

  Kind kind() const { return kind_; }
  const CarrierPtr& carrier() const { return carrier_; }
  const std::optional<PointLabel>& limit() const { return limit_; }
  /// Finite kind: U(x), in carrier order.
  const std::vector<SymbolicSet>& neighbourhoods() const { return neighbourhoods_; }
  const SymbolicSet& minimal_neighbourhood(const PointLabel& x) const;

  bool is_open(const Subset& s) const;
  bool is_hausdorff() const;
  std::string describe() const;

 private:
  TopSpace() = default;

  Kind kind_ = Kind::Finite;
  CarrierPtr carrier_;
  std::optional<PointLabel> limit_;
  std::vector<SymbolicSet> neighbourhoods_;
};

/// Finite: generated by the open sets. Symbolic kinds: the finite-cofinite
/// algebra, with `window` named naturals.
Model borel_algebra(const TopSpace& t, std::size_t window = 8);

/// h(x) ⊆ spectrum of the Borel algebra, in normal form.
SymbolicSet halo(const TopSpace& t, const Spectrum& sp, const PointLabel& x);

struct OpenHaloReport {
  bool halo_open = false;
  bool singleton_open = false;
  /// h(x) ∩ h(y) = ∅ for every other probed point y.
  bool disjoint = true;
  std::optional<PointLabel> overlapping;

  bool holds() const { return halo_open == singleton_open && disjoint; }
};

/// Throws NotHausdorff.
OpenHaloReport check_open_halo(const TopSpace& t, const Spectrum& sp, const PointLabel& x);

struct RobinsonReport {
  bool halo_cover = false;  ///< closure of Y ⊆ ∪ h(y)
  bool oracle = false;      ///< independent compactness verdict
  Subset closure;
  Subset cover;
  /// A point of the closure outside every halo.
  std::optional<PointLabel> witness;
  /// Non-Hausdorff: the verdict is reported, not asserted.
  bool informational = false;
  std::string note;

  bool agree() const { return halo_cover == oracle; }
};

RobinsonReport robinson_check(const TopSpace& t, const Spectrum& sp, const Subset& y);

/// Finite topologies: exhaustive search for a finite subcover of the cover of
/// Y by minimal neighbourhoods, over every subfamily.
bool finite_subcover_exists(const TopSpace& t, const SymbolicSet& y);

struct MeasurabilityReport {
  bool level_sets = true;   ///< every level set of every ιa is Borel
  bool point_map = true;    ///< every fiber of x ↦ (ιa(x))_a is Borel
  std::optional<SymbolicSet> witness;

  bool agree() const { return level_sets == point_map; }
};

/// Finite topologies only (UnsupportedModel otherwise).
MeasurabilityReport measurability_check(const TopSpace& t, const std::vector<FnElement>& images);

/// Calls `visit` with the minimal-neighbourhood masks (bit y of mask x set
/// iff y ∈ U(x)) of every topology on n labelled points. n ≤ 8.
void for_each_finite_topology(std::size_t n, const std::function<void(const std::vector<std::uint32_t>&)>& visit);

}  // namespace xisigma
