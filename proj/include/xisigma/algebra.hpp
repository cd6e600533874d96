#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "xisigma/carriers.hpp"

namespace xisigma {

using Rng = std::mt19937_64;

/// Finitely generated Boolean set algebra, stored as its atom partition.
///
/// Atoms are the nonempty cells of the generator membership-vector partition,
/// in canonical order: by least label, with the generic atom (the only Co
/// atom on an infinite carrier) last.
class FiniteAlgebra {
 public:
  const CarrierPtr& carrier() const { return carrier_; }
  const std::vector<SymbolicSet>& generators() const { return generators_; }
  const std::vector<SymbolicSet>& atoms() const { return atoms_; }

  /// Index of the atom containing x.
  std::size_t atom_of(const PointLabel& x) const;
  /// Index of the Co atom, if the carrier is infinite.
  std::optional<std::size_t> generic_atom() const;
  /// Union of the atoms selected by the bit mask (atom k <-> bit k).
  SymbolicSet union_of_atoms(std::uint64_t mask) const;
  /// Every member, one per atom subset. Only for at most 20 atoms.
  std::vector<SymbolicSet> members() const;

 private:
  friend FiniteAlgebra generate_algebra(CarrierPtr carrier, std::vector<SymbolicSet> generators);

  CarrierPtr carrier_;
  std::vector<SymbolicSet> generators_;
  std::vector<SymbolicSet> atoms_;
};

FiniteAlgebra generate_algebra(CarrierPtr carrier, std::vector<SymbolicSet> generators);
/// True iff E is a union of atoms.
bool contains(const FiniteAlgebra& algebra, const SymbolicSet& e);

/// The three algebras whose spectra the engine classifies exactly.
enum class ModelKind {
  FiniteExplicit,        ///< finitely generated algebra on a finite carrier
  FiniteCofinite,        ///< finite/cofinite sets of a nat carrier
  CountableCocountable,  ///< countable/co-countable sets of the uncountable carrier
};

std::string_view to_string(ModelKind kind);

/// An algebra model Σ.
///
/// For the two symbolic kinds every SymbolicSet on the carrier is a member;
/// `algebra()` then holds the finitely generated window used for listing
/// atoms, and `named_points()` the points sampling draws from.
class Model {
 public:
  static Model finite(FiniteAlgebra algebra);
  static Model finite_cofinite(CarrierPtr carrier, std::vector<SymbolicSet> generators, std::size_t window = 8);
  static Model countable_cocountable(CarrierPtr carrier, std::vector<SymbolicSet> generators);

  ModelKind kind() const { return kind_; }
  const CarrierPtr& carrier() const { return algebra_.carrier(); }
  const FiniteAlgebra& algebra() const { return algebra_; }
  const std::vector<PointLabel>& named_points() const { return named_; }

  bool contains(const SymbolicSet& e) const;
  /// Every point of the carrier is its own atom (singletons are members).
  bool has_singletons() const;
  /// Random member drawn from the named points (finite: a union of atoms).
  SymbolicSet sample_member(Rng& rng) const;

 private:
  Model(ModelKind kind, FiniteAlgebra algebra, std::vector<PointLabel> named)
      : kind_(kind), algebra_(std::move(algebra)), named_(std::move(named)) {}

  ModelKind kind_;
  FiniteAlgebra algebra_;
  std::vector<PointLabel> named_;
};

struct CompletenessReport {
  bool complete = false;
  /// Human-readable union of members that escapes the algebra.
  std::optional<std::string> witness;
  /// The witness is a classification argument rather than a nameable set.
  bool symbolic_witness = false;
};

/// Closure under arbitrary unions, decided by model kind.
CompletenessReport is_complete(const Model& model);
/// Ad-hoc algebras: complete on finite carriers, UnsupportedModel otherwise.
CompletenessReport is_complete(const FiniteAlgebra& algebra);

}  // namespace xisigma
