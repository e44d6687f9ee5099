#pragma once

// Finite topological spaces, the Zariski spectrum of an ideal lattice and
// its Hochster dual, and the open-set lattice of a space.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "latspec/lattice.hpp"
#include "latspec/point_set.hpp"

namespace latspec {

/// A finite space given by its complete family of open sets.
class FiniteSpace {
 public:
  /// The empty space.
  FiniteSpace() = default;
  /// Throws ValidationError unless `opens` contains the empty set and the
  /// whole space and is closed under binary union and intersection.
  FiniteSpace(std::vector<std::string> point_names, std::vector<PointSet> opens);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Point p) const { return names_.at(p); }
  std::optional<Point> find(std::string_view name) const;
  PointSet all() const { return PointSet::full(size()); }

  /// Opens in canonical order (by size, then mask).
  const std::vector<PointSet>& opens() const { return opens_; }
  /// Complements of the opens, in canonical order.
  std::vector<PointSet> closed_sets() const;
  bool is_open(PointSet s) const;
  bool is_closed(PointSet s) const;

  /// Smallest closed set containing `s`.
  PointSet closure(PointSet s) const;
  PointSet closure(Point p) const { return closure(PointSet{p}); }
  /// Non-empty and not a union of two proper closed subsets. Only meaningful
  /// for closed `c`.
  bool is_irreducible(PointSet c) const;

  friend bool operator==(const FiniteSpace&, const FiniteSpace&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<PointSet> opens_{PointSet{}};
};

struct SpaceCheck {
  std::string property;
  bool passed = true;
  bool automatic = false;
  std::vector<Point> witness;
  std::string detail;
};

struct SpectralReport {
  std::vector<SpaceCheck> checks;
  bool ok() const;
  const SpaceCheck* first_failure() const;
};

/// T0, quasi-compactness, the intersection-closed quasi-compact basis, and
/// unique generic points for non-empty irreducible closed sets.
SpectralReport verify_spectral(const FiniteSpace& space);
bool is_spectral(const FiniteSpace& space);

/// Opens of the dual are unions of complements of quasi-compact opens.
/// Throws ValidationError for non-spectral input.
FiniteSpace hochster_dual(const FiniteSpace& space);

/// Unique point whose closure is `closed`, or nullopt if there is none or
/// several. Throws ValidationError if `closed` is not closed or not
/// irreducible (witness: points of two proper closed subsets covering it).
std::optional<Point> generic_point(const FiniteSpace& space, PointSet closed);

/// Point map between finite spaces.
struct ContinuousMap {
  FiniteSpace source;
  FiniteSpace target;
  std::vector<Point> map;

  PointSet preimage(PointSet s) const;
  bool is_continuous() const;
  bool is_bijective() const;
  /// Bijective, and preimage induces a bijection of the open families.
  bool is_homeomorphism() const;

  friend bool operator==(const ContinuousMap&, const ContinuousMap&) = default;
};

/// Prime spectrum of a lattice. Point i of both spaces is the prime
/// `primes[i]`; the dual space carries the Hochster-dual topology.
class PrimeSpectrum {
 public:
  explicit PrimeSpectrum(IdealLattice lattice);

  const IdealLattice& lattice() const { return lattice_; }
  const std::vector<Element>& primes() const { return primes_; }
  std::size_t size() const { return primes_.size(); }
  Element prime(Point p) const { return primes_.at(p); }
  std::optional<Point> point_of(Element prime) const;

  const FiniteSpace& zariski() const { return zariski_; }
  const FiniteSpace& dual() const { return dual_; }

  /// Primes above `a` (closed in the Zariski topology).
  PointSet closed_set(Element a) const;
  /// Primes not above `a` (open in the Zariski topology).
  PointSet open_set(Element a) const;
  /// Support {p : a !<= p}, a closed subset of the dual space.
  PointSet supp(Element a) const { return open_set(a); }

 private:
  IdealLattice lattice_;
  std::vector<Element> primes_;
  FiniteSpace zariski_;
  FiniteSpace dual_;
};

/// Spec L with opens {D(a)}.
FiniteSpace zariski_spectrum(const IdealLattice& lattice);
/// Spec* L: Spec L with the Hochster-dual topology.
FiniteSpace support_spectrum(const IdealLattice& lattice);

/// Opens of a space as an ideal lattice with product U.V = U n V. Element i
/// is `opens[i]`.
struct OpenLattice {
  FiniteSpace space;
  IdealLattice lattice;
  std::vector<PointSet> opens;

  std::optional<Element> element_of(PointSet open) const;
};

/// Throws ValidationError for non-spectral input.
OpenLattice open_lattice(const FiniteSpace& space);

/// x -> X \ closure(x), into Spec of the open lattice.
ContinuousMap canonical_homeo(const FiniteSpace& space);

enum class ClassificationKind { closed, open, support };

/// Association between semiprime elements and subsets of the spectrum.
struct ClassificationTable {
  ClassificationKind kind = ClassificationKind::closed;
  std::vector<std::pair<Element, PointSet>> pairs;
};

/// Semiprime a with V(a).
ClassificationTable classify_closed(const PrimeSpectrum& spectrum);
/// Semiprime a with D(a).
ClassificationTable classify_open(const PrimeSpectrum& spectrum);
/// Semiprime a with supp(a) in Spec*.
ClassificationTable classify_supp(const PrimeSpectrum& spectrum);

/// The subset family a table must biject onto: closed sets of Spec L,
/// opens of Spec L, or closed sets of Spec* L.
std::vector<PointSet> classification_targets(const PrimeSpectrum& spectrum, ClassificationKind kind);
/// Inverse assignment: inf Y for closed tables, otherwise the join of all b
/// whose D(b) (resp. supp(b)) lies inside Y.
Element classification_inverse(const PrimeSpectrum& spectrum, ClassificationKind kind, PointSet y);

struct ClassificationReport {
  bool bijective = false;
  bool round_trip = false;
  bool monotone = false;
  std::string detail;
  bool ok() const { return bijective && round_trip && monotone; }
};

/// Re-verifies a table: bijection onto its target family, both round trips,
/// and order reversal (closed) or preservation (open, support).
ClassificationReport verify_classification(const PrimeSpectrum& spectrum, const ClassificationTable& table);

std::string_view to_string(ClassificationKind kind);

}  // namespace latspec
