#pragma once

// Decomposition of semiprime elements along the finest partition of their
// support into unions of closed subsets of Spec* L.

#include <optional>
#include <utility>
#include <vector>

#include "latspec/lattice.hpp"
#include "latspec/point_set.hpp"
#include "latspec/topology.hpp"

namespace latspec {

/// Non-bottom, and a = a1 v a2 forces a1 or a2 to be bottom.
bool is_indecomposable(const IdealLattice& lattice, Element a);
/// Smallest (a1, a2) with both non-bottom and a1 v a2 = a.
std::optional<std::pair<Element, Element>> decomposition_witness(const IdealLattice& lattice, Element a);

/// Finest partition of `y` into non-empty unions of members of `family`
/// (a family closed under intersection). Blocks are connected components of
/// the overlap graph on the smallest family-unions around each point, in
/// order of their least point. Throws ValidationError when `y` is not a
/// union of family members.
std::vector<PointSet> finest_partition(PointSet y, const std::vector<PointSet>& family);

struct Decomposition {
  Element target = 0;
  std::vector<Element> blocks;     // semiprime blocks, ordered by least support point
  std::vector<PointSet> supports;  // supp of each block, a partition of supp(target)
  bool join_matches = false;       // join of blocks == target
  bool supports_disjoint = false;
  bool blocks_semiprime = false;
  /// No block splits into two semiprimes with disjoint non-empty supports.
  bool blocks_indecomposable = false;
  bool bottom_semiprime = false;
  /// Every pairwise meet equals bottom.
  bool meets_bottom = false;
  /// Pairwise meets all equal radical(bottom), which differs from bottom.
  bool meets_radical_only = false;
  /// Empty support: the empty family of blocks.
  bool degenerate = false;
};

/// Throws ValidationError when `a` is not semiprime.
Decomposition decompose_semiprime(const PrimeSpectrum& spectrum, Element a);
Decomposition decompose_semiprime(const IdealLattice& lattice, Element a);

}  // namespace latspec
