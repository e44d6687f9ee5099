#pragma once

// Instance generators: ideal lattices of finite semirings, divisor lattices
// of Z/n, closure sublattices, and thick-ideal lattices of a tensor semiring
// together with the translation between object-level and ideal-level
// support data.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latspec/adjunction.hpp"
#include "latspec/lattice.hpp"
#include "latspec/topology.hpp"

namespace latspec {

using SemiringElement = std::size_t;
using SemiringTable = std::vector<std::vector<SemiringElement>>;

/// Finite semiring given by addition and multiplication tables.
struct FiniteSemiring {
  std::vector<std::string> names;
  SemiringTable add;
  SemiringTable mul;
  SemiringElement zero = 0;
  SemiringElement one = 0;

  std::size_t size() const { return names.size(); }
  bool is_commutative() const;
};

/// Additive monoid, multiplicative monoid, two-sided distributivity.
Verdict verify_semiring(const FiniteSemiring& semiring);

/// Z/n with modular arithmetic; elements named "0" .. "n-1".
FiniteSemiring residue_semiring(std::size_t n);

/// Largest semiring accepted by `semiring_ideal_lattice`.
inline constexpr std::size_t kMaxSemiringSize = 64;

/// Ideal as a membership mask over the semiring elements.
using SemiringIdeal = std::vector<bool>;

/// Smallest ideal containing `generators`: contains zero, closed under
/// addition and under multiplication by arbitrary elements on either side.
SemiringIdeal generate_ideal(const FiniteSemiring& semiring, const std::vector<SemiringElement>& generators);

struct SemiringIdealLattice {
  IdealLattice lattice;
  std::vector<SemiringIdeal> ideals;  // element i of the lattice

  std::optional<Element> element_of(const SemiringIdeal& ideal) const;
  /// The principal ideal generated by x, as a lattice element.
  Element principal(SemiringElement x) const;
};

/// All ideals ordered by inclusion with IJ the ideal generated by the
/// products xy (x in I, y in J). Ideals are found as joins of principal
/// ideals, sorted by size then membership. Throws ValidationError for an
/// invalid semiring or an ideal product violating the lattice axioms, and
/// Error above kMaxSemiringSize elements.
SemiringIdealLattice semiring_ideal_lattice(const FiniteSemiring& semiring);

/// Divisors d of n (ascending, named by value) standing for dZ/n, with
/// d <= e iff e divides d and product gcd(de, n). Throws for n == 0.
IdealLattice divisor_lattice(std::size_t n);

/// Subset of a lattice meant to satisfy the meet, directed-join and
/// projection-compatibility conditions.
struct ClosureSystem {
  IdealLattice carrier;
  std::vector<Element> members;
};

struct ClosureReport {
  Verdict meets;       // closed under meets, including the empty meet
  Verdict directed;    // closed under joins of member chains
  Verdict projection;  // pi(a pi(b)) = pi(ab) = pi(pi(a) b)
  bool ok() const { return meets.ok && directed.ok && projection.ok; }
};

ClosureReport verify_closure_system(const ClosureSystem& cs);

/// pi(a): meet of the members above a.
Element closure_projection(const ClosureSystem& cs, Element a);

struct ClosureSublattice {
  IdealLattice lattice;
  std::vector<Element> members;     // sublattice element i -> carrier element
  std::vector<Element> projection;  // carrier element -> sublattice element
};

/// Members with the induced order and product a.b = pi(ab). Throws
/// ValidationError when a closure condition fails.
ClosureSublattice closure_sublattice(const ClosureSystem& cs);

/// Semiprime elements of a lattice, as a closure system.
ClosureSystem semiprime_closure_system(const IdealLattice& lattice);

struct ThickLattice {
  FiniteSemiring semiring;
  SemiringIdealLattice ideals;
  ClosureSublattice thick;
  std::vector<Element> generator;  // x -> <x> in the thick lattice

  const IdealLattice& lattice() const { return thick.lattice; }
};

/// Thick tensor ideals of a tensor semiring, modelled as the closure
/// sublattice of `thick_members` (elements of the semiring's ideal lattice).
ThickLattice tensor_semiring_thick_lattice(const FiniteSemiring& semiring, const std::vector<Element>& thick_members);

/// Same with `thick_members` chosen by a predicate on the ideal lattice.
template <typename Pred>
ThickLattice tensor_semiring_thick_lattice_if(const FiniteSemiring& semiring, Pred pred) {
  const auto ideals = semiring_ideal_lattice(semiring);
  std::vector<Element> members;
  for (Element a = 0; a < ideals.lattice.size(); ++a)
    if (pred(ideals.lattice, a)) members.push_back(a);
  return tensor_semiring_thick_lattice(semiring, members);
}

/// First (x, y) with <x + y> != <x> v <y>, if any.
std::optional<std::pair<SemiringElement, SemiringElement>> generator_additivity_witness(const ThickLattice& t);

/// Object-level support: a closed set per semiring element.
struct ObjectSupport {
  FiniteSpace space;
  std::vector<PointSet> tau;
};

/// tau(x) = union of tau(x') over x' in <x>, tau(0) = {}, tau(x + y) =
/// tau(x) u tau(y), tau(one) = X, tau(xy) = tau(x) n tau(y); values closed.
Verdict verify_object_support(const ThickLattice& t, const ObjectSupport& s);

/// sigma(<x>) = tau(x), extended to every thick ideal as the union over its
/// members. Throws ValidationError if tau is invalid or generators of the
/// same ideal disagree, or if the resulting sigma is not a support datum.
SupportDatum sigma_from_tau(const ThickLattice& t, const ObjectSupport& s);

/// tau(x) = sigma(<x>). Throws ValidationError if sigma is not a support
/// datum on the thick lattice or tau fails its axioms.
ObjectSupport tau_from_sigma(const ThickLattice& t, const SupportDatum& d);

}  // namespace latspec
