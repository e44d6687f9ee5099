#pragma once

// Finite ideal lattices: ordered sets with a join-distributive product whose
// unit is the top element. Everything here is finite, so every element is
// compact and the compact-generation conditions hold automatically.

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "latspec/errors.hpp"

namespace latspec {

using Element = std::size_t;
using OrderMatrix = std::vector<std::vector<bool>>;
using ProductTable = std::vector<std::vector<Element>>;

/// Unchecked lattice description, as read from a file or produced by a
/// generator. `order` must already be reflexive-transitively closed; see
/// `close_order`.
struct LatticeData {
  std::vector<std::string> names;
  OrderMatrix order;
  ProductTable mul;
  Element top = 0;
  Element bottom = 0;

  std::size_t size() const { return names.size(); }
};

/// Reflexive-transitive closure of a relation given as (smaller, larger) pairs.
OrderMatrix close_order(std::size_t n, std::span<const std::pair<Element, Element>> pairs);

enum class CheckStatus { pass, fail, skipped };

/// Outcome of one axiom.  `automatic` marks conditions that hold for every
/// finite instance once the lattice condition holds.
struct AxiomCheck {
  std::string axiom;
  CheckStatus status = CheckStatus::pass;
  bool automatic = false;
  std::vector<Element> witness;
  std::string detail;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;

  bool ok() const;
  const AxiomCheck* first_failure() const;
};

/// Checks, in order: partial order, (L1) joins and meets, declared top and
/// bottom, (L2), associativity, (L3), (L4), annihilation by bottom, (L5).
AxiomReport verify_axioms(const LatticeData& data);

/// Immutable, validated ideal lattice. Copies share the underlying tables.
class IdealLattice {
 public:
  /// Validates `data` and throws ValidationError carrying the first failing
  /// axiom and its witness.
  static IdealLattice build(LatticeData data);

  std::size_t size() const;
  const std::string& name(Element a) const;
  const std::vector<std::string>& names() const;
  std::optional<Element> find(std::string_view name) const;
  /// Like find, but throws ValidationError for unknown names.
  Element at(std::string_view name) const;

  Element top() const;
  Element bottom() const;
  bool leq(Element a, Element b) const;
  Element mul(Element a, Element b) const;
  Element join(Element a, Element b) const;
  Element meet(Element a, Element b) const;
  /// Supremum of a set; the empty join is bottom.
  Element join(std::span<const Element> set) const;
  /// Infimum of a set; the empty meet is top.
  Element meet(std::span<const Element> set) const;
  /// Every element of a finite lattice is compact.
  bool is_compact(Element) const { return true; }

  const LatticeData& data() const;

  friend bool operator==(const IdealLattice& a, const IdealLattice& b);

 private:
  struct Impl;
  explicit IdealLattice(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

AxiomReport verify_axioms(const IdealLattice& lattice);

bool is_prime(const IdealLattice& lattice, Element p);
/// Smallest (a, b) with ab <= p but neither a <= p nor b <= p.
std::optional<std::pair<Element, Element>> prime_witness(const IdealLattice& lattice, Element p);
/// Primality tested over pairs of compact elements only.
bool is_prime_on_compacts(const IdealLattice& lattice, Element p);
/// Prime elements in index order.
std::vector<Element> spec_set(const IdealLattice& lattice);

bool is_semiprime(const IdealLattice& lattice, Element a);
/// Meet of all primes above `a`.
Element radical(const IdealLattice& lattice, Element a);
/// Primes above `a`.
std::vector<Element> v_set(const IdealLattice& lattice, Element a);
/// Primes not above `a`.
std::vector<Element> d_set(const IdealLattice& lattice, Element a);

/// Returns a prime p with a <= p avoiding every member of `avoid`, chosen as
/// the lowest-indexed maximal element of {x : a <= x, s !<= x for all s}.
/// Returns nullopt when some member of `avoid` lies below `a`. Throws
/// ValidationError when `avoid` is empty or not closed under the product.
std::optional<Element> prime_avoidance(const IdealLattice& lattice, Element a,
                                       std::span<const Element> avoid);

/// A finite poset, used as input to the ideal completion.
struct FinitePoset {
  std::vector<std::string> names;
  OrderMatrix order;

  std::size_t size() const { return names.size(); }
};

/// Lattice of ideals of a poset with finite joins, ordered by inclusion.
struct Completion {
  std::vector<std::vector<Element>> ideals;  // sorted member lists
  FinitePoset lattice;                       // ideals ordered by inclusion
  std::vector<std::size_t> embedding;        // a -> index of I(a)
  std::vector<std::size_t> compact;          // indices of principal ideals
};

/// Enumerates every ideal (non-empty, down-closed, join-closed subset) of `poset`.
/// Throws ValidationError if the order is not partial or a finite join is
/// missing, and Error for posets with more than 24 elements.
Completion ideal_completion(const FinitePoset& poset);

}  // namespace latspec
