#pragma once

// Lattice morphisms, spectrum and support data, their universal maps, and
// the adjunction between Spec and the open-set lattice.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latspec/lattice.hpp"
#include "latspec/topology.hpp"

namespace latspec {

/// Default cap on the number of point maps enumerated by uniqueness checks.
inline constexpr std::uint64_t kDefaultMaxEnum = 1'000'000;

/// Pass/fail with the first failing condition and its witness.
struct Verdict {
  bool ok = true;
  std::string check;
  std::vector<std::size_t> witness;
  std::string detail;

  static Verdict fail(std::string check, std::vector<std::size_t> witness, std::string detail) {
    return {false, std::move(check), std::move(witness), std::move(detail)};
  }
  /// Throws ValidationError when not ok.
  void require() const;
};

struct LatticeMorphism {
  IdealLattice source;
  IdealLattice target;
  std::vector<Element> map;

  Element operator()(Element a) const { return map.at(a); }
  friend bool operator==(const LatticeMorphism&, const LatticeMorphism&) = default;
};

/// Join preservation (empty and binary joins, which give every finite join),
/// unit preservation, and multiplicativity.
Verdict verify_morphism(const LatticeMorphism& phi);

/// Spec(target) -> Spec(source), p -> sup{a : phi(a) <= p}.
ContinuousMap spec_of_morphism(const LatticeMorphism& phi);

/// Assignment of opens: delta(join A) = union, delta(1) = X, delta(ab) = intersection.
struct SpectrumDatum {
  IdealLattice lattice;
  FiniteSpace space;
  std::vector<PointSet> delta;
};

/// Assignment of closed sets: sigma(0) = {}, sigma(a v b) = union,
/// sigma(1) = X, sigma(ab) = intersection. Every element of a finite lattice
/// is compact, so `sigma` is the compact restriction itself.
struct SupportDatum {
  IdealLattice lattice;
  FiniteSpace space;
  std::vector<PointSet> sigma;
};

Verdict verify_datum(const SpectrumDatum& d);
Verdict verify_datum(const SupportDatum& d);

/// (Spec L, D) and (Spec* L, supp).
SpectrumDatum canonical_spectrum_datum(const IdealLattice& lattice);
SupportDatum canonical_support_datum(const IdealLattice& lattice);

/// x -> join{c : x not in delta(c)}, into the Zariski spectrum.
ContinuousMap universal_spectrum_map(const SpectrumDatum& d);
/// x -> join{c : x not in sigma(c)}, into Spec* L.
ContinuousMap universal_support_map(const SupportDatum& d);

struct UniquenessReport {
  bool skipped = false;
  std::uint64_t candidates = 0;  // |Spec|^|X|
  std::uint64_t solutions = 0;   // maps satisfying the preimage identity
};

/// Counts every point map X -> Spec L with delta(a) = f^-1(D(a)) for all a.
/// Skipped when there are more than `max_enum` candidate maps.
UniquenessReport count_spectrum_solutions(const SpectrumDatum& d, std::uint64_t max_enum = kDefaultMaxEnum);
/// Same for sigma(a) = f^-1(supp(a)).
UniquenessReport count_support_solutions(const SupportDatum& d, std::uint64_t max_enum = kDefaultMaxEnum);

/// Hom(L, L_open(X)) -> Hom(X, Spec L): x -> join{c : x not in phi(c)}.
/// `phi.target` must be `opens.lattice`, and the space must be spectral.
ContinuousMap sigma_adjunct(const LatticeMorphism& phi, const OpenLattice& opens);
/// Hom(X, Spec L) -> Hom(L, L_open(X)): a -> f^-1(D(a)).
LatticeMorphism lambda_adjunct(const ContinuousMap& f, const PrimeSpectrum& spectrum);

struct ClassifyingReport {
  ContinuousMap comparison;  // universal map to Spec* L
  bool homeomorphism = false;
  bool bijection = false;    // semiprimes <-> unions of closed subsets
};

/// Both classifying criteria. Throws ValidationError for an invalid datum or
/// a non-spectral space, and std::logic_error if the criteria disagree.
ClassifyingReport classifying_report(const SupportDatum& d);
bool is_classifying(const SupportDatum& d);

struct SupportMorphismReport {
  bool continuous = false;
  bool is_morphism = false;
  std::optional<Element> witness;  // first a with sigma(a) != f^-1(sigma'(a))
  bool both_classifying = false;
  bool homeomorphism = false;
  /// A morphism between classifying data that is not a homeomorphism.
  bool contradiction = false;
};

/// Throws ValidationError when the data live on different lattices or `f`
/// does not run between their spaces.
SupportMorphismReport support_morphism_check(const ContinuousMap& f, const SupportDatum& d,
                                             const SupportDatum& d2);

}  // namespace latspec
