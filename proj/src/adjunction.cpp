#include "latspec/adjunction.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace latspec {

void Verdict::require() const {
  if (!ok) throw ValidationError(check, witness, check + ": " + detail);
}

Verdict verify_morphism(const LatticeMorphism& phi) {
  const auto& src = phi.source;
  const auto& dst = phi.target;
  const std::size_t n = src.size();
  if (phi.map.size() != n) return Verdict::fail("shape", {}, "map does not cover the source lattice");
  for (Element a = 0; a < n; ++a)
    if (phi.map[a] >= dst.size()) return Verdict::fail("shape", {a}, "image outside the target lattice");

  if (phi(src.bottom()) != dst.bottom())
    return Verdict::fail("joins", {src.bottom()}, "bottom is not sent to bottom (empty join)");
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (phi(src.join(a, b)) != dst.join(phi(a), phi(b)))
        return Verdict::fail("joins", {a, b},
                             "phi(" + src.name(a) + " v " + src.name(b) + ") != phi(a) v phi(b)");
  if (phi(src.top()) != dst.top()) return Verdict::fail("unit", {src.top()}, "top is not sent to top");
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (phi(src.mul(a, b)) != dst.mul(phi(a), phi(b)))
        return Verdict::fail("product", {a, b},
                             "phi(" + src.name(a) + "*" + src.name(b) + ") != phi(a)phi(b)");
  return {};
}

ContinuousMap spec_of_morphism(const LatticeMorphism& phi) {
  verify_morphism(phi).require();
  const PrimeSpectrum from(phi.target);
  const PrimeSpectrum to(phi.source);
  ContinuousMap f{from.zariski(), to.zariski(), {}};
  for (Element p : from.primes()) {
    std::vector<Element> below;
    for (Element a = 0; a < phi.source.size(); ++a)
      if (phi.target.leq(phi(a), p)) below.push_back(a);
    const auto q = to.point_of(phi.source.join(below));
    if (!q) throw std::logic_error("pullback of a prime is not prime");
    f.map.push_back(*q);
  }
  return f;
}

namespace {

// Shared checks for spectrum data (opens) and support data (closed sets).
Verdict verify_assignment(const IdealLattice& lat, const FiniteSpace& space, const std::vector<PointSet>& value,
                          bool closed) {
  const std::size_t n = lat.size();
  if (value.size() != n) return Verdict::fail("shape", {}, "assignment does not cover the lattice");
  for (Element a = 0; a < n; ++a) {
    const bool fits = value[a].subset_of(space.all()) && (closed ? space.is_closed(value[a]) : space.is_open(value[a]));
    if (!fits)
      return Verdict::fail(closed ? "closed" : "open", {a},
                           "value at " + lat.name(a) + " is not " + (closed ? "closed" : "open"));
  }
  if (!value[lat.bottom()].empty())
    return Verdict::fail("joins", {lat.bottom()}, "value at bottom must be empty (empty join)");
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (value[lat.join(a, b)] != (value[a] | value[b]))
        return Verdict::fail("joins", {a, b},
                             "value at " + lat.name(a) + " v " + lat.name(b) + " is not the union");
  if (value[lat.top()] != space.all())
    return Verdict::fail("unit", {lat.top()}, "value at top must be the whole space");
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (value[lat.mul(a, b)] != (value[a] & value[b]))
        return Verdict::fail("product", {a, b},
                             "value at " + lat.name(a) + "*" + lat.name(b) + " is not the intersection");
  return {};
}

ContinuousMap universal_map(const IdealLattice& lat, const FiniteSpace& space, const std::vector<PointSet>& value,
                            const PrimeSpectrum& spectrum, const FiniteSpace& target) {
  ContinuousMap f{space, target, {}};
  for (Point x = 0; x < space.size(); ++x) {
    std::vector<Element> missing;
    for (Element c = 0; c < lat.size(); ++c)
      if (!value[c].contains(x)) missing.push_back(c);
    const auto p = spectrum.point_of(lat.join(missing));
    if (!p) throw std::logic_error("universal map produced a non-prime element");
    f.map.push_back(*p);
  }
  return f;
}

template <typename SetOf>
UniquenessReport count_solutions(const IdealLattice& lat, const FiniteSpace& space,
                                 const std::vector<PointSet>& value, std::uint64_t max_enum, SetOf set_of) {
  const PrimeSpectrum spectrum(lat);
  UniquenessReport r;
  const std::uint64_t base = spectrum.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (base != 0 && total > max_enum / std::max<std::uint64_t>(base, 1)) {
      r.skipped = true;
      return r;
    }
    total *= base;
  }
  if (total > max_enum) {
    r.skipped = true;
    return r;
  }
  r.candidates = total;
  std::vector<Point> map(space.size(), 0);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (auto& y : map) {
      y = static_cast<Point>(c % base);
      c /= base;
    }
    bool good = true;
    for (Element a = 0; a < lat.size() && good; ++a) {
      const PointSet target = set_of(spectrum, a);
      PointSet pre;
      for (Point x = 0; x < map.size(); ++x)
        if (target.contains(map[x])) pre.insert(x);
      good = pre == value[a];
    }
    if (good) ++r.solutions;
  }
  return r;
}

}  // namespace

Verdict verify_datum(const SpectrumDatum& d) { return verify_assignment(d.lattice, d.space, d.delta, false); }
Verdict verify_datum(const SupportDatum& d) { return verify_assignment(d.lattice, d.space, d.sigma, true); }

SpectrumDatum canonical_spectrum_datum(const IdealLattice& lattice) {
  const PrimeSpectrum spec(lattice);
  SpectrumDatum d{lattice, spec.zariski(), {}};
  for (Element a = 0; a < lattice.size(); ++a) d.delta.push_back(spec.open_set(a));
  return d;
}

SupportDatum canonical_support_datum(const IdealLattice& lattice) {
  const PrimeSpectrum spec(lattice);
  SupportDatum d{lattice, spec.dual(), {}};
  for (Element a = 0; a < lattice.size(); ++a) d.sigma.push_back(spec.supp(a));
  return d;
}

ContinuousMap universal_spectrum_map(const SpectrumDatum& d) {
  verify_datum(d).require();
  const PrimeSpectrum spec(d.lattice);
  return universal_map(d.lattice, d.space, d.delta, spec, spec.zariski());
}

ContinuousMap universal_support_map(const SupportDatum& d) {
  verify_datum(d).require();
  const PrimeSpectrum spec(d.lattice);
  return universal_map(d.lattice, d.space, d.sigma, spec, spec.dual());
}

UniquenessReport count_spectrum_solutions(const SpectrumDatum& d, std::uint64_t max_enum) {
  return count_solutions(d.lattice, d.space, d.delta, max_enum,
                         [](const PrimeSpectrum& s, Element a) { return s.open_set(a); });
}

UniquenessReport count_support_solutions(const SupportDatum& d, std::uint64_t max_enum) {
  return count_solutions(d.lattice, d.space, d.sigma, max_enum,
                         [](const PrimeSpectrum& s, Element a) { return s.supp(a); });
}

ContinuousMap sigma_adjunct(const LatticeMorphism& phi, const OpenLattice& opens) {
  if (!(phi.target == opens.lattice))
    throw ValidationError("target", {}, "morphism does not land in the given open lattice");
  verify_morphism(phi).require();
  SpectrumDatum d{phi.source, opens.space, {}};
  for (Element a = 0; a < phi.source.size(); ++a) d.delta.push_back(opens.opens[phi(a)]);
  return universal_spectrum_map(d);
}

LatticeMorphism lambda_adjunct(const ContinuousMap& f, const PrimeSpectrum& spectrum) {
  if (!(f.target == spectrum.zariski()))
    throw ValidationError("target", {}, "map does not land in the Zariski spectrum");
  if (!f.is_continuous()) throw ValidationError("continuity", {}, "map is not continuous");
  const OpenLattice opens = open_lattice(f.source);
  LatticeMorphism phi{spectrum.lattice(), opens.lattice, {}};
  for (Element a = 0; a < spectrum.lattice().size(); ++a)
    phi.map.push_back(*opens.element_of(f.preimage(spectrum.open_set(a))));
  return phi;
}

ClassifyingReport classifying_report(const SupportDatum& d) {
  verify_datum(d).require();
  if (const auto report = verify_spectral(d.space); !report.ok()) {
    const SpaceCheck* bad = report.first_failure();
    throw ValidationError(bad->property, bad->witness, "support space is not spectral: " + bad->detail);
  }
  ClassifyingReport r{universal_support_map(d), false, false};
  r.homeomorphism = r.comparison.is_homeomorphism();

  // Second criterion: a -> union of sigma(b), b <= a, against Y -> join of
  // the b with sigma(b) inside Y, between semiprimes and unions of closed sets.
  const auto& lat = d.lattice;
  std::set<PointSet> unions{PointSet{}};
  for (const PointSet& c : d.space.closed_sets()) {
    std::vector<PointSet> grown;
    for (const PointSet& y : unions) grown.push_back(y | c);
    unions.insert(grown.begin(), grown.end());
  }
  auto forward = [&](Element a) {
    PointSet acc;
    for (Element b = 0; b < lat.size(); ++b)
      if (lat.leq(b, a)) acc |= d.sigma[b];
    return acc;
  };
  auto backward = [&](PointSet y) {
    std::vector<Element> inside;
    for (Element b = 0; b < lat.size(); ++b)
      if (d.sigma[b].subset_of(y)) inside.push_back(b);
    return lat.join(inside);
  };
  std::set<PointSet> image;
  bool ok = true;
  std::size_t semiprimes = 0;
  for (Element a = 0; a < lat.size() && ok; ++a) {
    if (!is_semiprime(lat, a)) continue;
    ++semiprimes;
    const PointSet y = forward(a);
    image.insert(y);
    ok = backward(y) == a;
  }
  for (const PointSet& y : unions) {
    if (!ok) break;
    const Element a = backward(y);
    ok = is_semiprime(lat, a) && forward(a) == y;
  }
  r.bijection = ok && image.size() == semiprimes && image == unions;

  if (r.bijection != r.homeomorphism)
    throw std::logic_error("classifying criteria disagree for a valid support datum");
  return r;
}

bool is_classifying(const SupportDatum& d) { return classifying_report(d).homeomorphism; }

SupportMorphismReport support_morphism_check(const ContinuousMap& f, const SupportDatum& d,
                                             const SupportDatum& d2) {
  if (!(d.lattice == d2.lattice)) throw ValidationError("lattice", {}, "support data live on different lattices");
  if (!(f.source == d.space) || !(f.target == d2.space))
    throw ValidationError("map", {}, "map does not run between the support spaces");
  SupportMorphismReport r;
  r.continuous = f.is_continuous();
  r.is_morphism = r.continuous;
  for (Element a = 0; a < d.lattice.size() && r.is_morphism; ++a)
    if (d.sigma[a] != f.preimage(d2.sigma[a])) {
      r.is_morphism = false;
      r.witness = a;
    }
  auto classifying = [](const SupportDatum& s) {
    return verify_datum(s).ok && is_spectral(s.space) && is_classifying(s);
  };
  r.both_classifying = classifying(d) && classifying(d2);
  r.homeomorphism = f.is_homeomorphism();
  r.contradiction = r.is_morphism && r.both_classifying && !r.homeomorphism;
  return r;
}

}  // namespace latspec
