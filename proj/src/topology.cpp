#include "latspec/topology.hpp"

#include <algorithm>
#include <set>

namespace latspec {

namespace {

std::vector<PointSet> canonical(std::vector<PointSet> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return sets;
}

std::string show(const FiniteSpace& space, PointSet s) {
  std::string out = "{";
  bool first = true;
  for (Point p : s.to_vector()) {
    if (!first) out += ",";
    out += space.name(p);
    first = false;
  }
  return out + "}";
}

}  // namespace

FiniteSpace::FiniteSpace(std::vector<std::string> point_names, std::vector<PointSet> opens)
    : names_(std::move(point_names)), opens_(canonical(std::move(opens))) {
  const std::size_t n = names_.size();
  if (n > PointSet::kMaxPoints)
    throw ValidationError("points", {}, "spaces are limited to 64 points");
  const PointSet all = PointSet::full(n);
  for (const PointSet& u : opens_)
    if (!u.subset_of(all)) throw ValidationError("opens", {}, "open set mentions an unknown point");
  if (!std::binary_search(opens_.begin(), opens_.end(), PointSet{}))
    throw ValidationError("opens", {}, "the empty set must be open");
  if (!std::binary_search(opens_.begin(), opens_.end(), all))
    throw ValidationError("opens", {}, "the whole space must be open");
  for (std::size_t i = 0; i < opens_.size(); ++i)
    for (std::size_t j = i + 1; j < opens_.size(); ++j) {
      if (!is_open(opens_[i] | opens_[j]))
        throw ValidationError("opens", {i, j},
                              "union of " + show(*this, opens_[i]) + " and " + show(*this, opens_[j]) +
                                  " is not open");
      if (!is_open(opens_[i] & opens_[j]))
        throw ValidationError("opens", {i, j},
                              "intersection of " + show(*this, opens_[i]) + " and " +
                                  show(*this, opens_[j]) + " is not open");
    }
}

std::optional<Point> FiniteSpace::find(std::string_view name) const {
  for (Point p = 0; p < names_.size(); ++p)
    if (names_[p] == name) return p;
  return std::nullopt;
}

std::vector<PointSet> FiniteSpace::closed_sets() const {
  std::vector<PointSet> out;
  out.reserve(opens_.size());
  for (const PointSet& u : opens_) out.push_back(u.complement(size()));
  return canonical(std::move(out));
}

bool FiniteSpace::is_open(PointSet s) const { return std::binary_search(opens_.begin(), opens_.end(), s); }
bool FiniteSpace::is_closed(PointSet s) const { return is_open(s.complement(size())); }

PointSet FiniteSpace::closure(PointSet s) const {
  PointSet acc = all();
  for (const PointSet& u : opens_) {
    const PointSet c = u.complement(size());
    if (s.subset_of(c)) acc &= c;
  }
  return acc;
}

bool FiniteSpace::is_irreducible(PointSet c) const {
  if (c.empty()) return false;
  const auto closed = closed_sets();
  for (const PointSet& a : closed) {
    if (!a.subset_of(c) || a == c) continue;
    for (const PointSet& b : closed)
      if (b.subset_of(c) && b != c && (a | b) == c) return false;
  }
  return true;
}

bool SpectralReport::ok() const { return first_failure() == nullptr; }

const SpaceCheck* SpectralReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

SpectralReport verify_spectral(const FiniteSpace& space) {
  SpectralReport report;
  const std::size_t n = space.size();

  SpaceCheck t0{"T0", true, false, {}, {}};
  for (Point x = 0; x < n && t0.passed; ++x)
    for (Point y = x + 1; y < n; ++y)
      if (space.closure(x) == space.closure(y)) {
        t0.passed = false;
        t0.witness = {x, y};
        t0.detail = "points " + space.name(x) + " and " + space.name(y) + " have the same open neighbourhoods";
        break;
      }
  report.checks.push_back(t0);

  report.checks.push_back({"quasi-compact", true, true, {}, "finite space: every open cover has a finite subcover"});
  report.checks.push_back({"quasi-compact-basis", true, true, {},
                           "finite space: every open is quasi-compact, and opens are closed under intersection"});

  SpaceCheck sober{"generic-points", true, false, {}, {}};
  for (const PointSet& c : space.closed_sets()) {
    if (!space.is_irreducible(c)) continue;
    std::vector<Point> generic;
    for (Point x : c.to_vector())
      if (space.closure(x) == c) generic.push_back(x);
    if (generic.size() != 1) {
      sober.passed = false;
      sober.witness = c.to_vector();
      sober.detail = "irreducible closed set " + show(space, c) + " has " + std::to_string(generic.size()) +
                     " generic points";
      break;
    }
  }
  report.checks.push_back(sober);
  return report;
}

bool is_spectral(const FiniteSpace& space) { return verify_spectral(space).ok(); }

namespace {

void require_spectral(const FiniteSpace& space) {
  const SpectralReport report = verify_spectral(space);
  if (const SpaceCheck* bad = report.first_failure())
    throw ValidationError(bad->property, bad->witness, "space is not spectral: " + bad->detail);
}

}  // namespace

FiniteSpace hochster_dual(const FiniteSpace& space) {
  require_spectral(space);
  // Every open of a finite space is quasi-compact; close the complements
  // under unions to obtain the dual topology.
  std::set<PointSet> family;
  family.insert(PointSet{});
  for (const PointSet& u : space.opens()) {
    const PointSet c = u.complement(space.size());
    std::vector<PointSet> grown;
    for (const PointSet& y : family) grown.push_back(y | c);
    family.insert(grown.begin(), grown.end());
  }
  return FiniteSpace(space.names(), {family.begin(), family.end()});
}

std::optional<Point> generic_point(const FiniteSpace& space, PointSet closed) {
  if (!closed.subset_of(space.all()) || !space.is_closed(closed))
    throw ValidationError("closed", closed.to_vector(), show(space, closed) + " is not closed");
  if (closed.empty()) throw ValidationError("irreducible", {}, "the empty set is not irreducible");
  const auto family = space.closed_sets();
  for (const PointSet& a : family) {
    if (!a.subset_of(closed) || a == closed) continue;
    for (const PointSet& b : family)
      if (b.subset_of(closed) && b != closed && (a | b) == closed) {
        auto w = a.to_vector();
        auto wb = b.to_vector();
        w.insert(w.end(), wb.begin(), wb.end());
        throw ValidationError("irreducible", w,
                              show(space, closed) + " is the union of proper closed subsets " + show(space, a) +
                                  " and " + show(space, b));
      }
  }
  std::optional<Point> found;
  for (Point x : closed.to_vector())
    if (space.closure(x) == closed) {
      if (found) return std::nullopt;
      found = x;
    }
  return found;
}

PointSet ContinuousMap::preimage(PointSet s) const {
  PointSet out;
  for (Point x = 0; x < map.size(); ++x)
    if (s.contains(map[x])) out.insert(x);
  return out;
}

bool ContinuousMap::is_continuous() const {
  if (map.size() != source.size()) return false;
  for (Point y : map)
    if (y >= target.size()) return false;
  for (const PointSet& u : target.opens())
    if (!source.is_open(preimage(u))) return false;
  return true;
}

bool ContinuousMap::is_bijective() const {
  if (map.size() != source.size() || source.size() != target.size()) return false;
  std::vector<bool> hit(target.size(), false);
  for (Point y : map) {
    if (y >= target.size() || hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

bool ContinuousMap::is_homeomorphism() const {
  if (!is_bijective() || source.opens().size() != target.opens().size()) return false;
  std::vector<PointSet> pulled;
  for (const PointSet& u : target.opens()) pulled.push_back(preimage(u));
  return canonical(std::move(pulled)) == source.opens();
}

PrimeSpectrum::PrimeSpectrum(IdealLattice lattice)
    : lattice_(std::move(lattice)), primes_(spec_set(lattice_)) {
  if (primes_.size() > PointSet::kMaxPoints)
    throw ValidationError("points", {}, "spectra are limited to 64 primes");
  std::vector<std::string> names;
  for (Element p : primes_) names.push_back(lattice_.name(p));
  std::vector<PointSet> opens;
  for (Element a = 0; a < lattice_.size(); ++a) opens.push_back(open_set(a));
  zariski_ = FiniteSpace(names, std::move(opens));
  dual_ = hochster_dual(zariski_);
}

std::optional<Point> PrimeSpectrum::point_of(Element prime) const {
  auto it = std::lower_bound(primes_.begin(), primes_.end(), prime);
  if (it == primes_.end() || *it != prime) return std::nullopt;
  return static_cast<Point>(it - primes_.begin());
}

PointSet PrimeSpectrum::closed_set(Element a) const {
  PointSet out;
  for (Point i = 0; i < primes_.size(); ++i)
    if (lattice_.leq(a, primes_[i])) out.insert(i);
  return out;
}

PointSet PrimeSpectrum::open_set(Element a) const {
  return closed_set(a).complement(primes_.size());
}

FiniteSpace zariski_spectrum(const IdealLattice& lattice) { return PrimeSpectrum(lattice).zariski(); }
FiniteSpace support_spectrum(const IdealLattice& lattice) { return PrimeSpectrum(lattice).dual(); }

std::optional<Element> OpenLattice::element_of(PointSet open) const {
  auto it = std::lower_bound(opens.begin(), opens.end(), open);
  if (it == opens.end() || *it != open) return std::nullopt;
  return static_cast<Element>(it - opens.begin());
}

OpenLattice open_lattice(const FiniteSpace& space) {
  require_spectral(space);
  const auto& opens = space.opens();
  const std::size_t n = opens.size();
  auto index = [&](PointSet u) {
    return static_cast<Element>(std::lower_bound(opens.begin(), opens.end(), u) - opens.begin());
  };
  LatticeData data;
  data.order.assign(n, std::vector<bool>(n));
  data.mul.assign(n, std::vector<Element>(n));
  for (Element i = 0; i < n; ++i) {
    std::string name = "(";
    bool first = true;
    for (Point p : opens[i].to_vector()) {
      if (!first) name += "|";
      name += space.name(p);
      first = false;
    }
    data.names.push_back(name + ")");
    for (Element j = 0; j < n; ++j) {
      data.order[i][j] = opens[i].subset_of(opens[j]);
      data.mul[i][j] = index(opens[i] & opens[j]);
    }
  }
  data.bottom = index(PointSet{});
  data.top = index(space.all());
  return {space, IdealLattice::build(std::move(data)), opens};
}

ContinuousMap canonical_homeo(const FiniteSpace& space) {
  const OpenLattice lat = open_lattice(space);
  const PrimeSpectrum spec(lat.lattice);
  ContinuousMap f{space, spec.zariski(), {}};
  for (Point x = 0; x < space.size(); ++x) {
    const PointSet u = space.closure(x).complement(space.size());
    const auto p = spec.point_of(*lat.element_of(u));
    if (!p) throw Error("complement of a point closure is not prime in the open lattice");
    f.map.push_back(*p);
  }
  return f;
}

ClassificationTable classify_closed(const PrimeSpectrum& spectrum) {
  ClassificationTable t{ClassificationKind::closed, {}};
  const auto& lat = spectrum.lattice();
  for (Element a = 0; a < lat.size(); ++a)
    if (is_semiprime(lat, a)) t.pairs.emplace_back(a, spectrum.closed_set(a));
  return t;
}

ClassificationTable classify_open(const PrimeSpectrum& spectrum) {
  ClassificationTable t{ClassificationKind::open, {}};
  const auto& lat = spectrum.lattice();
  for (Element a = 0; a < lat.size(); ++a)
    if (is_semiprime(lat, a)) t.pairs.emplace_back(a, spectrum.open_set(a));
  return t;
}

ClassificationTable classify_supp(const PrimeSpectrum& spectrum) {
  ClassificationTable t{ClassificationKind::support, {}};
  const auto& lat = spectrum.lattice();
  for (Element a = 0; a < lat.size(); ++a)
    if (is_semiprime(lat, a)) t.pairs.emplace_back(a, spectrum.supp(a));
  return t;
}

std::vector<PointSet> classification_targets(const PrimeSpectrum& spectrum, ClassificationKind kind) {
  switch (kind) {
    case ClassificationKind::closed:
      return spectrum.zariski().closed_sets();
    case ClassificationKind::open:
      return spectrum.zariski().opens();
    case ClassificationKind::support:
      return spectrum.dual().closed_sets();
  }
  return {};
}

Element classification_inverse(const PrimeSpectrum& spectrum, ClassificationKind kind, PointSet y) {
  const auto& lat = spectrum.lattice();
  if (kind == ClassificationKind::closed) {
    std::vector<Element> members;
    for (Point p : y.to_vector()) members.push_back(spectrum.prime(p));
    return lat.meet(members);
  }
  std::vector<Element> inside;
  for (Element b = 0; b < lat.size(); ++b) {
    const PointSet s = kind == ClassificationKind::open ? spectrum.open_set(b) : spectrum.supp(b);
    if (s.subset_of(y)) inside.push_back(b);
  }
  return lat.join(inside);
}

ClassificationReport verify_classification(const PrimeSpectrum& spectrum, const ClassificationTable& table) {
  ClassificationReport r;
  const auto& lat = spectrum.lattice();
  const auto targets = classification_targets(spectrum, table.kind);

  std::vector<PointSet> images;
  for (const auto& [a, s] : table.pairs) images.push_back(s);
  const auto distinct = canonical(images);
  r.bijective = distinct.size() == images.size() && distinct == targets;
  if (!r.bijective) r.detail = "table is not a bijection onto the target family";

  r.round_trip = true;
  for (const auto& [a, s] : table.pairs)
    if (classification_inverse(spectrum, table.kind, s) != a) {
      r.round_trip = false;
      r.detail = "inverse does not recover " + lat.name(a);
      break;
    }
  for (const PointSet& y : targets) {
    if (!r.round_trip) break;
    const Element a = classification_inverse(spectrum, table.kind, y);
    const PointSet back = table.kind == ClassificationKind::closed ? spectrum.closed_set(a)
                          : table.kind == ClassificationKind::open ? spectrum.open_set(a)
                                                                    : spectrum.supp(a);
    if (!is_semiprime(lat, a) || back != y) {
      r.round_trip = false;
      r.detail = "target subset is not recovered by the forward map";
    }
  }

  r.monotone = true;
  for (const auto& [a, sa] : table.pairs) {
    for (const auto& [b, sb] : table.pairs) {
      const bool expected = table.kind == ClassificationKind::closed ? sb.subset_of(sa) : sa.subset_of(sb);
      if (lat.leq(a, b) != expected) {
        r.monotone = false;
        r.detail = "monotonicity fails at (" + lat.name(a) + ", " + lat.name(b) + ")";
        break;
      }
    }
    if (!r.monotone) break;
  }
  return r;
}

std::string_view to_string(ClassificationKind kind) {
  switch (kind) {
    case ClassificationKind::closed:
      return "closed";
    case ClassificationKind::open:
      return "open";
    case ClassificationKind::support:
      return "support";
  }
  return "";
}

}  // namespace latspec
