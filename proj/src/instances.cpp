#include "latspec/instances.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace latspec {

bool FiniteSemiring::is_commutative() const {
  for (std::size_t x = 0; x < size(); ++x)
    for (std::size_t y = x + 1; y < size(); ++y)
      if (mul[x][y] != mul[y][x]) return false;
  return true;
}

Verdict verify_semiring(const FiniteSemiring& a) {
  const std::size_t n = a.size();
  if (n == 0) return Verdict::fail("shape", {}, "semiring has no elements");
  bool shape = a.add.size() == n && a.mul.size() == n && a.zero < n && a.one < n;
  for (std::size_t x = 0; shape && x < n; ++x) {
    shape = a.add[x].size() == n && a.mul[x].size() == n;
    for (std::size_t y = 0; shape && y < n; ++y) shape = a.add[x][y] < n && a.mul[x][y] < n;
  }
  if (!shape) return Verdict::fail("shape", {}, "operation tables do not match the element count");

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (a.add[a.add[x][y]][z] != a.add[x][a.add[y][z]])
          return Verdict::fail("add-associativity", {x, y, z}, "addition is not associative");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (a.add[x][y] != a.add[y][x]) return Verdict::fail("add-commutativity", {x, y}, "addition is not commutative");
  for (std::size_t x = 0; x < n; ++x)
    if (a.add[a.zero][x] != x) return Verdict::fail("zero", {x}, "zero is not neutral for addition");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (a.mul[a.mul[x][y]][z] != a.mul[x][a.mul[y][z]])
          return Verdict::fail("mul-associativity", {x, y, z}, "multiplication is not associative");
  for (std::size_t x = 0; x < n; ++x)
    if (a.mul[a.one][x] != x || a.mul[x][a.one] != x)
      return Verdict::fail("one", {x}, "one is not a two-sided multiplicative identity");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        if (a.mul[x][a.add[y][z]] != a.add[a.mul[x][y]][a.mul[x][z]])
          return Verdict::fail("distributivity", {x, y, z}, "x(y+z) != xy+xz");
        if (a.mul[a.add[x][y]][z] != a.add[a.mul[x][z]][a.mul[y][z]])
          return Verdict::fail("distributivity", {x, y, z}, "(x+y)z != xz+yz");
      }
  return {};
}

FiniteSemiring residue_semiring(std::size_t n) {
  if (n == 0) throw ValidationError("modulus", {}, "modulus must be positive");
  FiniteSemiring a;
  a.add.assign(n, std::vector<SemiringElement>(n));
  a.mul.assign(n, std::vector<SemiringElement>(n));
  for (std::size_t x = 0; x < n; ++x) {
    a.names.push_back(std::to_string(x));
    for (std::size_t y = 0; y < n; ++y) {
      a.add[x][y] = (x + y) % n;
      a.mul[x][y] = (x * y) % n;
    }
  }
  a.zero = 0;
  a.one = 1 % n;
  return a;
}

SemiringIdeal generate_ideal(const FiniteSemiring& a, const std::vector<SemiringElement>& generators) {
  const std::size_t n = a.size();
  SemiringIdeal in(n, false);
  std::vector<SemiringElement> members;
  std::vector<SemiringElement> work;
  auto add = [&](SemiringElement x) {
    if (!in[x]) {
      in[x] = true;
      members.push_back(x);
      work.push_back(x);
    }
  };
  add(a.zero);
  for (SemiringElement g : generators) add(g);
  while (!work.empty()) {
    const SemiringElement z = work.back();
    work.pop_back();
    for (std::size_t i = 0; i < members.size(); ++i) add(a.add[z][members[i]]);
    for (SemiringElement x = 0; x < n; ++x) {
      add(a.mul[x][z]);
      add(a.mul[z][x]);
    }
  }
  return in;
}

namespace {

std::vector<SemiringElement> members_of(const SemiringIdeal& ideal) {
  std::vector<SemiringElement> out;
  for (std::size_t x = 0; x < ideal.size(); ++x)
    if (ideal[x]) out.push_back(x);
  return out;
}

bool ideal_less(const SemiringIdeal& x, const SemiringIdeal& y) {
  const auto mx = members_of(x), my = members_of(y);
  return mx.size() != my.size() ? mx.size() < my.size() : mx < my;
}

}  // namespace

std::optional<Element> SemiringIdealLattice::element_of(const SemiringIdeal& ideal) const {
  auto it = std::lower_bound(ideals.begin(), ideals.end(), ideal, ideal_less);
  if (it == ideals.end() || *it != ideal) return std::nullopt;
  return static_cast<Element>(it - ideals.begin());
}

Element SemiringIdealLattice::principal(SemiringElement x) const {
  // The semiring is not stored, so search for the least ideal containing x.
  for (Element i = 0; i < ideals.size(); ++i)
    if (ideals[i][x]) {
      bool least = true;
      for (Element j = 0; j < ideals.size() && least; ++j)
        if (ideals[j][x] && !lattice.leq(i, j)) least = false;
      if (least) return i;
    }
  throw Error("semiring element is in no ideal");
}

SemiringIdealLattice semiring_ideal_lattice(const FiniteSemiring& a) {
  verify_semiring(a).require();
  const std::size_t n = a.size();
  if (n > kMaxSemiringSize)
    throw Error("semiring ideal enumeration is limited to " + std::to_string(kMaxSemiringSize) + " elements");

  // Every ideal of a finite semiring is generated by finitely many elements,
  // hence reachable from the zero ideal by adjoining one generator at a time.
  std::set<SemiringIdeal> seen;
  std::vector<SemiringIdeal> work{generate_ideal(a, {})};
  seen.insert(work.front());
  while (!work.empty()) {
    const SemiringIdeal ideal = work.back();
    work.pop_back();
    auto gens = members_of(ideal);
    for (SemiringElement x = 0; x < n; ++x) {
      if (ideal[x]) continue;
      gens.push_back(x);
      SemiringIdeal next = generate_ideal(a, gens);
      gens.pop_back();
      if (seen.insert(next).second) work.push_back(std::move(next));
    }
  }
  std::vector<SemiringIdeal> ideals(seen.begin(), seen.end());
  std::sort(ideals.begin(), ideals.end(), ideal_less);

  std::map<SemiringIdeal, Element> index;
  for (Element i = 0; i < ideals.size(); ++i) index.emplace(ideals[i], i);

  const std::size_t m = ideals.size();
  LatticeData data;
  data.order.assign(m, std::vector<bool>(m));
  data.mul.assign(m, std::vector<Element>(m));
  std::vector<std::vector<SemiringElement>> members(m);
  for (Element i = 0; i < m; ++i) members[i] = members_of(ideals[i]);
  for (Element i = 0; i < m; ++i) {
    std::string name = "(";
    for (std::size_t k = 0; k < members[i].size(); ++k) {
      if (k) name += "|";
      name += a.names[members[i][k]];
    }
    data.names.push_back(name + ")");
    for (Element j = 0; j < m; ++j) {
      data.order[i][j] = std::includes(members[j].begin(), members[j].end(), members[i].begin(), members[i].end());
      std::vector<SemiringElement> products;
      for (SemiringElement x : members[i])
        for (SemiringElement y : members[j]) products.push_back(a.mul[x][y]);
      data.mul[i][j] = index.at(generate_ideal(a, products));
    }
  }
  data.bottom = 0;
  data.top = m - 1;
  try {
    return {IdealLattice::build(std::move(data)), std::move(ideals)};
  } catch (const ValidationError& e) {
    throw ValidationError(e.check(), e.witness(), std::string("semiring ideal lattice: ") + e.what());
  }
}

IdealLattice divisor_lattice(std::size_t n) {
  if (n == 0) throw ValidationError("modulus", {}, "divisor lattice needs n >= 1");
  std::vector<std::size_t> divisors;
  for (std::size_t d = 1; d <= n; ++d)
    if (n % d == 0) divisors.push_back(d);
  const std::size_t m = divisors.size();
  auto index = [&](std::size_t d) {
    return static_cast<Element>(std::lower_bound(divisors.begin(), divisors.end(), d) - divisors.begin());
  };
  LatticeData data;
  data.order.assign(m, std::vector<bool>(m));
  data.mul.assign(m, std::vector<Element>(m));
  for (Element i = 0; i < m; ++i) {
    data.names.push_back(std::to_string(divisors[i]));
    for (Element j = 0; j < m; ++j) {
      data.order[i][j] = divisors[i] % divisors[j] == 0;
      data.mul[i][j] = index(std::gcd(divisors[i] * divisors[j], n));
    }
  }
  data.top = index(1);
  data.bottom = index(n);
  return IdealLattice::build(std::move(data));
}

Element closure_projection(const ClosureSystem& cs, Element a) {
  std::vector<Element> above;
  for (Element m : cs.members)
    if (cs.carrier.leq(a, m)) above.push_back(m);
  return cs.carrier.meet(above);
}

ClosureReport verify_closure_system(const ClosureSystem& cs) {
  const auto& lat = cs.carrier;
  ClosureReport r;
  std::vector<bool> member(lat.size(), false);
  for (Element m : cs.members) {
    if (m >= lat.size()) {
      r.meets = r.directed = r.projection = Verdict::fail("shape", {m}, "member outside the carrier");
      return r;
    }
    member[m] = true;
  }

  if (!member[lat.top()]) {
    r.meets = Verdict::fail("meets", {}, "top (the empty meet) is not a member");
  } else {
    for (Element a : cs.members) {
      for (Element b : cs.members)
        if (!member[lat.meet(a, b)]) {
          r.meets = Verdict::fail("meets", {std::min(a, b), std::max(a, b)},
                                  "meet of " + lat.name(a) + " and " + lat.name(b) + " is not a member");
          break;
        }
      if (!r.meets.ok) break;
    }
  }

  // A directed subset of a finite poset has a greatest element, so only
  // chains need checking; their joins are their maxima.
  for (Element a : cs.members) {
    for (Element b : cs.members)
      if ((lat.leq(a, b) || lat.leq(b, a)) && !member[lat.join(a, b)]) {
        r.directed = Verdict::fail("directed", {a, b}, "join of a member chain is not a member");
        break;
      }
    if (!r.directed.ok) break;
  }

  std::vector<Element> pi(lat.size());
  for (Element a = 0; a < lat.size(); ++a) pi[a] = closure_projection(cs, a);
  for (Element a = 0; a < lat.size() && r.projection.ok; ++a)
    for (Element b = 0; b < lat.size(); ++b) {
      const Element mid = pi[lat.mul(a, b)];
      if (pi[lat.mul(a, pi[b])] != mid || pi[lat.mul(pi[a], b)] != mid) {
        r.projection = Verdict::fail("projection", {a, b},
                                     "pi(a pi(b)) = pi(ab) = pi(pi(a) b) fails at (" + lat.name(a) + ", " +
                                         lat.name(b) + ")");
        break;
      }
    }
  return r;
}

ClosureSublattice closure_sublattice(const ClosureSystem& cs) {
  const ClosureReport report = verify_closure_system(cs);
  for (const Verdict* v : {&report.meets, &report.directed, &report.projection}) v->require();

  const auto& lat = cs.carrier;
  std::vector<Element> members = cs.members;
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  auto sub_index = [&](Element carrier_element) {
    return static_cast<Element>(std::lower_bound(members.begin(), members.end(), carrier_element) - members.begin());
  };
  std::vector<Element> projection(lat.size());
  for (Element a = 0; a < lat.size(); ++a) projection[a] = sub_index(closure_projection(cs, a));

  const std::size_t m = members.size();
  LatticeData data;
  data.order.assign(m, std::vector<bool>(m));
  data.mul.assign(m, std::vector<Element>(m));
  for (Element i = 0; i < m; ++i) {
    data.names.push_back(lat.name(members[i]));
    for (Element j = 0; j < m; ++j) {
      data.order[i][j] = lat.leq(members[i], members[j]);
      data.mul[i][j] = projection[lat.mul(members[i], members[j])];
    }
  }
  data.top = sub_index(lat.top());
  data.bottom = projection[lat.bottom()];
  return ClosureSublattice{IdealLattice::build(std::move(data)), std::move(members), std::move(projection)};
}

ClosureSystem semiprime_closure_system(const IdealLattice& lattice) {
  ClosureSystem cs{lattice, {}};
  for (Element a = 0; a < lattice.size(); ++a)
    if (is_semiprime(lattice, a)) cs.members.push_back(a);
  return cs;
}

ThickLattice tensor_semiring_thick_lattice(const FiniteSemiring& semiring, const std::vector<Element>& thick_members) {
  auto ideals = semiring_ideal_lattice(semiring);
  auto thick = closure_sublattice(ClosureSystem{ideals.lattice, thick_members});
  std::vector<Element> generator;
  for (SemiringElement x = 0; x < semiring.size(); ++x) generator.push_back(thick.projection[ideals.principal(x)]);
  return {semiring, std::move(ideals), std::move(thick), std::move(generator)};
}

std::optional<std::pair<SemiringElement, SemiringElement>> generator_additivity_witness(const ThickLattice& t) {
  const auto& lat = t.lattice();
  for (SemiringElement x = 0; x < t.semiring.size(); ++x)
    for (SemiringElement y = 0; y < t.semiring.size(); ++y)
      if (t.generator[t.semiring.add[x][y]] != lat.join(t.generator[x], t.generator[y])) return std::pair{x, y};
  return std::nullopt;
}

namespace {

// Semiring elements lying in the thick ideal `a` (a sublattice element).
std::vector<SemiringElement> objects_in(const ThickLattice& t, Element a) {
  return members_of(t.ideals.ideals[t.thick.members[a]]);
}

}  // namespace

Verdict verify_object_support(const ThickLattice& t, const ObjectSupport& s) {
  const auto& c = t.semiring;
  const std::size_t n = c.size();
  const auto& names = c.names;
  if (s.tau.size() != n) return Verdict::fail("shape", {}, "object support does not cover the semiring");
  for (SemiringElement x = 0; x < n; ++x)
    if (!s.tau[x].subset_of(s.space.all()) || !s.space.is_closed(s.tau[x]))
      return Verdict::fail("closed", {x}, "support of " + names[x] + " is not closed");
  if (!s.tau[c.zero].empty()) return Verdict::fail("zero", {c.zero}, "support of zero must be empty");
  for (SemiringElement x = 0; x < n; ++x) {
    PointSet acc;
    for (SemiringElement y : objects_in(t, t.generator[x])) acc |= s.tau[y];
    if (acc != s.tau[x])
      return Verdict::fail("generated", {x}, "support of " + names[x] + " differs from the union over <x>");
  }
  for (SemiringElement x = 0; x < n; ++x)
    for (SemiringElement y = 0; y < n; ++y)
      if (s.tau[c.add[x][y]] != (s.tau[x] | s.tau[y]))
        return Verdict::fail("sum", {x, y}, "tau(" + names[x] + "+" + names[y] + ") is not the union");
  if (s.tau[c.one] != s.space.all()) return Verdict::fail("unit", {c.one}, "support of the unit must be the whole space");
  for (SemiringElement x = 0; x < n; ++x)
    for (SemiringElement y = 0; y < n; ++y)
      if (s.tau[c.mul[x][y]] != (s.tau[x] & s.tau[y]))
        return Verdict::fail("product", {x, y}, "tau(" + names[x] + "*" + names[y] + ") is not the intersection");
  return {};
}

SupportDatum sigma_from_tau(const ThickLattice& t, const ObjectSupport& s) {
  verify_object_support(t, s).require();
  const std::size_t n = t.semiring.size();
  for (SemiringElement x = 0; x < n; ++x)
    for (SemiringElement y = x + 1; y < n; ++y)
      if (t.generator[x] == t.generator[y] && s.tau[x] != s.tau[y])
        throw ValidationError("well-defined", {x, y}, "generators of the same ideal have different supports");

  SupportDatum d{t.lattice(), s.space, {}};
  for (Element a = 0; a < t.lattice().size(); ++a) {
    PointSet acc;
    for (SemiringElement x : objects_in(t, a)) acc |= s.tau[x];
    d.sigma.push_back(acc);
  }
  verify_datum(d).require();
  return d;
}

ObjectSupport tau_from_sigma(const ThickLattice& t, const SupportDatum& d) {
  if (!(d.lattice == t.lattice()))
    throw ValidationError("lattice", {}, "support datum is not on the thick-ideal lattice");
  verify_datum(d).require();
  ObjectSupport s{d.space, {}};
  for (SemiringElement x = 0; x < t.semiring.size(); ++x) s.tau.push_back(d.sigma[t.generator[x]]);
  verify_object_support(t, s).require();
  return s;
}

}  // namespace latspec
