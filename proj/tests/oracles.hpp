#pragma once

// Brute-force reference implementations. Nothing here calls the algorithms
// under test; oracles only read lattices and spaces through their tables.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "latspec/instances.hpp"
#include "latspec/lattice.hpp"
#include "latspec/point_set.hpp"
#include "latspec/topology.hpp"

namespace oracle {

using latspec::Element;
using latspec::PointSet;
using std::size_t;

/// Plain tables: order, product, top and bottom.
struct Table {
  size_t n = 0;
  std::vector<std::vector<bool>> leq;
  std::vector<std::vector<size_t>> mul;
  size_t top = 0, bottom = 0;
};

inline Table table_of(const latspec::LatticeData& d) {
  return Table{d.size(), d.order, d.mul, d.top, d.bottom};
}

inline Table table_of(const latspec::IdealLattice& lat) { return table_of(lat.data()); }

inline std::optional<size_t> join(const Table& t, size_t a, size_t b) {
  std::vector<size_t> ub;
  for (size_t c = 0; c < t.n; ++c)
    if (t.leq[a][c] && t.leq[b][c]) ub.push_back(c);
  for (size_t c : ub)
    if (std::all_of(ub.begin(), ub.end(), [&](size_t d) { return t.leq[c][d]; })) return c;
  return std::nullopt;
}

inline std::optional<size_t> meet(const Table& t, size_t a, size_t b) {
  std::vector<size_t> lb;
  for (size_t c = 0; c < t.n; ++c)
    if (t.leq[c][a] && t.leq[c][b]) lb.push_back(c);
  for (size_t c : lb)
    if (std::all_of(lb.begin(), lb.end(), [&](size_t d) { return t.leq[d][c]; })) return c;
  return std::nullopt;
}

/// Partial order, all binary joins and meets, top/bottom extremal, associative,
/// two-sided distributive, top a unit, bottom annihilating.
inline bool axioms_hold(const Table& t) {
  const size_t n = t.n;
  if (n == 0) return false;
  for (size_t a = 0; a < n; ++a) {
    if (!t.leq[a][a] || !t.leq[t.bottom][a] || !t.leq[a][t.top]) return false;
    for (size_t b = 0; b < n; ++b) {
      if (a != b && t.leq[a][b] && t.leq[b][a]) return false;
      for (size_t c = 0; c < n; ++c)
        if (t.leq[a][b] && t.leq[b][c] && !t.leq[a][c]) return false;
    }
  }
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      if (!join(t, a, b) || !meet(t, a, b)) return false;
  for (size_t a = 0; a < n; ++a) {
    if (t.mul[t.top][a] != a || t.mul[a][t.top] != a) return false;
    if (t.mul[t.bottom][a] != t.bottom || t.mul[a][t.bottom] != t.bottom) return false;
    for (size_t b = 0; b < n; ++b)
      for (size_t c = 0; c < n; ++c) {
        if (t.mul[t.mul[a][b]][c] != t.mul[a][t.mul[b][c]]) return false;
        const size_t bc = *join(t, b, c);
        if (t.mul[a][bc] != *join(t, t.mul[a][b], t.mul[a][c])) return false;
        if (t.mul[bc][a] != *join(t, t.mul[b][a], t.mul[c][a])) return false;
      }
  }
  return true;
}

inline bool is_prime(const Table& t, size_t p) {
  if (p == t.top) return false;
  for (size_t a = 0; a < t.n; ++a)
    for (size_t b = 0; b < t.n; ++b)
      if (t.leq[t.mul[a][b]][p] && !t.leq[a][p] && !t.leq[b][p]) return false;
  return true;
}

inline std::vector<size_t> primes(const Table& t) {
  std::vector<size_t> out;
  for (size_t p = 0; p < t.n; ++p)
    if (is_prime(t, p)) out.push_back(p);
  return out;
}

/// b.b <= a forces b <= a.
inline bool is_semiprime(const Table& t, size_t a) {
  for (size_t b = 0; b < t.n; ++b)
    if (t.leq[t.mul[b][b]][a] && !t.leq[b][a]) return false;
  return true;
}

/// Least semiprime above a.
inline size_t radical(const Table& t, size_t a) {
  std::vector<size_t> above;
  for (size_t b = 0; b < t.n; ++b)
    if (t.leq[a][b] && is_semiprime(t, b)) above.push_back(b);
  for (size_t b : above)
    if (std::all_of(above.begin(), above.end(), [&](size_t c) { return t.leq[b][c]; })) return b;
  throw std::logic_error("no least semiprime above element");
}

/// Primes not above a, as a set of prime elements.
inline std::set<size_t> supp(const Table& t, size_t a) {
  std::set<size_t> out;
  for (size_t p : primes(t))
    if (!t.leq[a][p]) out.insert(p);
  return out;
}

// ---------------------------------------------------------------- topology

/// Every topology on n <= 4 points, found by testing all families of subsets.
inline std::vector<std::vector<PointSet>> all_topologies(size_t n) {
  const size_t subsets = size_t{1} << n;
  const uint64_t full = subsets - 1;
  std::vector<std::vector<PointSet>> out;
  if (n == 0) return {{PointSet{}}};
  // Bits of `family` index the proper non-empty subsets 1 .. full-1.
  const size_t inner = subsets >= 2 ? subsets - 2 : 0;
  for (uint64_t family = 0; family < (uint64_t{1} << inner); ++family) {
    std::vector<bool> in(subsets, false);
    in[0] = in[full] = true;
    for (size_t i = 0; i < inner; ++i)
      if ((family >> i) & 1U) in[i + 1] = true;
    bool ok = true;
    for (uint64_t u = 0; u < subsets && ok; ++u)
      for (uint64_t v = 0; v < subsets && ok; ++v)
        if (in[u] && in[v] && (!in[u | v] || !in[u & v])) ok = false;
    if (!ok) continue;
    std::vector<PointSet> opens;
    for (uint64_t u = 0; u < subsets; ++u)
      if (in[u]) opens.push_back(PointSet(u));
    out.push_back(opens);
  }
  return out;
}

inline bool is_t0(size_t n, const std::vector<PointSet>& opens) {
  for (size_t x = 0; x < n; ++x)
    for (size_t y = x + 1; y < n; ++y)
      if (std::all_of(opens.begin(), opens.end(), [&](PointSet u) { return u.contains(x) == u.contains(y); }))
        return false;
  return true;
}

inline std::vector<std::string> point_names(size_t n) {
  std::vector<std::string> out;
  for (size_t i = 0; i < n; ++i) out.push_back("p" + std::to_string(i));
  return out;
}

/// All T0 spaces on n points, as FiniteSpace values.
inline std::vector<latspec::FiniteSpace> t0_spaces(size_t n) {
  std::vector<latspec::FiniteSpace> out;
  for (auto& opens : all_topologies(n))
    if (is_t0(n, opens)) out.emplace_back(point_names(n), opens);
  return out;
}

inline std::vector<latspec::FiniteSpace> all_spaces(size_t n) {
  std::vector<latspec::FiniteSpace> out;
  for (auto& opens : all_topologies(n)) out.emplace_back(point_names(n), opens);
  return out;
}

inline std::vector<PointSet> closed_family(const std::vector<PointSet>& opens, size_t n) {
  std::vector<PointSet> out;
  for (PointSet u : opens) out.push_back(u.complement(n));
  return out;
}

/// Subspace topology on the points of y, renumbered in increasing order.
inline latspec::FiniteSpace subspace(const latspec::FiniteSpace& x, PointSet y) {
  const auto pts = y.to_vector();
  std::vector<std::string> names;
  for (auto p : pts) names.push_back(x.name(p));
  std::set<uint64_t> masks;
  for (PointSet u : x.opens()) {
    PointSet v;
    for (size_t i = 0; i < pts.size(); ++i)
      if (u.contains(pts[i])) v.insert(i);
    masks.insert(v.bits());
  }
  std::vector<PointSet> opens;
  for (auto m : masks) opens.push_back(PointSet(m));
  return latspec::FiniteSpace(names, opens);
}

// -------------------------------------------------------------- partitions

inline void partitions_rec(const std::vector<size_t>& pts, size_t i, std::vector<PointSet>& cur,
                           std::vector<std::vector<PointSet>>& out) {
  if (i == pts.size()) {
    out.push_back(cur);
    return;
  }
  // indices, not references: the recursion grows cur
  for (size_t b = 0; b < cur.size(); ++b) {
    cur[b].insert(pts[i]);
    partitions_rec(pts, i + 1, cur, out);
    cur[b].erase(pts[i]);
  }
  cur.push_back(PointSet{pts[i]});
  partitions_rec(pts, i + 1, cur, out);
  cur.pop_back();
}

/// Every set partition of y.
inline std::vector<std::vector<PointSet>> set_partitions(PointSet y) {
  std::vector<std::vector<PointSet>> out;
  std::vector<PointSet> cur;
  partitions_rec(y.to_vector(), 0, cur, out);
  return out;
}

/// Unions of members of `family`.
inline std::set<uint64_t> union_closure(const std::vector<PointSet>& family) {
  std::set<uint64_t> out{0};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<uint64_t> cur(out.begin(), out.end());
    for (auto a : cur)
      for (PointSet f : family)
        if (out.insert(a | f.bits()).second) grew = true;
  }
  return out;
}

inline bool refines(const std::vector<PointSet>& fine, const std::vector<PointSet>& coarse) {
  return std::all_of(fine.begin(), fine.end(), [&](PointSet b) {
    return std::any_of(coarse.begin(), coarse.end(), [&](PointSet c) { return b.subset_of(c); });
  });
}

/// The partition of y into unions of family members refining every other
/// such partition, chosen from all set partitions. Blocks are sorted by mask.
inline std::vector<PointSet> finest_partition(PointSet y, const std::vector<PointSet>& family) {
  const auto unions = union_closure(family);
  std::vector<std::vector<PointSet>> admissible;
  for (auto& p : set_partitions(y))
    if (std::all_of(p.begin(), p.end(), [&](PointSet b) { return unions.contains(b.bits()); }))
      admissible.push_back(p);
  for (auto& p : admissible)
    if (std::all_of(admissible.begin(), admissible.end(), [&](const auto& q) { return refines(p, q); })) {
      auto sorted = p;
      std::sort(sorted.begin(), sorted.end(), [](PointSet a, PointSet b) { return a.bits() < b.bits(); });
      return sorted;
    }
  throw std::logic_error("no finest admissible partition");
}

// --------------------------------------------------------------- semirings

/// Ideals of a semiring (|A| <= 16) by filtering all subsets.
inline std::vector<std::vector<bool>> semiring_ideals(const latspec::FiniteSemiring& s) {
  const size_t n = s.size();
  std::vector<std::vector<bool>> out;
  for (uint64_t m = 0; m < (uint64_t{1} << n); ++m) {
    auto in = [&](size_t x) { return ((m >> x) & 1U) != 0; };
    if (!in(s.zero)) continue;
    bool ok = true;
    for (size_t x = 0; x < n && ok; ++x) {
      if (!in(x)) continue;
      for (size_t y = 0; y < n && ok; ++y) {
        if (!in(s.mul[x][y]) || !in(s.mul[y][x])) ok = false;
        if (in(y) && !in(s.add[x][y])) ok = false;
      }
    }
    if (!ok) continue;
    std::vector<bool> ideal(n);
    for (size_t x = 0; x < n; ++x) ideal[x] = in(x);
    out.push_back(ideal);
  }
  return out;
}

// ------------------------------------------------------------- isomorphism

/// Bijection preserving order and product, by backtracking with pruning on
/// the sizes of down-sets and up-sets.
inline std::optional<std::vector<size_t>> find_isomorphism(const Table& a, const Table& b) {
  if (a.n != b.n) return std::nullopt;
  const size_t n = a.n;
  auto profile = [](const Table& t, size_t x) {
    size_t down = 0, up = 0;
    for (size_t y = 0; y < t.n; ++y) {
      down += t.leq[y][x];
      up += t.leq[x][y];
    }
    return std::pair{down, up};
  };
  std::vector<size_t> map(n, n);
  std::vector<bool> used(n, false);
  std::function<bool(size_t)> go = [&](size_t i) {
    if (i == n) return true;
    for (size_t y = 0; y < n; ++y) {
      if (used[y] || profile(a, i) != profile(b, y)) continue;
      map[i] = y;
      bool ok = true;
      for (size_t j = 0; j <= i && ok; ++j) {
        if (a.leq[i][j] != b.leq[y][map[j]] || a.leq[j][i] != b.leq[map[j]][y]) ok = false;
        for (size_t k = 0; k <= i && ok; ++k) {
          const size_t p = a.mul[j][k];
          if (p <= i && map[p] != b.mul[map[j]][map[k]]) ok = false;
        }
      }
      for (size_t j = 0; j <= i && ok; ++j)
        for (size_t k = 0; k <= i && ok; ++k) {
          // products landing on an element mapped later are checked then
          const size_t p = a.mul[j][k];
          if (p <= i) continue;
          const size_t target = b.mul[map[j]][map[k]];
          for (size_t q = 0; q <= i; ++q)
            if (map[q] == target) ok = false;
        }
      if (!ok) {
        map[i] = n;
        continue;
      }
      used[y] = true;
      if (go(i + 1)) return true;
      used[y] = false;
      map[i] = n;
    }
    return false;
  };
  if (!go(0)) return std::nullopt;
  return map;
}

// ------------------------------------------------ small ideal lattices

inline std::string canonical_key(const Table& t) {
  // Middle elements 1 .. n-2 permuted; bottom 0 and top n-1 fixed.
  const size_t n = t.n;
  std::vector<size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string key;
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b) {
        key.push_back(t.leq[perm[a]][perm[b]] ? '1' : '0');
        key.push_back(static_cast<char>('a' + std::find(perm.begin(), perm.end(), t.mul[perm[a]][perm[b]]) - perm.begin()));
      }
    if (best.empty() || key < best) best = key;
  } while (n > 2 && std::next_permutation(perm.begin() + 1, perm.end() - 1));
  return best;
}

/// Every ideal lattice with at most max_n elements, up to isomorphism. Bottom
/// is element 0 and top element n-1.
inline std::vector<latspec::LatticeData> small_ideal_lattices(size_t max_n) {
  std::vector<latspec::LatticeData> out;
  std::set<std::string> seen;
  for (size_t n = 1; n <= max_n; ++n) {
    if (n == 1) {
      out.push_back({{"e0"}, {{true}}, {{0}}, 0, 0});
      continue;
    }
    const size_t m = n - 2;  // middle elements
    // Strict relation on middle elements as a bit mask over ordered pairs.
    const size_t pairs = m * m;
    std::set<std::string> orders_seen;
    for (uint64_t rel = 0; rel < (uint64_t{1} << pairs); ++rel) {
      Table t;
      t.n = n;
      t.bottom = 0;
      t.top = n - 1;
      t.leq.assign(n, std::vector<bool>(n, false));
      for (size_t a = 0; a < n; ++a) {
        t.leq[a][a] = true;
        t.leq[0][a] = true;
        t.leq[a][n - 1] = true;
      }
      bool ok = true;
      for (size_t i = 0; i < m && ok; ++i)
        for (size_t j = 0; j < m && ok; ++j)
          if ((rel >> (i * m + j)) & 1U) {
            if (i == j) ok = false;
            t.leq[i + 1][j + 1] = true;
          }
      if (!ok) continue;
      for (size_t a = 0; a < n && ok; ++a)
        for (size_t b = 0; b < n && ok; ++b) {
          if (a != b && t.leq[a][b] && t.leq[b][a]) ok = false;
          for (size_t c = 0; c < n && ok; ++c)
            if (t.leq[a][b] && t.leq[b][c] && !t.leq[a][c]) ok = false;
        }
      if (!ok) continue;
      std::vector<std::vector<size_t>> jn(n, std::vector<size_t>(n)), mt(n, std::vector<size_t>(n));
      for (size_t a = 0; a < n && ok; ++a)
        for (size_t b = 0; b < n && ok; ++b) {
          auto j = join(t, a, b);
          auto k = meet(t, a, b);
          if (!j || !k) ok = false;
          else {
            jn[a][b] = *j;
            mt[a][b] = *k;
          }
        }
      if (!ok) continue;
      {
        Table shape = t;
        shape.mul.assign(n, std::vector<size_t>(n, 0));
        if (!orders_seen.insert(canonical_key(shape)).second) continue;
      }

      // Backtrack over products of middle elements; ab <= a meet b.
      t.mul.assign(n, std::vector<size_t>(n, n));
      for (size_t a = 0; a < n; ++a) {
        t.mul[0][a] = t.mul[a][0] = 0;
        t.mul[n - 1][a] = a;
        t.mul[a][n - 1] = a;
      }
      std::vector<std::pair<size_t, size_t>> cells;
      for (size_t a = 1; a + 1 < n; ++a)
        for (size_t b = 1; b + 1 < n; ++b) cells.emplace_back(a, b);
      auto consistent = [&]() {
        for (size_t a = 0; a < n; ++a)
          for (size_t b = 0; b < n; ++b)
            for (size_t c = 0; c < n; ++c) {
              const size_t bc = jn[b][c];
              const size_t l = t.mul[a][bc], r1 = t.mul[a][b], r2 = t.mul[a][c];
              if (l != n && r1 != n && r2 != n && l != jn[r1][r2]) return false;
              const size_t l2 = t.mul[bc][a], s1 = t.mul[b][a], s2 = t.mul[c][a];
              if (l2 != n && s1 != n && s2 != n && l2 != jn[s1][s2]) return false;
              const size_t ab = t.mul[a][b], bcm = t.mul[b][c];
              if (ab != n && bcm != n && t.mul[ab][c] != n && t.mul[a][bcm] != n && t.mul[ab][c] != t.mul[a][bcm])
                return false;
            }
        return true;
      };
      std::function<void(size_t)> fill = [&](size_t k) {
        if (k == cells.size()) {
          if (!axioms_hold(t)) return;
          if (!seen.insert(canonical_key(t)).second) return;
          latspec::LatticeData d;
          for (size_t a = 0; a < n; ++a) d.names.push_back("e" + std::to_string(a));
          d.order = t.leq;
          d.mul = t.mul;
          d.bottom = 0;
          d.top = n - 1;
          out.push_back(d);
          return;
        }
        auto [a, b] = cells[k];
        for (size_t v = 0; v < n; ++v) {
          if (!t.leq[v][mt[a][b]]) continue;
          t.mul[a][b] = v;
          if (consistent()) fill(k + 1);
        }
        t.mul[a][b] = n;
      };
      fill(0);
    }
  }
  return out;
}

// ------------------------------------------------------- data and maps

/// Assignments a -> member of `family` with empty join -> {}, top -> all,
/// binary joins -> unions, products -> intersections.
inline std::vector<std::vector<PointSet>> assignments(const Table& t, const std::vector<PointSet>& family,
                                                       PointSet all) {
  std::vector<std::vector<PointSet>> out;
  std::vector<PointSet> cur(t.n);
  std::vector<bool> set(t.n, false);
  std::vector<std::vector<size_t>> jn(t.n, std::vector<size_t>(t.n));
  for (size_t a = 0; a < t.n; ++a)
    for (size_t b = 0; b < t.n; ++b) jn[a][b] = *join(t, a, b);
  auto consistent = [&](size_t upto) {
    for (size_t a = 0; a <= upto; ++a)
      for (size_t b = 0; b <= upto; ++b) {
        const size_t j = jn[a][b], p = t.mul[a][b];
        if (j <= upto && cur[j] != (cur[a] | cur[b])) return false;
        if (p <= upto && cur[p] != (cur[a] & cur[b])) return false;
      }
    return true;
  };
  std::function<void(size_t)> go = [&](size_t a) {
    if (a == t.n) {
      out.push_back(cur);
      return;
    }
    for (PointSet v : family) {
      if (a == t.bottom && !v.empty()) continue;
      if (a == t.top && v != all) continue;
      cur[a] = v;
      if (consistent(a)) go(a + 1);
    }
  };
  go(0);
  return out;
}

/// Every point map from n points into m points.
inline std::vector<std::vector<size_t>> all_maps(size_t n, size_t m) {
  std::vector<std::vector<size_t>> out;
  if (m == 0) {
    if (n == 0) out.push_back({});
    return out;
  }
  std::vector<size_t> cur(n, 0);
  while (true) {
    out.push_back(cur);
    size_t i = 0;
    while (i < n && ++cur[i] == m) cur[i++] = 0;
    if (i == n) break;
  }
  return out;
}

inline PointSet preimage(const std::vector<size_t>& f, PointSet s) {
  PointSet out;
  for (size_t x = 0; x < f.size(); ++x)
    if (s.contains(f[x])) out.insert(x);
  return out;
}

inline bool continuous(const std::vector<size_t>& f, const latspec::FiniteSpace& src, const latspec::FiniteSpace& dst) {
  return std::all_of(dst.opens().begin(), dst.opens().end(), [&](PointSet u) { return src.is_open(preimage(f, u)); });
}

}  // namespace oracle
