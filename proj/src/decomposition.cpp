#include "latspec/decomposition.hpp"

#include <algorithm>
#include <numeric>

namespace latspec {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), rank_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    if (rank_[x] < rank_[y]) std::swap(x, y);
    parent_[y] = x;
    if (rank_[x] == rank_[y]) ++rank_[x];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> rank_;
};

}  // namespace

std::optional<std::pair<Element, Element>> decomposition_witness(const IdealLattice& lattice, Element a) {
  const Element zero = lattice.bottom();
  // a = x v y with x ^ y = 0; a = a v a would otherwise make everything decomposable
  for (Element x = 0; x < lattice.size(); ++x) {
    if (x == zero || !lattice.leq(x, a)) continue;
    for (Element y = 0; y < lattice.size(); ++y)
      if (y != zero && lattice.join(x, y) == a && lattice.meet(x, y) == zero) return std::pair{x, y};
  }
  return std::nullopt;
}

bool is_indecomposable(const IdealLattice& lattice, Element a) {
  return a != lattice.bottom() && !decomposition_witness(lattice, a);
}

std::vector<PointSet> finest_partition(PointSet y, const std::vector<PointSet>& family) {
  PointSet covered;
  for (const PointSet& f : family)
    if (f.subset_of(y)) covered |= f;
  if (covered != y) throw ValidationError("cover", (y - covered).to_vector(), "set is not a union of family members");

  const auto points = y.to_vector();
  std::vector<PointSet> hull;
  for (Point x : points) {
    PointSet h = y;
    for (const PointSet& f : family)
      if (f.contains(x)) h &= f;
    hull.push_back(h);
  }
  UnionFind uf(points.size());
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (hull[i].intersects(hull[j])) uf.unite(i, j);

  std::vector<PointSet> blocks;
  std::vector<std::size_t> root_block(points.size(), points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::size_t r = uf.find(i);
    if (root_block[r] == points.size()) {
      root_block[r] = blocks.size();
      blocks.emplace_back();
    }
    blocks[root_block[r]].insert(points[i]);
  }
  return blocks;
}

Decomposition decompose_semiprime(const PrimeSpectrum& spectrum, Element a) {
  const auto& lat = spectrum.lattice();
  if (!is_semiprime(lat, a))
    throw ValidationError("semiprime", {a}, "element " + lat.name(a) + " is not semiprime");

  Decomposition d;
  d.target = a;
  const PointSet support = spectrum.supp(a);
  d.degenerate = support.empty();
  d.supports = finest_partition(support, spectrum.dual().closed_sets());
  for (const PointSet& block : d.supports)
    d.blocks.push_back(classification_inverse(spectrum, ClassificationKind::support, block));

  d.join_matches = lat.join(d.blocks) == a;
  d.blocks_semiprime = true;
  for (std::size_t i = 0; i < d.blocks.size(); ++i)
    d.blocks_semiprime = d.blocks_semiprime && is_semiprime(lat, d.blocks[i]) && spectrum.supp(d.blocks[i]) == d.supports[i];
  d.supports_disjoint = true;
  for (std::size_t i = 0; i < d.supports.size(); ++i)
    for (std::size_t j = i + 1; j < d.supports.size(); ++j)
      if (d.supports[i].intersects(d.supports[j])) d.supports_disjoint = false;

  std::vector<Element> semiprimes;
  for (Element b = 0; b < lat.size(); ++b)
    if (is_semiprime(lat, b)) semiprimes.push_back(b);
  d.blocks_indecomposable = true;
  for (std::size_t i = 0; i < d.blocks.size() && d.blocks_indecomposable; ++i)
    for (Element b : semiprimes)
      for (Element c : semiprimes) {
        const PointSet sb = spectrum.supp(b), sc = spectrum.supp(c);
        if (!sb.empty() && !sc.empty() && !sb.intersects(sc) && (sb | sc) == d.supports[i])
          d.blocks_indecomposable = false;
      }

  const Element zero = lat.bottom();
  const Element root = radical(lat, zero);
  d.bottom_semiprime = is_semiprime(lat, zero);
  d.meets_bottom = true;
  bool all_root = true;
  bool any_pair = false;
  for (std::size_t i = 0; i < d.blocks.size(); ++i)
    for (std::size_t j = i + 1; j < d.blocks.size(); ++j) {
      any_pair = true;
      const Element m = lat.meet(d.blocks[i], d.blocks[j]);
      if (m != zero) d.meets_bottom = false;
      if (m != root) all_root = false;
    }
  d.meets_radical_only = any_pair && !d.meets_bottom && all_root;
  return d;
}

Decomposition decompose_semiprime(const IdealLattice& lattice, Element a) {
  return decompose_semiprime(PrimeSpectrum(lattice), a);
}

}  // namespace latspec
