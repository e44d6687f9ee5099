#include "latspec/lattice.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <variant>

namespace latspec {

namespace {

std::string join_indices(const std::vector<Element>& w, const std::vector<std::string>& names) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ", ";
    out += w[i] < names.size() ? names[w[i]] : std::to_string(w[i]);
  }
  return out + ")";
}

AxiomCheck failed(std::string axiom, std::vector<Element> witness, std::string detail) {
  return {std::move(axiom), CheckStatus::fail, false, std::move(witness), std::move(detail)};
}

AxiomCheck passed(std::string axiom, bool automatic = false, std::string detail = {}) {
  return {std::move(axiom), CheckStatus::pass, automatic, {}, std::move(detail)};
}

AxiomCheck skipped(std::string axiom, std::string detail) {
  return {std::move(axiom), CheckStatus::skipped, false, {}, std::move(detail)};
}

// Least upper bound of a and b under `order`, if one exists.
std::optional<Element> least_upper(const OrderMatrix& order, Element a, Element b) {
  const std::size_t n = order.size();
  for (Element c = 0; c < n; ++c) {
    if (!order[a][c] || !order[b][c]) continue;
    bool least = true;
    for (Element d = 0; d < n && least; ++d)
      if (order[a][d] && order[b][d] && !order[c][d]) least = false;
    if (least) return c;
  }
  return std::nullopt;
}

OrderMatrix transpose(const OrderMatrix& order) {
  OrderMatrix t(order.size(), std::vector<bool>(order.size()));
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = 0; j < order.size(); ++j) t[j][i] = order[i][j];
  return t;
}

std::optional<AxiomCheck> check_partial_order(const OrderMatrix& order) {
  const std::size_t n = order.size();
  for (Element a = 0; a < n; ++a)
    if (!order[a][a]) return failed("order", {a}, "relation is not reflexive");
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b)
      if (order[a][b] && order[b][a]) return failed("order", {a, b}, "relation is not antisymmetric");
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (order[a][b] && order[b][c] && !order[a][c])
          return failed("order", {a, b, c}, "relation is not transitive");
  return std::nullopt;
}

struct JoinMeetTables {
  ProductTable join;
  ProductTable meet;
};

// Fills join/meet tables or returns the first pair lacking a join or meet.
std::variant<JoinMeetTables, AxiomCheck> compute_join_meet(const OrderMatrix& order) {
  const std::size_t n = order.size();
  const OrderMatrix dual = transpose(order);
  JoinMeetTables t{ProductTable(n, std::vector<Element>(n)), ProductTable(n, std::vector<Element>(n))};
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      auto j = least_upper(order, a, b);
      if (!j) return failed("L1", {a, b}, "pair has no least upper bound");
      auto m = least_upper(dual, a, b);
      if (!m) return failed("L1", {a, b}, "pair has no greatest lower bound");
      t.join[a][b] = *j;
      t.meet[a][b] = *m;
    }
  }
  return t;
}

}  // namespace

OrderMatrix close_order(std::size_t n, std::span<const std::pair<Element, Element>> pairs) {
  OrderMatrix order(n, std::vector<bool>(n, false));
  for (Element a = 0; a < n; ++a) order[a][a] = true;
  for (auto [a, b] : pairs) order.at(a).at(b) = true;
  for (Element k = 0; k < n; ++k)
    for (Element i = 0; i < n; ++i)
      if (order[i][k])
        for (Element j = 0; j < n; ++j)
          if (order[k][j]) order[i][j] = true;
  return order;
}

bool AxiomReport::ok() const { return first_failure() == nullptr; }

const AxiomCheck* AxiomReport::first_failure() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::fail) return &c;
  return nullptr;
}

AxiomReport verify_axioms(const LatticeData& data) {
  AxiomReport report;
  auto& out = report.checks;
  const std::size_t n = data.size();

  // Shape problems make every later check meaningless.
  if (n == 0) {
    out.push_back(failed("shape", {}, "lattice has no elements"));
    return report;
  }
  bool shape_ok = data.order.size() == n && data.mul.size() == n && data.top < n && data.bottom < n;
  for (std::size_t i = 0; shape_ok && i < n; ++i) {
    shape_ok = data.order[i].size() == n && data.mul[i].size() == n;
    for (std::size_t j = 0; shape_ok && j < n; ++j) shape_ok = data.mul[i][j] < n;
  }
  if (!shape_ok) {
    out.push_back(failed("shape", {}, "order or product table does not match the element count"));
    return report;
  }
  {
    std::unordered_map<std::string, Element> seen;
    for (Element a = 0; a < n; ++a) {
      auto [it, fresh] = seen.emplace(data.names[a], a);
      if (!fresh) {
        out.push_back(failed("shape", {it->second, a}, "duplicate element name"));
        return report;
      }
    }
  }
  out.push_back(passed("shape"));

  if (auto bad = check_partial_order(data.order)) {
    out.push_back(*bad);
    for (const char* ax : {"L1", "bounds", "L2", "associativity", "L3", "L4", "annihilation", "L5"})
      out.push_back(skipped(ax, "order is not a partial order"));
    return report;
  }
  out.push_back(passed("order"));

  auto tables = compute_join_meet(data.order);
  const bool lattice_ok = std::holds_alternative<JoinMeetTables>(tables);
  if (!lattice_ok) {
    out.push_back(std::get<AxiomCheck>(tables));
  } else {
    out.push_back(passed("L1", false, "finite lattice: all pairwise joins and meets exist, hence all subsets"));
  }

  const auto& ord = data.order;
  const auto& mul = data.mul;

  // Declared top and bottom must be the extreme elements.
  {
    AxiomCheck c = passed("bounds");
    for (Element a = 0; a < n && c.status == CheckStatus::pass; ++a) {
      if (!ord[a][data.top]) c = failed("bounds", {data.top, a}, "declared top is not above every element");
      else if (!ord[data.bottom][a]) c = failed("bounds", {data.bottom, a}, "declared bottom is not below every element");
    }
    out.push_back(c);
  }

  if (lattice_ok)
    out.push_back(passed("L2", true, "finite lattice: every element is compact"));
  else
    out.push_back(skipped("L2", "requires L1"));

  {
    AxiomCheck c = passed("associativity");
    for (Element a = 0; a < n && c.status == CheckStatus::pass; ++a)
      for (Element b = 0; b < n && c.status == CheckStatus::pass; ++b)
        for (Element d = 0; d < n; ++d)
          if (mul[mul[a][b]][d] != mul[a][mul[b][d]]) {
            c = failed("associativity", {a, b, d}, "(ab)c != a(bc)");
            break;
          }
    out.push_back(c);
  }

  if (lattice_ok) {
    const auto& join = std::get<JoinMeetTables>(tables).join;
    AxiomCheck c = passed("L3");
    for (Element a = 0; a < n && c.status == CheckStatus::pass; ++a)
      for (Element b = 0; b < n && c.status == CheckStatus::pass; ++b)
        for (Element d = 0; d < n; ++d) {
          if (mul[a][join[b][d]] != join[mul[a][b]][mul[a][d]]) {
            c = failed("L3", {a, b, d}, "a(b v c) != ab v ac");
            break;
          }
          if (mul[join[a][b]][d] != join[mul[a][d]][mul[b][d]]) {
            c = failed("L3", {a, b, d}, "(a v b)c != ac v bc");
            break;
          }
        }
    out.push_back(c);
  } else {
    out.push_back(skipped("L3", "requires L1"));
  }

  {
    AxiomCheck c = passed("L4", false, "top is compact (finite lattice); unit law checked");
    for (Element a = 0; a < n; ++a)
      if (mul[data.top][a] != a || mul[a][data.top] != a) {
        c = failed("L4", {a}, "top is not a two-sided unit");
        break;
      }
    out.push_back(c);
  }

  {
    AxiomCheck c = passed("annihilation");
    for (Element a = 0; a < n; ++a)
      if (mul[data.bottom][a] != data.bottom || mul[a][data.bottom] != data.bottom) {
        c = failed("annihilation", {a}, "bottom does not annihilate");
        break;
      }
    out.push_back(c);
  }

  if (lattice_ok)
    out.push_back(passed("L5", true, "finite lattice: products of compact elements are compact"));
  else
    out.push_back(skipped("L5", "requires L1"));
  return report;
}

struct IdealLattice::Impl {
  LatticeData data;
  ProductTable join;
  ProductTable meet;
  std::unordered_map<std::string, Element> index;
};

IdealLattice IdealLattice::build(LatticeData data) {
  const AxiomReport report = verify_axioms(data);
  if (const AxiomCheck* bad = report.first_failure()) {
    throw ValidationError(bad->axiom, bad->witness,
                          "axiom " + bad->axiom + " fails: " + bad->detail + " at " +
                              join_indices(bad->witness, data.names));
  }
  auto tables = std::get<JoinMeetTables>(compute_join_meet(data.order));
  auto impl = std::make_shared<Impl>();
  for (Element a = 0; a < data.size(); ++a) impl->index.emplace(data.names[a], a);
  impl->join = std::move(tables.join);
  impl->meet = std::move(tables.meet);
  impl->data = std::move(data);
  return IdealLattice(std::move(impl));
}

std::size_t IdealLattice::size() const { return impl_->data.size(); }
const std::string& IdealLattice::name(Element a) const { return impl_->data.names.at(a); }
const std::vector<std::string>& IdealLattice::names() const { return impl_->data.names; }

std::optional<Element> IdealLattice::find(std::string_view name) const {
  auto it = impl_->index.find(std::string(name));
  if (it == impl_->index.end()) return std::nullopt;
  return it->second;
}

Element IdealLattice::at(std::string_view name) const {
  if (auto a = find(name)) return *a;
  throw ValidationError("element", {}, "unknown element '" + std::string(name) + "'");
}

Element IdealLattice::top() const { return impl_->data.top; }
Element IdealLattice::bottom() const { return impl_->data.bottom; }
bool IdealLattice::leq(Element a, Element b) const { return impl_->data.order[a][b]; }
Element IdealLattice::mul(Element a, Element b) const { return impl_->data.mul[a][b]; }
Element IdealLattice::join(Element a, Element b) const { return impl_->join[a][b]; }
Element IdealLattice::meet(Element a, Element b) const { return impl_->meet[a][b]; }

Element IdealLattice::join(std::span<const Element> set) const {
  Element acc = bottom();
  for (Element a : set) acc = join(acc, a);
  return acc;
}

Element IdealLattice::meet(std::span<const Element> set) const {
  Element acc = top();
  for (Element a : set) acc = meet(acc, a);
  return acc;
}

const LatticeData& IdealLattice::data() const { return impl_->data; }

bool operator==(const IdealLattice& a, const IdealLattice& b) {
  if (a.impl_ == b.impl_) return true;
  const auto& x = a.data();
  const auto& y = b.data();
  return x.names == y.names && x.order == y.order && x.mul == y.mul && x.top == y.top &&
         x.bottom == y.bottom;
}

AxiomReport verify_axioms(const IdealLattice& lattice) { return verify_axioms(lattice.data()); }

std::optional<std::pair<Element, Element>> prime_witness(const IdealLattice& lattice, Element p) {
  const std::size_t n = lattice.size();
  for (Element a = 0; a < n; ++a) {
    if (lattice.leq(a, p)) continue;
    for (Element b = 0; b < n; ++b)
      if (!lattice.leq(b, p) && lattice.leq(lattice.mul(a, b), p)) return std::pair{a, b};
  }
  return std::nullopt;
}

bool is_prime(const IdealLattice& lattice, Element p) {
  return p != lattice.top() && !prime_witness(lattice, p);
}

bool is_prime_on_compacts(const IdealLattice& lattice, Element p) {
  if (p == lattice.top()) return false;
  const std::size_t n = lattice.size();
  for (Element a = 0; a < n; ++a) {
    if (!lattice.is_compact(a) || lattice.leq(a, p)) continue;
    for (Element b = 0; b < n; ++b)
      if (lattice.is_compact(b) && !lattice.leq(b, p) && lattice.leq(lattice.mul(a, b), p)) return false;
  }
  return true;
}

std::vector<Element> spec_set(const IdealLattice& lattice) {
  std::vector<Element> primes;
  for (Element p = 0; p < lattice.size(); ++p)
    if (is_prime(lattice, p)) primes.push_back(p);
  return primes;
}

bool is_semiprime(const IdealLattice& lattice, Element a) {
  for (Element b = 0; b < lattice.size(); ++b)
    if (lattice.leq(lattice.mul(b, b), a) && !lattice.leq(b, a)) return false;
  return true;
}

std::vector<Element> v_set(const IdealLattice& lattice, Element a) {
  std::vector<Element> out;
  for (Element p : spec_set(lattice))
    if (lattice.leq(a, p)) out.push_back(p);
  return out;
}

std::vector<Element> d_set(const IdealLattice& lattice, Element a) {
  std::vector<Element> out;
  for (Element p : spec_set(lattice))
    if (!lattice.leq(a, p)) out.push_back(p);
  return out;
}

Element radical(const IdealLattice& lattice, Element a) {
  const auto above = v_set(lattice, a);
  return lattice.meet(above);
}

std::optional<Element> prime_avoidance(const IdealLattice& lattice, Element a,
                                       std::span<const Element> avoid) {
  if (avoid.empty()) throw ValidationError("multiplicative", {}, "avoided set must be non-empty");
  std::vector<bool> member(lattice.size(), false);
  for (Element s : avoid) member.at(s) = true;
  std::vector<Element> sorted(avoid.begin(), avoid.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (Element s : sorted)
    for (Element t : sorted)
      if (!member[lattice.mul(s, t)])
        throw ValidationError("multiplicative", {s, t},
                              "avoided set is not multiplicative: " + lattice.name(s) + "*" +
                                  lattice.name(t) + " = " + lattice.name(lattice.mul(s, t)) +
                                  " is missing");
  for (Element s : sorted)
    if (lattice.leq(s, a)) return std::nullopt;

  auto avoids = [&](Element x) {
    if (!lattice.leq(a, x)) return false;
    for (Element s : sorted)
      if (lattice.leq(s, x)) return false;
    return true;
  };
  for (Element x = 0; x < lattice.size(); ++x) {
    if (!avoids(x)) continue;
    bool maximal = true;
    for (Element y = 0; y < lattice.size() && maximal; ++y)
      if (y != x && lattice.leq(x, y) && avoids(y)) maximal = false;
    if (maximal) return x;
  }
  return std::nullopt;  // unreachable: `a` itself avoids the set
}

Completion ideal_completion(const FinitePoset& poset) {
  const std::size_t n = poset.size();
  if (n == 0) throw ValidationError("joins", {}, "poset is empty, so the empty join is missing");
  if (n > 16) throw Error("ideal completion is limited to posets with at most 16 elements");
  if (auto bad = check_partial_order(poset.order))
    throw ValidationError("order", bad->witness, "poset order: " + bad->detail);

  std::vector<Element> join(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      auto j = least_upper(poset.order, a, b);
      if (!j)
        throw ValidationError("joins", {a, b},
                              "poset lacks the join of " + poset.names[a] + " and " + poset.names[b]);
      join[a * n + b] = *j;
    }
  std::optional<Element> least;
  for (Element a = 0; a < n && !least; ++a) {
    bool below_all = true;
    for (Element b = 0; b < n; ++b) below_all = below_all && poset.order[a][b];
    if (below_all) least = a;
  }
  if (!least) throw ValidationError("joins", {}, "poset has no least element (empty join)");

  std::vector<std::uint32_t> down(n, 0);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (poset.order[b][a]) down[a] |= std::uint32_t{1} << b;

  std::vector<std::uint32_t> masks;
  for (std::uint32_t s = 1; s < (std::uint32_t{1} << n); ++s) {
    bool ok = true;
    for (Element b = 0; b < n && ok; ++b)
      if ((s >> b) & 1U) ok = (down[b] & ~s) == 0;
    for (Element a = 0; a < n && ok; ++a)
      for (Element b = a + 1; b < n && ok; ++b)
        if (((s >> a) & 1U) && ((s >> b) & 1U)) ok = (s >> join[a * n + b]) & 1U;
    if (ok) masks.push_back(s);
  }
  std::sort(masks.begin(), masks.end(), [](std::uint32_t x, std::uint32_t y) {
    const int px = std::popcount(x), py = std::popcount(y);
    return px != py ? px < py : x < y;
  });

  Completion out;
  out.embedding.assign(n, 0);
  for (std::size_t i = 0; i < masks.size(); ++i) {
    std::vector<Element> members;
    std::string name = "I(";
    for (Element b = 0; b < n; ++b)
      if ((masks[i] >> b) & 1U) {
        if (!members.empty()) name += "|";
        members.push_back(b);
        name += poset.names[b];
      }
    out.ideals.push_back(std::move(members));
    out.lattice.names.push_back(name + ")");
    for (Element a = 0; a < n; ++a)
      if (masks[i] == down[a]) {
        out.embedding[a] = i;
        out.compact.push_back(i);
      }
  }
  std::sort(out.compact.begin(), out.compact.end());
  out.lattice.order.assign(masks.size(), std::vector<bool>(masks.size()));
  for (std::size_t i = 0; i < masks.size(); ++i)
    for (std::size_t j = 0; j < masks.size(); ++j) out.lattice.order[i][j] = (masks[i] & ~masks[j]) == 0;
  return out;
}

}  // namespace latspec
