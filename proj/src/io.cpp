#include "latspec/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace latspec::io {

namespace {

struct Token {
  std::size_t line;
  std::string text;
};

struct Section {
  std::size_t line = 0;  // line of the first header
  std::vector<Token> tokens;
  std::vector<Token> raw;  // untokenised remainder of each line
};

constexpr std::string_view kReserved = "#<*+={},:";

bool valid_name(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (kReserved.find(c) != std::string_view::npos || std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

void require_name(const Token& t) {
  if (!valid_name(t.text)) throw ParseError(t.line, "invalid name '" + t.text + "'");
}

std::vector<Token> split_tokens(std::size_t line, std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back({line, std::string(s.substr(i, j - i))});
    i = j;
  }
  return out;
}

// Splits text into `key:` sections. Lines before the first key, and unknown
// keys, are errors.
std::map<std::string, Section> split_sections(std::string_view text, const std::set<std::string>& keys) {
  std::map<std::string, Section> out;
  Section* current = nullptr;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string_view::npos) {
      if (pos > text.size()) break;
      continue;
    }
    std::size_t k = start;
    while (k < line.size() && (std::isalnum(static_cast<unsigned char>(line[k])) || line[k] == '_')) ++k;
    if (k > start && k < line.size() && line[k] == ':') {
      std::string key(line.substr(start, k - start));
      if (!keys.contains(key)) throw ParseError(line_no, "unknown section '" + key + "'");
      auto [it, fresh] = out.try_emplace(key);
      if (fresh) it->second.line = line_no;
      current = &it->second;
      line = line.substr(k + 1);
    } else if (current == nullptr) {
      throw ParseError(line_no, "expected a section header");
    }
    auto toks = split_tokens(line_no, line);
    current->tokens.insert(current->tokens.end(), toks.begin(), toks.end());
    current->raw.push_back({line_no, std::string(line)});
    if (pos > text.size()) break;
  }
  return out;
}

const Section& need(const std::map<std::string, Section>& sections, const std::string& key) {
  auto it = sections.find(key);
  if (it == sections.end()) throw ParseError(0, "missing section '" + key + ":'");
  return it->second;
}

const Token& single(const std::map<std::string, Section>& sections, const std::string& key) {
  const Section& s = need(sections, key);
  if (s.tokens.size() != 1) throw ParseError(s.line, "section '" + key + ":' needs exactly one value");
  return s.tokens.front();
}

class NameIndex {
 public:
  explicit NameIndex(const Section& elements, std::string_view what) {
    for (const Token& t : elements.tokens) {
      require_name(t);
      if (!index_.emplace(t.text, names_.size()).second)
        throw ParseError(t.line, "duplicate " + std::string(what) + " '" + t.text + "'");
      names_.push_back(t.text);
    }
  }
  std::size_t at(const Token& t, std::string_view s) const {
    auto it = index_.find(std::string(s));
    if (it == index_.end()) throw ParseError(t.line, "unknown name '" + std::string(s) + "'");
    return it->second;
  }
  std::size_t at(const Token& t) const { return at(t, t.text); }
  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return names_.size(); }

 private:
  std::vector<std::string> names_;
  std::map<std::string, std::size_t> index_;
};

// Parses `a OP b = c` entries into a complete table.
std::vector<std::vector<std::size_t>> parse_table(const Section& s, const NameIndex& names, char op,
                                                  const std::string& what) {
  const std::size_t n = names.size();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n, unset));
  for (const Token& t : s.tokens) {
    const auto o = t.text.find(op);
    const auto eq = t.text.find('=');
    if (o == std::string::npos || eq == std::string::npos || eq < o)
      throw ParseError(t.line, "expected x" + std::string(1, op) + "y=z, got '" + t.text + "'");
    const std::string_view tv = t.text;
    const std::size_t a = names.at(t, tv.substr(0, o));
    const std::size_t b = names.at(t, tv.substr(o + 1, eq - o - 1));
    const std::size_t c = names.at(t, tv.substr(eq + 1));
    if (table[a][b] != unset && table[a][b] != c)
      throw ParseError(t.line, "conflicting " + what + " entry '" + t.text + "'");
    table[a][b] = c;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (table[a][b] == unset)
        throw ParseError(s.line, "missing " + what + " entry " + names.names()[a] + std::string(1, op) +
                                     names.names()[b]);
  return table;
}

// Brace sets `{a,b}`, `{}` and `*` from the raw lines of a section.
struct RawSet {
  std::size_t line;
  bool all = false;
  std::vector<std::string> members;
};

std::vector<RawSet> parse_sets(std::size_t line, std::string_view s) {
  std::vector<RawSet> out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  for (skip(); i < s.size(); skip()) {
    if (s[i] == '*') {
      out.push_back({line, true, {}});
      ++i;
      continue;
    }
    if (s[i] != '{') throw ParseError(line, "expected '{' or '*'");
    ++i;
    RawSet set{line, false, {}};
    std::string cur;
    bool closed = false;
    for (; i < s.size(); ++i) {
      const char c = s[i];
      if (c == '}' || c == ',') {
        if (!cur.empty()) {
          if (!valid_name(cur)) throw ParseError(line, "invalid name '" + cur + "'");
          set.members.push_back(cur);
        } else if (c == ',' || !set.members.empty()) {
          throw ParseError(line, "empty name in set");
        }
        cur.clear();
        if (c == '}') {
          closed = true;
          ++i;
          break;
        }
      } else if (!std::isspace(static_cast<unsigned char>(c))) {
        cur.push_back(c);
      }
    }
    if (!closed) throw ParseError(line, "unterminated '{'");
    out.push_back(std::move(set));
  }
  return out;
}

PointSet to_points(const RawSet& raw, const FiniteSpace& space) {
  if (raw.all) return space.all();
  PointSet s;
  for (const auto& m : raw.members) {
    auto p = space.find(m);
    if (!p) throw ParseError(raw.line, "unknown point '" + m + "'");
    s.insert(*p);
  }
  return s;
}

std::string quote(std::string_view s) { return "\"" + std::string(s) + "\""; }

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LatticeData parse_lattice(std::string_view text) {
  const auto sections = split_sections(text, {"elements", "leq", "mul", "top", "bottom"});
  const NameIndex names(need(sections, "elements"), "element");
  const std::size_t n = names.size();
  if (n == 0) throw ParseError(need(sections, "elements").line, "no elements");

  std::vector<std::pair<Element, Element>> pairs;
  if (auto it = sections.find("leq"); it != sections.end()) {
    for (const Token& t : it->second.tokens) {
      const auto lt = t.text.find('<');
      if (lt == std::string::npos) throw ParseError(t.line, "expected a<b, got '" + t.text + "'");
      const std::string_view tv = t.text;
      pairs.emplace_back(names.at(t, tv.substr(0, lt)), names.at(t, tv.substr(lt + 1)));
    }
  }

  LatticeData data;
  data.names = names.names();
  data.order = close_order(n, pairs);
  data.mul = parse_table(need(sections, "mul"), names, '*', "mul");
  data.top = names.at(single(sections, "top"));
  data.bottom = names.at(single(sections, "bottom"));
  return data;
}

FiniteSpace parse_space(std::string_view text) {
  const auto sections = split_sections(text, {"points", "opens"});
  const Section& pts = sections.contains("points") ? sections.at("points") : Section{};
  const NameIndex names(pts, "point");
  if (names.size() > PointSet::kMaxPoints)
    throw ParseError(pts.line, "more than " + std::to_string(PointSet::kMaxPoints) + " points");
  FiniteSpace bare(names.names(), {PointSet{}, PointSet::full(names.size())});

  std::vector<PointSet> opens;
  if (auto it = sections.find("opens"); it != sections.end())
    for (const Token& raw : it->second.raw)
      for (const RawSet& set : parse_sets(raw.line, raw.text)) opens.push_back(to_points(set, bare));
  return FiniteSpace(names.names(), std::move(opens));
}

FiniteSemiring parse_semiring(std::string_view text) {
  const auto sections = split_sections(text, {"elements", "add", "mul", "zero", "one"});
  const NameIndex names(need(sections, "elements"), "element");
  if (names.size() == 0) throw ParseError(need(sections, "elements").line, "no elements");
  FiniteSemiring s;
  s.names = names.names();
  s.add = parse_table(need(sections, "add"), names, '+', "add");
  s.mul = parse_table(need(sections, "mul"), names, '*', "mul");
  s.zero = names.at(single(sections, "zero"));
  s.one = names.at(single(sections, "one"));
  return s;
}

DatumSource parse_datum(std::string_view text) {
  const auto sections = split_sections(text, {"lattice", "space", "delta", "sigma"});
  DatumSource src;
  if (sections.contains("lattice")) src.lattice_path = single(sections, "lattice").text;
  if (sections.contains("space")) src.space_path = single(sections, "space").text;
  const bool has_delta = sections.contains("delta"), has_sigma = sections.contains("sigma");
  if (has_delta == has_sigma) throw ParseError(0, "a datum needs exactly one of 'delta:' or 'sigma:'");
  src.kind = has_delta ? DatumKind::delta : DatumKind::sigma;
  const Section& body = sections.at(has_delta ? "delta" : "sigma");

  for (const Token& raw : body.raw) {
    std::string_view s = raw.text;
    std::size_t i = 0;
    while (true) {
      while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
      if (i == s.size()) break;
      const auto eq = s.find('=', i);
      if (eq == std::string_view::npos) throw ParseError(raw.line, "expected element={...}");
      std::string element(s.substr(i, eq - i));
      while (!element.empty() && std::isspace(static_cast<unsigned char>(element.back()))) element.pop_back();
      if (!valid_name(element)) throw ParseError(raw.line, "invalid name '" + element + "'");
      i = eq + 1;
      while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
      std::size_t j = i;
      if (j < s.size() && s[j] == '*') {
        ++j;
      } else {
        j = s.find('}', i);
        if (j == std::string_view::npos) throw ParseError(raw.line, "unterminated '{'");
        ++j;
      }
      auto sets = parse_sets(raw.line, s.substr(i, j - i));
      if (sets.size() != 1) throw ParseError(raw.line, "expected one set for '" + element + "'");
      DatumSource::Entry e{raw.line, element, sets[0].members};
      if (sets[0].all) e.points = {"*"};
      src.entries.push_back(std::move(e));
      i = j;
    }
  }
  return src;
}

std::vector<PointSet> resolve_datum(const DatumSource& src, const IdealLattice& lattice, const FiniteSpace& space) {
  std::vector<std::optional<PointSet>> values(lattice.size());
  for (const auto& e : src.entries) {
    auto a = lattice.find(e.element);
    if (!a) throw ParseError(e.line, "unknown element '" + e.element + "'");
    RawSet raw{e.line, e.points.size() == 1 && e.points[0] == "*", e.points};
    PointSet s = to_points(raw, space);
    if (values[*a] && *values[*a] != s) throw ParseError(e.line, "conflicting value for '" + e.element + "'");
    values[*a] = s;
  }
  std::vector<PointSet> out;
  for (Element a = 0; a < lattice.size(); ++a) {
    if (!values[a]) throw ParseError(0, "no value for element '" + lattice.name(a) + "'");
    out.push_back(*values[a]);
  }
  return out;
}

ClosureSource parse_closure_system(std::string_view text) {
  const auto sections = split_sections(text, {"lattice", "members"});
  ClosureSource src;
  if (sections.contains("lattice")) src.lattice_path = single(sections, "lattice").text;
  for (const Token& t : need(sections, "members").tokens) {
    require_name(t);
    src.members.push_back(t.text);
  }
  return src;
}

std::vector<std::pair<Element, Element>> covering_pairs(const IdealLattice& lattice) {
  std::vector<std::pair<Element, Element>> out;
  const std::size_t n = lattice.size();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      if (a == b || !lattice.leq(a, b)) continue;
      bool cover = true;
      for (Element c = 0; c < n && cover; ++c)
        if (c != a && c != b && lattice.leq(a, c) && lattice.leq(c, b)) cover = false;
      if (cover) out.emplace_back(a, b);
    }
  return out;
}

std::string write_lattice(const LatticeData& data) {
  const std::size_t n = data.size();
  std::ostringstream out;
  out << "elements:";
  for (const auto& name : data.names) out << ' ' << name;
  out << "\nleq:";
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      if (a == b || !data.order[a][b]) continue;
      bool cover = true;
      for (Element c = 0; c < n && cover; ++c)
        if (c != a && c != b && data.order[a][c] && data.order[c][b]) cover = false;
      if (cover) out << ' ' << data.names[a] << '<' << data.names[b];
    }
  out << "\nmul:\n";
  for (Element a = 0; a < n; ++a) {
    out << ' ';
    for (Element b = 0; b < n; ++b) out << ' ' << data.names[a] << '*' << data.names[b] << '=' << data.names[data.mul[a][b]];
    out << '\n';
  }
  out << "top: " << data.names[data.top] << "\nbottom: " << data.names[data.bottom] << '\n';
  return out.str();
}

Json names_of(const IdealLattice& lattice, const std::vector<Element>& elements) {
  Json out = Json::array();
  for (Element a : elements) out.push_back(lattice.name(a));
  return out;
}

Json names_of(const FiniteSpace& space, PointSet set) {
  Json out = Json::array();
  for (Point p : set.to_vector()) out.push_back(space.name(p));
  return out;
}

Json to_json(const IdealLattice& lattice) {
  Json covers = Json::array();
  for (auto [a, b] : covering_pairs(lattice)) covers.push_back({lattice.name(a), lattice.name(b)});
  Json mul = Json::array();
  for (Element a = 0; a < lattice.size(); ++a) {
    Json row = Json::array();
    for (Element b = 0; b < lattice.size(); ++b) row.push_back(lattice.name(lattice.mul(a, b)));
    mul.push_back(row);
  }
  return {{"elements", lattice.names()},
          {"covers", covers},
          {"mul", mul},
          {"top", lattice.name(lattice.top())},
          {"bottom", lattice.name(lattice.bottom())}};
}

Json to_json(const FiniteSpace& space) {
  Json opens = Json::array();
  for (PointSet u : space.opens()) opens.push_back(names_of(space, u));
  return {{"points", space.names()}, {"opens", opens}};
}

Json to_json(const AxiomReport& report, const std::vector<std::string>& names) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json witness = Json::array();
    for (Element w : c.witness) witness.push_back(w < names.size() ? names[w] : std::to_string(w));
    const char* status = c.status == CheckStatus::pass ? "pass" : c.status == CheckStatus::fail ? "fail" : "skipped";
    Json j = {{"axiom", c.axiom}, {"status", status}, {"automatic", c.automatic}, {"witness", witness}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    checks.push_back(j);
  }
  return {{"ok", report.ok()}, {"checks", checks}};
}

Json to_json(const SpectralReport& report, const FiniteSpace& space) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json witness = Json::array();
    for (Point w : c.witness) witness.push_back(w < space.size() ? space.name(w) : std::to_string(w));
    Json j = {{"property", c.property}, {"passed", c.passed}, {"automatic", c.automatic}, {"witness", witness}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    checks.push_back(j);
  }
  return {{"ok", report.ok()}, {"checks", checks}};
}

Json to_json(const Decomposition& d, const PrimeSpectrum& spectrum) {
  const auto& lat = spectrum.lattice();
  Json blocks = Json::array();
  for (std::size_t i = 0; i < d.blocks.size(); ++i)
    blocks.push_back({{"element", lat.name(d.blocks[i])}, {"support", names_of(spectrum.dual(), d.supports[i])}});
  return {{"target", lat.name(d.target)},
          {"support", names_of(spectrum.dual(), spectrum.supp(d.target))},
          {"blocks", blocks},
          {"join_matches", d.join_matches},
          {"supports_disjoint", d.supports_disjoint},
          {"blocks_semiprime", d.blocks_semiprime},
          {"blocks_indecomposable", d.blocks_indecomposable},
          {"bottom_semiprime", d.bottom_semiprime},
          {"meets_bottom", d.meets_bottom},
          {"meets_radical_only", d.meets_radical_only},
          {"degenerate", d.degenerate}};
}

Json to_json(const ClassificationTable& table, const PrimeSpectrum& spectrum) {
  Json pairs = Json::array();
  for (const auto& [a, s] : table.pairs)
    pairs.push_back({{"element", spectrum.lattice().name(a)}, {"subset", names_of(spectrum.zariski(), s)}});
  return pairs;
}

Json to_json(const ContinuousMap& f) {
  Json out = Json::object();
  for (Point x = 0; x < f.map.size(); ++x) out[f.source.name(x)] = f.target.name(f.map[x]);
  return out;
}

Json to_json(const UniquenessReport& r) {
  return {{"skipped", r.skipped}, {"candidates", r.candidates}, {"solutions", r.solutions}};
}

std::string specialization_dot(const FiniteSpace& space, std::string_view graph_name) {
  std::ostringstream out;
  out << "digraph " << graph_name << " {\n";
  for (Point x = 0; x < space.size(); ++x) out << "  " << quote(space.name(x)) << ";\n";
  for (Point x = 0; x < space.size(); ++x)
    for (Point y : space.closure(x).to_vector())
      if (y != x) out << "  " << quote(space.name(x)) << " -> " << quote(space.name(y)) << ";\n";
  out << "}\n";
  return out.str();
}

std::string hasse_dot(const IdealLattice& lattice, std::string_view graph_name) {
  std::ostringstream out;
  out << "digraph " << graph_name << " {\n  rankdir=BT;\n";
  for (Element a = 0; a < lattice.size(); ++a) out << "  " << quote(lattice.name(a)) << ";\n";
  for (auto [a, b] : covering_pairs(lattice))
    out << "  " << quote(lattice.name(a)) << " -> " << quote(lattice.name(b)) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace latspec::io
