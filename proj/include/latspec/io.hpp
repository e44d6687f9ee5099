#pragma once

// Source-text parsers and JSON / DOT emitters.
//
// All formats are line-oriented sections `key: tokens ...`; a section
// continues on following lines until the next key, and `#` starts a comment.
// Element and point names may not contain whitespace or any of  # < * + = { } , :

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "latspec/adjunction.hpp"
#include "latspec/decomposition.hpp"
#include "latspec/instances.hpp"
#include "latspec/lattice.hpp"
#include "latspec/topology.hpp"

namespace latspec::io {

using Json = nlohmann::json;

std::string read_file(const std::filesystem::path& path);

/// elements / leq / mul / top / bottom. `leq` lists a<b pairs (covering or
/// full); the order is closed reflexively and transitively. Every product
/// must be listed.
LatticeData parse_lattice(std::string_view text);

/// points / opens. Opens are brace sets such as {a,b} or {}; `*` is the
/// whole space.
FiniteSpace parse_space(std::string_view text);

/// elements / add (x+y=z) / mul (x*y=z) / zero / one.
FiniteSemiring parse_semiring(std::string_view text);

enum class DatumKind { delta, sigma };

/// Unresolved datum file: optional lattice and space paths plus one value
/// per element name.
struct DatumSource {
  std::optional<std::string> lattice_path;
  std::optional<std::string> space_path;
  DatumKind kind = DatumKind::delta;
  struct Entry {
    std::size_t line;
    std::string element;
    std::vector<std::string> points;  // "*" alone means the whole space
  };
  std::vector<Entry> entries;
};

DatumSource parse_datum(std::string_view text);
/// Resolves names against a lattice and space; every element needs a value.
std::vector<PointSet> resolve_datum(const DatumSource& src, const IdealLattice& lattice, const FiniteSpace& space);

struct ClosureSource {
  std::optional<std::string> lattice_path;
  std::vector<std::string> members;
};

ClosureSource parse_closure_system(std::string_view text);

/// Lattice source text: covering pairs and the full product table.
std::string write_lattice(const LatticeData& data);

/// Covering pairs (a, b): a < b with nothing strictly between.
std::vector<std::pair<Element, Element>> covering_pairs(const IdealLattice& lattice);

Json names_of(const IdealLattice& lattice, const std::vector<Element>& elements);
Json names_of(const FiniteSpace& space, PointSet set);

Json to_json(const IdealLattice& lattice);
Json to_json(const FiniteSpace& space);
Json to_json(const AxiomReport& report, const std::vector<std::string>& names);
Json to_json(const SpectralReport& report, const FiniteSpace& space);
Json to_json(const Decomposition& d, const PrimeSpectrum& spectrum);
Json to_json(const ClassificationTable& table, const PrimeSpectrum& spectrum);
/// Point map as {source point: target point}.
Json to_json(const ContinuousMap& f);
Json to_json(const UniquenessReport& r);

/// Specialization order: edge x -> y iff y is in the closure of x, y != x.
std::string specialization_dot(const FiniteSpace& space, std::string_view graph_name = "specialization");
/// Hasse diagram, edges from lower to upper covers.
std::string hasse_dot(const IdealLattice& lattice, std::string_view graph_name = "hasse");

}  // namespace latspec::io
