#include "latspec/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "latspec/io.hpp"

namespace latspec::cli {

namespace {

namespace fs = std::filesystem;
using io::Json;

struct InputError {
  std::string message;
};

struct Options {
  std::string format = "json";
  bool dot = false;
  bool quiet = false;
  std::uint64_t max_enum = kDefaultMaxEnum;
};

std::string describe(const ValidationError& e) {
  std::string s = e.what();
  s += " [check " + e.check();
  if (!e.witness().empty()) {
    s += ", witness";
    for (std::size_t w : e.witness()) s += " " + std::to_string(w);
  }
  return s + "]";
}

// Runs `f`, attributing library errors to `label`.
template <typename F>
auto within(const std::string& label, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw InputError{label + (e.line() ? ":" + std::to_string(e.line()) : std::string()) + ": " + e.what()};
  } catch (const ValidationError& e) {
    throw InputError{label + ": " + describe(e)};
  } catch (const Error& e) {
    throw InputError{label + ": " + e.what()};
  }
}

class Session {
 public:
  Session(std::istream& in, std::ostream& out, Options opts) : in_(in), out_(out), opts_(std::move(opts)) {}

  const Options& opts() const { return opts_; }

  bool dot() const { return opts_.dot || opts_.format == "dot"; }

  void require_json(const std::string& command) const {
    if (dot()) throw InputError{command + ": no DOT output for this command"};
  }

  std::string text(const std::string& path) {
    if (path == "-") {
      if (stdin_used_) throw InputError{"standard input can only be read once"};
      stdin_used_ = true;
      std::ostringstream ss;
      ss << in_.rdbuf();
      return ss.str();
    }
    return within(path, [&] { return io::read_file(path); });
  }

  static std::string label(const std::string& path) { return path == "-" ? "<stdin>" : path; }

  LatticeData lattice_data(const std::string& path) {
    const std::string t = text(path);
    return within(label(path), [&] { return io::parse_lattice(t); });
  }

  IdealLattice lattice(const std::string& path) {
    auto data = lattice_data(path);
    return within(label(path), [&] { return IdealLattice::build(std::move(data)); });
  }

  FiniteSpace space(const std::string& path) {
    const std::string t = text(path);
    return within(label(path), [&] { return io::parse_space(t); });
  }

  Element element(const IdealLattice& lat, const std::string& path, const std::string& name) {
    return within(label(path), [&] { return lat.at(name); });
  }

  void emit(const Json& j) { out_ << j.dump(2) << '\n'; }
  void emit(const std::string& s) { out_ << s; }

 private:
  std::istream& in_;
  std::ostream& out_;
  Options opts_;
  bool stdin_used_ = false;
};

Json verdict_json(const Verdict& v) {
  Json j = {{"ok", v.ok}};
  if (!v.ok) {
    j["check"] = v.check;
    j["witness"] = v.witness;
    j["detail"] = v.detail;
  }
  return j;
}

int cmd_verify(Session& s, const std::string& path) {
  const LatticeData data = s.lattice_data(path);
  const AxiomReport report = verify_axioms(data);
  if (s.dot()) {
    if (!report.ok()) {
      s.emit(io::to_json(report, data.names));
      return kExitFailed;
    }
    s.emit(io::hasse_dot(IdealLattice::build(data)));
    return kExitOk;
  }
  Json j = io::to_json(report, data.names);
  j["elements"] = data.size();
  s.emit(j);
  return report.ok() ? kExitOk : kExitFailed;
}

int cmd_spec(Session& s, const std::string& path) {
  const PrimeSpectrum spec(s.lattice(path));
  const SpectralReport report = verify_spectral(spec.zariski());
  if (s.dot()) {
    s.emit(io::specialization_dot(spec.zariski(), "spec"));
    return report.ok() ? kExitOk : kExitFailed;
  }
  Json opens = Json::array();
  for (PointSet u : spec.zariski().opens()) opens.push_back(io::names_of(spec.zariski(), u));
  Json open_of = Json::object();
  for (Element a = 0; a < spec.lattice().size(); ++a)
    open_of[spec.lattice().name(a)] = io::names_of(spec.zariski(), spec.open_set(a));
  s.emit(Json{{"primes", io::names_of(spec.lattice(), spec.primes())},
              {"opens", opens},
              {"open_of", open_of},
              {"spectral", report.ok()}});
  return report.ok() ? kExitOk : kExitFailed;
}

int cmd_dual(Session& s, const std::string& path) {
  const FiniteSpace x = s.space(path);
  const SpectralReport report = verify_spectral(x);
  if (!report.ok()) {
    s.emit(Json{{"spectral", false}, {"report", io::to_json(report, x)}});
    return kExitFailed;
  }
  const FiniteSpace d = hochster_dual(x);
  if (s.dot()) {
    s.emit(io::specialization_dot(d, "dual"));
    return kExitOk;
  }
  Json j = io::to_json(d);
  j["spectral"] = true;
  j["involution"] = hochster_dual(d) == x;
  s.emit(j);
  return j["involution"].get<bool>() ? kExitOk : kExitFailed;
}

int cmd_radical(Session& s, const std::string& path, const std::string& name) {
  s.require_json("radical");
  const IdealLattice lat = s.lattice(path);
  const Element a = s.element(lat, path, name);
  s.emit(Json{{"element", lat.name(a)},
              {"radical", lat.name(radical(lat, a))},
              {"semiprime", is_semiprime(lat, a)},
              {"primes_above", io::names_of(lat, v_set(lat, a))}});
  return kExitOk;
}

int cmd_supp(Session& s, const std::string& path, const std::string& name) {
  s.require_json("supp");
  const PrimeSpectrum spec(s.lattice(path));
  const Element a = s.element(spec.lattice(), path, name);
  const PointSet supp = spec.supp(a);
  s.emit(Json{{"element", spec.lattice().name(a)},
              {"support", io::names_of(spec.dual(), supp)},
              {"closed_in_dual", spec.dual().is_closed(supp)}});
  return kExitOk;
}

int cmd_classify(Session& s, const std::string& path) {
  s.require_json("classify");
  const PrimeSpectrum spec(s.lattice(path));
  Json j = Json::object();
  bool ok = true;
  for (auto kind : {ClassificationKind::closed, ClassificationKind::open, ClassificationKind::support}) {
    const ClassificationTable table = kind == ClassificationKind::closed ? classify_closed(spec)
                                      : kind == ClassificationKind::open ? classify_open(spec)
                                                                         : classify_supp(spec);
    const ClassificationReport report = verify_classification(spec, table);
    ok = ok && report.ok();
    Json entry = {{"pairs", io::to_json(table, spec)},
                  {"bijective", report.bijective},
                  {"round_trip", report.round_trip},
                  {"monotone", report.monotone}};
    if (!report.detail.empty()) entry["detail"] = report.detail;
    j[std::string(to_string(kind))] = entry;
  }
  j["primes"] = io::names_of(spec.lattice(), spec.primes());
  s.emit(j);
  return ok ? kExitOk : kExitFailed;
}

int cmd_decompose(Session& s, const std::string& path, const std::string& name) {
  s.require_json("decompose");
  const PrimeSpectrum spec(s.lattice(path));
  const Element a = s.element(spec.lattice(), path, name);
  const Decomposition d = within(Session::label(path), [&] { return decompose_semiprime(spec, a); });
  s.emit(io::to_json(d, spec));
  const bool ok = (d.join_matches || d.degenerate) && d.supports_disjoint && d.blocks_semiprime && d.blocks_indecomposable;
  return ok ? kExitOk : kExitFailed;
}

int cmd_openlattice(Session& s, const std::string& path) {
  const FiniteSpace x = s.space(path);
  const SpectralReport report = verify_spectral(x);
  if (!report.ok()) {
    s.emit(Json{{"spectral", false}, {"report", io::to_json(report, x)}});
    return kExitFailed;
  }
  const OpenLattice ol = open_lattice(x);
  if (s.dot()) {
    s.emit(io::hasse_dot(ol.lattice, "openlattice"));
    return kExitOk;
  }
  const bool axioms = verify_axioms(ol.lattice).ok();
  const bool homeo = canonical_homeo(x).is_homeomorphism();
  Json j = io::to_json(ol.lattice);
  j["axioms_ok"] = axioms;
  j["reconstruction"] = homeo;
  s.emit(j);
  return axioms && homeo ? kExitOk : kExitFailed;
}

struct LoadedDatum {
  io::DatumSource source;
  std::string label;
  fs::path dir;
};

LoadedDatum load_datum(Session& s, const std::string& path) {
  const std::string t = s.text(path);
  LoadedDatum d;
  d.label = Session::label(path);
  d.dir = path == "-" ? fs::current_path() : fs::path(path).parent_path();
  d.source = within(d.label, [&] { return io::parse_datum(t); });
  return d;
}

std::string resolve(const LoadedDatum& d, const std::string& rel) {
  const fs::path p(rel);
  return (p.is_absolute() ? p : d.dir / p).string();
}

bool same_file(const std::string& a, const std::string& b) {
  std::error_code ec;
  const bool eq = fs::equivalent(a, b, ec);
  return !ec && eq;
}

Json datum_failure(const Verdict& v) { return Json{{"datum", verdict_json(v)}}; }

int cmd_adjoint(Session& s, const std::string& lattice_path, const std::string& space_path,
                const std::string& datum_path) {
  s.require_json("adjoint-check");
  const IdealLattice lat = s.lattice(lattice_path);
  const FiniteSpace x = s.space(space_path);
  const LoadedDatum ld = load_datum(s, datum_path);
  if (ld.source.kind != io::DatumKind::delta) throw InputError{ld.label + ": adjoint-check needs a 'delta:' datum"};
  if (ld.source.lattice_path && lattice_path != "-" && !same_file(resolve(ld, *ld.source.lattice_path), lattice_path))
    throw InputError{ld.label + ": datum refers to a different lattice file"};
  if (ld.source.space_path && space_path != "-" && !same_file(resolve(ld, *ld.source.space_path), space_path))
    throw InputError{ld.label + ": datum refers to a different space file"};
  const SpectrumDatum d{lat, x, within(ld.label, [&] { return io::resolve_datum(ld.source, lat, x); })};
  if (const SpectralReport r = verify_spectral(x); !r.ok())
    throw InputError{Session::label(space_path) + ": space is not spectral (" + r.first_failure()->property + ")"};

  const Verdict v = verify_datum(d);
  if (!v.ok) {
    s.emit(datum_failure(v));
    return kExitFailed;
  }
  const OpenLattice ol = open_lattice(x);
  LatticeMorphism phi{lat, ol.lattice, {}};
  for (Element a = 0; a < lat.size(); ++a) phi.map.push_back(*ol.element_of(d.delta[a]));
  const PrimeSpectrum spec(lat);
  const ContinuousMap f = sigma_adjunct(phi, ol);
  const LatticeMorphism back = lambda_adjunct(f, spec);
  const ContinuousMap again = sigma_adjunct(back, ol);
  bool preimage = true;
  for (Element a = 0; a < lat.size(); ++a) preimage = preimage && f.preimage(spec.open_set(a)) == d.delta[a];
  const UniquenessReport u = count_spectrum_solutions(d, s.opts().max_enum);

  const bool ok = preimage && back == phi && again == f && f.is_continuous() && (u.skipped || u.solutions == 1);
  s.emit(Json{{"datum", verdict_json(v)},
              {"map", io::to_json(f)},
              {"continuous", f.is_continuous()},
              {"preimage_identity", preimage},
              {"lambda_sigma_identity", back == phi},
              {"sigma_lambda_identity", again == f},
              {"uniqueness", io::to_json(u)}});
  return ok ? kExitOk : kExitFailed;
}

int cmd_classifying(Session& s, const std::string& datum_path) {
  s.require_json("classifying");
  const LoadedDatum ld = load_datum(s, datum_path);
  if (ld.source.kind != io::DatumKind::sigma) throw InputError{ld.label + ": classifying needs a 'sigma:' datum"};
  if (!ld.source.lattice_path || !ld.source.space_path)
    throw InputError{ld.label + ": datum must name its 'lattice:' and 'space:' files"};
  const std::string lattice_path = resolve(ld, *ld.source.lattice_path);
  const std::string space_path = resolve(ld, *ld.source.space_path);
  const IdealLattice lat = s.lattice(lattice_path);
  const FiniteSpace x = s.space(space_path);
  const SupportDatum d{lat, x, within(ld.label, [&] { return io::resolve_datum(ld.source, lat, x); })};
  if (const SpectralReport r = verify_spectral(x); !r.ok())
    throw InputError{space_path + ": space is not spectral (" + r.first_failure()->property + ")"};

  const Verdict v = verify_datum(d);
  if (!v.ok) {
    s.emit(datum_failure(v));
    return kExitFailed;
  }
  const ClassifyingReport r = classifying_report(d);
  const UniquenessReport u = count_support_solutions(d, s.opts().max_enum);
  s.emit(Json{{"datum", verdict_json(v)},
              {"classifying", r.homeomorphism},
              {"homeomorphism", r.homeomorphism},
              {"bijection", r.bijection},
              {"comparison", io::to_json(r.comparison)},
              {"uniqueness", io::to_json(u)}});
  return r.homeomorphism ? kExitOk : kExitFailed;
}

int emit_generated(Session& s, const IdealLattice& lat) {
  if (s.dot())
    s.emit(io::hasse_dot(lat));
  else if (s.opts().format == "json")
    s.emit(io::to_json(lat));
  else
    s.emit(io::write_lattice(lat.data()));
  return kExitOk;
}

int cmd_gen_divisor(Session& s, std::uint64_t n) {
  if (n == 0) throw InputError{"gen divisor: n must be positive"};
  return emit_generated(s, divisor_lattice(n));
}

int cmd_gen_semiring(Session& s, const std::string& path) {
  const std::string t = s.text(path);
  const std::string label = Session::label(path);
  const FiniteSemiring semiring = within(label, [&] { return io::parse_semiring(t); });
  within(label, [&] { verify_semiring(semiring).require(); });
  const auto ideals = within(label, [&] { return semiring_ideal_lattice(semiring); });
  return emit_generated(s, ideals.lattice);
}

std::optional<std::uint64_t> env_max_enum() {
  const char* v = std::getenv("LATSPEC_MAX_ENUM");
  if (v == nullptr || *v == '\0') return std::nullopt;
  char* end = nullptr;
  errno = 0;
  const unsigned long long n = std::strtoull(v, &end, 10);
  if (errno != 0 || *end != '\0' || v[0] == '-') throw InputError{"LATSPEC_MAX_ENUM: not a number: " + std::string(v)};
  return n;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite ideal lattices, their spectra and support data", "latspec"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opts;
  bool text_format = false;
  std::optional<std::uint64_t> max_enum;
  app.add_flag("--dot", opts.dot, "DOT output (specialization order or Hasse diagram)");
  app.add_option("--format", opts.format, "json, dot, or text (gen only)")->check(CLI::IsMember({"json", "dot", "text"}));
  app.add_option("--max-enum", max_enum, "cap on point maps enumerated by uniqueness checks");
  app.add_flag("--quiet", opts.quiet, "suppress standard output");

  std::string file1, file2, file3, name;
  std::uint64_t n = 0;
  std::function<int(Session&)> action;

  auto lattice_cmd = [&](const char* cmd, const char* help, int (*f)(Session&, const std::string&)) {
    auto* sub = app.add_subcommand(cmd, help);
    sub->add_option("lattice", file1, "lattice file")->required();
    sub->callback([&, f] { action = [&, f](Session& s) { return f(s, file1); }; });
  };
  auto element_cmd = [&](const char* cmd, const char* help,
                         int (*f)(Session&, const std::string&, const std::string&)) {
    auto* sub = app.add_subcommand(cmd, help);
    sub->add_option("lattice", file1, "lattice file")->required();
    sub->add_option("element", name, "element name")->required();
    sub->callback([&, f] { action = [&, f](Session& s) { return f(s, file1, name); }; });
  };
  auto space_cmd = [&](const char* cmd, const char* help, int (*f)(Session&, const std::string&)) {
    auto* sub = app.add_subcommand(cmd, help);
    sub->add_option("space", file1, "space file")->required();
    sub->callback([&, f] { action = [&, f](Session& s) { return f(s, file1); }; });
  };

  lattice_cmd("verify", "check the lattice axioms", cmd_verify);
  lattice_cmd("spec", "prime spectrum with the Zariski topology", cmd_spec);
  space_cmd("dual", "Hochster dual of a spectral space", cmd_dual);
  element_cmd("radical", "radical of an element", cmd_radical);
  element_cmd("supp", "support of an element in the dual spectrum", cmd_supp);
  lattice_cmd("classify", "semiprime classification tables", cmd_classify);
  element_cmd("decompose", "decomposition of a semiprime element", cmd_decompose);
  space_cmd("openlattice", "lattice of open sets", cmd_openlattice);

  auto* adj = app.add_subcommand("adjoint-check", "adjunction round trip for a spectrum datum");
  adj->add_option("lattice", file1, "lattice file")->required();
  adj->add_option("space", file2, "space file")->required();
  adj->add_option("datum", file3, "datum file")->required();
  adj->callback([&] { action = [&](Session& s) { return cmd_adjoint(s, file1, file2, file3); }; });

  auto* cls = app.add_subcommand("classifying", "is a support datum classifying");
  cls->add_option("datum", file1, "datum file")->required();
  cls->callback([&] { action = [&](Session& s) { return cmd_classifying(s, file1); }; });

  auto* gen = app.add_subcommand("gen", "generate a lattice (lattice text by default)");
  gen->require_subcommand(1);
  auto* div = gen->add_subcommand("divisor", "ideals of Z/n");
  div->add_option("n", n, "modulus")->required();
  div->callback([&] { action = [&](Session& s) { return cmd_gen_divisor(s, n); }; });
  auto* sr = gen->add_subcommand("semiring", "ideals of a finite semiring");
  sr->add_option("file", file1, "semiring file")->required();
  sr->callback([&] { action = [&](Session& s) { return cmd_gen_semiring(s, file1); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  const bool is_gen = gen->parsed();
  if (!is_gen) {
    if (opts.format == "text") {
      err << "latspec: --format text is only available for gen\n";
      return kExitInput;
    }
  } else {
    text_format = !opts.dot && app.count("--format") == 0;
    if (text_format) opts.format = "text";
  }

  std::ostringstream sink;
  try {
    if (max_enum)
      opts.max_enum = *max_enum;
    else if (auto e = env_max_enum())
      opts.max_enum = *e;
    Session session(in, opts.quiet ? static_cast<std::ostream&>(sink) : out, opts);
    return action(session);
  } catch (const InputError& e) {
    err << "latspec: " << e.message << '\n';
    return kExitInput;
  } catch (const Error& e) {
    err << "latspec: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::logic_error& e) {
    err << "latspec: internal check failed: " << e.what() << '\n';
    return kExitFailed;
  }
}

}  // namespace latspec::cli
