#pragma once

// Golden pipeline manifest: one pipeline per line,
//   name: expected-exit: latspec ARGS [| latspec ARGS ...]
// Blank lines and lines starting with '#' are ignored.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "latspec/cli.hpp"

namespace golden {

struct Pipeline {
  std::string name;
  int exit = 0;
  std::vector<std::vector<std::string>> stages;  // arguments after "latspec"
};

inline std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

inline std::vector<Pipeline> load(const std::filesystem::path& manifest) {
  std::ifstream in(manifest);
  if (!in) throw std::runtime_error("cannot read " + manifest.string());
  std::vector<Pipeline> out;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    const auto c1 = line.find(':');
    const auto c2 = line.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) throw std::runtime_error("bad manifest line: " + line);
    Pipeline p;
    p.name = words(line.substr(0, c1)).at(0);
    p.exit = std::stoi(line.substr(c1 + 1, c2 - c1 - 1));
    std::string rest = line.substr(c2 + 1);
    std::size_t pos = 0;
    while (true) {
      const auto bar = rest.find('|', pos);
      auto w = words(rest.substr(pos, bar == std::string::npos ? std::string::npos : bar - pos));
      if (w.empty() || w[0] != "latspec") throw std::runtime_error("stage must start with latspec: " + line);
      w.erase(w.begin());
      p.stages.push_back(w);
      if (bar == std::string::npos) break;
      pos = bar + 1;
    }
    out.push_back(p);
  }
  return out;
}

struct Result {
  std::string output;
  int exit = 0;
  bool upstream_ok = true;
};

/// Runs the stages through cli::run, piping each stdout into the next stdin,
/// with relative paths resolved against `dir`.
inline Result run_in_process(const Pipeline& p, const std::filesystem::path& dir) {
  const auto saved = std::filesystem::current_path();
  std::filesystem::current_path(dir);
  Result r;
  std::string input;
  for (std::size_t i = 0; i < p.stages.size(); ++i) {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = latspec::cli::run(p.stages[i], in, out, err);
    if (i + 1 < p.stages.size() && code != 0) r.upstream_ok = false;
    input = out.str();
    r.exit = code;
  }
  std::filesystem::current_path(saved);
  r.output = input;
  return r;
}

}  // namespace golden
