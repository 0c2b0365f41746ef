#pragma once

// Plain-text ideal files:
//   vars: x, y, z
//   field: fp:32003
//   <one generator per line>

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gor/error.hpp"
#include "gor/field.hpp"
#include "gor/polynomial.hpp"

namespace gor {

/// FNV-1a, 64 bit.
inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::string hex64(std::uint64_t h) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int k = 15; k >= 0; --k, h >>= 4) s[k] = digits[h & 15];
  return s;
}

struct IdealFile {
  std::vector<std::string> vars;
  FieldSpec field;
  std::vector<std::string> generators;

  std::string text() const {
    std::string s = "vars: ";
    for (std::size_t k = 0; k < vars.size(); ++k) s += (k ? ", " : "") + vars[k];
    s += "\nfield: " + field.str() + "\n";
    for (const auto& g : generators) s += g + "\n";
    return s;
  }

  std::uint64_t hash() const { return fnv1a64(text()); }

  template <class F>
  Ideal<F> ideal(const F& K) const {
    auto ring = make_ring(K, vars);
    return parse_ideal(generators, ring);
  }
};

namespace detail {
inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}
}  // namespace detail

/// Parses the text format; generators are validated against the declared
/// variables but stored verbatim so that writing back is bit-exact.
inline IdealFile parse_ideal_file(const std::string& text) {
  IdealFile f;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_vars = false, have_field = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (lineno == 1) {
      if (line.rfind("vars:", 0) != 0) throw ParseError("line 1 must start with 'vars:'", 0);
      std::string rest = line.substr(5);
      std::stringstream ss(rest);
      std::string v;
      while (std::getline(ss, v, ',')) f.vars.push_back(detail::trim(v));
      have_vars = true;
      continue;
    }
    if (lineno == 2) {
      if (line.rfind("field:", 0) != 0) throw ParseError("line 2 must start with 'field:'", 0);
      f.field = FieldSpec::parse(detail::trim(line.substr(6)));
      have_field = true;
      continue;
    }
    if (detail::trim(line).empty()) continue;
    f.generators.push_back(line);
  }
  if (!have_vars || !have_field) throw ParseError("ideal file needs 'vars:' and 'field:' lines", 0);
  // validate: variables and grammar, homogeneity
  with_field(f.field, [&](const auto& K) { (void)f.ideal(K); });
  return f;
}

inline IdealFile read_ideal_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UserError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_ideal_file(ss.str());
}

inline void write_ideal_file(const std::string& path, const IdealFile& f) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UserError("cannot write '" + path + "'");
  out << f.text();
  if (!out) throw UserError("write to '" + path + "' failed");
}

}  // namespace gor
