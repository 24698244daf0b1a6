#pragma once

// Text formats for ideals and complexes, and JSON for every report type.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "mres/betti.hpp"
#include "mres/errors.hpp"
#include "mres/free_complex.hpp"
#include "mres/monomial_ideal.hpp"
#include "mres/multiplication.hpp"
#include "mres/simplicial.hpp"

namespace mres {

using Json = nlohmann::json;

namespace detail {

/// Cursor over one line, with 1-based columns for diagnostics.
class LineCursor {
 public:
  LineCursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  [[noreturn]] void fail(const std::string& what) const { fail_at(pos_, what); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& what) const {
    throw InputError("line " + std::to_string(line_) + ", column " + std::to_string(pos + 1) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool accept(char c) {
    skip_space();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::size_t number() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    if (pos_ - start > 6) fail_at(start, "number too large");
    return std::stoul(std::string(text_.substr(start, pos_ - start)));
  }
  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

inline std::string_view strip_comment(std::string_view line) {
  if (auto k = line.find('#'); k != std::string_view::npos) line = line.substr(0, k);
  return line;
}

inline bool is_blank(std::string_view s) {
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

/// Reads "key: n" if the line starts with the key.
inline std::optional<std::size_t> header(std::string_view line, std::string_view key, std::size_t lineno) {
  const auto first = line.find_first_not_of(" \t");
  if (first == std::string_view::npos || line.substr(first, key.size()) != key) return std::nullopt;
  LineCursor cur(line.substr(first + key.size()), lineno);
  cur.expect(':');
  const auto n = cur.number();
  if (!cur.done()) cur.fail("unexpected text after the header");
  return n;
}

inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    out.push_back(line);
    start = end + 1;
  }
  return out;
}

}  // namespace detail

/// Parses an ideal file: one generator per line, either as a monomial
/// (`x1^2*x3`, `x_3`) or as an exponent vector (`[2,0,1]`); `#` starts a
/// comment; an optional first line `vars: n` fixes the number of variables.
/// Without it the ring has as many variables as the largest index used (or
/// the common vector length).
inline MonomialIdeal parse_ideal(std::string_view text) {
  std::optional<std::size_t> vars;
  struct Parsed {
    std::size_t line;
    bool vector;
    std::vector<int> exps;
  };
  std::vector<Parsed> gens;
  std::size_t lineno = 0;
  for (auto raw : detail::split_lines(text)) {
    ++lineno;
    const auto line = detail::strip_comment(raw);
    if (detail::is_blank(line)) continue;
    if (auto n = detail::header(line, "vars", lineno)) {
      if (vars || !gens.empty()) throw InputError("line " + std::to_string(lineno) + ", column 1: 'vars:' must come first");
      if (*n == 0) throw InputError("line " + std::to_string(lineno) + ", column 1: need at least one variable");
      vars = n;
      continue;
    }
    detail::LineCursor cur(line, lineno);
    Parsed p{lineno, false, {}};
    if (cur.accept('[')) {
      p.vector = true;
      if (!cur.accept(']')) {
        do {
          p.exps.push_back(static_cast<int>(cur.number()));
        } while (cur.accept(','));
        cur.expect(']');
      }
    } else {
      do {
        cur.skip_space();
        const std::size_t at = cur.pos();
        if (!cur.accept('x')) cur.fail("expected a variable such as x3");
        cur.accept('_');
        if (!std::isdigit(static_cast<unsigned char>(cur.peek()))) cur.fail("expected a variable index");
        const auto v = cur.number();
        if (v == 0) cur.fail_at(at, "variables are numbered from 1");
        if (vars && v > *vars) cur.fail_at(at, "x" + std::to_string(v) + " is outside the ring x1..x" + std::to_string(*vars));
        int e = 1;
        if (cur.accept('^')) e = static_cast<int>(cur.number());
        if (p.exps.size() < v) p.exps.resize(v, 0);
        p.exps[v - 1] += e;
      } while (cur.accept('*'));
    }
    if (!cur.done()) cur.fail("unexpected character '" + std::string(1, cur.peek()) + "'");
    gens.push_back(std::move(p));
  }
  if (gens.empty()) throw InputError("no generators");
  std::size_t n = vars.value_or(0);
  if (!vars) {
    std::optional<std::size_t> vec_len;
    for (const auto& g : gens) {
      if (g.vector) {
        if (vec_len && *vec_len != g.exps.size()) {
          throw InputError("line " + std::to_string(g.line) + ", column 1: exponent vector has " +
                           std::to_string(g.exps.size()) + " entries, earlier vectors have " +
                           std::to_string(*vec_len));
        }
        vec_len = g.exps.size();
      }
      n = std::max(n, g.exps.size());
    }
    if (vec_len && n > *vec_len) {
      throw InputError("a monomial uses x" + std::to_string(n) + " but exponent vectors have " +
                       std::to_string(*vec_len) + " entries");
    }
  }
  std::vector<Multidegree> mons;
  for (const auto& g : gens) {
    if ((g.vector && g.exps.size() != n) || g.exps.size() > n) {
      throw InputError("line " + std::to_string(g.line) + ", column 1: generator has " +
                       std::to_string(g.exps.size()) + " variables, the ring has " + std::to_string(n));
    }
    Multidegree m(n);
    for (std::size_t i = 0; i < g.exps.size(); ++i) m[i] = g.exps[i];
    if (m.is_zero()) throw InputError("line " + std::to_string(g.line) + ", column 1: the unit ideal is not supported");
    mons.push_back(std::move(m));
  }
  for (std::size_t i = 0; i < mons.size(); ++i) {
    for (std::size_t j = 0; j < mons.size(); ++j) {
      if (i != j && divides(mons[i], mons[j]) && (mons[i] != mons[j] || i < j)) {
        throw InputError("line " + std::to_string(gens[j].line) + ", column 1: generator " + monomial_string(mons[j]) +
                         " is divisible by " + monomial_string(mons[i]) + " (line " + std::to_string(gens[i].line) +
                         "); list minimal generators only");
      }
    }
  }
  return MonomialIdeal(n, std::move(mons));
}

/// The ideal file format, readable by parse_ideal.
inline std::string format_ideal(const MonomialIdeal& ideal) {
  std::string s = "vars: " + std::to_string(ideal.num_vars()) + "\n";
  for (const auto& g : ideal.generators()) s += monomial_string(g) + "\n";
  return s;
}

/// Parses a complex file: one face per line as vertex numbers (from 0)
/// separated by spaces or commas; the complex is the closure of the listed
/// faces. An empty face may be written `{}`. Optional header `vertices: n`;
/// otherwise the vertex set is 0..max listed.
inline SimplicialComplex parse_complex(std::string_view text) {
  std::optional<std::size_t> vertices;
  std::vector<std::pair<std::size_t, std::vector<std::size_t>>> faces;
  std::size_t lineno = 0;
  for (auto raw : detail::split_lines(text)) {
    ++lineno;
    const auto line = detail::strip_comment(raw);
    if (detail::is_blank(line)) continue;
    if (auto n = detail::header(line, "vertices", lineno)) {
      if (vertices || !faces.empty()) {
        throw InputError("line " + std::to_string(lineno) + ", column 1: 'vertices:' must come first");
      }
      vertices = n;
      continue;
    }
    detail::LineCursor cur(line, lineno);
    std::vector<std::size_t> face;
    if (cur.accept('{')) {
      cur.expect('}');
    } else {
      while (!cur.done()) {
        const std::size_t at = cur.pos();
        face.push_back(cur.number());
        if (face.back() >= 31) cur.fail_at(at, "vertex numbers must be below 31");
        if (std::count(face.begin(), face.end(), face.back()) > 1) cur.fail_at(at, "repeated vertex");
        cur.accept(',');
      }
    }
    if (!cur.done()) cur.fail("unexpected character");
    faces.emplace_back(lineno, std::move(face));
  }
  std::size_t n = vertices.value_or(0);
  for (const auto& [line, f] : faces) {
    for (auto v : f) {
      if (vertices && v >= *vertices) {
        throw InputError("line " + std::to_string(line) + ", column 1: vertex " + std::to_string(v) +
                         " is outside 0.." + std::to_string(*vertices - 1));
      }
      if (!vertices) n = std::max(n, v + 1);
    }
  }
  std::vector<Subset> facets;
  for (const auto& [line, f] : faces) {
    Subset s = 0;
    for (auto v : f) s |= Subset{1} << v;
    facets.push_back(s);
  }
  return SimplicialComplex::from_facets(n, facets);
}

inline std::string format_complex(const SimplicialComplex& d) {
  std::string s = "vertices: " + std::to_string(d.num_vertices()) + "\n";
  for (auto f : d.facets()) {
    if (f == 0) {
      s += "{}\n";
      continue;
    }
    std::string line;
    for (auto v : subset_members(f)) line += (line.empty() ? "" : " ") + std::to_string(v);
    s += line + "\n";
  }
  return s;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// JSON. Scalars are strings "p" or "p/q"; degrees are exponent arrays.

inline Json to_json(const Multidegree& d) {
  Json j = Json::array();
  for (std::size_t i = 0; i < d.size(); ++i) j.push_back(d[i]);
  return j;
}

inline Multidegree multidegree_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("degree must be an array");
  Multidegree d(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) d[i] = j[i].get<int>();
  return d;
}

inline Json to_json(const MonomialIdeal& ideal) {
  Json gens = Json::array();
  for (const auto& g : ideal.generators()) gens.push_back(to_json(g));
  return {{"vars", ideal.num_vars()}, {"generators", gens}};
}

inline MonomialIdeal ideal_from_json(const Json& j) {
  try {
    std::vector<Multidegree> gens;
    for (const auto& g : j.at("generators")) gens.push_back(multidegree_from_json(g));
    return MonomialIdeal(j.at("vars").get<std::size_t>(), std::move(gens));
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

inline Json to_json(const BettiTable& b) {
  Json entries = Json::array();
  for (const auto& [key, rank] : b.entries()) {
    entries.push_back({{"i", key.first}, {"degree", to_json(key.second)}, {"rank", rank}});
  }
  return {{"vars", b.num_vars()}, {"totals", b.totals()}, {"entries", entries}};
}

inline BettiTable betti_from_json(const Json& j) {
  try {
    BettiTable b(j.at("vars").get<std::size_t>());
    for (const auto& e : j.at("entries")) {
      b.add(e.at("i").get<std::size_t>(), multidegree_from_json(e.at("degree")), e.at("rank").get<std::size_t>());
    }
    return b;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

inline Json to_json(const FreeComplex& c) {
  Json basis = Json::array();
  for (std::size_t g = 0; g < c.size(); ++g) {
    const auto& b = c.basis(g);
    Json e{{"id", g}, {"name", c.name(g)}, {"hdeg", b.hdeg}, {"degree", to_json(b.mdeg)}};
    e["label"] = b.label ? Json(subset_members(*b.label)) : Json(nullptr);
    basis.push_back(e);
  }
  Json diff = Json::array();
  for (std::size_t g = 1; g < c.size(); ++g) {
    for (const auto& [h, s] : c.differential(g)) {
      diff.push_back({{"g", g}, {"h", h}, {"scalar", to_string(s)},
                      {"monomial", to_json(c.basis(g).mdeg - c.basis(h).mdeg)}});
    }
  }
  return {{"vars", c.num_vars()}, {"ranks", c.ranks()}, {"basis", basis}, {"differential", diff}};
}

inline FreeComplex complex_from_json(const Json& j) {
  try {
    FreeComplex c(j.at("vars").get<std::size_t>());
    const auto& basis = j.at("basis");
    for (std::size_t g = 1; g < basis.size(); ++g) {
      const auto& e = basis[g];
      std::optional<Subset> label;
      if (!e.at("label").is_null()) {
        Subset w = 0;
        for (auto v : e.at("label")) w |= Subset{1} << v.get<std::size_t>();
        label = w;
      }
      c.add_basis(e.at("hdeg").get<std::size_t>(), multidegree_from_json(e.at("degree")), label);
    }
    std::map<std::size_t, SparseVec> diff;
    for (const auto& e : j.at("differential")) {
      diff[e.at("g").get<std::size_t>()].emplace(e.at("h").get<std::size_t>(),
                                                 parse_scalar(e.at("scalar").get<std::string>()));
    }
    for (const auto& [g, v] : diff) c.set_differential(g, v);
    return c;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

/// Products as (g, h, e, scalar, monomial) with the implied monomial
/// deg g + deg h - deg e.
inline Json to_json(const Multiplication& m) {
  const auto& c = m.complex();
  Json prods = Json::array();
  for (const auto& [key, v] : m.table()) {
    const auto [g, h] = key;
    for (const auto& [e, s] : v) {
      prods.push_back({{"g", g},
                       {"h", h},
                       {"e", e},
                       {"scalar", to_string(s)},
                       {"monomial", to_json(c.basis(g).mdeg + c.basis(h).mdeg - c.basis(e).mdeg)}});
    }
  }
  return {{"laurent", m.laurent()}, {"products", prods}};
}

inline Multiplication multiplication_from_json(const Json& j, std::shared_ptr<const FreeComplex> complex) {
  try {
    Multiplication m(complex, j.at("laurent").get<bool>());
    std::map<std::pair<std::size_t, std::size_t>, SparseVec> prods;
    for (const auto& e : j.at("products")) {
      const auto g = e.at("g").get<std::size_t>(), h = e.at("h").get<std::size_t>(), k = e.at("e").get<std::size_t>();
      if (g >= complex->size() || h >= complex->size() || k >= complex->size()) {
        throw InputError("product refers to a basis element outside the complex");
      }
      const auto mono = multidegree_from_json(e.at("monomial"));
      if (mono != complex->basis(g).mdeg + complex->basis(h).mdeg - complex->basis(k).mdeg) {
        throw InputError("product monomial disagrees with the basis degrees");
      }
      prods[{g, h}].emplace(k, parse_scalar(e.at("scalar").get<std::string>()));
    }
    for (auto& [key, v] : prods) m.set(key.first, key.second, std::move(v));
    return m;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

/// A check result: {"check": name, "passed": bool, "witnesses": [...]}.
inline Json check_json(const std::string& name, bool passed, const std::vector<std::string>& witnesses = {}) {
  return {{"check", name}, {"passed", passed}, {"witnesses", witnesses}};
}

inline Json to_json(const AxiomReport& r) {
  return {{"unit", r.unit},
          {"leibniz", r.leibniz},
          {"commutativity", r.commutativity},
          {"associativity", r.associativity},
          {"associativity_checked", r.associativity_checked},
          {"multigraded", r.multigraded},
          {"passed", r.all()},
          {"witnesses", r.failures}};
}

}  // namespace mres
