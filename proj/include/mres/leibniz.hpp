#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "mres/errors.hpp"
#include "mres/free_complex.hpp"
#include "mres/linalg.hpp"
#include "mres/multiplication.hpp"

namespace mres {

/// Coefficient of e in g * h, for g <= h (basis ids, both nonzero).
struct ProductUnknown {
  std::size_t g = 0, h = 0, e = 0;
};

/// All multigraded multiplications on a complex: an affine space
/// particular + span(nullspace) in the coordinates `unknowns`.
///
/// Only pairs g <= h carry unknowns; h * g is determined by graded
/// commutativity and g * g = 0 for odd |g|. Every point satisfies the unit,
/// Leibniz, commutativity and multigrading axioms.
class MultiplicationSpace {
 public:
  std::shared_ptr<const FreeComplex> complex;
  std::vector<ProductUnknown> unknowns;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> index;
  SparseVec particular;
  std::vector<SparseVec> nullspace;

  std::size_t dimension() const { return nullspace.size(); }

  /// Unknown indices belonging to the pair (g, h), in either orientation.
  std::vector<std::size_t> pair_unknowns(std::size_t g, std::size_t h) const {
    if (g > h) std::swap(g, h);
    std::vector<std::size_t> out;
    for (auto it = index.lower_bound({g, h, 0}); it != index.end(); ++it) {
      const auto& [a, b, e] = it->first;
      if (a != g || b != h) break;
      out.push_back(it->second);
    }
    return out;
  }

  /// Dimension of the freedom left in the product g * h.
  std::size_t pair_dimension(std::size_t g, std::size_t h) const {
    const auto cols = pair_unknowns(g, h);
    if (cols.empty() || nullspace.empty()) return 0;
    Matrix m(nullspace.size(), cols.size());
    for (std::size_t r = 0; r < nullspace.size(); ++r) {
      for (std::size_t c = 0; c < cols.size(); ++c) m(r, c) = entry(nullspace[r], cols[c]);
    }
    return rank(m);
  }

  SparseVec combine(const std::vector<Scalar>& lambda) const {
    if (lambda.size() != nullspace.size()) throw InputError("wrong number of parameters for the solution space");
    SparseVec x = particular;
    for (std::size_t i = 0; i < lambda.size(); ++i) axpy(x, lambda[i], nullspace[i]);
    return x;
  }

  Multiplication from_values(const SparseVec& x) const {
    Multiplication m(complex);
    std::map<std::pair<std::size_t, std::size_t>, SparseVec> prods;
    for (const auto& [i, v] : x) {
      const auto& u = unknowns.at(i);
      prods[{u.g, u.h}].emplace(u.e, v);
    }
    for (const auto& [key, v] : prods) m.set_commutative(key.first, key.second, v);
    return m;
  }

  Multiplication point(const std::vector<Scalar>& lambda) const { return from_values(combine(lambda)); }

  /// Coordinates of a multiplication; throws if it has a term outside the
  /// unknowns (it then is not a point of this space).
  SparseVec values(const Multiplication& m) const {
    SparseVec x;
    for (const auto& [key, v] : m.table()) {
      const auto [g, h] = key;
      if (g > h) continue;
      for (const auto& [e, s] : v) {
        auto it = index.find({g, h, e});
        if (it == index.end()) {
          throw InputError("product " + complex->name(g) + " * " + complex->name(h) + " uses a term outside the space");
        }
        x.emplace(it->second, s);
      }
    }
    return x;
  }
};

/// Solves the Leibniz equations d(g*h) = dg*h + (-1)^|g| g*dh for every pair
/// g <= h simultaneously. If `particular` is given (typically the transferred
/// Taylor product) it is checked against the equations and used as the base
/// point; otherwise the solver's own particular solution is used.
inline MultiplicationSpace leibniz_solution_space(std::shared_ptr<const FreeComplex> complex,
                                                  const Multiplication* particular = nullptr) {
  const auto& c = *complex;
  MultiplicationSpace sp;
  sp.complex = complex;
  const std::size_t n = c.size();
  for (std::size_t g = 1; g < n; ++g) {
    for (std::size_t h = g; h < n; ++h) {
      const auto& bg = c.basis(g);
      const auto& bh = c.basis(h);
      if (g == h && bg.hdeg % 2 == 1) continue;
      const Multidegree deg = bg.mdeg + bh.mdeg;
      for (auto e : c.in_degree(bg.hdeg + bh.hdeg)) {
        if (!divides(c.basis(e).mdeg, deg)) continue;
        sp.index[{g, h, e}] = sp.unknowns.size();
        sp.unknowns.push_back({g, h, e});
      }
    }
  }

  // Coefficient of P(k, l) = k * l, in unknown coordinates plus a constant.
  struct Affine {
    std::map<std::size_t, SparseVec> rows;  // e -> coefficients over unknowns
    std::map<std::size_t, Scalar> constant;  // e -> constant part
  };
  auto add_product = [&](Affine& a, const Scalar& s, std::size_t k, std::size_t l) {
    if (k == 0 || l == 0) {
      const std::size_t e = k == 0 ? l : k;
      a.constant[e] += s;
      return;
    }
    Scalar t = s;
    if (k > l) {
      t *= sign_of_parity(c.basis(k).hdeg * c.basis(l).hdeg);
      std::swap(k, l);
    }
    for (auto it = sp.index.lower_bound({k, l, 0}); it != sp.index.end(); ++it) {
      const auto& [a1, b1, e] = it->first;
      if (a1 != k || b1 != l) break;
      add_entry(a.rows[e], it->second, t);
    }
  };

  SparseEliminator elim(sp.unknowns.size());
  std::vector<std::pair<SparseVec, Scalar>> equations;
  for (std::size_t g = 1; g < n; ++g) {
    for (std::size_t h = g; h < n; ++h) {
      // Residual d(g*h) - dg*h - (-1)^|g| g*dh as an affine expression per
      // target basis element, with g*h itself expanded over its unknowns.
      std::map<std::size_t, SparseVec> rows;
      std::map<std::size_t, Scalar> rhs;
      if (!(g == h && c.basis(g).hdeg % 2 == 1)) {
        for (auto it = sp.index.lower_bound({g, h, 0}); it != sp.index.end(); ++it) {
          const auto& [a1, b1, e] = it->first;
          if (a1 != g || b1 != h) break;
          for (const auto& [t, v] : c.differential(e)) add_entry(rows[t], it->second, v);
        }
      }
      Affine rest;
      for (const auto& [k, v] : c.differential(g)) add_product(rest, -v, k, h);
      const Scalar sg(sign_of_parity(c.basis(g).hdeg));
      for (const auto& [k, v] : c.differential(h)) add_product(rest, -sg * v, g, k);
      for (auto& [e, row] : rest.rows) axpy(rows[e], Scalar(1), row);
      for (auto& [e, v] : rest.constant) {
        rows[e];
        rhs[e] -= v;
      }
      for (auto& [e, row] : rows) {
        const Scalar b = rhs.count(e) ? rhs[e] : Scalar(0);
        if (row.empty() && sgn(b) == 0) continue;
        equations.emplace_back(row, b);
        elim.add_row(std::move(row), b);
      }
    }
  }
  if (!elim.consistent()) throw InternalError("the Leibniz equations have no solution");
  sp.nullspace = elim.nullspace();
  if (particular) {
    if (particular->complex_ptr().get() != complex.get() && particular->complex().size() != n) {
      throw InputError("particular multiplication lives on a different complex");
    }
    sp.particular = sp.values(*particular);
    for (const auto& [row, b] : equations) {
      Scalar lhs = 0;
      for (const auto& [i, v] : row) lhs += v * entry(sp.particular, i);
      if (lhs != b) throw InputError("the given particular multiplication violates the Leibniz rule");
    }
  } else {
    sp.particular = elim.particular();
  }
  return sp;
}

/// A product that takes the same value at every point of the space.
struct ForcedProduct {
  std::size_t g = 0, h = 0;
  bool forced = false;
  SparseVec value;  // meaningful when forced
};

/// For every pair g <= h with at least one unknown: whether the Leibniz
/// equations determine g * h, and its value if so.
inline std::vector<ForcedProduct> forced_products(const MultiplicationSpace& sp) {
  std::vector<ForcedProduct> out;
  std::optional<std::pair<std::size_t, std::size_t>> last;
  for (const auto& u : sp.unknowns) {
    if (last && *last == std::make_pair(u.g, u.h)) continue;
    last = std::make_pair(u.g, u.h);
    ForcedProduct fp{u.g, u.h, sp.pair_dimension(u.g, u.h) == 0, {}};
    if (fp.forced) {
      for (auto i : sp.pair_unknowns(u.g, u.h)) {
        const Scalar v = entry(sp.particular, i);
        if (sgn(v) != 0) fp.value.emplace(sp.unknowns[i].e, v);
      }
    }
    out.push_back(std::move(fp));
  }
  return out;
}

/// Solves for a point whose product g * h equals `target`. Free parameters
/// not pinned down by the target are set to zero.
inline std::optional<std::vector<Scalar>> parameters_for_product(const MultiplicationSpace& sp, std::size_t g,
                                                                 std::size_t h, const SparseVec& target) {
  const auto cols = sp.pair_unknowns(g, h);
  SparseVec canonical = target;
  if (g > h) canonical = scaled(target, Scalar(sign_of_parity(sp.complex->basis(g).hdeg * sp.complex->basis(h).hdeg)));
  for (const auto& [e, v] : canonical) {
    if (!sp.index.count({std::min(g, h), std::max(g, h), e})) return std::nullopt;
  }
  Matrix a(cols.size(), sp.nullspace.size());
  std::vector<Scalar> b(cols.size());
  for (std::size_t r = 0; r < cols.size(); ++r) {
    for (std::size_t k = 0; k < sp.nullspace.size(); ++k) a(r, k) = entry(sp.nullspace[k], cols[r]);
    b[r] = entry(canonical, sp.unknowns[cols[r]].e) - entry(sp.particular, cols[r]);
  }
  return solve(a, b);
}

struct AssociativitySample {
  std::string label;  // "particular", "grid ...", "random #i"
  std::vector<Scalar> lambda;
  std::size_t nonzero_associators = 0;
  std::string first_witness;
};

struct AssociativityScan {
  std::vector<AssociativitySample> samples;
  bool found_associative() const {
    for (const auto& s : samples) {
      if (s.nonzero_associators == 0) return true;
    }
    return false;
  }
};

/// Evaluates associators at sample points of the space: the particular point,
/// the unit vectors and their negatives, and `random_samples` random rational
/// points drawn from mt19937_64(seed). A search aid only; a scan without an
/// associative sample proves nothing.
inline AssociativityScan associativity_scan(const MultiplicationSpace& sp, std::size_t random_samples,
                                            std::uint64_t seed) {
  AssociativityScan scan;
  const std::size_t d = sp.dimension();
  auto evaluate = [&](std::string label, std::vector<Scalar> lambda) {
    const auto m = sp.point(lambda);
    AxiomOptions opt;
    opt.max_witnesses = 1;
    const auto r = check_dga_axioms(m, opt);
    AssociativitySample s{std::move(label), std::move(lambda), 0, ""};
    if (!r.associativity) {
      // recount exactly
      const auto& c = m.complex();
      const std::size_t top = c.length();
      for (std::size_t g = 1; g < c.size(); ++g) {
        for (std::size_t h = 1; h < c.size(); ++h) {
          for (std::size_t k = 1; k < c.size(); ++k) {
            if (c.basis(g).hdeg + c.basis(h).hdeg + c.basis(k).hdeg > top) continue;
            SparseVec res;
            for (const auto& [e, v] : m.product(g, h)) m.accumulate(res, v, e, k);
            for (const auto& [e, v] : m.product(h, k)) m.accumulate(res, -v, g, e);
            if (!res.empty()) ++s.nonzero_associators;
          }
        }
      }
      for (const auto& f : r.failures) {
        if (f.rfind("associativity", 0) == 0) {
          s.first_witness = f;
          break;
        }
      }
    }
    scan.samples.push_back(std::move(s));
  };
  evaluate("particular", std::vector<Scalar>(d, Scalar(0)));
  for (std::size_t i = 0; i < d && i < 32; ++i) {
    for (int sign : {1, -1}) {
      std::vector<Scalar> l(d, Scalar(0));
      l[i] = sign;
      evaluate("grid e" + std::to_string(i + 1) + (sign > 0 ? "+" : "-"), std::move(l));
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 5);
  for (std::size_t s = 0; s < random_samples && d > 0; ++s) {
    std::vector<Scalar> l(d);
    for (auto& v : l) {
      v = Scalar(num(rng), den(rng));
      v.canonicalize();
    }
    evaluate("random #" + std::to_string(s + 1), std::move(l));
  }
  return scan;
}

/// Searches for signs eps_g = +-1 (eps of the unit = 1) with
/// a(g,h)[e] = eps_g eps_h eps_e b(g,h)[e] for every table entry; with
/// `with_differential` also d_a(g)[h] = eps_g eps_h d_b(g)[h]. Both tables
/// must live on complexes with the same basis ids. Solved over GF(2).
inline std::optional<std::vector<int>> match_up_to_basis_signs(const Multiplication& a, const Multiplication& b,
                                                               bool with_differential = false) {
  const std::size_t n = a.complex().size();
  if (b.complex().size() != n) return std::nullopt;
  // Rows over GF(2): bitmask of variables plus right-hand side.
  std::vector<std::pair<std::vector<bool>, bool>> rows;
  auto relation = [&](std::vector<std::size_t> vars, const Scalar& x, const Scalar& y) {
    if (sgn(x) == 0 && sgn(y) == 0) return true;
    if (sgn(x) == 0 || sgn(y) == 0) return false;
    if (abs(x) != abs(y)) return false;
    std::vector<bool> r(n, false);
    for (auto v : vars) r[v] = !r[v];
    rows.emplace_back(std::move(r), sgn(x) != sgn(y));
    return true;
  };
  std::set<std::pair<std::size_t, std::size_t>> keys;
  for (const auto& [k, v] : a.table()) keys.insert(k);
  for (const auto& [k, v] : b.table()) keys.insert(k);
  for (const auto& [g, h] : keys) {
    const auto pa = a.product(g, h), pb = b.product(g, h);
    std::set<std::size_t> es;
    for (const auto& [e, v] : pa) es.insert(e);
    for (const auto& [e, v] : pb) es.insert(e);
    for (auto e : es) {
      if (!relation({g, h, e}, entry(pa, e), entry(pb, e))) return std::nullopt;
    }
  }
  if (with_differential) {
    for (std::size_t g = 0; g < n; ++g) {
      std::set<std::size_t> hs;
      for (const auto& [h, v] : a.complex().differential(g)) hs.insert(h);
      for (const auto& [h, v] : b.complex().differential(g)) hs.insert(h);
      for (auto h : hs) {
        if (!relation({g, h}, entry(a.complex().differential(g), h), entry(b.complex().differential(g), h))) {
          return std::nullopt;
        }
      }
    }
  }
  {
    std::vector<bool> unit(n, false);
    unit[0] = true;
    rows.emplace_back(std::move(unit), false);
  }
  // Gauss-Jordan over GF(2).
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    std::size_t p = r;
    while (p < rows.size() && !rows[p].first[col]) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r && rows[i].first[col]) {
        for (std::size_t j = 0; j < n; ++j) rows[i].first[j] = rows[i].first[j] != rows[r].first[j];
        rows[i].second = rows[i].second != rows[r].second;
      }
    }
    pivot_col.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < rows.size(); ++i) {
    if (rows[i].second) return std::nullopt;
  }
  std::vector<int> eps(n, 1);
  for (std::size_t i = 0; i < r; ++i) eps[pivot_col[i]] = rows[i].second ? -1 : 1;
  return eps;
}

}  // namespace mres
