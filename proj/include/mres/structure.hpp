#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mres/errors.hpp"
#include "mres/free_complex.hpp"
#include "mres/laurent.hpp"
#include "mres/lattice.hpp"
#include "mres/linalg.hpp"
#include "mres/monomial_ideal.hpp"
#include "mres/multiplication.hpp"
#include "mres/simplicial.hpp"
#include "mres/taylor.hpp"

namespace mres {

namespace detail {

/// Rows of a matrix in reduced echelon form, as sparse vectors.
inline std::vector<SparseVec> span_basis(const std::vector<SparseVec>& vecs, const std::vector<std::size_t>& coords) {
  if (vecs.empty() || coords.empty()) return {};
  std::map<std::size_t, std::size_t> col;
  for (std::size_t k = 0; k < coords.size(); ++k) col[coords[k]] = k;
  Matrix m(vecs.size(), coords.size());
  for (std::size_t r = 0; r < vecs.size(); ++r) {
    for (const auto& [id, v] : vecs[r]) {
      auto it = col.find(id);
      if (it != col.end()) m(r, it->second) = v;
    }
  }
  const auto red = rref(m);
  std::vector<SparseVec> out;
  for (std::size_t r = 0; r < red.pivots.size(); ++r) {
    SparseVec v;
    for (std::size_t k = 0; k < coords.size(); ++k) {
      if (sgn(red.reduced(r, k)) != 0) v.emplace(coords[k], red.reduced(r, k));
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace detail

/// An element given by scalar coefficients at a multidegree.
struct GradedVector {
  Multidegree degree;
  SparseVec coeffs;
};

struct GenerationReport {
  bool passed = true;
  /// First component (hdeg, degree) not reached, with its deficit.
  std::vector<std::string> witnesses;
  /// Per homological degree, elements found (a basis per degree).
  std::vector<std::vector<GradedVector>> generated;
};

/// Checks that every basis element of F_i, i >= 1, is reached modulo mF by
/// sums of right-nested products g_1 * (g_2 * (... * g_i)) of F_1 basis
/// elements, each partial product reduced to its squarefree part.
///
/// With `squarefree_guard` the complex must have squarefree basis degrees.
/// Without it the reduction divides out the largest monomial factor common
/// to the terms, i.e. moves the element to the join of its support degrees;
/// this is the only version of the step that makes sense for arbitrary
/// degrees and is used to exhibit the failure for non-squarefree ideals.
inline GenerationReport degree_one_generation(const Multiplication& m, bool squarefree_guard = true) {
  const auto& c = m.complex();
  const std::size_t n = c.num_vars();
  if (squarefree_guard) {
    for (const auto& b : c.basis()) {
      if (!b.mdeg.is_squarefree()) throw PreconditionError("degree-one generation needs squarefree basis degrees");
    }
  }
  auto reduce = [&](const Multidegree& d, const SparseVec& v) {
    if (squarefree_guard) return meet(d, Multidegree::ones(n));
    Multidegree j(n);
    for (const auto& [e, s] : v) j = join(j, c.basis(e).mdeg);
    return j;
  };
  const std::size_t p = c.length();
  GenerationReport rep;
  rep.generated.resize(p + 1);
  // Current generators per homological degree, grouped by multidegree.
  std::map<Multidegree, std::vector<SparseVec>> layer;
  for (auto g : c.in_degree(1)) layer[c.basis(g).mdeg].push_back(SparseVec{{g, Scalar(1)}});
  for (std::size_t i = 1; i <= p; ++i) {
    // Keep a basis of the span in each degree.
    std::map<Multidegree, std::vector<SparseVec>> reduced;
    for (auto& [deg, vecs] : layer) {
      std::vector<std::size_t> coords;
      for (auto e : c.in_degree(i)) {
        if (divides(c.basis(e).mdeg, deg)) coords.push_back(e);
      }
      reduced[deg] = detail::span_basis(vecs, coords);
      for (const auto& v : reduced[deg]) rep.generated[i].push_back({deg, v});
    }
    // Full rank modulo mF in every degree carrying basis elements.
    std::map<Multidegree, std::vector<std::size_t>> by_degree;
    for (auto e : c.in_degree(i)) by_degree[c.basis(e).mdeg].push_back(e);
    for (const auto& [deg, ids] : by_degree) {
      std::vector<SparseVec> vecs;
      if (auto it = reduced.find(deg); it != reduced.end()) vecs = it->second;
      const auto got = detail::span_basis(vecs, ids).size();
      if (got < ids.size()) {
        rep.passed = false;
        std::string names;
        for (auto e : ids) names += (names.empty() ? "" : ", ") + c.name(e);
        rep.witnesses.push_back("hdeg " + std::to_string(i) + ", degree " + monomial_string(deg) + ": products span " +
                                std::to_string(got) + " of " + std::to_string(ids.size()) + " basis elements (" +
                                names + ")");
      }
    }
    if (i == p) break;
    std::map<Multidegree, std::vector<SparseVec>> next;
    for (auto g : c.in_degree(1)) {
      for (const auto& [deg, vecs] : reduced) {
        for (const auto& v : vecs) {
          SparseVec prod;
          for (const auto& [h, s] : v) m.accumulate(prod, s, g, h);
          if (prod.empty()) continue;
          const Multidegree d = reduce(c.basis(g).mdeg + deg, prod);
          next[d].push_back(std::move(prod));
        }
      }
    }
    layer = std::move(next);
  }
  return rep;
}

/// The comparison map phi: T -> F from the Taylor complex of a squarefree
/// ideal, with J = ker phi computed per lcm-lattice degree.
struct TaylorToF {
  std::shared_ptr<const FreeComplex> taylor;
  LinearMap phi;  // Taylor id -> coefficients on F
  bool multigraded = false;
  bool chain_map = false;
  bool surjective = false;
  bool kernel_matches_dimensions = false;  // dim T_a - dim J_a = dim F_a for all a
  bool ideal_closed = false;               // phi(t * j) = 0 for Taylor t and j in J
  bool multiplicative = false;             // phi(g_A * g_B) = phi(g_A) * phi(g_B)
  std::map<Multidegree, std::vector<SparseVec>> kernel;  // J_a, a basis over Taylor ids
  std::vector<std::string> witnesses;

  bool all() const {
    return multigraded && chain_map && surjective && kernel_matches_dimensions && ideal_closed && multiplicative;
  }
};

/// phi(g_A) = |phi(g_{m_1}) * (phi(g_{m_2}) * (... phi(g_{m_s})))|_sqf for
/// A = {m_1 < ... < m_s}, phi(g_m) = the F_1 basis element labelled {m}.
/// Requires a squarefree ideal and an associative multiplication on F.
inline TaylorToF taylor_to_F_map(const MonomialIdeal& ideal, const Multiplication& m,
                                 std::size_t cap = kDefaultGeneratorCap) {
  if (!ideal.is_squarefree()) throw PreconditionError("the comparison map is defined for squarefree ideals");
  const auto axioms = check_dga_axioms(m, {.associativity = true, .max_witnesses = 1});
  if (!axioms.associativity) throw PreconditionError("the comparison map needs an associative multiplication");
  const auto& f = m.complex();
  TaylorToF out;
  out.taylor = std::make_shared<const FreeComplex>(taylor_complex(ideal, cap));
  const auto& t = *out.taylor;
  out.phi.resize(t.size());
  out.phi[0].emplace(0, 1);
  for (std::size_t g = 1; g < t.size(); ++g) {
    const auto members = subset_members(*t.basis(g).label);
    SparseVec acc;
    acc.emplace(f.id_of_label(Subset{1} << members.back()), 1);
    for (std::size_t k = members.size() - 1; k-- > 0;) {
      SparseVec left{{f.id_of_label(Subset{1} << members[k]), Scalar(1)}};
      acc = m.product(left, acc);
    }
    out.phi[g] = std::move(acc);
  }
  auto note = [&](std::string w) {
    if (out.witnesses.size() < 20) out.witnesses.push_back(std::move(w));
  };
  out.multigraded = is_multigraded_map(t, f, out.phi, 0);
  if (!out.multigraded) note("phi is not multigraded");
  out.chain_map = is_chain_map(t, f, out.phi);
  if (!out.chain_map) note("phi does not commute with the differentials");

  const auto lattice = lcm_lattice(ideal);
  out.surjective = true;
  out.kernel_matches_dimensions = true;
  for (const auto& a : lattice.elements) {
    const auto tc = graded_component(t, a);
    const auto fc = graded_component(f, a);
    for (std::size_t i = 0; i < tc.basis.size(); ++i) {
      const auto& tb = tc.basis[i];
      const std::vector<std::size_t> empty;
      const auto& fb = i < fc.basis.size() ? fc.basis[i] : empty;
      Matrix mat(fb.size(), tb.size());
      std::map<std::size_t, std::size_t> row;
      for (std::size_t r = 0; r < fb.size(); ++r) row[fb[r]] = r;
      for (std::size_t col = 0; col < tb.size(); ++col) {
        for (const auto& [e, v] : out.phi[tb[col]]) {
          if (auto it = row.find(e); it != row.end()) mat(it->second, col) = v;
        }
      }
      const auto rk = rank(mat);
      if (rk != fb.size()) {
        out.surjective = false;
        out.kernel_matches_dimensions = false;
        note("phi is not onto F_" + std::to_string(i) + " in degree " + monomial_string(a));
      }
      for (const auto& z : nullspace(mat)) {
        SparseVec v;
        for (std::size_t col = 0; col < tb.size(); ++col) {
          if (sgn(z[col]) != 0) v.emplace(tb[col], z[col]);
        }
        out.kernel[a].push_back(std::move(v));
      }
    }
  }

  // phi(g_A * g_B) against phi(g_A) * phi(g_B); the Taylor product is
  // sign * g_{A u B} or zero, with the same total degree on both sides.
  const auto tm = taylor_multiplication(out.taylor);
  out.multiplicative = true;
  for (std::size_t a = 1; a < t.size(); ++a) {
    for (std::size_t b = 1; b < t.size(); ++b) {
      const auto lhs = mres::apply(out.phi, tm.product(a, b));
      const auto rhs = m.product(out.phi[a], out.phi[b]);
      if (lhs != rhs) {
        out.multiplicative = false;
        note("phi(" + t.name(a) + " * " + t.name(b) + ") differs from phi(" + t.name(a) + ") * phi(" + t.name(b) + ")");
      }
    }
  }

  // J is an ideal: phi(t * j) = 0 for all Taylor basis t and j in J.
  out.ideal_closed = true;
  for (const auto& [deg, vecs] : out.kernel) {
    for (const auto& j : vecs) {
      for (std::size_t g = 1; g < t.size(); ++g) {
        SparseVec prod;
        for (const auto& [h, s] : j) tm.accumulate(prod, s, g, h);
        if (!mres::apply(out.phi, prod).empty()) {
          out.ideal_closed = false;
          note("J is not closed under multiplication by " + t.name(g) + " in degree " + monomial_string(deg));
        }
      }
    }
  }
  return out;
}

struct ConeReport {
  bool passed = false;
  FVector hilbert;        // ranks of F
  FVector cycles;         // dim ker of the scalarized differential per degree
  bool decomposition = false;  // hilbert_i = cycles_i + cycles_{i-1}
  bool cone = false;           // hilbert is a cone f-vector
  std::optional<FVector> base;
  std::vector<std::string> witnesses;
};

/// Checks the ranks of a minimal DGA resolution form the f-vector of a cone,
/// and that the cycles C of F tensor Q split the ranks as C + C[-1].
inline ConeReport hilbert_cone_check(const Multiplication& m) {
  const auto axioms = check_dga_axioms(m, {.associativity = true, .max_witnesses = 1});
  if (!axioms.all()) {
    throw PreconditionError("the Hilbert function statement needs a DGA: " +
                            (axioms.failures.empty() ? std::string("axiom failure") : axioms.failures.front()));
  }
  ConeReport r;
  const auto& c = m.complex();
  r.hilbert = c.ranks();
  const auto s = scalarize(c);
  r.cycles.resize(r.hilbert.size());
  for (std::size_t i = 0; i < r.hilbert.size(); ++i) r.cycles[i] = s.dims[i] - (i == 0 ? 0 : rank(s.d[i]));
  r.decomposition = true;
  for (std::size_t i = 0; i < r.hilbert.size(); ++i) {
    const std::size_t expect = r.cycles[i] + (i == 0 ? 0 : r.cycles[i - 1]);
    if (expect != r.hilbert[i]) {
      r.decomposition = false;
      r.witnesses.push_back("rank of F_" + std::to_string(i) + " is " + std::to_string(r.hilbert[i]) +
                            " but the cycles give " + std::to_string(expect));
    }
  }
  r.base = cone_deconvolve(r.hilbert);
  r.cone = r.base.has_value();
  if (!r.cone) r.witnesses.push_back(to_string(r.hilbert) + " is not the f-vector of a cone");
  while (r.cycles.size() > 1 && r.cycles.back() == 0) r.cycles.pop_back();
  r.passed = r.cone && r.decomposition;
  return r;
}

}  // namespace mres
