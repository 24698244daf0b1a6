#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mres/errors.hpp"
#include "mres/free_complex.hpp"
#include "mres/lattice.hpp"
#include "mres/linalg.hpp"
#include "mres/monomial_ideal.hpp"
#include "mres/multiplication.hpp"
#include "mres/resolution.hpp"
#include "mres/simplicial.hpp"
#include "mres/taylor.hpp"

namespace mres {

/// Face poset of a complex, plus a top element unless the complex is a
/// simplex (whose face poset already has one). Element 0 is the empty face;
/// `faces[i]` is the face of element i, with the extra top (if any) last.
struct ConeLattice {
  std::vector<Subset> faces;
  bool has_extra_top = false;
  Poset order;
};

inline ConeLattice face_lattice_with_top(const SimplicialComplex& delta) {
  ConeLattice l;
  l.faces = delta.sorted_faces();
  l.has_extra_top = !delta.is_simplex();
  const std::size_t n = l.faces.size() + (l.has_extra_top ? 1 : 0);
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j == l.faces.size()) {
        leq[i][j] = true;
      } else if (i < l.faces.size()) {
        leq[i][j] = (l.faces[i] & ~l.faces[j]) == 0;
      }
    }
  }
  l.order = Poset(std::move(leq));
  return l;
}

/// A squarefree ideal whose lcm lattice is the face poset of the cone
/// `delta` plus a top element.
///
/// One variable x_p per element p of the lattice other than bottom and top;
/// generator j is the product of the x_p with j not in p. The lcm of a set W
/// then omits exactly the x_p with W inside p, so distinct faces get distinct
/// lcms and every non-face gets the product of all variables. A lattice with
/// no such element (a single vertex) uses one variable and the generator x.
/// The result is checked against the lattice before it is returned.
inline MonomialIdeal ideal_from_cone_complex(const SimplicialComplex& delta) {
  if (!is_cone(delta)) throw PreconditionError("the complex is not a cone");
  const std::size_t k = delta.num_vertices();
  for (std::size_t v = 0; v < k; ++v) {
    if (!delta.contains(Subset{1} << v)) throw PreconditionError("every vertex must be a face of the complex");
  }
  const auto lat = face_lattice_with_top(delta);
  std::vector<Subset> vars;
  const Subset full = (Subset{1} << k) - 1;
  for (auto f : lat.faces) {
    if (f != 0 && (lat.has_extra_top || f != full)) vars.push_back(f);
  }
  std::vector<Multidegree> gens;
  if (vars.empty()) {
    gens.push_back(Multidegree{1});
  } else {
    for (std::size_t j = 0; j < k; ++j) {
      Multidegree g(vars.size());
      for (std::size_t p = 0; p < vars.size(); ++p) g[p] = (vars[p] >> j) & 1 ? 0 : 1;
      gens.push_back(std::move(g));
    }
  }
  MonomialIdeal ideal(vars.empty() ? 1 : vars.size(), std::move(gens));

  // Post-verification: face -> lcm is injective on faces, non-faces go to
  // the top, and the order matches divisibility.
  std::map<Multidegree, Subset> seen;
  const Multidegree top = join_all(ideal.generators(), ideal.num_vars());
  for (Subset w = 0; w <= full; ++w) {
    const auto l = ideal.lcm_of(w);
    if (!delta.contains(w)) {
      if (l != top) throw InternalError("a non-face of the cone does not map to the top of the lcm lattice");
      continue;
    }
    if (seen.count(l) || (l == top && lat.has_extra_top)) {
      throw InternalError("two faces share an lcm in the constructed ideal");
    }
    seen.emplace(l, w);
  }
  for (const auto& [la, fa] : seen) {
    for (const auto& [lb, fb] : seen) {
      if (divides(la, lb) != ((fa & ~fb) == 0)) throw InternalError("lcm order differs from face order");
    }
  }
  const auto lcm = lcm_lattice(ideal);
  if (lcm.elements.size() != lat.order.size()) throw InternalError("lcm lattice has the wrong size");
  if (lcm.elements.size() <= 64 && !poset_isomorphic(lcm.poset().order, lat.order)) {
    throw InternalError("lcm lattice is not isomorphic to the face lattice");
  }
  return ideal;
}

/// Pairs (V, W) of generator subsets, V = W minus one element.
struct MorseMatching {
  std::vector<std::pair<Subset, Subset>> pairs;
};

/// {(W - apex, W) : apex in W, W not a face}.
inline MorseMatching cone_morse_matching(const SimplicialComplex& delta, std::size_t apex) {
  const std::size_t k = delta.num_vertices();
  if (apex >= k) throw InputError("apex is not a vertex");
  MorseMatching m;
  const Subset bit = Subset{1} << apex;
  for (auto w : ordered_subsets(k)) {
    if ((w & bit) && !delta.contains(w)) m.pairs.emplace_back(w & ~bit, w);
  }
  return m;
}

struct MorseReport {
  bool matching = true;  // (a), including that every pair is an edge
  bool acyclic = true;   // (b)
  bool degrees = true;   // (c)
  std::vector<std::string> witnesses;
  bool passed() const { return matching && acyclic && degrees; }
};

/// Checks (a) the pairs are disjoint edges V -> W of the Taylor digraph,
/// (b) reversing them leaves the digraph acyclic, (c) lcm V = lcm W.
inline MorseReport verify_morse_matching(const MorseMatching& m, const FreeComplex& taylor) {
  MorseReport r;
  auto note = [&](std::string w) {
    if (r.witnesses.size() < 20) r.witnesses.push_back(std::move(w));
  };
  std::map<Subset, Subset> up;    // V -> W
  std::map<Subset, Subset> down;  // W -> V
  std::set<Subset> used;
  for (const auto& [v, w] : m.pairs) {
    const auto gv = taylor.find_label(v), gw = taylor.find_label(w);
    if (!gv || !gw || (v & ~w) != 0 || popcount(w) != popcount(v) + 1 ||
        sgn(entry(taylor.differential(*gw), *gv)) == 0) {
      r.matching = false;
      note("(" + subset_name(v) + ", " + subset_name(w) + ") is not an edge of the complex");
      continue;
    }
    if (!used.insert(v).second || !used.insert(w).second) {
      r.matching = false;
      note("(" + subset_name(v) + ", " + subset_name(w) + ") shares an element with another pair");
    }
    up[v] = w;
    down[w] = v;
    if (taylor.basis(*gv).mdeg != taylor.basis(*gw).mdeg) {
      r.degrees = false;
      note("(" + subset_name(v) + ", " + subset_name(w) + ") joins degrees " +
           monomial_string(taylor.basis(*gv).mdeg) + " and " + monomial_string(taylor.basis(*gw).mdeg));
    }
  }
  // Edges W -> V for faces V of W in the differential, reversed when matched.
  std::vector<std::vector<std::size_t>> adj(taylor.size());
  for (std::size_t g = 1; g < taylor.size(); ++g) {
    for (const auto& [h, s] : taylor.differential(g)) {
      if (h == 0) continue;
      const Subset w = *taylor.basis(g).label, v = *taylor.basis(h).label;
      auto it = up.find(v);
      if (it != up.end() && it->second == w) {
        adj[h].push_back(g);
      } else {
        adj[g].push_back(h);
      }
    }
  }
  std::vector<int> state(taylor.size(), 0);  // 0 new, 1 on stack, 2 done
  for (std::size_t s = 0; s < taylor.size() && r.acyclic; ++s) {
    if (state[s]) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{s, 0}};
    state[s] = 1;
    while (!stack.empty() && r.acyclic) {
      auto& [u, i] = stack.back();
      if (i < adj[u].size()) {
        const auto v = adj[u][i++];
        if (state[v] == 1) {
          r.acyclic = false;
          note("reversing the matched edges creates a cycle through " + taylor.name(v));
        } else if (state[v] == 0) {
          state[v] = 1;
          stack.emplace_back(v, 0);
        }
      } else {
        state[u] = 2;
        stack.pop_back();
      }
    }
  }
  return r;
}

struct MorseQuotient {
  std::shared_ptr<const FreeComplex> complex;
  Multiplication multiplication;
  TransferData transfer;
  /// p(t * j) = 0 for Taylor basis t and generators j of J_M.
  bool ideal_closed = true;
  /// J_M (as an S-module) equals ker p in every lcm-lattice degree.
  bool kernel_is_ideal = true;
  std::vector<std::string> witnesses;
};

/// T / J_M for a Morse matching on the Taylor DGA, with J_M the S-span of
/// g_W and dg_W over matched pairs (V, W). Computed by cancelling the pairs
/// in order of increasing |W|; the product is p(i(a) * i(b)).
inline MorseQuotient morse_quotient(const Multiplication& taylor_dga, const MorseMatching& matching,
                                    const MonomialIdeal& ideal) {
  const auto& t = taylor_dga.complex();
  const auto check = verify_morse_matching(matching, t);
  if (!check.passed()) throw PreconditionError("not a Morse matching: " + check.witnesses.front());
  auto pairs = matching.pairs;
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const auto& a, const auto& b) { return popcount(a.second) < popcount(b.second); });
  Cancellation engine(t);
  for (const auto& [v, w] : pairs) {
    const auto gw = t.id_of_label(w), gv = t.id_of_label(v);
    if (sgn(engine.entry(gw, gv)) == 0) {
      throw InternalError("matched entry vanished during cancellation at " + t.name(gw));
    }
    engine.cancel(gw, gv);
  }
  auto [small, transfer] = engine.finish();
  MorseQuotient q;
  q.complex = std::make_shared<const FreeComplex>(std::move(small));
  q.multiplication = transfer_multiplication(taylor_dga, q.complex, transfer);
  auto note = [&](std::string w) {
    if (q.witnesses.size() < 20) q.witnesses.push_back(std::move(w));
  };

  // Generators of J_M as (degree, coefficients on Taylor ids).
  std::vector<std::pair<Multidegree, SparseVec>> gens;
  for (const auto& [v, w] : pairs) {
    const auto gw = t.id_of_label(w);
    gens.emplace_back(t.basis(gw).mdeg, SparseVec{{gw, Scalar(1)}});
    gens.emplace_back(t.basis(gw).mdeg, t.differential(gw));
  }
  for (const auto& [deg, j] : gens) {
    if (!mres::apply(transfer.projection, j).empty()) {
      q.kernel_is_ideal = false;
      note("p does not vanish on a generator of J_M in degree " + monomial_string(deg));
    }
    for (std::size_t g = 1; g < t.size(); ++g) {
      SparseVec prod;
      for (const auto& [h, s] : j) taylor_dga.accumulate(prod, s, g, h);
      if (!mres::apply(transfer.projection, prod).empty()) {
        q.ideal_closed = false;
        note("J_M is not closed under multiplication by " + t.name(g) + " in degree " +
             monomial_string(t.basis(g).mdeg + deg));
      }
    }
  }
  // Dimension count per lattice degree: dim (J_M)_a = dim ker p_a.
  for (const auto& a : lcm_lattice(ideal).elements) {
    std::vector<std::size_t> coords;
    for (std::size_t g = 0; g < t.size(); ++g) {
      if (divides(t.basis(g).mdeg, a)) coords.push_back(g);
    }
    std::map<std::size_t, std::size_t> col;
    for (std::size_t k = 0; k < coords.size(); ++k) col[coords[k]] = k;
    std::vector<std::vector<Scalar>> rows;
    for (const auto& [deg, j] : gens) {
      if (!divides(deg, a)) continue;
      std::vector<Scalar> r(coords.size(), Scalar(0));
      for (const auto& [h, s] : j) r[col.at(h)] = s;
      rows.push_back(std::move(r));
    }
    Matrix jm(rows.size(), coords.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t k = 0; k < coords.size(); ++k) jm(r, k) = rows[r][k];
    }
    const auto fc = graded_component(*q.complex, a);
    std::size_t small_dim = 0;
    for (const auto& b : fc.basis) small_dim += b.size();
    if (coords.size() - rank(jm) != small_dim) {
      q.kernel_is_ideal = false;
      note("dim (T/J_M) in degree " + monomial_string(a) + " differs from the quotient rank");
    }
  }
  return q;
}

}  // namespace mres
