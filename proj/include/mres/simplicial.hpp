#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mres/errors.hpp"
#include "mres/monomial_ideal.hpp"

namespace mres {

/// Simplicial complex on vertices 0..n-1, faces stored as bitmasks.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Validates that `faces` is nonempty, contains the empty face and is
  /// closed under taking subsets.
  SimplicialComplex(std::size_t num_vertices, std::set<Subset> faces)
      : num_vertices_(num_vertices), faces_(std::move(faces)) {
    if (num_vertices_ > 31) throw ResourceError("simplicial complexes are limited to 31 vertices");
    if (!faces_.count(0)) throw InputError("a simplicial complex contains the empty face");
    const Subset all = (Subset{1} << num_vertices_) - 1;
    for (auto f : faces_) {
      if (f & ~all) throw InputError("face uses a vertex outside the vertex set");
      for (auto v : subset_members(f)) {
        if (!faces_.count(f & ~(Subset{1} << v))) throw InputError("face family is not closed under subsets");
      }
    }
  }

  static SimplicialComplex from_facets(std::size_t num_vertices, const std::vector<Subset>& facets) {
    std::set<Subset> faces{0};
    for (auto f : facets) {
      for (Subset s = f;; s = (s - 1) & f) {  // all subsets of f
        faces.insert(s);
        if (s == 0) break;
      }
    }
    return SimplicialComplex(num_vertices, std::move(faces));
  }

  std::size_t num_vertices() const { return num_vertices_; }
  const std::set<Subset>& faces() const { return faces_; }
  bool contains(Subset f) const { return faces_.count(f) > 0; }

  /// Faces ordered by size, then lexicographically by members.
  std::vector<Subset> sorted_faces() const {
    std::vector<Subset> v(faces_.begin(), faces_.end());
    std::sort(v.begin(), v.end(), [](Subset a, Subset b) {
      if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
      return subset_members(a) < subset_members(b);
    });
    return v;
  }

  std::vector<Subset> facets() const {
    std::vector<Subset> out;
    for (auto f : faces_) {
      bool maximal = true;
      for (std::size_t v = 0; v < num_vertices_ && maximal; ++v) {
        const Subset bit = Subset{1} << v;
        if (!(f & bit) && faces_.count(f | bit)) maximal = false;
      }
      if (maximal) out.push_back(f);
    }
    return out;
  }

  /// True when every vertex is a face and the full vertex set is a face.
  bool is_simplex() const { return faces_.count((Subset{1} << num_vertices_) - 1) > 0; }

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::size_t num_vertices_ = 0;
  std::set<Subset> faces_{0};
};

/// Entry i = number of faces with i vertices; entry 0 = 1 for the empty face.
using FVector = std::vector<std::size_t>;

inline FVector f_vector(const SimplicialComplex& d) {
  FVector f;
  for (auto face : d.faces()) {
    const auto k = popcount(face);
    if (f.size() <= k) f.resize(k + 1, 0);
    ++f[k];
  }
  return f;
}

inline std::string to_string(const FVector& f) {
  std::string s = "(";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
  return s + ")";
}

/// A vertex v with F u {v} in the complex for every face F.
inline std::optional<std::size_t> is_cone(const SimplicialComplex& d) {
  for (std::size_t v = 0; v < d.num_vertices(); ++v) {
    const Subset bit = Subset{1} << v;
    bool apex = true;
    for (auto f : d.faces()) {
      if (!d.contains(f | bit)) {
        apex = false;
        break;
      }
    }
    if (apex) return v;
  }
  return std::nullopt;
}

/// Cone with a new apex vertex numbered num_vertices().
inline SimplicialComplex cone(const SimplicialComplex& d) {
  std::set<Subset> faces = d.faces();
  const Subset apex = Subset{1} << d.num_vertices();
  for (auto f : d.faces()) faces.insert(f | apex);
  return SimplicialComplex(d.num_vertices() + 1, std::move(faces));
}

namespace detail {

inline mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

/// i-binomial (cascade) representation N = sum_j C(a_j, j), a_i > a_{i-1} > ...
/// Returns pairs (a_j, j).
inline std::vector<std::pair<unsigned long, unsigned long>> cascade(mpz_class n, unsigned long i) {
  std::vector<std::pair<unsigned long, unsigned long>> out;
  for (unsigned long j = i; j >= 1 && n > 0; --j) {
    unsigned long a = j;
    while (binomial(a + 1, j) <= n) ++a;
    out.emplace_back(a, j);
    n -= binomial(a, j);
  }
  return out;
}

}  // namespace detail

/// Kruskal-Katona: f is an f-vector iff f_0 = 1 and, writing f_i in its
/// i-cascade form, f_{i+1} <= sum_j C(a_j, j + 1).
inline bool kruskal_katona_check(const FVector& f) {
  if (f.empty() || f[0] != 1) return false;
  for (std::size_t i = 1; i + 1 < f.size(); ++i) {
    mpz_class bound = 0;
    for (const auto& [a, j] : detail::cascade(mpz_class(static_cast<unsigned long>(f[i])), i)) {
      bound += detail::binomial(a, j + 1);
    }
    if (mpz_class(static_cast<unsigned long>(f[i + 1])) > bound) return false;
  }
  return true;
}

/// Writes f = f-vector of a cone over a complex with f-vector g, i.e.
/// f_i = g_i + g_{i-1}; succeeds iff g is nonnegative, the last carry is zero
/// and g passes Kruskal-Katona. f = (1) is rejected since a cone has an apex.
inline std::optional<FVector> cone_deconvolve(const FVector& f) {
  if (f.size() < 2 || f[0] != 1) return std::nullopt;
  FVector g(f.size(), 0);
  g[0] = 1;
  for (std::size_t i = 1; i < f.size(); ++i) {
    if (f[i] < g[i - 1]) return std::nullopt;
    g[i] = f[i] - g[i - 1];
  }
  if (g.back() != 0) return std::nullopt;
  g.pop_back();
  if (!kruskal_katona_check(g)) return std::nullopt;
  return g;
}

inline bool is_cone_fvector(const FVector& f) { return cone_deconvolve(f).has_value(); }

}  // namespace mres
