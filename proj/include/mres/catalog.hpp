#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mres/monomial_ideal.hpp"
#include "mres/multidegree.hpp"
#include "mres/simplicial.hpp"

namespace mres {

struct NamedIdeal {
  std::string name;
  MonomialIdeal ideal;
  /// Display names of the variables, e.g. {"x1","x2","y"}.
  std::vector<std::string> var_names;
};

namespace catalog {

/// <x1x2y, x2x3, x3x4z, x4x1> in k[x1..x4, y, z].
inline NamedIdeal four_cycle_with_tails() {
  return {"ex3.2",
          MonomialIdeal(6, {{1, 1, 0, 0, 1, 0}, {0, 1, 1, 0, 0, 0}, {0, 0, 1, 1, 0, 1}, {1, 0, 0, 1, 0, 0}}),
          {"x1", "x2", "x3", "x4", "y", "z"}};
}

/// <x^2, xy, xz>.
inline NamedIdeal x_squared_xy_xz() {
  return {"ex3.3", MonomialIdeal(3, {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}}), {"x", "y", "z"}};
}

/// Edge ideal of the path on six vertices.
inline NamedIdeal path_six() {
  return {"ex3.8",
          MonomialIdeal(6, {{1, 1, 0, 0, 0, 0},
                            {0, 1, 1, 0, 0, 0},
                            {0, 0, 1, 1, 0, 0},
                            {0, 0, 0, 1, 1, 0},
                            {0, 0, 0, 0, 1, 1}}),
          {"x1", "x2", "x3", "x4", "x5", "x6"}};
}

/// Edge ideal of the six-cycle.
inline NamedIdeal cycle_six() {
  return {"ex4.3",
          MonomialIdeal(6, {{1, 1, 0, 0, 0, 0},
                            {0, 1, 1, 0, 0, 0},
                            {0, 0, 1, 1, 0, 0},
                            {0, 0, 0, 1, 1, 0},
                            {0, 0, 0, 0, 1, 1},
                            {1, 0, 0, 0, 0, 1}}),
          {"x1", "x2", "x3", "x4", "x5", "x6"}};
}

/// <x^2, xy, y^2z^2, zw, w^2>, strongly generic without a minimal DGA resolution.
inline NamedIdeal generic_five() {
  return {"thm5.1",
          MonomialIdeal(4, {{2, 0, 0, 0}, {1, 1, 0, 0}, {0, 2, 2, 0}, {0, 0, 1, 1}, {0, 0, 0, 2}}),
          {"x", "y", "z", "w"}};
}

inline std::vector<std::string> default_var_names(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back("x" + std::to_string(i + 1));
  return v;
}

struct RandomIdealSpec {
  std::size_t max_gens = 5;
  std::size_t max_vars = 6;
  int max_exponent = 2;
  bool squarefree = false;
};

/// One random ideal: up to max_gens nonconstant monomials, reduced to minimal
/// generators. Deterministic for a given engine state.
inline MonomialIdeal random_ideal(std::mt19937_64& rng, const RandomIdealSpec& spec) {
  std::uniform_int_distribution<std::size_t> nvars(1, spec.max_vars);
  std::uniform_int_distribution<std::size_t> ngens(1, spec.max_gens);
  const std::size_t n = nvars(rng);
  const std::size_t k = ngens(rng);
  std::uniform_int_distribution<int> expo(0, spec.squarefree ? 1 : spec.max_exponent);
  std::vector<Multidegree> mons;
  for (std::size_t j = 0; j < k; ++j) {
    Multidegree m(n);
    do {
      for (std::size_t v = 0; v < n; ++v) m[v] = expo(rng);
    } while (m.is_zero());
    mons.push_back(m);
  }
  return minimal_generators(mons, n);
}

/// `count` random ideals from a fixed seed.
inline std::vector<MonomialIdeal> random_corpus(std::uint64_t seed, std::size_t count, const RandomIdealSpec& spec = {}) {
  std::mt19937_64 rng(seed);
  std::vector<MonomialIdeal> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_ideal(rng, spec));
  return out;
}

/// A random complex on `num_vertices` vertices: every vertex plus up to
/// `max_facets` random subsets as facets.
inline SimplicialComplex random_complex(std::mt19937_64& rng, std::size_t num_vertices, std::size_t max_facets = 4) {
  std::vector<Subset> facets;
  for (std::size_t v = 0; v < num_vertices; ++v) facets.push_back(Subset{1} << v);
  std::uniform_int_distribution<std::size_t> count(0, max_facets);
  std::uniform_int_distribution<Subset> pick(0, (Subset{1} << num_vertices) - 1);
  for (std::size_t k = count(rng); k > 0; --k) facets.push_back(pick(rng));
  return SimplicialComplex::from_facets(num_vertices, facets);
}

/// Cone over a random complex on 0..max_vertices-1 vertices, apex last.
inline SimplicialComplex random_cone(std::mt19937_64& rng, std::size_t max_vertices = 6) {
  std::uniform_int_distribution<std::size_t> base(0, max_vertices - 1);
  return cone(random_complex(rng, base(rng)));
}

/// Cone over the path 0 - 1 - 2.
inline SimplicialComplex cone_over_path3() { return cone(SimplicialComplex::from_facets(3, {0b011, 0b110})); }

}  // namespace catalog
}  // namespace mres
