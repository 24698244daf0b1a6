#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mres/errors.hpp"
#include "mres/multidegree.hpp"

namespace mres {

/// Bitmask over generator indices (bit i = generator i).
using Subset = std::uint32_t;

inline std::size_t popcount(Subset s) { return static_cast<std::size_t>(__builtin_popcount(s)); }

inline std::vector<std::size_t> subset_members(Subset s) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; s; ++i, s >>= 1) {
    if (s & 1u) out.push_back(i);
  }
  return out;
}

/// Monomial ideal given by its minimal generators.
///
/// The generator order is the total order used for every sign in Taylor-type
/// constructions. The unit ideal is rejected: all constructions here resolve
/// S/I with I proper.
class MonomialIdeal {
 public:
  MonomialIdeal(std::size_t num_vars, std::vector<Multidegree> generators)
      : num_vars_(num_vars), gens_(std::move(generators)) {
    if (num_vars_ == 0) throw InputError("ideal needs at least one variable");
    if (gens_.empty()) throw InputError("ideal needs at least one generator");
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      const auto& g = gens_[i];
      if (g.size() != num_vars_) {
        throw InputError("generator " + std::to_string(i + 1) + " has " + std::to_string(g.size()) +
                         " exponents, expected " + std::to_string(num_vars_));
      }
      if (!g.is_nonnegative()) throw InputError("generator " + std::to_string(i + 1) + " has a negative exponent");
      if (g.is_zero()) throw InputError("the unit ideal is not supported");
    }
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      for (std::size_t j = 0; j < gens_.size(); ++j) {
        if (i != j && divides(gens_[i], gens_[j])) {
          throw InputError("generators are not minimal: " + monomial_string(gens_[i]) + " divides " +
                           monomial_string(gens_[j]));
        }
      }
    }
  }

  std::size_t num_vars() const { return num_vars_; }
  std::size_t size() const { return gens_.size(); }
  const std::vector<Multidegree>& generators() const { return gens_; }
  const Multidegree& generator(std::size_t i) const { return gens_.at(i); }

  Multidegree lcm() const { return join_all(gens_, num_vars_); }

  Multidegree lcm_of(Subset w) const {
    Multidegree r(num_vars_);
    for (auto i : subset_members(w)) r = join(r, gens_.at(i));
    return r;
  }

  bool is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Multidegree& g) { return g.is_squarefree(); });
  }

  /// Whether x^a lies in the ideal.
  bool contains(const Multidegree& a) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Multidegree& g) { return divides(g, a); });
  }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t num_vars_;
  std::vector<Multidegree> gens_;
};

/// Drops every monomial divisible by another one (and duplicates), keeping
/// the input order of the survivors.
inline MonomialIdeal minimal_generators(std::span<const Multidegree> mons, std::size_t num_vars) {
  if (mons.empty()) throw InputError("empty generator list");
  std::vector<Multidegree> kept;
  for (std::size_t i = 0; i < mons.size(); ++i) {
    if (mons[i].size() != num_vars) throw InputError("monomial length does not match variable count");
    if (!mons[i].is_nonnegative()) throw InputError("negative exponent in monomial list");
    bool redundant = false;
    for (std::size_t j = 0; j < mons.size() && !redundant; ++j) {
      if (i == j) continue;
      if (mons[j] == mons[i]) {
        redundant = j < i;  // keep the first copy
      } else if (divides(mons[j], mons[i])) {
        redundant = true;
      }
    }
    if (!redundant) kept.push_back(mons[i]);
  }
  return MonomialIdeal(num_vars, std::move(kept));
}

/// No variable occurs with the same nonzero exponent in two generators.
inline bool is_strongly_generic(const MonomialIdeal& ideal) {
  const auto& g = ideal.generators();
  for (std::size_t v = 0; v < ideal.num_vars(); ++v) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (std::size_t j = i + 1; j < g.size(); ++j) {
        if (g[i][v] != 0 && g[i][v] == g[j][v]) return false;
      }
    }
  }
  return true;
}

/// The ideal s*I.
inline MonomialIdeal scale(const MonomialIdeal& ideal, const Multidegree& s) {
  if (!s.is_nonnegative()) throw InputError("scaling monomial must have nonnegative exponents");
  std::vector<Multidegree> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g + s);
  return MonomialIdeal(ideal.num_vars(), std::move(gens));
}

/// Same generators listed in a different order. `order[k]` is the index of the
/// generator placed at position k.
inline MonomialIdeal reorder(const MonomialIdeal& ideal, std::span<const std::size_t> order) {
  if (order.size() != ideal.size()) throw InputError("order must list every generator exactly once");
  std::vector<bool> seen(ideal.size(), false);
  std::vector<Multidegree> gens;
  for (auto i : order) {
    if (i >= ideal.size() || seen[i]) throw InputError("order must be a permutation of the generators");
    seen[i] = true;
    gens.push_back(ideal.generator(i));
  }
  return MonomialIdeal(ideal.num_vars(), std::move(gens));
}

/// Result of polarization: a squarefree ideal plus the variable map back.
struct Polarization {
  MonomialIdeal ideal;
  /// source_var[j] = original variable whose copy is polarized variable j.
  std::vector<std::size_t> source_var;
  std::size_t original_num_vars = 0;

  /// Sends a polarized multidegree to the original one by summing copies.
  Multidegree depolarize(const Multidegree& d) const {
    if (d.size() != source_var.size()) throw InputError("multidegree is not in the polarized ring");
    Multidegree r(original_num_vars);
    for (std::size_t j = 0; j < d.size(); ++j) r[source_var[j]] += d[j];
    return r;
  }
};

/// Standard polarization: x_i^a becomes the product of the first a copies of x_i.
/// Variables that occur with exponent at most one keep a single copy, so a
/// squarefree ideal is returned unchanged.
inline Polarization polarize(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.num_vars();
  std::vector<int> copies(n, 0);
  for (const auto& g : ideal.generators()) {
    for (std::size_t i = 0; i < n; ++i) copies[i] = std::max(copies[i], g[i]);
  }
  std::vector<std::size_t> first(n, 0);
  std::vector<std::size_t> source;
  for (std::size_t i = 0; i < n; ++i) {
    copies[i] = std::max(copies[i], 1);
    first[i] = source.size();
    for (int c = 0; c < copies[i]; ++c) source.push_back(i);
  }
  std::vector<Multidegree> gens;
  for (const auto& g : ideal.generators()) {
    Multidegree p(source.size());
    for (std::size_t i = 0; i < n; ++i) {
      for (int c = 0; c < g[i]; ++c) p[first[i] + static_cast<std::size_t>(c)] = 1;
    }
    gens.push_back(std::move(p));
  }
  return Polarization{MonomialIdeal(source.size(), std::move(gens)), std::move(source), n};
}

}  // namespace mres
