#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "mres/betti.hpp"
#include "mres/errors.hpp"
#include "mres/monomial_ideal.hpp"
#include "mres/multidegree.hpp"

namespace mres {

/// Finite poset stored as a full comparison table.
class Poset {
 public:
  Poset() = default;

  /// `leq[i][j]` is true iff element i <= element j. Validates reflexivity,
  /// antisymmetry and transitivity.
  explicit Poset(std::vector<std::vector<bool>> leq) : leq_(std::move(leq)) {
    const std::size_t n = leq_.size();
    for (const auto& row : leq_) {
      if (row.size() != n) throw InputError("poset comparison table must be square");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!leq_[i][i]) throw InputError("poset relation is not reflexive");
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j && leq_[i][j] && leq_[j][i]) throw InputError("poset relation is not antisymmetric");
        if (!leq_[i][j]) continue;
        for (std::size_t k = 0; k < n; ++k) {
          if (leq_[j][k] && !leq_[i][k]) throw InputError("poset relation is not transitive");
        }
      }
    }
  }

  std::size_t size() const { return leq_.size(); }
  bool leq(std::size_t i, std::size_t j) const { return leq_[i][j]; }

  std::size_t down_count(std::size_t i) const {
    std::size_t c = 0;
    for (std::size_t j = 0; j < size(); ++j) c += leq_[j][i] ? 1 : 0;
    return c;
  }
  std::size_t up_count(std::size_t i) const {
    std::size_t c = 0;
    for (std::size_t j = 0; j < size(); ++j) c += leq_[i][j] ? 1 : 0;
    return c;
  }
  bool covers(std::size_t lower, std::size_t upper) const {
    if (lower == upper || !leq_[lower][upper]) return false;
    for (std::size_t k = 0; k < size(); ++k) {
      if (k != lower && k != upper && leq_[lower][k] && leq_[k][upper]) return false;
    }
    return true;
  }

 private:
  std::vector<std::vector<bool>> leq_;
};

/// Multidegrees ordered by divisibility.
struct DegreePoset {
  std::vector<Multidegree> elements;
  Poset order;

  std::optional<std::size_t> index_of(const Multidegree& d) const {
    auto it = std::find(elements.begin(), elements.end(), d);
    if (it == elements.end()) return std::nullopt;
    return static_cast<std::size_t>(it - elements.begin());
  }
};

inline DegreePoset divisibility_poset(std::vector<Multidegree> elements) {
  const std::size_t n = elements.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) leq[i][j] = divides(elements[i], elements[j]);
  }
  return DegreePoset{std::move(elements), Poset(std::move(leq))};
}

/// All lcms of subsets of the generators, the empty lcm (zero vector) included.
struct LcmLattice {
  std::size_t num_vars = 0;
  /// Sorted by total degree, then lexicographically; elements[0] is the bottom.
  std::vector<Multidegree> elements;
  /// atoms[i] = index in `elements` of generator i.
  std::vector<std::size_t> atoms;

  DegreePoset poset() const { return divisibility_poset(elements); }

  bool contains(const Multidegree& d) const {
    return std::find(elements.begin(), elements.end(), d) != elements.end();
  }
  std::size_t index_of(const Multidegree& d) const {
    auto it = std::find(elements.begin(), elements.end(), d);
    if (it == elements.end()) throw InputError("multidegree " + to_string(d) + " is not in the lcm lattice");
    return static_cast<std::size_t>(it - elements.begin());
  }
  const Multidegree& top() const { return elements.back(); }
};

inline LcmLattice lcm_lattice(const MonomialIdeal& ideal) {
  std::set<Multidegree> closure{Multidegree(ideal.num_vars())};
  for (const auto& g : ideal.generators()) {
    std::vector<Multidegree> fresh;
    for (const auto& d : closure) fresh.push_back(join(d, g));
    closure.insert(fresh.begin(), fresh.end());
  }
  LcmLattice lat;
  lat.num_vars = ideal.num_vars();
  lat.elements.assign(closure.begin(), closure.end());
  std::stable_sort(lat.elements.begin(), lat.elements.end(), [](const Multidegree& a, const Multidegree& b) {
    return std::make_tuple(a.total(), a) < std::make_tuple(b.total(), b);
  });
  for (const auto& g : ideal.generators()) lat.atoms.push_back(lat.index_of(g));
  return lat;
}

/// Searches for an order isomorphism P -> Q by backtracking. Elements are
/// assigned in order of increasing down-set size, and candidates must match
/// down/up/cover counts and all relations to already-assigned elements.
/// Returns iso[i] = image of element i.
inline std::optional<std::vector<std::size_t>> poset_isomorphic(const Poset& p, const Poset& q,
                                                                std::size_t cap = 64) {
  const std::size_t n = p.size();
  if (n > cap || q.size() > cap) {
    throw ResourceError("poset isomorphism search capped at " + std::to_string(cap) + " elements");
  }
  if (q.size() != n) return std::nullopt;

  auto signature = [](const Poset& s, std::size_t i) {
    std::size_t lower_covers = 0, upper_covers = 0;
    for (std::size_t j = 0; j < s.size(); ++j) {
      lower_covers += s.covers(j, i) ? 1 : 0;
      upper_covers += s.covers(i, j) ? 1 : 0;
    }
    return std::make_tuple(s.down_count(i), s.up_count(i), lower_covers, upper_covers);
  };
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>> sp(n), sq(n);
  for (std::size_t i = 0; i < n; ++i) {
    sp[i] = signature(p, i);
    sq[i] = signature(q, i);
  }
  {
    auto a = sp, b = sq;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return p.down_count(a) < p.down_count(b); });

  std::vector<std::size_t> iso(n, n);
  std::vector<bool> used(n, false);

  auto consistent = [&](std::size_t depth, std::size_t v, std::size_t w) {
    for (std::size_t k = 0; k < depth; ++k) {
      const std::size_t u = order[k];
      if (p.leq(u, v) != q.leq(iso[u], w) || p.leq(v, u) != q.leq(w, iso[u])) return false;
    }
    return true;
  };

  auto search = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return true;
    const std::size_t v = order[depth];
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || sq[w] != sp[v] || !consistent(depth, v, w)) continue;
      iso[v] = w;
      used[w] = true;
      if (self(self, depth + 1)) return true;
      used[w] = false;
    }
    iso[v] = n;
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return iso;
}

/// Multidegrees carrying a nonzero Betti number (beta_0 contributes the
/// bottom), ordered by divisibility.
inline DegreePoset betti_poset(const MonomialIdeal& ideal, const BettiTable& betti) {
  if (betti.num_vars() != ideal.num_vars()) throw InputError("Betti table and ideal use different rings");
  const Multidegree zero(ideal.num_vars());
  if (betti.at(0, zero) != 1) throw InputError("Betti table must have beta_0 = 1 in degree 0");
  std::set<Multidegree> gens(ideal.generators().begin(), ideal.generators().end());
  std::set<Multidegree> first;
  const auto lat = lcm_lattice(ideal);
  std::set<Multidegree> degrees;
  for (const auto& [key, count] : betti.entries()) {
    const auto& [i, a] = key;
    if (i == 0 && !a.is_zero()) throw InputError("beta_0 must be concentrated in degree 0");
    if (i == 1) {
      if (count != 1 || !gens.count(a)) throw InputError("beta_1 does not match the generators");
      first.insert(a);
    }
    if (!lat.contains(a)) throw InputError("Betti degree " + to_string(a) + " is outside the lcm lattice");
    degrees.insert(a);
  }
  if (first != gens) throw InputError("beta_1 does not match the generators");
  std::vector<Multidegree> elems(degrees.begin(), degrees.end());
  std::stable_sort(elems.begin(), elems.end(), [](const Multidegree& a, const Multidegree& b) {
    return std::make_tuple(a.total(), a) < std::make_tuple(b.total(), b);
  });
  return divisibility_poset(std::move(elems));
}

/// An isomorphism between two lcm lattices, as a map on multidegrees.
struct LatticeIsomorphism {
  std::map<Multidegree, Multidegree> map;

  const Multidegree& operator()(const Multidegree& d) const {
    auto it = map.find(d);
    if (it == map.end()) throw InputError("multidegree " + to_string(d) + " is outside the lattice map's domain");
    return it->second;
  }
};

/// Throws unless `nu` is a bijection from `from` onto `to` that preserves and
/// reflects divisibility.
inline void verify_lattice_isomorphism(const LcmLattice& from, const LcmLattice& to, const LatticeIsomorphism& nu) {
  if (nu.map.size() != from.elements.size() || from.elements.size() != to.elements.size()) {
    throw InputError("lattice map is not a bijection between the lcm lattices");
  }
  std::set<Multidegree> image;
  for (const auto& d : from.elements) {
    const auto& e = nu(d);
    if (!to.contains(e)) throw InputError("lattice map leaves the target lcm lattice");
    image.insert(e);
  }
  if (image.size() != to.elements.size()) throw InputError("lattice map is not injective");
  for (const auto& a : from.elements) {
    for (const auto& b : from.elements) {
      if (divides(a, b) != divides(nu(a), nu(b))) throw InputError("lattice map does not respect the order");
    }
  }
}

/// Builds the isomorphism L_from -> L_to from an index-level poset isomorphism.
inline LatticeIsomorphism lattice_isomorphism_from_indices(const LcmLattice& from, const LcmLattice& to,
                                                           const std::vector<std::size_t>& iso) {
  LatticeIsomorphism nu;
  for (std::size_t i = 0; i < from.elements.size(); ++i) nu.map[from.elements[i]] = to.elements.at(iso.at(i));
  verify_lattice_isomorphism(from, to, nu);
  return nu;
}

/// The map lcm(W) -> lcm'(W) for two ideals with equally many generators,
/// when it is a well-defined lattice isomorphism (e.g. across polarization).
inline LatticeIsomorphism generator_lattice_map(const MonomialIdeal& from, const MonomialIdeal& to) {
  if (from.size() != to.size()) throw InputError("ideals have different numbers of generators");
  if (from.size() > 20) throw ResourceError("generator lattice map enumerates subsets; capped at 20 generators");
  LatticeIsomorphism nu;
  for (Subset w = 0; w < (Subset{1} << from.size()); ++w) {
    auto a = from.lcm_of(w);
    auto b = to.lcm_of(w);
    auto [it, inserted] = nu.map.emplace(a, b);
    if (!inserted && it->second != b) throw InputError("generator correspondence does not induce a lattice map");
  }
  verify_lattice_isomorphism(lcm_lattice(from), lcm_lattice(to), nu);
  return nu;
}

}  // namespace mres
