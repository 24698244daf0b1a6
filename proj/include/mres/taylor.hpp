#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <vector>

#include "mres/errors.hpp"
#include "mres/free_complex.hpp"
#include "mres/monomial_ideal.hpp"
#include "mres/simplicial.hpp"

namespace mres {

inline constexpr std::size_t kDefaultGeneratorCap = 16;

/// All subsets of {0..k-1} ordered by size, then lexicographically.
inline std::vector<Subset> ordered_subsets(std::size_t k) {
  std::vector<Subset> all(std::size_t{1} << k);
  for (Subset w = 0; w < all.size(); ++w) all[w] = w;
  std::sort(all.begin(), all.end(), [](Subset a, Subset b) {
    if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
    return subset_members(a) < subset_members(b);
  });
  return all;
}

/// Number of members of w below m: the Taylor sign exponent sigma(m, W).
inline std::size_t rank_in(Subset w, std::size_t m) {
  return popcount(w & ((Subset{1} << m) - 1));
}

namespace detail {

/// Taylor complex restricted to the subsets accepted by `keep`, which must be
/// closed under removing an element.
template <class Keep>
FreeComplex taylor_on(const MonomialIdeal& ideal, Keep keep) {
  const std::size_t k = ideal.size();
  FreeComplex c(ideal.num_vars());
  std::vector<std::size_t> id(std::size_t{1} << k, 0);
  for (auto w : ordered_subsets(k)) {
    if (w == 0 || !keep(w)) continue;
    id[w] = c.add_basis(popcount(w), ideal.lcm_of(w), w);
  }
  for (auto w : ordered_subsets(k)) {
    if (w == 0 || !keep(w)) continue;
    SparseVec d;
    for (auto m : subset_members(w)) {
      const Subset v = w & ~(Subset{1} << m);
      if (v != 0 && !keep(v)) throw InternalError("Taylor subcomplex selection is not closed under faces");
      d.emplace(id[v], Scalar(sign_of_parity(rank_in(w, m))));
    }
    c.set_differential(id[w], std::move(d));
  }
  return c;
}

inline void check_cap(const MonomialIdeal& ideal, std::size_t cap) {
  if (ideal.size() > cap) {
    throw ResourceError("Taylor complex of " + std::to_string(ideal.size()) + " generators exceeds the cap of " +
                        std::to_string(cap));
  }
  if (ideal.size() > 30) throw ResourceError("at most 30 generators are supported");
}

}  // namespace detail

/// Taylor resolution: basis g_W for all W, d g_W = sum (-1)^sigma(m,W) (m_W/m_{W-m}) g_{W-m}.
inline FreeComplex taylor_complex(const MonomialIdeal& ideal, std::size_t cap = kDefaultGeneratorCap) {
  detail::check_cap(ideal, cap);
  return detail::taylor_on(ideal, [](Subset) { return true; });
}

/// Subsets whose lcm is attained by no other subset.
inline SimplicialComplex scarf_complex(const MonomialIdeal& ideal, std::size_t cap = kDefaultGeneratorCap) {
  detail::check_cap(ideal, cap);
  std::map<Multidegree, std::size_t> count;
  const Subset n = Subset{1} << ideal.size();
  for (Subset w = 0; w < n; ++w) ++count[ideal.lcm_of(w)];
  std::set<Subset> faces;
  for (Subset w = 0; w < n; ++w) {
    if (count[ideal.lcm_of(w)] == 1) faces.insert(w);
  }
  return SimplicialComplex(ideal.size(), std::move(faces));
}

/// Taylor subcomplex spanned by the Scarf faces.
inline FreeComplex algebraic_scarf(const MonomialIdeal& ideal, std::size_t cap = kDefaultGeneratorCap) {
  const auto delta = scarf_complex(ideal, cap);
  return detail::taylor_on(ideal, [&](Subset w) { return delta.contains(w); });
}

/// W = {i_1 < ... < i_s} (positions in the order) is rooted when for every t
/// no generator earlier than i_t divides lcm(m_{i_t}, ..., m_{i_s}).
inline bool is_lyubeznik_rooted(const MonomialIdeal& ordered, Subset w) {
  const auto members = subset_members(w);
  for (std::size_t t = 0; t < members.size(); ++t) {
    Subset tail = 0;
    for (std::size_t u = t; u < members.size(); ++u) tail |= Subset{1} << members[u];
    const auto l = ordered.lcm_of(tail);
    for (std::size_t q = 0; q < members[t]; ++q) {
      if (divides(ordered.generator(q), l)) return false;
    }
  }
  return true;
}

/// Lyubeznik resolution for the order in which `order[k]` is the k-th
/// generator. Signs follow that order; labels refer to the original indices.
inline FreeComplex lyubeznik(const MonomialIdeal& ideal, std::span<const std::size_t> order,
                             std::size_t cap = kDefaultGeneratorCap) {
  detail::check_cap(ideal, cap);
  const auto ordered = reorder(ideal, order);
  auto c = detail::taylor_on(ordered, [&](Subset w) { return is_lyubeznik_rooted(ordered, w); });
  FreeComplex out(ideal.num_vars());
  for (std::size_t id = 1; id < c.size(); ++id) {
    Subset original = 0;
    for (auto pos : subset_members(*c.basis(id).label)) original |= Subset{1} << order[pos];
    out.add_basis(c.basis(id).hdeg, c.basis(id).mdeg, original);
  }
  for (std::size_t id = 1; id < c.size(); ++id) out.set_differential(id, c.differential(id));
  return out;
}

}  // namespace mres
