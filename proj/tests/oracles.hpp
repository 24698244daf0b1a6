#pragma once

// Independent reference computations for the test suites. Nothing here uses
// the library's linear algebra or complex machinery.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <vector>

#include "mres/betti.hpp"
#include "mres/monomial_ideal.hpp"
#include "mres/simplicial.hpp"

namespace oracle {

using mres::Multidegree;
using mres::Subset;

/// Rank of a dense rational matrix by plain Gaussian elimination.
inline std::size_t rank(std::vector<std::vector<mpq_class>> m) {
  std::size_t r = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const mpq_class f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

/// beta_{i,a} = dim Tor_i(S/I, k)_a, computed as the homology of the Taylor
/// complex tensored with k: in degree a only subsets with lcm exactly a
/// survive, and the differential keeps entries with unit monomial factor.
inline mres::BettiTable tor_betti(const mres::MonomialIdeal& ideal) {
  const std::size_t k = ideal.size();
  std::map<Multidegree, std::vector<Subset>> by_lcm;
  for (Subset w = 0; w < (Subset{1} << k); ++w) by_lcm[ideal.lcm_of(w)].push_back(w);
  mres::BettiTable b(ideal.num_vars());
  for (const auto& [a, subsets] : by_lcm) {
    std::map<std::size_t, std::vector<Subset>> by_size;
    for (auto w : subsets) by_size[mres::popcount(w)].push_back(w);
    auto boundary_rank = [&](std::size_t i) -> std::size_t {
      if (i == 0 || !by_size.count(i) || !by_size.count(i - 1)) return 0;
      const auto& src = by_size[i];
      const auto& dst = by_size[i - 1];
      std::vector<std::vector<mpq_class>> m(dst.size(), std::vector<mpq_class>(src.size(), 0));
      for (std::size_t c = 0; c < src.size(); ++c) {
        std::size_t pos = 0;
        for (std::size_t v = 0; v < k; ++v) {
          const Subset bit = Subset{1} << v;
          if (!(src[c] & bit)) continue;
          auto it = std::find(dst.begin(), dst.end(), src[c] & ~bit);
          if (it != dst.end()) m[static_cast<std::size_t>(it - dst.begin())][c] = (pos % 2 == 0) ? 1 : -1;
          ++pos;
        }
      }
      return rank(m);
    };
    for (const auto& [i, list] : by_size) {
      const std::size_t h = list.size() - boundary_rank(i) - boundary_rank(i + 1);
      if (h) b.add(i, a, h);
    }
  }
  return b;
}

/// All f-vectors of simplicial complexes on at most `n` vertices, found by
/// enumerating every down-closed family of subsets of {0..n-1}.
inline std::set<std::vector<std::size_t>> realizable_fvectors(std::size_t n) {
  std::vector<Subset> order;
  for (Subset w = 1; w < (Subset{1} << n); ++w) order.push_back(w);
  std::stable_sort(order.begin(), order.end(),
                   [](Subset a, Subset b) { return mres::popcount(a) < mres::popcount(b); });
  std::set<std::vector<std::size_t>> out;
  std::vector<bool> in(std::size_t{1} << n, false);
  in[0] = true;
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == order.size()) {
      std::vector<std::size_t> f(n + 1, 0);
      for (Subset w = 0; w < in.size(); ++w) {
        if (in[w]) ++f[mres::popcount(w)];
      }
      while (f.size() > 1 && f.back() == 0) f.pop_back();
      out.insert(f);
      return;
    }
    const Subset w = order[pos];
    self(self, pos + 1);
    bool allowed = true;
    for (auto v : mres::subset_members(w)) allowed = allowed && in[w & ~(Subset{1} << v)];
    if (allowed) {
      in[w] = true;
      self(self, pos + 1);
      in[w] = false;
    }
  };
  rec(rec, 0);
  return out;
}

/// Number of down-closed families visited by realizable_fvectors(n); used to
/// confirm the enumeration is complete: for n = 5 it is the Dedekind number
/// 7581 minus one, since the void complex (no empty face) is not visited.
inline std::size_t count_complexes(std::size_t n) {
  std::vector<Subset> order;
  for (Subset w = 1; w < (Subset{1} << n); ++w) order.push_back(w);
  std::stable_sort(order.begin(), order.end(),
                   [](Subset a, Subset b) { return mres::popcount(a) < mres::popcount(b); });
  std::vector<bool> in(std::size_t{1} << n, false);
  in[0] = true;
  std::size_t count = 0;
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == order.size()) {
      ++count;
      return;
    }
    const Subset w = order[pos];
    self(self, pos + 1);
    bool allowed = true;
    for (auto v : mres::subset_members(w)) allowed = allowed && in[w & ~(Subset{1} << v)];
    if (allowed) {
      in[w] = true;
      self(self, pos + 1);
      in[w] = false;
    }
  };
  rec(rec, 0);
  return count;
}

/// Every candidate vector (1, f_1, ..., f_d) with f_1 <= max_f1 and
/// f_i <= C(f_1, i), trailing zeros removed.
inline std::set<std::vector<std::size_t>> candidate_fvectors(std::size_t max_f1) {
  std::set<std::vector<std::size_t>> out{{1}};
  for (std::size_t f1 = 1; f1 <= max_f1; ++f1) {
    std::vector<std::size_t> bound(f1 + 1);
    for (std::size_t i = 0; i <= f1; ++i) bound[i] = mres::detail::binomial(f1, i).get_ui();
    std::vector<std::size_t> f(f1 + 1, 0);
    f[0] = 1;
    f[1] = f1;
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i > f1) {
        auto g = f;
        while (g.size() > 1 && g.back() == 0) g.pop_back();
        out.insert(g);
        return;
      }
      for (std::size_t v = 0; v <= bound[i]; ++v) {
        f[i] = v;
        self(self, i + 1);
      }
    };
    rec(rec, 2);
  }
  return out;
}

/// All lcms of subsets, by brute force.
inline std::set<Multidegree> all_subset_lcms(const mres::MonomialIdeal& ideal) {
  std::set<Multidegree> out;
  for (Subset w = 0; w < (Subset{1} << ideal.size()); ++w) out.insert(ideal.lcm_of(w));
  return out;
}

}  // namespace oracle
