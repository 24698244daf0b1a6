#pragma once

#include <cstddef>
#include <iterator>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mres/betti.hpp"
#include "mres/errors.hpp"
#include "mres/free_complex.hpp"
#include "mres/monomial_ideal.hpp"
#include "mres/taylor.hpp"

namespace mres {

/// Which invertible entry Gaussian cancellation removes next.
///
/// forward: lowest homological degree first, then smallest basis id (both for
/// the source and the target of the entry). reverse: highest homological
/// degree first, then largest ids. Used to cross-check order independence.
enum class PivotOrder { forward, reverse };

/// Gaussian cancellation on a free complex, accumulating transfer data.
///
/// Cancelling an entry c = d(g)[h] with mdeg g = mdeg h replaces d(u) by
/// d(u) - (d(u)[h]/c) d(g) on the rest of hdeg(g) and drops g, h. The maps
/// i, p and the homotopy are composed step by step so that p i = id and
/// i p - id = dH + Hd hold for the accumulated data.
class Cancellation {
 public:
  explicit Cancellation(const FreeComplex& big)
      : big_(big),
        d_(big.size()),
        rev_(big.size()),
        alive_(big.size(), true),
        incl_(big.size()),
        proj_(big.size()),
        proj_users_(big.size()),
        homotopy_(big.size()) {
    for (std::size_t u = 0; u < big.size(); ++u) {
      d_[u] = big.differential(u);
      for (const auto& [h, v] : d_[u]) rev_[h].insert(u);
      incl_[u].emplace(u, 1);
      proj_[u].emplace(u, 1);
      proj_users_[u].insert(u);
    }
  }

  const FreeComplex& big() const { return big_; }
  bool alive(std::size_t id) const { return alive_.at(id); }
  Scalar entry(std::size_t g, std::size_t h) const { return mres::entry(d_.at(g), h); }
  std::size_t cancelled_pairs() const { return cancelled_; }

  /// Cancels the entry d(g)[h]; requires equal multidegrees and a nonzero entry.
  void cancel(std::size_t g, std::size_t h) {
    if (!alive_.at(g) || !alive_.at(h)) throw InputError("cancellation of a basis element that is already gone");
    if (big_.basis(g).mdeg != big_.basis(h).mdeg) throw InputError("cancellation needs equal multidegrees");
    const Scalar c = entry(g, h);
    if (sgn(c) == 0) throw InputError("cancellation needs a nonzero entry");
    const Scalar inv = 1 / c;

    // Homotopy: H += i_old o H_step o p_old, H_step(h) = -g/c.
    for (auto x : proj_users_[h]) {
      axpy(homotopy_[x], -mres::entry(proj_[x], h) * inv, incl_[g]);
    }

    // Projection: p_step(g) = 0, p_step(h) = -beta/c with beta = d(g) - c h.
    SparseVec beta = d_[g];
    beta.erase(h);
    std::set<std::size_t> touched = proj_users_[h];
    touched.insert(proj_users_[g].begin(), proj_users_[g].end());
    for (auto x : touched) {
      const Scalar a = mres::entry(proj_[x], h);
      proj_[x].erase(g);
      proj_[x].erase(h);
      axpy(proj_[x], -a * inv, beta);
    }
    proj_users_[g].clear();
    proj_users_[h].clear();
    for (auto x : touched) {
      for (const auto& [y, v] : beta) {
        if (proj_[x].count(y)) {
          proj_users_[y].insert(x);
        } else {
          proj_users_[y].erase(x);
        }
      }
    }

    // Inclusion and differential: u -> u - (gamma/c) g for u hitting h.
    const std::vector<std::size_t> hitting(rev_[h].begin(), rev_[h].end());
    for (auto u : hitting) {
      if (u == g) continue;
      const Scalar gamma = mres::entry(d_[u], h);
      axpy(incl_[u], -gamma * inv, incl_[g]);
      axpy(d_[u], -gamma * inv, d_[g]);
      for (const auto& [k, v] : d_[g]) {
        if (d_[u].count(k)) {
          rev_[k].insert(u);
        } else {
          rev_[k].erase(u);
        }
      }
      dirty_.insert(u);
    }
    for (auto w : rev_[g]) d_[w].erase(g);
    for (const auto& [k, v] : d_[g]) rev_[k].erase(g);
    for (const auto& [k, v] : d_[h]) rev_[k].erase(h);
    d_[g].clear();
    d_[h].clear();
    rev_[g].clear();
    rev_[h].clear();
    incl_[g].clear();
    incl_[h].clear();
    alive_[g] = alive_[h] = false;
    ++cancelled_;
  }

  /// Cancels invertible entries until none is left.
  void minimize(PivotOrder order) {
    std::set<std::pair<std::size_t, std::size_t>> work;  // (hdeg, id)
    for (std::size_t u = 0; u < big_.size(); ++u) {
      if (alive_[u]) work.emplace(big_.basis(u).hdeg, u);
    }
    while (!work.empty()) {
      auto it = order == PivotOrder::forward ? work.begin() : std::prev(work.end());
      const std::size_t g = it->second;
      work.erase(it);
      if (!alive_[g]) continue;
      std::optional<std::size_t> target;
      for (const auto& [h, v] : d_[g]) {
        if (big_.basis(h).mdeg != big_.basis(g).mdeg) continue;
        if (!target || order == PivotOrder::reverse) target = h;
        if (order == PivotOrder::forward) break;
      }
      if (!target) continue;
      dirty_.clear();
      cancel(g, *target);
      for (auto u : dirty_) {
        if (alive_[u]) work.emplace(big_.basis(u).hdeg, u);
      }
    }
  }

  /// The reduced complex on the surviving basis (ordered by hdeg, then
  /// original id) with transfer data relating it to the input.
  std::pair<FreeComplex, TransferData> finish() const {
    FreeComplex small(big_.num_vars());
    std::vector<std::size_t> new_id(big_.size(), big_.size());
    new_id[0] = 0;
    std::vector<std::size_t> old_id{0};
    for (std::size_t i = 1; i <= big_.length(); ++i) {
      for (auto u : big_.in_degree(i)) {
        if (!alive_[u]) continue;
        new_id[u] = small.add_basis(i, big_.basis(u).mdeg, big_.basis(u).label);
        old_id.push_back(u);
      }
    }
    auto remap = [&](const SparseVec& v) {
      SparseVec r;
      for (const auto& [k, c] : v) {
        if (new_id[k] == big_.size()) throw InternalError("reduced data refers to a cancelled basis element");
        r.emplace(new_id[k], c);
      }
      return r;
    };
    for (std::size_t k = 1; k < old_id.size(); ++k) small.set_differential(k, remap(d_[old_id[k]]));
    TransferData t;
    t.inclusion.resize(small.size());
    for (std::size_t k = 0; k < old_id.size(); ++k) t.inclusion[k] = incl_[old_id[k]];
    t.projection.resize(big_.size());
    for (std::size_t x = 0; x < big_.size(); ++x) t.projection[x] = remap(proj_[x]);
    t.homotopy = homotopy_;
    return {std::move(small), std::move(t)};
  }

 private:
  const FreeComplex& big_;
  std::vector<SparseVec> d_;
  std::vector<std::set<std::size_t>> rev_;
  std::vector<bool> alive_;
  std::vector<SparseVec> incl_;
  std::vector<SparseVec> proj_;
  std::vector<std::set<std::size_t>> proj_users_;
  std::vector<SparseVec> homotopy_;
  std::set<std::size_t> dirty_;
  std::size_t cancelled_ = 0;
};

/// Cancels every invertible entry. The input should be a resolution; the
/// output is then a minimal resolution of the same module.
inline std::pair<FreeComplex, TransferData> minimize(const FreeComplex& c, PivotOrder order = PivotOrder::forward) {
  Cancellation engine(c);
  engine.minimize(order);
  auto out = engine.finish();
  if (out.first.in_degree(0).size() != 1) throw InputError("input to minimize is not an augmented resolution");
  return out;
}

/// Minimal free resolution of S/I with transfer data to the Taylor complex.
struct MinimalResolution {
  std::shared_ptr<const FreeComplex> taylor;
  std::shared_ptr<const FreeComplex> complex;
  TransferData transfer;
};

inline MinimalResolution minimal_resolution(const MonomialIdeal& ideal, std::size_t cap = kDefaultGeneratorCap,
                                            PivotOrder order = PivotOrder::forward) {
  auto taylor = std::make_shared<const FreeComplex>(taylor_complex(ideal, cap));
  auto [small, transfer] = minimize(*taylor, order);
  return MinimalResolution{taylor, std::make_shared<const FreeComplex>(std::move(small)), std::move(transfer)};
}

/// beta_{i,a} read off a minimal complex.
inline BettiTable betti_table(const FreeComplex& minimal) {
  if (!is_minimal(minimal)) throw PreconditionError("Betti numbers are read off a minimal complex");
  BettiTable b(minimal.num_vars());
  for (const auto& g : minimal.basis()) b.add(g.hdeg, g.mdeg);
  return b;
}

inline BettiTable betti_table(const MonomialIdeal& ideal, std::size_t cap = kDefaultGeneratorCap) {
  return betti_table(*minimal_resolution(ideal, cap).complex);
}

}  // namespace mres
