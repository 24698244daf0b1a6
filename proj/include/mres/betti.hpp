#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mres/errors.hpp"
#include "mres/multidegree.hpp"

namespace mres {

/// Multigraded Betti numbers beta_{i,a}; only nonzero entries are stored.
class BettiTable {
 public:
  using Key = std::pair<std::size_t, Multidegree>;

  BettiTable() = default;
  explicit BettiTable(std::size_t num_vars) : num_vars_(num_vars) {}

  std::size_t num_vars() const { return num_vars_; }

  void add(std::size_t i, const Multidegree& a, std::size_t count = 1) {
    if (a.size() != num_vars_) throw InputError("Betti degree has wrong length");
    if (!a.is_nonnegative()) throw InputError("Betti degree must be nonnegative");
    if (count == 0) return;
    entries_[{i, a}] += count;
  }

  std::size_t at(std::size_t i, const Multidegree& a) const {
    auto it = entries_.find({i, a});
    return it == entries_.end() ? 0 : it->second;
  }

  const std::map<Key, std::size_t>& entries() const { return entries_; }

  /// Projective dimension: largest i with a nonzero entry.
  std::size_t length() const {
    std::size_t p = 0;
    for (const auto& [k, v] : entries_) p = std::max(p, k.first);
    return p;
  }

  /// Total Betti numbers beta_0 .. beta_p.
  std::vector<std::size_t> totals() const {
    std::vector<std::size_t> t(entries_.empty() ? 0 : length() + 1, 0);
    for (const auto& [k, v] : entries_) t[k.first] += v;
    return t;
  }

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::size_t num_vars_ = 0;
  std::map<Key, std::size_t> entries_;
};

/// t_i = largest total degree of a nonzero beta_{i,a}, for i = 0..pdim.
using TVector = std::vector<int>;

inline TVector t_vector(const BettiTable& b) {
  TVector t(b.length() + 1, -1);
  for (const auto& [k, v] : b.entries()) t[k.first] = std::max(t[k.first], k.second.total());
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] < 0) throw InputError("Betti table has a gap in homological degree " + std::to_string(i));
  }
  return t;
}

enum class SubadditivityMode { all, first_step };

struct SubadditivityReport {
  bool passed = true;
  /// Pairs (a, b) with t_b > t_a + t_{b-a}.
  std::vector<std::pair<std::size_t, std::size_t>> violations;
};

/// Checks t_b <= t_a + t_{b-a} for 1 <= a < b <= pdim (or only a = 1).
inline SubadditivityReport check_subadditivity(const TVector& t, SubadditivityMode mode) {
  SubadditivityReport r;
  if (t.empty()) return r;
  const std::size_t p = t.size() - 1;
  for (std::size_t b = 2; b <= p; ++b) {
    const std::size_t a_max = (mode == SubadditivityMode::first_step) ? 1 : b - 1;
    for (std::size_t a = 1; a <= a_max; ++a) {
      if (t[b] > t[a] + t[b - a]) r.violations.emplace_back(a, b);
    }
  }
  r.passed = r.violations.empty();
  return r;
}

}  // namespace mres
