#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mres/errors.hpp"

namespace mres {

/// Integer exponent vector: the Z^n grading of the polynomial ring.
///
/// Monomials have nonnegative entries; Laurent contexts allow negative ones.
/// The default ordering (operator<) is lexicographic and exists only so that
/// multidegrees can key ordered containers. Divisibility is `divides`.
class Multidegree {
 public:
  Multidegree() = default;
  explicit Multidegree(std::size_t num_vars) : exps_(num_vars, 0) {}
  explicit Multidegree(std::vector<int> exps) : exps_(std::move(exps)) {}
  Multidegree(std::initializer_list<int> exps) : exps_(exps) {}

  static Multidegree unit(std::size_t num_vars, std::size_t var) {
    Multidegree m(num_vars);
    m.exps_.at(var) = 1;
    return m;
  }
  static Multidegree ones(std::size_t num_vars) {
    return Multidegree(std::vector<int>(num_vars, 1));
  }

  std::size_t size() const { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  int& operator[](std::size_t i) { return exps_[i]; }
  auto begin() const { return exps_.begin(); }
  auto end() const { return exps_.end(); }
  const std::vector<int>& exponents() const { return exps_; }

  bool is_zero() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
  }
  bool is_nonnegative() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e >= 0; });
  }
  bool is_squarefree() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0 || e == 1; });
  }
  int total() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

  Multidegree& operator+=(const Multidegree& o) {
    check_same_length(o);
    for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] += o.exps_[i];
    return *this;
  }
  Multidegree& operator-=(const Multidegree& o) {
    check_same_length(o);
    for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] -= o.exps_[i];
    return *this;
  }
  friend Multidegree operator+(Multidegree a, const Multidegree& b) { return a += b; }
  friend Multidegree operator-(Multidegree a, const Multidegree& b) { return a -= b; }

  friend bool operator==(const Multidegree&, const Multidegree&) = default;
  friend auto operator<=>(const Multidegree& a, const Multidegree& b) {
    return a.exps_ <=> b.exps_;
  }

  void check_same_length(const Multidegree& o) const {
    if (o.size() != size()) {
      throw InputError("multidegree length mismatch: " + std::to_string(size()) + " vs " +
                       std::to_string(o.size()));
    }
  }

 private:
  std::vector<int> exps_;
};

/// Componentwise maximum (lcm of monomials).
inline Multidegree join(const Multidegree& a, const Multidegree& b) {
  a.check_same_length(b);
  Multidegree r = a;
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

/// Componentwise minimum (gcd of monomials).
inline Multidegree meet(const Multidegree& a, const Multidegree& b) {
  a.check_same_length(b);
  Multidegree r = a;
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

/// a <= b componentwise, i.e. x^a divides x^b.
inline bool divides(const Multidegree& a, const Multidegree& b) {
  a.check_same_length(b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

inline Multidegree join_all(std::span<const Multidegree> ds, std::size_t num_vars) {
  Multidegree r(num_vars);
  for (const auto& d : ds) r = join(r, d);
  return r;
}

inline std::string to_string(const Multidegree& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(d[i]);
  }
  return s + ")";
}

/// Renders x^d as "x1^2*x3" (or with the given variable names); "1" for the
/// zero vector. Negative exponents are printed as such (Laurent monomials).
inline std::string monomial_string(const Multidegree& d, std::span<const std::string> names = {}) {
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
    if (d[i] != 1) s += "^" + std::to_string(d[i]);
  }
  return s.empty() ? "1" : s;
}

}  // namespace mres
