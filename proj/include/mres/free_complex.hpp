#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mres/errors.hpp"
#include "mres/linalg.hpp"
#include "mres/monomial_ideal.hpp"
#include "mres/multidegree.hpp"
#include "mres/scalar.hpp"

namespace mres {

struct BasisElement {
  std::size_t hdeg = 0;
  Multidegree mdeg;
  /// Generator subset for Taylor-derived bases.
  std::optional<Subset> label;
};

/// Name of a generator subset: "ab" for {0,1}; indices past 'z' fall back to
/// a brace list.
inline std::string subset_name(Subset w) {
  const auto members = subset_members(w);
  if (members.empty()) return "";
  if (members.back() < 26) {
    std::string s;
    for (auto i : members) s += static_cast<char>('a' + i);
    return s;
  }
  std::string s = "{";
  for (std::size_t k = 0; k < members.size(); ++k) s += (k ? "," : "") + std::to_string(members[k] + 1);
  return s + "}";
}

/// Multigraded free complex over S = k[x_1..x_n] resolving a cyclic module.
///
/// Basis element 0 is always the generator 1 of F_0 = S. The differential
/// stores scalar coefficients only; the coefficient of h in d(g) carries the
/// implied monomial x^(mdeg g - mdeg h). With that convention every
/// multigraded computation reduces to linear algebra over k.
class FreeComplex {
 public:
  FreeComplex() = default;
  explicit FreeComplex(std::size_t num_vars) : num_vars_(num_vars) {
    add_basis(0, Multidegree(num_vars), Subset{0});
  }

  std::size_t add_basis(std::size_t hdeg, Multidegree mdeg, std::optional<Subset> label = std::nullopt) {
    if (mdeg.size() != num_vars_) throw InputError("basis degree has wrong length");
    if (hdeg == 0 && !basis_.empty()) throw InputError("F_0 is spanned by the unit alone");
    if (hdeg > 0 && mdeg.is_zero()) throw InputError("basis element of positive homological degree in degree 0");
    const std::size_t id = basis_.size();
    basis_.push_back(BasisElement{hdeg, std::move(mdeg), label});
    diff_.emplace_back();
    if (by_hdeg_.size() <= hdeg) by_hdeg_.resize(hdeg + 1);
    by_hdeg_[hdeg].push_back(id);
    return id;
  }

  void set_differential(std::size_t id, SparseVec d) {
    const auto& g = basis_.at(id);
    for (auto it = d.begin(); it != d.end();) {
      if (sgn(it->second) == 0) {
        it = d.erase(it);
        continue;
      }
      if (it->first >= basis_.size()) throw InputError("differential refers to an unknown basis element");
      const auto& h = basis_[it->first];
      if (h.hdeg + 1 != g.hdeg) throw InputError("differential must lower homological degree by one");
      if (!divides(h.mdeg, g.mdeg)) {
        throw InputError("differential of " + name(id) + " hits " + name(it->first) + " of larger multidegree");
      }
      ++it;
    }
    diff_[id] = std::move(d);
  }

  std::size_t num_vars() const { return num_vars_; }
  std::size_t size() const { return basis_.size(); }
  const BasisElement& basis(std::size_t id) const { return basis_.at(id); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  const SparseVec& differential(std::size_t id) const { return diff_.at(id); }

  /// Largest homological degree carrying a basis element.
  std::size_t length() const {
    std::size_t p = 0;
    for (std::size_t i = 0; i < by_hdeg_.size(); ++i) {
      if (!by_hdeg_[i].empty()) p = i;
    }
    return p;
  }

  const std::vector<std::size_t>& in_degree(std::size_t i) const {
    static const std::vector<std::size_t> none;
    return i < by_hdeg_.size() ? by_hdeg_[i] : none;
  }

  std::vector<std::size_t> ranks() const {
    std::vector<std::size_t> r(length() + 1, 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = in_degree(i).size();
    return r;
  }

  std::optional<std::size_t> find_label(Subset w) const {
    for (std::size_t id = 0; id < basis_.size(); ++id) {
      if (basis_[id].label && *basis_[id].label == w) return id;
    }
    return std::nullopt;
  }

  std::size_t id_of_label(Subset w) const {
    auto id = find_label(w);
    if (!id) throw InputError("no basis element labeled g_" + subset_name(w));
    return *id;
  }

  std::string name(std::size_t id) const {
    if (id == 0) return "1";
    const auto& g = basis_.at(id);
    if (g.label) return "g_" + subset_name(*g.label);
    return "e" + std::to_string(id);
  }

  /// d(d(g)) = 0 for every basis element. Monomial factors compose
  /// multiplicatively along degrees, so the scalar composition decides.
  bool d_squared_zero() const {
    for (std::size_t id = 0; id < basis_.size(); ++id) {
      SparseVec dd;
      for (const auto& [h, c] : diff_[id]) axpy(dd, c, diff_[h]);
      if (!dd.empty()) return false;
    }
    return true;
  }

 private:
  std::size_t num_vars_ = 0;
  std::vector<BasisElement> basis_;
  std::vector<SparseVec> diff_;
  std::vector<std::vector<std::size_t>> by_hdeg_;
};

/// Homogeneous element sum_g c_g x^(degree - mdeg g) g of one homological degree.
struct Element {
  std::size_t hdeg = 0;
  Multidegree degree;
  SparseVec coeffs;

  bool is_zero() const { return coeffs.empty(); }
  friend bool operator==(const Element&, const Element&) = default;
};

inline Element basis_element(const FreeComplex& c, std::size_t id) {
  const auto& g = c.basis(id);
  return Element{g.hdeg, g.mdeg, SparseVec{{id, Scalar(1)}}};
}

inline Element zero_element(std::size_t hdeg, Multidegree degree) { return Element{hdeg, std::move(degree), {}}; }

/// Validates homogeneity. Laurent elements may have negative monomial parts.
inline void check_element(const FreeComplex& c, const Element& f, bool laurent = false) {
  if (f.degree.size() != c.num_vars()) throw InputError("element degree has wrong length");
  for (const auto& [id, v] : f.coeffs) {
    if (id >= c.size()) throw InputError("element refers to an unknown basis element");
    if (sgn(v) == 0) throw InputError("element stores a zero coefficient");
    const auto& g = c.basis(id);
    if (g.hdeg != f.hdeg) throw InputError("element mixes homological degrees");
    if (!laurent && !divides(g.mdeg, f.degree)) throw InputError("element term " + c.name(id) + " has negative monomial");
  }
}

inline void check_compatible(const Element& a, const Element& b) {
  if (a.hdeg != b.hdeg || a.degree != b.degree) {
    throw InputError("elements of different bidegrees cannot be added");
  }
}

inline Element& operator+=(Element& a, const Element& b) {
  check_compatible(a, b);
  axpy(a.coeffs, Scalar(1), b.coeffs);
  return a;
}
inline Element& operator-=(Element& a, const Element& b) {
  check_compatible(a, b);
  axpy(a.coeffs, Scalar(-1), b.coeffs);
  return a;
}
inline Element operator+(Element a, const Element& b) { return a += b; }
inline Element operator-(Element a, const Element& b) { return a -= b; }
inline Element operator*(const Scalar& s, Element a) {
  a.coeffs = scaled(a.coeffs, s);
  return a;
}

/// x^m * f.
inline Element times_monomial(Element f, const Multidegree& m) {
  f.degree += m;
  return f;
}

inline Element differential(const FreeComplex& c, const Element& f) {
  if (f.hdeg == 0) return zero_element(0, f.degree);
  Element r = zero_element(f.hdeg - 1, f.degree);
  for (const auto& [id, v] : f.coeffs) axpy(r.coeffs, v, c.differential(id));
  return r;
}

inline std::string to_string(const FreeComplex& c, const Element& f, std::span<const std::string> names = {}) {
  if (f.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [id, v] : f.coeffs) {
    const auto mono = f.degree - c.basis(id).mdeg;
    Scalar mag = abs(v);
    s += first ? (sgn(v) < 0 ? "-" : "") : (sgn(v) < 0 ? " - " : " + ");
    first = false;
    std::string factor;
    if (mag != 1) factor = to_string(mag);
    if (!mono.is_zero()) factor += (factor.empty() ? "" : "*") + monomial_string(mono, names);
    if (id == 0) {
      s += factor.empty() ? "1" : factor;
    } else {
      s += factor.empty() ? c.name(id) : factor + " " + c.name(id);
    }
  }
  return s;
}

/// Squarefree part: f = x^m f' with deg f' = deg f /\ (1,...,1).
inline std::pair<Multidegree, Element> squarefree_part(const FreeComplex& c, const Element& f) {
  for (const auto& g : c.basis()) {
    if (!g.mdeg.is_squarefree()) throw PreconditionError("squarefree part needs squarefree basis degrees");
  }
  if (!f.degree.is_nonnegative()) throw InputError("squarefree part of a Laurent element");
  check_element(c, f);
  const Multidegree a = meet(f.degree, Multidegree::ones(c.num_vars()));
  return {f.degree - a, Element{f.hdeg, a, f.coeffs}};
}

/// Multigraded S-linear map given on basis elements: image of basis id as
/// scalar coefficients in the target basis (monomials implied by degrees).
using LinearMap = std::vector<SparseVec>;

inline LinearMap identity_map(std::size_t n) {
  LinearMap m(n);
  for (std::size_t i = 0; i < n; ++i) m[i].emplace(i, 1);
  return m;
}

inline SparseVec apply(const LinearMap& m, const SparseVec& v) {
  SparseVec r;
  for (const auto& [id, c] : v) axpy(r, c, m.at(id));
  return r;
}

/// Applies a degree-preserving map; `hdeg_shift` is +1 for homotopies.
inline Element apply(const LinearMap& m, const Element& f, std::size_t hdeg_shift = 0) {
  return Element{f.hdeg + hdeg_shift, f.degree, apply(m, f.coeffs)};
}

/// (a o b)(x) = a(b(x)).
inline LinearMap compose(const LinearMap& a, const LinearMap& b) {
  LinearMap r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = apply(a, b[i]);
  return r;
}

/// The differential as a LinearMap from C to itself.
inline LinearMap differential_map(const FreeComplex& c) {
  LinearMap m(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) m[i] = c.differential(i);
  return m;
}

/// Checks that a map between complexes is multigraded of the given
/// homological shift: each image term has the right hdeg and divides.
inline bool is_multigraded_map(const FreeComplex& from, const FreeComplex& to, const LinearMap& m,
                               std::size_t hdeg_shift) {
  if (m.size() != from.size()) return false;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (const auto& [j, v] : m[i]) {
      if (j >= to.size()) return false;
      if (to.basis(j).hdeg != from.basis(i).hdeg + hdeg_shift) return false;
      if (!divides(to.basis(j).mdeg, from.basis(i).mdeg)) return false;
    }
  }
  return true;
}

/// Chain map condition d_to o m = m o d_from.
inline bool is_chain_map(const FreeComplex& from, const FreeComplex& to, const LinearMap& m) {
  const auto df = differential_map(from), dt = differential_map(to);
  const auto lhs = compose(dt, m), rhs = compose(m, df);
  return lhs == rhs;
}

/// Homotopy equivalence data relating a big complex to a smaller one.
struct TransferData {
  LinearMap inclusion;   // small -> big
  LinearMap projection;  // big -> small
  LinearMap homotopy;    // big -> big, raises hdeg by one
};

/// p o i = id and i o p - id = dh + hd, all maps multigraded chain maps.
inline bool check_transfer(const FreeComplex& big, const FreeComplex& small, const TransferData& t,
                           std::string* why = nullptr) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (!is_multigraded_map(small, big, t.inclusion, 0)) return fail("inclusion is not multigraded");
  if (!is_multigraded_map(big, small, t.projection, 0)) return fail("projection is not multigraded");
  if (!is_multigraded_map(big, big, t.homotopy, 1)) return fail("homotopy is not multigraded of degree +1");
  if (!is_chain_map(small, big, t.inclusion)) return fail("inclusion is not a chain map");
  if (!is_chain_map(big, small, t.projection)) return fail("projection is not a chain map");
  if (compose(t.projection, t.inclusion) != identity_map(small.size())) return fail("p o i is not the identity");
  const auto d = differential_map(big);
  const auto ip = compose(t.inclusion, t.projection);
  const auto dh = compose(d, t.homotopy), hd = compose(t.homotopy, d);
  for (std::size_t x = 0; x < big.size(); ++x) {
    SparseVec lhs = ip[x];
    add_entry(lhs, x, Scalar(-1));
    SparseVec rhs = dh[x];
    axpy(rhs, Scalar(1), hd[x]);
    if (lhs != rhs) return fail("i o p - id differs from dh + hd on " + big.name(x));
  }
  return true;
}

/// The degree-a strand: basis elements with mdeg <= a and scalar matrices.
/// Each x^(a - mdeg g) g spans a one-dimensional piece, so the strand's
/// differential is the scalar part of d.
struct GradedComponent {
  Multidegree degree;
  std::vector<std::vector<std::size_t>> basis;  // per hdeg
  std::vector<Matrix> d;                        // d[i]: strand_i -> strand_{i-1}; d[0] empty
};

inline GradedComponent graded_component(const FreeComplex& c, const Multidegree& a) {
  GradedComponent gc;
  gc.degree = a;
  const std::size_t p = c.length();
  gc.basis.resize(p + 1);
  std::vector<std::size_t> pos(c.size(), 0);
  for (std::size_t i = 0; i <= p; ++i) {
    for (auto id : c.in_degree(i)) {
      if (divides(c.basis(id).mdeg, a)) {
        pos[id] = gc.basis[i].size();
        gc.basis[i].push_back(id);
      }
    }
  }
  gc.d.resize(p + 1);
  for (std::size_t i = 1; i <= p; ++i) {
    Matrix m(gc.basis[i - 1].size(), gc.basis[i].size());
    for (std::size_t col = 0; col < gc.basis[i].size(); ++col) {
      for (const auto& [h, v] : c.differential(gc.basis[i][col])) {
        if (divides(c.basis(h).mdeg, a)) m(pos[h], col) = v;
      }
    }
    gc.d[i] = std::move(m);
  }
  return gc;
}

/// dim H_i of the strand, i = 0..p.
inline std::vector<std::size_t> homology_ranks(const GradedComponent& gc) {
  const std::size_t p = gc.basis.size() - 1;
  std::vector<std::size_t> rk(p + 2, 0);
  for (std::size_t i = 1; i <= p; ++i) rk[i] = rank(gc.d[i]);
  std::vector<std::size_t> h(p + 1);
  for (std::size_t i = 0; i <= p; ++i) h[i] = gc.basis[i].size() - rk[i] - rk[i + 1];
  return h;
}

/// Join closure of a set of degrees (the empty join included).
inline std::vector<Multidegree> join_closure(std::size_t num_vars, const std::set<Multidegree>& seeds) {
  std::set<Multidegree> closure{Multidegree(num_vars)};
  for (const auto& g : seeds) {
    std::vector<Multidegree> fresh;
    for (const auto& d : closure) fresh.push_back(join(d, g));
    closure.insert(fresh.begin(), fresh.end());
  }
  return {closure.begin(), closure.end()};
}

struct ResolutionReport {
  bool passed = true;
  std::string witness;
};

/// Exactness of C as a resolution of S/I, checked on graded strands.
///
/// The strand at a depends only on which basis degrees and generators divide
/// a, and replacing a by the join of those leaves both sets unchanged. So the
/// join closure of all basis degrees and generators is an exhaustive test set.
inline ResolutionReport check_resolution(const FreeComplex& c, const MonomialIdeal& ideal) {
  ResolutionReport r;
  auto fail = [&](std::string msg) {
    r.passed = false;
    r.witness = std::move(msg);
    return r;
  };
  if (c.num_vars() != ideal.num_vars()) return fail("complex and ideal live in different rings");
  if (c.in_degree(0).size() != 1) return fail("F_0 must have rank one");
  if (!c.d_squared_zero()) return fail("d o d != 0");
  std::set<Multidegree> seeds(ideal.generators().begin(), ideal.generators().end());
  for (const auto& g : c.basis()) seeds.insert(g.mdeg);
  for (const auto& a : join_closure(c.num_vars(), seeds)) {
    const auto h = homology_ranks(graded_component(c, a));
    const std::size_t expected0 = ideal.contains(a) ? 0 : 1;
    if (h[0] != expected0) {
      return fail("H_0 in degree " + to_string(a) + " has dimension " + std::to_string(h[0]) + ", expected " +
                  std::to_string(expected0));
    }
    for (std::size_t i = 1; i < h.size(); ++i) {
      if (h[i] != 0) return fail("H_" + std::to_string(i) + " is nonzero in degree " + to_string(a));
    }
  }
  return r;
}

inline bool is_resolution(const FreeComplex& c, const MonomialIdeal& ideal) {
  return check_resolution(c, ideal).passed;
}

/// d(F) lies in mF: no differential entry between equal multidegrees.
inline bool is_minimal(const FreeComplex& c) {
  for (std::size_t g = 0; g < c.size(); ++g) {
    for (const auto& [h, v] : c.differential(g)) {
      if (c.basis(h).mdeg == c.basis(g).mdeg) return false;
    }
  }
  return true;
}

/// Restriction to the basis elements flagged in `keep` (the unit is always
/// kept). Throws if the span is not closed under d.
inline FreeComplex subcomplex(const FreeComplex& c, const std::vector<bool>& keep, std::vector<std::size_t>* old_ids = nullptr) {
  FreeComplex r(c.num_vars());
  std::vector<std::size_t> new_id(c.size(), c.size());
  new_id[0] = 0;
  std::vector<std::size_t> olds{0};
  for (std::size_t i = 1; i <= c.length(); ++i) {
    for (auto id : c.in_degree(i)) {
      if (!keep.at(id)) continue;
      new_id[id] = r.add_basis(i, c.basis(id).mdeg, c.basis(id).label);
      olds.push_back(id);
    }
  }
  for (std::size_t k = 1; k < olds.size(); ++k) {
    SparseVec d;
    for (const auto& [h, v] : c.differential(olds[k])) {
      if (new_id[h] == c.size()) throw InternalError("selected basis is not closed under the differential");
      d.emplace(new_id[h], v);
    }
    r.set_differential(k, std::move(d));
  }
  if (old_ids) *old_ids = std::move(olds);
  return r;
}

}  // namespace mres
