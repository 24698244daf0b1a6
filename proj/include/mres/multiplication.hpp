#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "mres/errors.hpp"
#include "mres/free_complex.hpp"
#include "mres/lattice.hpp"
#include "mres/linalg.hpp"
#include "mres/monomial_ideal.hpp"
#include "mres/simplicial.hpp"
#include "mres/taylor.hpp"

namespace mres {

/// Structure constants of a product on a free complex.
///
/// table[(g, h)] lists the scalar coefficients of g * h; the monomial factor
/// of a term e is x^(mdeg g + mdeg h - mdeg e), implied by degrees as for the
/// differential. Both orientations (g, h) and (h, g) are stored, so graded
/// commutativity is a checkable property rather than a storage convention.
/// Products with the unit (basis id 0) are the module action and never stored.
/// A Laurent table may have terms whose implied monomial has negative exponents.
class Multiplication {
 public:
  Multiplication() = default;
  explicit Multiplication(std::shared_ptr<const FreeComplex> complex, bool laurent = false)
      : complex_(std::move(complex)), laurent_(laurent) {
    if (!complex_) throw InputError("multiplication needs a complex");
  }

  const FreeComplex& complex() const { return *complex_; }
  const std::shared_ptr<const FreeComplex>& complex_ptr() const { return complex_; }
  bool laurent() const { return laurent_; }
  const std::map<std::pair<std::size_t, std::size_t>, SparseVec>& table() const { return table_; }

  /// Sets g * h. Terms must sit in homological degree |g| + |h|; for a
  /// non-Laurent table also mdeg e <= mdeg g + mdeg h.
  void set(std::size_t g, std::size_t h, SparseVec v) {
    const auto& c = *complex_;
    if (g == 0 || h == 0) throw InputError("products with the unit are fixed by the module structure");
    const auto& bg = c.basis(g);
    const auto& bh = c.basis(h);
    for (auto it = v.begin(); it != v.end();) {
      if (sgn(it->second) == 0) {
        it = v.erase(it);
        continue;
      }
      const auto& be = c.basis(it->first);
      if (be.hdeg != bg.hdeg + bh.hdeg) {
        throw InputError("product " + c.name(g) + " * " + c.name(h) + " has a term in the wrong homological degree");
      }
      if (!laurent_ && !divides(be.mdeg, bg.mdeg + bh.mdeg)) {
        throw InputError("product " + c.name(g) + " * " + c.name(h) + " needs a negative monomial on " + c.name(it->first));
      }
      ++it;
    }
    if (v.empty()) {
      table_.erase({g, h});
    } else {
      table_[{g, h}] = std::move(v);
    }
  }

  /// Sets g * h = v and h * g = (-1)^(|g||h|) v.
  void set_commutative(std::size_t g, std::size_t h, const SparseVec& v) {
    const auto& c = *complex_;
    set(g, h, v);
    if (g != h) set(h, g, scaled(v, Scalar(sign_of_parity(c.basis(g).hdeg * c.basis(h).hdeg))));
  }

  /// out += s * (g * h), the unit acting as identity.
  void accumulate(SparseVec& out, const Scalar& s, std::size_t g, std::size_t h) const {
    if (g == 0) {
      add_entry(out, h, s);
    } else if (h == 0) {
      add_entry(out, g, s);
    } else if (auto it = table_.find({g, h}); it != table_.end()) {
      axpy(out, s, it->second);
    }
  }

  SparseVec product(std::size_t g, std::size_t h) const {
    SparseVec r;
    accumulate(r, Scalar(1), g, h);
    return r;
  }

  /// Bilinear extension on coefficient vectors.
  SparseVec product(const SparseVec& a, const SparseVec& b) const {
    SparseVec r;
    for (const auto& [g, u] : a) {
      for (const auto& [h, v] : b) accumulate(r, u * v, g, h);
    }
    return r;
  }

 private:
  std::shared_ptr<const FreeComplex> complex_;
  bool laurent_ = false;
  std::map<std::pair<std::size_t, std::size_t>, SparseVec> table_;
};

/// f * g for homogeneous elements; degrees add.
inline Element multiply(const Multiplication& m, const Element& f, const Element& g) {
  if (f.degree.size() != m.complex().num_vars() || g.degree.size() != m.complex().num_vars()) {
    throw InputError("elements and multiplication live over different rings");
  }
  check_element(m.complex(), f, m.laurent());
  check_element(m.complex(), g, m.laurent());
  return Element{f.hdeg + g.hdeg, f.degree + g.degree, m.product(f.coeffs, g.coeffs)};
}

/// (f * g) * h - f * (g * h).
inline Element associator(const Multiplication& m, const Element& f, const Element& g, const Element& h) {
  return multiply(m, multiply(m, f, g), h) - multiply(m, f, multiply(m, g, h));
}

/// Gemeda's product on the Taylor complex: g_W * g_V = (-1)^sigma(W,V)
/// (m_W m_V / m_(W u V)) g_(W u V) for disjoint W, V and 0 otherwise, where
/// sigma(W,V) counts pairs (m, m') in W x V with m' before m.
inline Multiplication taylor_multiplication(std::shared_ptr<const FreeComplex> taylor) {
  Multiplication m(taylor);
  const auto& c = *taylor;
  std::map<Subset, std::size_t> id;
  for (std::size_t g = 1; g < c.size(); ++g) {
    if (!c.basis(g).label) throw InputError("Taylor multiplication needs a labeled Taylor basis");
    id[*c.basis(g).label] = g;
  }
  for (std::size_t g = 1; g < c.size(); ++g) {
    const Subset w = *c.basis(g).label;
    for (std::size_t h = 1; h < c.size(); ++h) {
      const Subset v = *c.basis(h).label;
      if (w & v) continue;
      auto it = id.find(w | v);
      if (it == id.end()) throw InputError("Taylor basis is missing g_" + subset_name(w | v));
      std::size_t sigma = 0;
      for (auto a : subset_members(w)) sigma += rank_in(v, a);
      m.set(g, h, SparseVec{{it->second, Scalar(sign_of_parity(sigma))}});
    }
  }
  return m;
}

inline Multiplication taylor_multiplication(const MonomialIdeal& ideal, std::size_t cap = kDefaultGeneratorCap) {
  return taylor_multiplication(std::make_shared<const FreeComplex>(taylor_complex(ideal, cap)));
}

struct AxiomReport {
  bool unit = true;
  bool leibniz = true;
  bool commutativity = true;
  bool associativity = true;
  bool multigraded = true;
  /// Whether associativity was examined at all.
  bool associativity_checked = false;
  /// One line per failing pair or triple, with the nonzero residual.
  std::vector<std::string> failures;

  bool all() const { return unit && leibniz && commutativity && associativity && multigraded; }
  bool all_but_associativity() const { return unit && leibniz && commutativity && multigraded; }
};

struct AxiomOptions {
  bool associativity = true;
  /// Stop recording witnesses after this many (the flags stay exact).
  std::size_t max_witnesses = 20;
};

/// Checks the product on all basis pairs and triples. Bilinearity reduces
/// every axiom to basis elements, and homogeneity reduces each identity to
/// its scalar coefficients.
inline AxiomReport check_dga_axioms(const Multiplication& m, const AxiomOptions& opt = {}) {
  AxiomReport r;
  const auto& c = m.complex();
  const std::size_t n = c.size();
  const std::size_t top = c.length();
  auto witness = [&](const std::string& what, std::size_t hdeg, const Multidegree& deg, const SparseVec& res) {
    if (r.failures.size() < opt.max_witnesses) {
      r.failures.push_back(what + ": residual " + to_string(c, Element{hdeg, deg, res}));
    }
  };

  for (const auto& [key, v] : m.table()) {
    const auto [g, h] = key;
    if (g == 0 || h == 0) {
      r.unit = false;
      if (r.failures.size() < opt.max_witnesses) r.failures.push_back("unit: stored product with the unit");
    }
    for (const auto& [e, s] : v) {
      const bool hdeg_ok = c.basis(e).hdeg == c.basis(g).hdeg + c.basis(h).hdeg;
      const bool mdeg_ok = m.laurent() || divides(c.basis(e).mdeg, c.basis(g).mdeg + c.basis(h).mdeg);
      if (!hdeg_ok || !mdeg_ok) {
        r.multigraded = false;
        if (r.failures.size() < opt.max_witnesses) {
          r.failures.push_back("multigraded: " + c.name(g) + " * " + c.name(h) + " hits " + c.name(e));
        }
      }
    }
  }

  for (std::size_t g = 1; g < n; ++g) {
    const auto& bg = c.basis(g);
    for (std::size_t h = 1; h < n; ++h) {
      const auto& bh = c.basis(h);
      const Multidegree deg = bg.mdeg + bh.mdeg;
      const std::size_t hd = bg.hdeg + bh.hdeg;

      // d(g*h) - (dg)*h - (-1)^|g| g*(dh)
      SparseVec res;
      const auto gh = m.product(g, h);
      for (const auto& [e, s] : gh) axpy(res, s, c.differential(e));
      for (const auto& [k, s] : c.differential(g)) m.accumulate(res, -s, k, h);
      const Scalar sg(sign_of_parity(bg.hdeg));
      for (const auto& [k, s] : c.differential(h)) m.accumulate(res, -sg * s, g, k);
      if (!res.empty()) {
        r.leibniz = false;
        witness("leibniz (" + c.name(g) + ", " + c.name(h) + ")", hd - 1, deg, res);
      }

      if (g <= h) {
        SparseVec com = gh;
        m.accumulate(com, -Scalar(sign_of_parity(bg.hdeg * bh.hdeg)), h, g);
        if (!com.empty()) {
          r.commutativity = false;
          witness("commutativity (" + c.name(g) + ", " + c.name(h) + ")", hd, deg, com);
        }
      }
    }
  }

  if (opt.associativity) {
    r.associativity_checked = true;
    for (std::size_t g = 1; g < n; ++g) {
      for (std::size_t h = 1; h < n; ++h) {
        if (c.basis(g).hdeg + c.basis(h).hdeg + 1 > top) continue;
        const auto gh = m.product(g, h);
        for (std::size_t k = 1; k < n; ++k) {
          const std::size_t hd = c.basis(g).hdeg + c.basis(h).hdeg + c.basis(k).hdeg;
          if (hd > top) continue;
          SparseVec res;
          for (const auto& [e, s] : gh) m.accumulate(res, s, e, k);
          const auto hk = m.product(h, k);
          for (const auto& [e, s] : hk) m.accumulate(res, -s, g, e);
          if (!res.empty()) {
            r.associativity = false;
            witness("associativity (" + c.name(g) + ", " + c.name(h) + ", " + c.name(k) + ")", hd,
                    c.basis(g).mdeg + c.basis(h).mdeg + c.basis(k).mdeg, res);
          }
        }
      }
    }
  }
  return r;
}

/// a * b := p(i(a) * i(b)) on the small complex of a homotopy equivalence.
inline Multiplication transfer_multiplication(const Multiplication& big, std::shared_ptr<const FreeComplex> small,
                                              const TransferData& t) {
  Multiplication m(small, big.laurent());
  if (t.inclusion.size() != small->size() || t.projection.size() != big.complex().size()) {
    throw InputError("transfer data does not match the complexes");
  }
  for (std::size_t g = 1; g < small->size(); ++g) {
    for (std::size_t h = 1; h < small->size(); ++h) {
      m.set(g, h, mres::apply(t.projection, big.product(t.inclusion[g], t.inclusion[h])));
    }
  }
  return m;
}

struct CheckReport {
  bool passed = true;
  std::vector<std::string> witnesses;

  void fail(std::string w, std::size_t max_witnesses = 20) {
    passed = false;
    if (witnesses.size() < max_witnesses) witnesses.push_back(std::move(w));
  }
};

/// Every term e of g * h has mdeg e <= mdeg g v mdeg h. Every term of a
/// homogeneous element carries the element's degree, so checking basis pairs
/// decides the property for all homogeneous elements.
inline CheckReport check_supportive(const Multiplication& m) {
  CheckReport r;
  const auto& c = m.complex();
  for (const auto& [key, v] : m.table()) {
    const auto [g, h] = key;
    const auto bound = join(c.basis(g).mdeg, c.basis(h).mdeg);
    for (const auto& [e, s] : v) {
      if (!divides(c.basis(e).mdeg, bound)) {
        r.fail(c.name(g) + " * " + c.name(h) + " has the term " + c.name(e) + " of degree " +
               monomial_string(c.basis(e).mdeg) + " above " + monomial_string(bound));
      }
    }
  }
  return r;
}

inline bool is_supportive(const Multiplication& m) { return check_supportive(m).passed; }

/// Products of Scarf basis elements g_W * g_V with W u V a Scarf face, against
/// the fixed formula (sign as in the Taylor product, zero when W and V meet).
/// The complex must carry Taylor labels for its Scarf elements.
inline CheckReport scarf_product_check(const MonomialIdeal& ideal, const Multiplication& m) {
  if (!ideal.is_squarefree()) throw PreconditionError("the Scarf product formula is stated for squarefree ideals");
  CheckReport r;
  const auto& c = m.complex();
  const auto delta = scarf_complex(ideal);
  for (auto w : delta.faces()) {
    if (w == 0) continue;
    for (auto v : delta.faces()) {
      if (v == 0 || !delta.contains(w | v)) continue;
      const auto g = c.id_of_label(w), h = c.id_of_label(v);
      SparseVec expected;
      if ((w & v) == 0) {
        std::size_t sigma = 0;
        for (auto a : subset_members(w)) sigma += rank_in(v, a);
        expected.emplace(c.id_of_label(w | v), Scalar(sign_of_parity(sigma)));
      }
      const auto got = m.product(g, h);
      if (got != expected) {
        const Multidegree deg = c.basis(g).mdeg + c.basis(h).mdeg;
        r.fail(c.name(g) + " * " + c.name(h) + " = " + to_string(c, Element{c.basis(g).hdeg + c.basis(h).hdeg, deg, got}) +
               ", expected " + to_string(c, Element{c.basis(g).hdeg + c.basis(h).hdeg, deg, expected}));
      }
    }
  }
  return r;
}

/// Moves a supportive multiplication across an lcm-lattice isomorphism: the
/// structure constants are copied and every basis degree a becomes nu(a).
inline std::pair<std::shared_ptr<const FreeComplex>, Multiplication> relabel(const Multiplication& m,
                                                                             const LatticeIsomorphism& nu,
                                                                             const MonomialIdeal& target) {
  const auto sup = check_supportive(m);
  if (!sup.passed) throw PreconditionError("relabeling needs a supportive multiplication: " + sup.witnesses.front());
  const auto& c = m.complex();
  FreeComplex out(target.num_vars());
  for (std::size_t g = 1; g < c.size(); ++g) {
    out.add_basis(c.basis(g).hdeg, nu(c.basis(g).mdeg), c.basis(g).label);
  }
  for (std::size_t g = 1; g < c.size(); ++g) out.set_differential(g, c.differential(g));
  auto ptr = std::make_shared<const FreeComplex>(std::move(out));
  Multiplication r(ptr, m.laurent());
  for (const auto& [key, v] : m.table()) r.set(key.first, key.second, v);
  return {ptr, std::move(r)};
}

}  // namespace mres
