#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "mres/errors.hpp"
#include "mres/free_complex.hpp"
#include "mres/linalg.hpp"
#include "mres/monomial_ideal.hpp"
#include "mres/multiplication.hpp"
#include "mres/resolution.hpp"

namespace mres {

/// A complex of finite-dimensional k-vector spaces: d[i] maps degree i to
/// degree i-1 (d[0] is unused and empty).
struct ScalarComplex {
  std::vector<std::size_t> dims;
  std::vector<Matrix> d;

  std::size_t length() const { return dims.empty() ? 0 : dims.size() - 1; }
};

/// Sets every implied monomial to 1. Over the Laurent ring each multigraded
/// component of a free module is a copy of k, so this loses nothing for
/// multigraded maps. Position j of degree i is basis id c.in_degree(i)[j].
inline ScalarComplex scalarize(const FreeComplex& c) {
  ScalarComplex s;
  const std::size_t p = c.length();
  std::vector<std::size_t> pos(c.size());
  for (std::size_t i = 0; i <= p; ++i) {
    const auto& ids = c.in_degree(i);
    s.dims.push_back(ids.size());
    for (std::size_t j = 0; j < ids.size(); ++j) pos[ids[j]] = j;
  }
  s.d.emplace_back(0, 0);
  for (std::size_t i = 1; i <= p; ++i) {
    Matrix m(s.dims[i - 1], s.dims[i]);
    const auto& ids = c.in_degree(i);
    for (std::size_t j = 0; j < ids.size(); ++j) {
      for (const auto& [h, v] : c.differential(ids[j])) m(pos[h], j) = v;
    }
    s.d.push_back(std::move(m));
  }
  return s;
}

/// sigma[i] maps degree i to degree i+1, with d sigma + sigma d = id and
/// sigma sigma = 0. complement[i] lists the coordinates spanning V_i.
struct ContractingHomotopy {
  std::vector<Matrix> sigma;
  std::vector<std::vector<std::size_t>> complement;
};

/// Splits F_i = V_i + d(F_{i+1}) with V_i spanned by unit vectors, chosen
/// greedily in increasing coordinate order after the image columns
/// (reduced echelon form of [d_{i+1} | I]). sigma is zero on V_i and inverts
/// d on V_{i+1}. Throws PreconditionError when the complex is not exact.
inline ContractingHomotopy contracting_homotopy(const ScalarComplex& s) {
  const std::size_t p = s.length();
  ContractingHomotopy h;
  h.complement.resize(p + 1);
  for (std::size_t i = 0; i <= p; ++i) {
    const std::size_t n = s.dims[i];
    const std::size_t m = i < p ? s.dims[i + 1] : 0;
    Matrix aug(n, m + n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < m; ++c) aug(r, c) = s.d[i + 1](r, c);
      aug(r, m + r) = 1;
    }
    for (auto c : rref(aug).pivots) {
      if (c >= m) h.complement[i].push_back(c - m);
    }
  }
  if (!h.complement[0].empty()) throw PreconditionError("complex is not exact in homological degree 0");
  h.sigma.resize(p + 1);
  for (std::size_t i = 0; i <= p; ++i) {
    const std::size_t n = s.dims[i];
    const std::size_t up = i < p ? s.dims[i + 1] : 0;
    const auto& ni = h.complement[i];
    const std::vector<std::size_t> empty;
    const auto& nup = i < p ? h.complement[i + 1] : empty;
    if (ni.size() + nup.size() != n) {
      throw PreconditionError("complex is not exact in homological degree " + std::to_string(i));
    }
    Matrix m(n, n);
    for (std::size_t k = 0; k < ni.size(); ++k) m(ni[k], k) = 1;
    for (std::size_t k = 0; k < nup.size(); ++k) {
      for (std::size_t r = 0; r < n; ++r) m(r, ni.size() + k) = s.d[i + 1](r, nup[k]);
    }
    if (rank(m) != n) throw PreconditionError("complex is not exact in homological degree " + std::to_string(i));
    const Matrix inv = inverse(m);
    Matrix sig(up, n);
    for (std::size_t k = 0; k < nup.size(); ++k) {
      for (std::size_t c = 0; c < n; ++c) sig(nup[k], c) = inv(ni.size() + k, c);
    }
    h.sigma[i] = std::move(sig);
  }
  return h;
}

/// Checks d sigma + sigma d = id and sigma sigma = 0 in every degree.
inline bool check_contracting_homotopy(const ScalarComplex& s, const ContractingHomotopy& h) {
  const std::size_t p = s.length();
  for (std::size_t i = 0; i <= p; ++i) {
    const std::size_t n = s.dims[i];
    Matrix sum(n, n);
    if (i < p) sum = sum + s.d[i + 1] * h.sigma[i];
    if (i > 0) sum = sum + h.sigma[i - 1] * s.d[i];
    if (!(sum == Matrix::identity(n))) return false;
    if (i + 1 <= p && !(h.sigma[i + 1] * h.sigma[i]).is_zero()) return false;
  }
  return true;
}

/// The multiplication on F tensor Q defined by a * b = sigma(da * b +
/// (-1)^|a| a * db), with F_0 acting as the ring. Structure constants are
/// scalars; implied monomials may have negative exponents.
inline Multiplication laurent_dga(std::shared_ptr<const FreeComplex> f) {
  const auto& c = *f;
  if (c.in_degree(0).size() != 1) throw PreconditionError("expected an augmented complex with F_0 of rank one");
  const auto s = scalarize(c);
  const auto h = contracting_homotopy(s);
  const std::size_t p = c.length();
  std::vector<std::size_t> pos(c.size());
  for (std::size_t i = 0; i <= p; ++i) {
    const auto& ids = c.in_degree(i);
    for (std::size_t j = 0; j < ids.size(); ++j) pos[ids[j]] = j;
  }
  Multiplication m(f, true);
  // Products are filled in by increasing hdeg sum, so every product on the
  // right-hand side is already known.
  for (std::size_t total = 2; total <= p; ++total) {
    for (std::size_t i = 1; i < total; ++i) {
      const std::size_t j = total - i;
      if (j > p || i > p) continue;
      for (auto g : c.in_degree(i)) {
        for (auto k : c.in_degree(j)) {
          SparseVec rhs;
          for (const auto& [a, v] : c.differential(g)) m.accumulate(rhs, v, a, k);
          const Scalar sg(sign_of_parity(i));
          for (const auto& [b, v] : c.differential(k)) m.accumulate(rhs, sg * v, g, b);
          std::vector<Scalar> x(s.dims[total - 1], Scalar(0));
          for (const auto& [e, v] : rhs) x[pos[e]] = v;
          const auto y = h.sigma[total - 1].apply(x);
          SparseVec out;
          const auto& ids = c.in_degree(total);
          for (std::size_t r = 0; r < y.size(); ++r) {
            if (sgn(y[r]) != 0) out.emplace(ids[r], y[r]);
          }
          m.set(g, k, std::move(out));
        }
      }
    }
  }
  return m;
}

struct ScaledDGA {
  Multidegree shift;  // s = lcm of the generators
  MonomialIdeal scaled_ideal;
  std::shared_ptr<const FreeComplex> complex;
  Multiplication multiplication;
};

/// F' = F_0 + s F_{>=1} inside the minimal resolution F of S/I, which
/// resolves S/(sI). In the basis s*g the differential keeps its scalars and
/// the Laurent product keeps its structure constants; every implied monomial
/// becomes x^(deg g + deg h + s - deg e) >= 0 because deg e <= s.
inline ScaledDGA scaled_dga(const MonomialIdeal& ideal, std::size_t cap = kDefaultGeneratorCap) {
  const auto res = minimal_resolution(ideal, cap);
  const auto laurent = laurent_dga(res.complex);
  const auto& c = *res.complex;
  const Multidegree s = join_all(ideal.generators(), ideal.num_vars());
  FreeComplex out(c.num_vars());
  for (std::size_t g = 1; g < c.size(); ++g) {
    const auto& b = c.basis(g);
    out.add_basis(b.hdeg, b.hdeg >= 1 ? b.mdeg + s : b.mdeg, b.label);
  }
  for (std::size_t g = 1; g < c.size(); ++g) out.set_differential(g, c.differential(g));
  auto ptr = std::make_shared<const FreeComplex>(std::move(out));
  Multiplication m(ptr, false);
  for (const auto& [key, v] : laurent.table()) m.set(key.first, key.second, v);
  return ScaledDGA{s, scale(ideal, s), ptr, std::move(m)};
}

}  // namespace mres
