#pragma once

// Reproductions of the worked examples: each runner recomputes the example
// from scratch and returns one line per verified fact.

#include <cstddef>
#include <cstdint>
#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "mres/catalog.hpp"
#include "mres/errors.hpp"
#include "mres/free_complex.hpp"
#include "mres/laurent.hpp"
#include "mres/lattice.hpp"
#include "mres/leibniz.hpp"
#include "mres/morse.hpp"
#include "mres/multiplication.hpp"
#include "mres/resolution.hpp"
#include "mres/simplicial.hpp"
#include "mres/structure.hpp"
#include "mres/taylor.hpp"

namespace mres {

struct CheckLine {
  std::string label;
  bool passed = false;
  std::string detail;
};

struct ExampleReport {
  std::string name;
  std::vector<CheckLine> checks;

  void add(std::string label, bool ok, std::string detail = "") {
    checks.push_back({std::move(label), ok, std::move(detail)});
  }
  bool passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return !checks.empty();
  }
};

namespace catalog {

/// Squarefree ideal whose lcm lattice is the face lattice of the Scarf
/// complex of generic_five() plus a top element.
inline NamedIdeal betti_poset_twin() {
  const auto ideal = ideal_from_cone_complex(scarf_complex(generic_five().ideal));
  return {"ex6.8", ideal, default_var_names(ideal.num_vars())};
}

}  // namespace catalog

namespace detail {

inline SparseVec on_labels(const FreeComplex& c, std::initializer_list<std::pair<Subset, int>> terms) {
  SparseVec v;
  for (const auto& [w, s] : terms) v.emplace(c.id_of_label(w), Scalar(s));
  return v;
}

inline std::string show(const FreeComplex& c, std::size_t hdeg, const Multidegree& deg, const SparseVec& v,
                        std::span<const std::string> names = {}) {
  return to_string(c, Element{hdeg, deg, v}, names);
}

inline std::string show_vector(const std::vector<std::size_t>& v) { return to_string(FVector(v)); }

}  // namespace detail

/// The modified multiplication on the Taylor resolution of <x^2, xy, xz>:
/// g_b * g_c = -z g_ab + y g_ac (the Leibniz-consistent sign for our
/// differential), g_b * g_ac = g_c * g_ab = 0, the rest Taylor except for
/// g_b * g_bc = y g_abc and g_c * g_bc = z g_abc. The last two are forced:
/// d(g_b * g_bc) = y d(g_abc) once g_b * g_c is changed.
inline Multiplication modified_x2_xy_xz_multiplication() {
  auto m = taylor_multiplication(catalog::x_squared_xy_xz().ideal);
  const auto& c = m.complex();
  auto id = [&](Subset w) { return c.id_of_label(w); };
  m.set_commutative(id(0b010), id(0b100), detail::on_labels(c, {{0b011, -1}, {0b101, 1}}));
  m.set_commutative(id(0b010), id(0b101), {});
  m.set_commutative(id(0b100), id(0b011), {});
  m.set_commutative(id(0b010), id(0b110), detail::on_labels(c, {{0b111, 1}}));
  m.set_commutative(id(0b100), id(0b110), detail::on_labels(c, {{0b111, 1}}));
  return m;
}

/// Pairs where the reference table and the Leibniz rule disagree: the table
/// lists g_b * g_bc and g_c * g_bc as zero.
inline std::vector<std::pair<Subset, Subset>> x2_xy_xz_forced_pairs() { return {{0b010, 0b110}, {0b100, 0b110}}; }

/// Copy of `m` without the products of the given pairs (both orientations).
inline Multiplication without_pairs(Multiplication m, const std::vector<std::pair<Subset, Subset>>& pairs) {
  const auto& c = m.complex();
  for (const auto& [g, h] : pairs) m.set_commutative(c.id_of_label(g), c.id_of_label(h), {});
  return m;
}

/// Rewrites the products of `m` in the basis eps[g] * g (same complex).
inline Multiplication flip_basis_signs(const Multiplication& m, const std::vector<int>& eps) {
  Multiplication out(m.complex_ptr(), m.laurent());
  for (const auto& [key, v] : m.table()) {
    SparseVec w;
    for (const auto& [e, s] : v) w.emplace(e, s * eps.at(key.first) * eps.at(key.second) * eps.at(e));
    out.set(key.first, key.second, std::move(w));
  }
  return out;
}

/// The reference multiplication table of the modified product, signs as
/// given; the entries for g_a * g_bc and g_bc * g_a are read as x g_abc
/// (the only basis element of the right homological degree).
inline Multiplication reference_x2_xy_xz_table(std::shared_ptr<const FreeComplex> taylor) {
  Multiplication m(taylor);
  const auto& c = *taylor;
  auto id = [&](Subset w) { return c.id_of_label(w); };
  m.set(id(0b001), id(0b010), detail::on_labels(c, {{0b011, 1}}));
  m.set(id(0b001), id(0b100), detail::on_labels(c, {{0b101, 1}}));
  m.set(id(0b001), id(0b110), detail::on_labels(c, {{0b111, 1}}));
  m.set(id(0b010), id(0b001), detail::on_labels(c, {{0b011, -1}}));
  m.set(id(0b010), id(0b100), detail::on_labels(c, {{0b011, 1}, {0b101, -1}}));
  m.set(id(0b100), id(0b001), detail::on_labels(c, {{0b101, -1}}));
  m.set(id(0b100), id(0b010), detail::on_labels(c, {{0b011, -1}, {0b101, 1}}));
  m.set(id(0b110), id(0b001), detail::on_labels(c, {{0b111, 1}}));
  return m;
}

/// Ingredients of the non-existence argument for the path ideal
/// <x1x2, x2x3, x3x4, x4x5, x5x6>.
struct AvramovCertificate {
  bool betti_zero = false;    // beta_{3,x1x2x3x4} = beta_{3,x3x4x5x6} = 0
  bool f_matches = false;     // f = four Scarf terms + terms on g_abc, g_cde
  bool scarf_faces = false;   // abe, ade, bde, abd are Scarf faces
  bool basis_degrees = false; // beta_3 = 1 in the degree of each of the four
  std::vector<Subset> non_scarf;  // the ones among the four that are not
  bool f_nonzero = false;     // f != 0, also after dropping g_abc and g_cde
  Element f;
  std::shared_ptr<const FreeComplex> taylor;
  std::vector<std::string> notes;
  bool all() const { return betti_zero && f_matches && scarf_faces && basis_degrees && f_nonzero; }
};

/// f := (d g_abc) * g_e - g_a * (d g_cde) - x1 d g_bcde - x6 d g_abcd in the
/// Taylor algebra. The last coefficient is x6: it is the only monomial that
/// makes f homogeneous.
inline AvramovCertificate avramov_obstruction(const MonomialIdeal& ideal) {
  if (!(ideal == catalog::path_six().ideal)) throw InputError("the certificate is for <x1x2, x2x3, x3x4, x4x5, x5x6>");
  AvramovCertificate r;
  const auto betti = betti_table(ideal);
  r.betti_zero = betti.at(3, Multidegree{1, 1, 1, 1, 0, 0}) == 0 && betti.at(3, Multidegree{0, 0, 1, 1, 1, 1}) == 0;
  r.taylor = std::make_shared<const FreeComplex>(taylor_complex(ideal));
  const auto& t = *r.taylor;
  const auto m = taylor_multiplication(r.taylor);
  auto g = [&](Subset w) { return basis_element(t, t.id_of_label(w)); };
  constexpr Subset a = 1, b = 2, c = 4, d = 8, e = 16;
  const Element t1 = multiply(m, differential(t, g(a | b | c)), g(e));
  const Element t2 = multiply(m, g(a), differential(t, g(c | d | e)));
  const Element t3 = times_monomial(differential(t, g(b | c | d | e)), Multidegree::unit(6, 0));
  const Element t4 = times_monomial(differential(t, g(a | b | c | d)), Multidegree::unit(6, 5));
  r.f = t1 - t2 - t3 - t4;
  SparseVec scarf_part, rest;
  const std::map<Subset, int> expected{{a | b | e, 1}, {a | d | e, -1}, {b | d | e, 1}, {a | b | d, -1}};
  for (const auto& [id, v] : r.f.coeffs) {
    (expected.count(*t.basis(id).label) ? scarf_part : rest).emplace(id, v);
  }
  bool four = scarf_part.size() == 4;
  for (const auto& [w, s] : expected) four = four && entry(scarf_part, t.id_of_label(w)) == s;
  bool rest_in_j = true;
  for (const auto& [id, v] : rest) {
    const auto w = *t.basis(id).label;
    rest_in_j = rest_in_j && (w == (a | b | c) || w == (c | d | e));
  }
  r.f_matches = four && rest_in_j;
  r.notes.push_back("f = " + to_string(t, r.f));
  r.notes.push_back("Scarf part = " + to_string(t, Element{r.f.hdeg, r.f.degree, scarf_part}));
  const auto delta = scarf_complex(ideal);
  r.basis_degrees = true;
  for (const auto& [w, s] : expected) {
    if (!delta.contains(w)) r.non_scarf.push_back(w);
    r.basis_degrees = r.basis_degrees && betti.at(3, ideal.lcm_of(w)) == 1;
  }
  r.scarf_faces = r.non_scarf.empty();
  for (auto w : r.non_scarf) {
    for (std::size_t v = 0; v < ideal.size(); ++v) {
      const Subset bigger = w | (Subset{1} << v);
      if (bigger != w && ideal.lcm_of(bigger) == ideal.lcm_of(w)) {
        r.notes.push_back(subset_name(w) + " has the same lcm as " + subset_name(bigger));
        break;
      }
    }
  }
  r.f_nonzero = !r.f.is_zero() && !scarf_part.empty();
  return r;
}

/// The strongly generic five-generator ideal: forced products, the
/// associator and the degree bookkeeping.
inline ExampleReport run_generic_five() {
  ExampleReport rep{"5.1", {}};
  const auto named = catalog::generic_five();
  const auto& ideal = named.ideal;
  rep.add("strongly generic", is_strongly_generic(ideal));
  const auto delta = scarf_complex(ideal);
  auto facets = delta.facets();
  std::sort(facets.begin(), facets.end());
  rep.add("Scarf facets {b,c,d} and {a,b,d,e}", facets == std::vector<Subset>{0b01110, 0b11011});

  const auto res = minimal_resolution(ideal);
  const auto& f = *res.complex;
  rep.add("minimal resolution ranks (1,5,8,5,1)", f.ranks() == std::vector<std::size_t>{1, 5, 8, 5, 1},
          detail::show_vector(f.ranks()));
  bool scarf_labels = f.size() == delta.faces().size();
  for (std::size_t g = 0; g < f.size() && scarf_labels; ++g) {
    scarf_labels = g == 0 || (f.basis(g).label && delta.contains(*f.basis(g).label));
  }
  rep.add("minimal resolution = algebraic Scarf complex", scarf_labels);

  // Total degrees of the generators.
  const std::map<std::string, int> table2{
      {"a", 2},   {"b", 2},   {"d", 2},   {"e", 2},   {"c", 4},   {"ab", 3},  {"de", 3},  {"ad", 4},
      {"ae", 4},  {"bd", 4},  {"be", 4},  {"bc", 5},  {"cd", 5},  {"abd", 5}, {"abe", 5}, {"ade", 5},
      {"bde", 5}, {"bcd", 6}, {"abde", 6}};
  bool degrees_ok = f.size() == table2.size() + 1;
  std::string mismatch;
  for (std::size_t g = 1; g < f.size(); ++g) {
    const auto name = subset_name(*f.basis(g).label);
    auto it = table2.find(name);
    if (it == table2.end() || it->second != f.basis(g).mdeg.total()) {
      degrees_ok = false;
      mismatch += name + " ";
    }
  }
  rep.add("generator degrees match the table", degrees_ok, mismatch);
  const auto t = t_vector(betti_table(f));
  rep.add("t-vector (0,4,5,6,6)", t == TVector{0, 4, 5, 6, 6});
  rep.add("first-step subadditivity", check_subadditivity(t, SubadditivityMode::first_step).passed);

  const auto particular = transfer_multiplication(taylor_multiplication(res.taylor), res.complex, res.transfer);
  const auto sp = leibniz_solution_space(res.complex, &particular);
  auto id = [&](Subset w) { return f.id_of_label(w); };
  constexpr Subset A = 1, B = 2, C = 4, D = 8, E = 16;
  auto forced_value = [&](Subset g, Subset h, const SparseVec& want) {
    return sp.pair_dimension(id(g), id(h)) == 0 && particular.product(id(g), id(h)) == want;
  };
  // Products among a, b, d, e: forced, and equal to the Taylor product
  // carried over by labels.
  {
    const auto& t = *res.taylor;
    const auto tm = taylor_multiplication(res.taylor);
    auto to_f = [&](const SparseVec& v) {
      SparseVec out;
      for (const auto& [e, s] : v) out.emplace(f.id_of_label(*t.basis(e).label), s);
      return out;
    };
    bool ok = true;
    std::string bad;
    const std::vector<Subset> small{A, B, D, E};
    for (auto i : small) {
      for (auto j : small) {
        for (auto k : small) {
          const Subset right = j | k;
          if (i == j || i == k || (i & right)) continue;
          const bool forced = sp.pair_dimension(id(i), id(right)) == 0;
          const bool same = particular.product(id(i), id(right)) == to_f(tm.product(t.id_of_label(i), t.id_of_label(right)));
          if (!forced || !same) {
            ok = false;
            bad += "g_" + subset_name(i) + "*g_" + subset_name(right) + " ";
          }
        }
      }
    }
    rep.add("products g_i x g_j and g_i x g_jk over a, b, d, e are forced and Taylor", ok, bad);
  }
  const SparseVec ac = detail::on_labels(f, {{A | B, 1}, {B | C, 1}});
  rep.add("g_a x g_c = yz^2 g_ab + x g_bc (forced)", forced_value(A, C, ac),
          detail::show(f, 2, f.basis(id(A)).mdeg + f.basis(id(C)).mdeg, particular.product(id(A), id(C)), named.var_names));
  const SparseVec ce = detail::on_labels(f, {{C | D, 1}, {D | E, 1}});
  rep.add("g_c x g_e = w g_cd + y^2z g_de (forced)", forced_value(C, E, ce),
          detail::show(f, 2, f.basis(id(C)).mdeg + f.basis(id(E)).mdeg, particular.product(id(C), id(E)), named.var_names));
  const SparseVec bce = detail::on_labels(f, {{B | C | D, 1}, {B | D | E, 1}});
  rep.add("g_bc x g_e = w g_bcd + yz g_bde (forced)", forced_value(B | C, E, bce),
          detail::show(f, 3, f.basis(id(B | C)).mdeg + f.basis(id(E)).mdeg, particular.product(id(B | C), id(E)), named.var_names));
  const Multidegree ace = f.basis(id(A)).mdeg + f.basis(id(C)).mdeg + f.basis(id(E)).mdeg;
  const auto left = particular.product(particular.product(id(A), id(C)), SparseVec{{id(E), Scalar(1)}});
  const auto right = particular.product(SparseVec{{id(A), Scalar(1)}}, particular.product(id(C), id(E)));
  rep.add("(g_a x g_c) x g_e = yz^2 g_abe + xw g_bcd + xyz g_bde",
          left == detail::on_labels(f, {{A | B | E, 1}, {B | C | D, 1}, {B | D | E, 1}}), detail::show(f, 3, ace, left, named.var_names));
  rep.add("g_a x (g_c x g_e) = y^2z g_ade + xw g_bcd + yzw g_abd",
          right == detail::on_labels(f, {{A | D | E, 1}, {B | C | D, 1}, {A | B | D, 1}}), detail::show(f, 3, ace, right, named.var_names));
  SparseVec assoc = left;
  axpy(assoc, Scalar(-1), right);
  const std::size_t abde = id(A | B | D | E);
  rep.add("associator (g_a, g_c, g_e) = yz d(g_abde)", assoc == f.differential(abde) &&
                                                            ace - f.basis(abde).mdeg == Multidegree{0, 1, 1, 0},
          detail::show(f, 3, ace, assoc, named.var_names));

  const std::vector<std::size_t> order{1, 3, 0, 2, 4};
  const auto lyu = lyubeznik(ideal, order);
  rep.add("Lyubeznik resolution for xy < zw < x^2 < y^2z^2 < w^2 is minimal",
          is_minimal(lyu) && is_resolution(lyu, reorder(ideal, order)), detail::show_vector(lyu.ranks()));
  return rep;
}

/// Runs the pipeline ideal -> cone matching -> quotient on a cone and
/// collects what it verified.
struct ConePipeline {
  MonomialIdeal ideal;
  MorseReport matching;
  std::optional<MorseQuotient> quotient;
  AxiomReport axioms;
  bool resolution = false;
  bool minimal = false;
  bool betti_is_fvector = false;
  std::optional<ConeReport> cone;
  std::vector<std::string> witnesses;

  bool passed() const {
    return matching.passed() && quotient && quotient->ideal_closed && quotient->kernel_is_ideal && axioms.all() &&
           resolution && minimal && betti_is_fvector && cone && cone->passed;
  }
};

inline ConePipeline cone_pipeline(const SimplicialComplex& delta, std::optional<std::size_t> apex = std::nullopt) {
  ConePipeline out{ideal_from_cone_complex(delta), {}, std::nullopt, {}, false, false, false, std::nullopt, {}};
  const std::size_t v = apex ? *apex : *is_cone(delta);
  const auto taylor = taylor_multiplication(out.ideal);
  const auto matching = cone_morse_matching(delta, v);
  out.matching = verify_morse_matching(matching, taylor.complex());
  if (!out.matching.passed()) {
    out.witnesses = out.matching.witnesses;
    return out;
  }
  out.quotient = morse_quotient(taylor, matching, out.ideal);
  const auto& q = *out.quotient;
  for (const auto& w : q.witnesses) out.witnesses.push_back(w);
  out.axioms = check_dga_axioms(q.multiplication);
  for (const auto& w : out.axioms.failures) out.witnesses.push_back(w);
  out.resolution = is_resolution(*q.complex, out.ideal);
  out.minimal = is_minimal(*q.complex);
  out.betti_is_fvector = FVector(q.complex->ranks()) == f_vector(delta);
  if (!out.betti_is_fvector) {
    out.witnesses.push_back("ranks " + to_string(FVector(q.complex->ranks())) + " differ from the f-vector " +
                            to_string(f_vector(delta)));
  }
  if (out.axioms.all()) out.cone = hilbert_cone_check(q.multiplication);
  return out;
}

inline ExampleReport run_four_cycle_with_tails() {
  ExampleReport rep{"3.2", {}};
  const auto named = catalog::four_cycle_with_tails();
  const auto res = minimal_resolution(named.ideal);
  const auto& c = *res.complex;
  const auto particular = transfer_multiplication(taylor_multiplication(res.taylor), res.complex, res.transfer);
  const auto sp = leibniz_solution_space(res.complex, &particular);
  const auto a = c.id_of_label(0b0001), cc = c.id_of_label(0b0100);
  const auto dim = sp.pair_dimension(a, cc);
  rep.add("g_a * g_c is not determined by the Leibniz rule", dim >= 1, "freedom " + std::to_string(dim));
  const Multidegree deg = c.basis(a).mdeg + c.basis(cc).mdeg;
  const SparseVec one = detail::on_labels(c, {{0b0011, 1}, {0b0110, 1}});
  const SparseVec zero = detail::on_labels(c, {{0b1001, 1}, {0b1100, -1}});
  for (const auto& [label, target] : {std::pair{"lambda = 1: x4z g_ab + x1y g_bc", one},
                                      std::pair{"lambda = 0: x3z g_ad - x2y g_cd", zero}}) {
    const auto lambda = parameters_for_product(sp, a, cc, target);
    bool ok = false;
    if (lambda) {
      const auto m = sp.point(*lambda);
      ok = m.product(a, cc) == target && check_dga_axioms(m).all();
    }
    rep.add(std::string(label) + " extends to a DGA", ok, detail::show(c, 2, deg, target, named.var_names));
  }
  // The interpolating family lambda*one + (1-lambda)*zero.
  SparseVec half = one;
  axpy(half, Scalar(1), zero);
  for (auto& [e, v] : half) v /= 2;
  const auto mid = parameters_for_product(sp, a, cc, half);
  rep.add("lambda = 1/2 lies in the same solution space", mid && check_dga_axioms(sp.point(*mid)).all());
  return rep;
}

inline ExampleReport run_x2_xy_xz() {
  ExampleReport rep{"3.3", {}};
  const auto ideal = catalog::x_squared_xy_xz().ideal;
  const auto m = modified_x2_xy_xz_multiplication();
  const auto& c = m.complex();
  rep.add("the Taylor resolution is minimal", is_minimal(c));
  const auto axioms = check_dga_axioms(m);
  rep.add("modified product passes all five axioms", axioms.all(),
          axioms.failures.empty() ? "" : axioms.failures.front());
  const auto reference = reference_x2_xy_xz_table(m.complex_ptr());
  const auto eps = match_up_to_basis_signs(m, reference);
  rep.add("table matches the reference one entry for entry after flipping basis signs", eps.has_value(),
          eps ? "" : "the reference table has 0 for g_b * g_bc = y g_abc and g_c * g_bc = z g_abc");
  const auto forced = x2_xy_xz_forced_pairs();
  const auto eps_rest = match_up_to_basis_signs(without_pairs(m, forced), without_pairs(reference, forced));
  std::string signs;
  if (eps_rest) {
    for (std::size_t g = 1; g < c.size(); ++g) {
      if ((*eps_rest)[g] < 0) signs += (signs.empty() ? "" : ", ") + c.name(g);
    }
  }
  rep.add("all other entries match after flipping basis signs", eps_rest.has_value(),
          eps_rest ? "flipped: " + (signs.empty() ? std::string("none") : signs) : "");
  if (eps_rest) {
    const auto normalized = check_dga_axioms(flip_basis_signs(reference, *eps_rest));
    rep.add("the reference table (signs normalized) satisfies the Leibniz rule", normalized.leibniz,
            normalized.failures.empty() ? "" : normalized.failures.front());
  }
  const auto supp = check_supportive(m);
  rep.add("modified product is not supportive", !supp.passed, supp.witnesses.empty() ? "" : supp.witnesses.front());
  const auto gen = degree_one_generation(m, false);
  bool bc_missing = false;
  for (const auto& w : gen.witnesses) bc_missing = bc_missing || w.find("g_bc") != std::string::npos;
  rep.add("g_bc is not a sum of products of degree-one elements", !gen.passed && bc_missing,
          gen.witnesses.empty() ? "" : gen.witnesses.front());
  bool refused = false;
  try {
    (void)taylor_to_F_map(ideal, m);
  } catch (const PreconditionError&) {
    refused = true;
  }
  rep.add("the comparison map is refused for a non-squarefree ideal", refused);
  return rep;
}

inline ExampleReport run_path_six() {
  ExampleReport rep{"3.8", {}};
  const auto cert = avramov_obstruction(catalog::path_six().ideal);
  rep.add("beta_3 vanishes in degrees x1x2x3x4 and x3x4x5x6", cert.betti_zero);
  rep.add("f = x4 g_abe - x3 g_ade + x1 g_bde - x6 g_abd modulo g_abc, g_cde", cert.f_matches, cert.notes.at(0));
  std::string why;
  for (std::size_t i = 2; i < cert.notes.size(); ++i) why += (why.empty() ? "" : "; ") + cert.notes[i];
  rep.add("abe, ade, bde, abd are Scarf faces", cert.scarf_faces, why);
  rep.add("beta_3 = 1 in the degree of each of the four", cert.basis_degrees);
  rep.add("f is nonzero", cert.f_nonzero, cert.notes.at(1));
  return rep;
}

inline ExampleReport run_cycle_six() {
  ExampleReport rep{"4.3", {}};
  const auto totals = betti_table(catalog::cycle_six().ideal).totals();
  rep.add("total Betti numbers (1,6,9,6,2)", totals == std::vector<std::size_t>{1, 6, 9, 6, 2},
          detail::show_vector(totals));
  rep.add("(1,6,9,6,2) is not an f-vector", !kruskal_katona_check(FVector(totals)));
  rep.add("(1,6,9,6,2) is not the f-vector of a cone", !is_cone_fvector(FVector(totals)));
  return rep;
}

inline ExampleReport run_betti_poset_twin() {
  ExampleReport rep{"6.8", {}};
  const auto five = catalog::generic_five().ideal;
  const auto delta = scarf_complex(five);
  const auto twin = ideal_from_cone_complex(delta);
  rep.add("construction has 5 generators in 19 variables", twin.size() == 5 && twin.num_vars() == 19);
  rep.add("the Scarf complex is a cone with apex b", delta.contains(0b01110) && is_cone(delta).has_value());
  const auto p1 = betti_poset(five, betti_table(five));
  const auto p2 = betti_poset(twin, betti_table(twin));
  rep.add("Betti posets are isomorphic", poset_isomorphic(p1.order, p2.order).has_value(),
          std::to_string(p1.elements.size()) + " and " + std::to_string(p2.elements.size()) + " elements");
  const auto pipe = cone_pipeline(delta, 1);
  rep.add("cone matching with apex b is a Morse matching", pipe.matching.passed());
  rep.add("quotient is a minimal DGA resolution",
          pipe.quotient && pipe.axioms.all() && pipe.resolution && pipe.minimal && pipe.quotient->ideal_closed,
          pipe.witnesses.empty() ? "" : pipe.witnesses.front());
  rep.add("its Betti vector is the f-vector of the Scarf complex", pipe.betti_is_fvector);
  return rep;
}

/// Named ideals used as the fixed part of every corpus.
inline std::vector<NamedIdeal> named_ideals() {
  return {catalog::four_cycle_with_tails(), catalog::x_squared_xy_xz(), catalog::path_six(),
          catalog::cycle_six(), catalog::generic_five(), catalog::betti_poset_twin()};
}

inline CheckLine scaled_dga_check(const NamedIdeal& named) {
  const auto s = scaled_dga(named.ideal);
  const auto axioms = check_dga_axioms(s.multiplication);
  const bool res = is_resolution(*s.complex, s.scaled_ideal);
  const bool min = is_minimal(*s.complex);
  std::string detail = "shift " + monomial_string(s.shift);
  if (!axioms.failures.empty()) detail += "; " + axioms.failures.front();
  return {named.name + ": scaled resolution is a minimal DGA resolution of S/(sI)", axioms.all() && res && min, detail};
}

inline ExampleReport run_scaled(std::uint64_t seed = 2024, std::size_t random_count = 10) {
  ExampleReport rep{"thm2.1", {}};
  for (const auto& n : named_ideals()) rep.checks.push_back(scaled_dga_check(n));
  std::size_t i = 0;
  for (const auto& ideal : catalog::random_corpus(seed, random_count)) {
    rep.checks.push_back(scaled_dga_check({"random #" + std::to_string(i++), ideal, {}}));
  }
  return rep;
}

inline const std::vector<std::string>& example_names() {
  static const std::vector<std::string> names{"3.2", "3.3", "3.8", "4.3", "5.1", "6.8", "thm2.1"};
  return names;
}

inline ExampleReport run_example(const std::string& name, std::uint64_t seed = 2024) {
  if (name == "3.2") return run_four_cycle_with_tails();
  if (name == "3.3") return run_x2_xy_xz();
  if (name == "3.8") return run_path_six();
  if (name == "4.3") return run_cycle_six();
  if (name == "5.1") return run_generic_five();
  if (name == "6.8") return run_betti_poset_twin();
  if (name == "thm2.1") return run_scaled(seed);
  throw InputError("unknown example '" + name + "'");
}

}  // namespace mres
