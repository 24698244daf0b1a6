#include <catch_amalgamated.hpp>

#include <numeric>

#include "mres/catalog.hpp"
#include "mres/lattice.hpp"
#include "mres/resolution.hpp"
#include "mres/taylor.hpp"
#include "oracles.hpp"

using namespace mres;

namespace {

std::vector<MonomialIdeal> corpus() {
  std::vector<MonomialIdeal> out{catalog::four_cycle_with_tails().ideal, catalog::x_squared_xy_xz().ideal,
                                 catalog::path_six().ideal, catalog::cycle_six().ideal,
                                 catalog::generic_five().ideal};
  for (auto& i : catalog::random_corpus(2024, 30)) out.push_back(std::move(i));
  return out;
}

std::vector<std::size_t> face_counts(const SimplicialComplex& d) { return f_vector(d); }

}  // namespace

TEST_CASE("Taylor differential signs") {
  const auto t = taylor_complex(catalog::x_squared_xy_xz().ideal);
  CHECK(t.size() == 8);
  CHECK(t.d_squared_zero());
  const auto ab = t.id_of_label(0b011);
  const auto a = t.id_of_label(0b001), b = t.id_of_label(0b010);
  const auto d = differential(t, basis_element(t, ab));
  // d g_ab = x g_b - y g_a
  CHECK(to_string(t, Element{1, d.degree, d.coeffs}) == "-x2 g_a + x1 g_b");
  CHECK(entry(d.coeffs, b) == 1);
  CHECK(entry(d.coeffs, a) == -1);
}

TEST_CASE("Taylor complex of a principal ideal and of a regular sequence") {
  const auto p = taylor_complex(MonomialIdeal(2, {{2, 1}}));
  CHECK(p.ranks() == std::vector<std::size_t>{1, 1});
  CHECK(p.differential(1) == SparseVec{{0, Scalar(1)}});
  const auto k = taylor_complex(MonomialIdeal(2, {{1, 0}, {0, 1}}));
  CHECK(k.ranks() == std::vector<std::size_t>{1, 2, 1});
  CHECK(is_minimal(k));
  CHECK(is_resolution(k, MonomialIdeal(2, {{1, 0}, {0, 1}})));
}

TEST_CASE("Taylor cap") {
  std::vector<Multidegree> gens;
  for (std::size_t i = 0; i < 17; ++i) {
    Multidegree m(17);
    m[i] = 1;
    gens.push_back(m);
  }
  CHECK_THROWS_AS(taylor_complex(MonomialIdeal(17, gens)), ResourceError);
}

TEST_CASE("Scarf complexes") {
  SECTION("strongly generic example") {
    const auto delta = scarf_complex(catalog::generic_five().ideal);
    auto facets = delta.facets();
    std::sort(facets.begin(), facets.end());
    CHECK(facets == std::vector<Subset>{0b01110, 0b11011});
    CHECK(face_counts(delta) == FVector{1, 5, 8, 5, 1});
  }
  SECTION("four generators with two triangles") {
    const auto delta = scarf_complex(catalog::four_cycle_with_tails().ideal);
    CHECK(face_counts(delta) == FVector{1, 4, 5, 2});
    CHECK(delta.contains(0b1011));  // a,b,d
    CHECK(delta.contains(0b1110));  // b,c,d
    CHECK_FALSE(delta.contains(0b0101));
  }
  SECTION("regular sequence gives the full simplex") {
    CHECK(scarf_complex(MonomialIdeal(2, {{1, 0}, {0, 1}})).is_simplex());
  }
  SECTION("algebraic Scarf complexes are subcomplexes with d^2 = 0") {
    for (const auto& ideal : corpus()) {
      const auto s = algebraic_scarf(ideal);
      CHECK(s.d_squared_zero());
      CHECK(s.size() == scarf_complex(ideal).faces().size());
    }
  }
}

TEST_CASE("graded components") {
  const auto t = taylor_complex(catalog::x_squared_xy_xz().ideal);
  const auto zero = graded_component(t, Multidegree{0, 0, 0});
  CHECK(zero.basis[0].size() == 1);
  CHECK(zero.basis[1].empty());
  const auto gc = graded_component(t, Multidegree{2, 1, 0});
  CHECK(gc.basis[1] == std::vector<std::size_t>{t.id_of_label(0b001), t.id_of_label(0b010)});
  CHECK(gc.basis[2] == std::vector<std::size_t>{t.id_of_label(0b011)});
  CHECK(gc.basis[3].empty());

  const MonomialIdeal xy(2, {{1, 0}, {0, 1}});
  const auto k = graded_component(taylor_complex(xy), Multidegree{1, 1});
  CHECK(k.basis[2].size() == 1);
  CHECK(homology_ranks(k) == std::vector<std::size_t>{0, 0, 0});
}

TEST_CASE("resolution and minimality checks") {
  CHECK(is_minimal(taylor_complex(catalog::x_squared_xy_xz().ideal)));
  const MonomialIdeal tri(3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
  CHECK_FALSE(is_minimal(taylor_complex(tri)));
  for (const auto& ideal : corpus()) CHECK(is_resolution(taylor_complex(ideal), ideal));

  SECTION("a broken differential is caught") {
    auto t = taylor_complex(tri);
    FreeComplex broken(3);
    for (std::size_t id = 1; id < t.size(); ++id) broken.add_basis(t.basis(id).hdeg, t.basis(id).mdeg, t.basis(id).label);
    for (std::size_t id = 1; id < t.size(); ++id) {
      auto d = t.differential(id);
      if (t.basis(id).hdeg == 3) d.clear();
      broken.set_differential(id, d);
    }
    const auto r = check_resolution(broken, tri);
    CHECK_FALSE(r.passed);
    CHECK_FALSE(r.witness.empty());
  }
  SECTION("differentials must respect divisibility") {
    FreeComplex c(1);
    const auto g = c.add_basis(1, Multidegree{1});
    const auto h = c.add_basis(2, Multidegree{1});
    c.set_differential(g, {{0, Scalar(1)}});
    CHECK_THROWS_AS(c.set_differential(0, {{g, Scalar(1)}}), InputError);
    CHECK_NOTHROW(c.set_differential(h, {{g, Scalar(1)}}));
    CHECK_FALSE(c.d_squared_zero());
  }
}

TEST_CASE("minimization") {
  SECTION("already minimal input gives identity transfer data") {
    const auto t = taylor_complex(catalog::x_squared_xy_xz().ideal);
    const auto [m, tr] = minimize(t);
    CHECK(m.size() == t.size());
    CHECK(tr.inclusion == identity_map(t.size()));
    CHECK(tr.projection == identity_map(t.size()));
    for (const auto& h : tr.homotopy) CHECK(h.empty());
  }
  SECTION("triangle ideal") {
    const MonomialIdeal tri(3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    const auto r = minimal_resolution(tri);
    CHECK(r.complex->ranks() == std::vector<std::size_t>{1, 3, 2});
    CHECK(betti_table(*r.complex) == oracle::tor_betti(tri));
  }
  SECTION("six-cycle edge ideal") {
    const auto r = minimal_resolution(catalog::cycle_six().ideal);
    CHECK(r.complex->ranks() == std::vector<std::size_t>{1, 6, 9, 6, 2});
  }
  SECTION("four generators: minimal resolution equals the algebraic Scarf complex") {
    const auto ideal = catalog::four_cycle_with_tails().ideal;
    const auto r = minimal_resolution(ideal);
    CHECK(r.complex->ranks() == std::vector<std::size_t>{1, 4, 5, 2});
    const auto s = algebraic_scarf(ideal);
    CHECK(is_resolution(s, ideal));
    CHECK(is_minimal(s));
  }
  SECTION("corpus: transfer identities, exactness, pivot-order independence, Tor oracle") {
    for (const auto& ideal : corpus()) {
      const auto t = taylor_complex(ideal);
      const auto [m, tr] = minimize(t, PivotOrder::forward);
      const auto [m2, tr2] = minimize(t, PivotOrder::reverse);
      std::string why;
      CHECK(check_transfer(t, m, tr, &why));
      INFO(why);
      CHECK(check_transfer(t, m2, tr2, &why));
      CHECK(is_resolution(m, ideal));
      CHECK(is_minimal(m));
      CHECK(m.ranks() == m2.ranks());
      const auto b = betti_table(m);
      CHECK(b == betti_table(m2));
      CHECK(b == oracle::tor_betti(ideal));
      const auto lat = lcm_lattice(ideal);
      for (const auto& [key, count] : b.entries()) CHECK(lat.contains(key.second));
      const auto delta = scarf_complex(ideal);
      for (auto w : delta.faces()) CHECK(b.at(popcount(w), ideal.lcm_of(w)) >= 1);
      if (is_strongly_generic(ideal)) CHECK(m.ranks() == face_counts(delta));
    }
  }
}

TEST_CASE("Betti numbers") {
  const auto path = catalog::path_six().ideal;
  const auto b = betti_table(path);
  CHECK(b.at(3, Multidegree{1, 1, 1, 1, 0, 0}) == 0);
  CHECK(b.at(3, Multidegree{0, 0, 1, 1, 1, 1}) == 0);
  const auto k = betti_table(MonomialIdeal(2, {{1, 0}, {0, 1}}));
  CHECK(k.at(2, Multidegree{1, 1}) == 1);

  SECTION("strongly generic example matches the degree table") {
    const auto g = betti_table(catalog::generic_five().ideal);
    CHECK(g.totals() == std::vector<std::size_t>{1, 5, 8, 5, 1});
    CHECK(t_vector(g) == TVector{0, 4, 5, 6, 6});
  }
}

TEST_CASE("Lyubeznik resolutions") {
  const auto ideal = catalog::generic_five().ideal;
  const std::vector<std::size_t> order{1, 3, 0, 2, 4};
  const auto l = lyubeznik(ideal, order);
  CHECK(is_resolution(l, ideal));
  CHECK(is_minimal(l));
  CHECK(l.ranks() == std::vector<std::size_t>{1, 5, 8, 5, 1});

  const MonomialIdeal single(2, {{1, 2}});
  const std::vector<std::size_t> id1{0};
  CHECK(lyubeznik(single, id1).ranks() == taylor_complex(single).ranks());

  const MonomialIdeal xy(2, {{1, 0}, {0, 1}});
  const std::vector<std::size_t> rev{1, 0};
  CHECK(lyubeznik(xy, rev).ranks() == std::vector<std::size_t>{1, 2, 1});

  for (const auto& i : corpus()) {
    std::vector<std::size_t> ord(i.size());
    std::iota(ord.begin(), ord.end(), 0);
    std::reverse(ord.begin(), ord.end());
    CHECK(is_resolution(lyubeznik(i, ord), i));
  }
}

TEST_CASE("squarefree parts") {
  FreeComplex c(2);
  const auto g = c.add_basis(1, Multidegree{1, 0});
  c.set_differential(g, {{0, Scalar(1)}});
  const Element f{1, Multidegree{1, 1}, {{g, Scalar(3)}}};
  const auto [m0, f0] = squarefree_part(c, f);
  CHECK(m0.is_zero());
  CHECK(f0 == f);

  const Element u{0, Multidegree{2, 1}, {{0, Scalar(1)}}};
  const auto [m1, f1] = squarefree_part(c, u);
  CHECK(m1 == Multidegree{1, 0});
  CHECK(f1.degree == Multidegree{1, 1});

  const auto [m2, f2] = squarefree_part(c, Scalar(-2) * u);
  CHECK(m2 == m1);
  CHECK(f2 == Scalar(-2) * f1);

  FreeComplex bad(1);
  bad.add_basis(1, Multidegree{2});
  CHECK_THROWS_AS(squarefree_part(bad, Element{0, Multidegree{2}, {{0, Scalar(1)}}}), PreconditionError);
}

TEST_CASE("t-vectors and subadditivity") {
  const auto k = t_vector(betti_table(MonomialIdeal(2, {{1, 0}, {0, 1}})));
  CHECK(k == TVector{0, 1, 2});
  CHECK(check_subadditivity(k, SubadditivityMode::all).passed);
  const auto g = t_vector(betti_table(catalog::generic_five().ideal));
  CHECK(check_subadditivity(g, SubadditivityMode::first_step).passed);
  const auto bad = check_subadditivity(TVector{0, 1, 3}, SubadditivityMode::first_step);
  CHECK_FALSE(bad.passed);
  CHECK(bad.violations == std::vector<std::pair<std::size_t, std::size_t>>{{1, 2}});
}
