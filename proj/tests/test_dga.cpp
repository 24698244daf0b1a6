#include <catch_amalgamated.hpp>

#include "mres/catalog.hpp"
#include "mres/leibniz.hpp"
#include "mres/multiplication.hpp"
#include "mres/resolution.hpp"

using namespace mres;

namespace {

std::vector<MonomialIdeal> corpus() {
  std::vector<MonomialIdeal> out{catalog::four_cycle_with_tails().ideal, catalog::x_squared_xy_xz().ideal,
                                 catalog::path_six().ideal, catalog::cycle_six().ideal,
                                 catalog::generic_five().ideal};
  for (auto& i : catalog::random_corpus(77, 25)) out.push_back(std::move(i));
  return out;
}

std::size_t id(const FreeComplex& c, Subset w) { return c.id_of_label(w); }

}  // namespace

TEST_CASE("Taylor multiplication satisfies every axiom") {
  for (const auto& ideal : corpus()) {
    const auto m = taylor_multiplication(ideal);
    const auto r = check_dga_axioms(m);
    INFO(to_string(ideal.generator(0)));
    CHECK(r.all());
    CHECK(r.associativity_checked);
    CHECK(is_supportive(m));
  }
}

TEST_CASE("Taylor products of x^2, xy, xz") {
  const auto m = taylor_multiplication(catalog::x_squared_xy_xz().ideal);
  const auto& c = m.complex();
  const auto a = id(c, 0b001), b = id(c, 0b010), cc = id(c, 0b100);
  const auto ab = id(c, 0b011), bc = id(c, 0b110);
  CHECK(m.product(a, b) == SparseVec{{ab, Scalar(1)}});
  // the implied monomial of a * b on g_ab is x
  CHECK(c.basis(a).mdeg + c.basis(b).mdeg - c.basis(ab).mdeg == Multidegree{1, 0, 0});
  CHECK(m.product(b, cc) == SparseVec{{bc, Scalar(1)}});
  CHECK(c.basis(b).mdeg + c.basis(cc).mdeg - c.basis(bc).mdeg == Multidegree{1, 0, 0});
  CHECK(m.product(b, a) == SparseVec{{ab, Scalar(-1)}});
  for (std::size_t g = 1; g < c.size(); ++g) CHECK(m.product(g, g).empty());
  const auto e = basis_element(c, b);
  CHECK(multiply(m, basis_element(c, 0), e).coeffs == e.coeffs);
}

TEST_CASE("a corrupted entry breaks the Leibniz rule") {
  auto m = taylor_multiplication(catalog::x_squared_xy_xz().ideal);
  const auto& c = m.complex();
  m.set_commutative(id(c, 0b001), id(c, 0b010), SparseVec{{id(c, 0b011), Scalar(2)}});
  const auto r = check_dga_axioms(m);
  CHECK_FALSE(r.leibniz);
  CHECK(r.commutativity);
  REQUIRE_FALSE(r.failures.empty());
}

TEST_CASE("unit products are rejected and misplaced terms are caught") {
  const auto m = taylor_multiplication(catalog::x_squared_xy_xz().ideal);
  auto copy = m;
  const auto& c = m.complex();
  CHECK_THROWS_AS(copy.set(0, 1, SparseVec{{1, Scalar(1)}}), InputError);
  CHECK_THROWS_AS(copy.set(id(c, 0b001), id(c, 0b010), SparseVec{{id(c, 0b100), Scalar(1)}}), InputError);
}

TEST_CASE("transferred multiplications") {
  SECTION("identity transfer reproduces the Taylor product") {
    const auto ideal = catalog::x_squared_xy_xz().ideal;
    const auto res = minimal_resolution(ideal);
    const auto big = taylor_multiplication(res.taylor);
    const auto small = transfer_multiplication(big, res.complex, res.transfer);
    CHECK(small.table() == big.table());
  }
  SECTION("triangle ideal") {
    const MonomialIdeal ideal(3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    const auto res = minimal_resolution(ideal);
    const auto m = transfer_multiplication(taylor_multiplication(res.taylor), res.complex, res.transfer);
    const auto r = check_dga_axioms(m);
    CHECK(r.all_but_associativity());
  }
  SECTION("corpus: axioms, supportive on squarefree ideals, Scarf products") {
    for (const auto& ideal : corpus()) {
      const auto res = minimal_resolution(ideal);
      const auto m = transfer_multiplication(taylor_multiplication(res.taylor), res.complex, res.transfer);
      CHECK(check_dga_axioms(m, {.associativity = false}).all_but_associativity());
      if (ideal.is_squarefree()) {
        CHECK(is_supportive(m));
        CHECK(scarf_product_check(ideal, m).passed);
      } else {
        CHECK_THROWS_AS(scarf_product_check(ideal, m), PreconditionError);
      }
    }
  }
}

TEST_CASE("Leibniz solution spaces") {
  SECTION("Koszul complex has a unique multiplication") {
    const MonomialIdeal ideal(2, {{1, 0}, {0, 1}});
    const auto res = minimal_resolution(ideal);
    const auto sp = leibniz_solution_space(res.complex);
    CHECK(sp.dimension() == 0);
    CHECK(check_dga_axioms(sp.point({})).all());
  }
  SECTION("four generators: the product of g_a and g_c is not forced") {
    const auto ideal = catalog::four_cycle_with_tails().ideal;
    const auto res = minimal_resolution(ideal);
    const auto& c = *res.complex;
    const auto particular = transfer_multiplication(taylor_multiplication(res.taylor), res.complex, res.transfer);
    const auto sp = leibniz_solution_space(res.complex, &particular);
    const auto a = id(c, 0b0001), cc = id(c, 0b0100);
    // cycles of degree x1x2x3x4yz are spanned by z d(g_abd) and y d(g_bcd)
    CHECK(sp.pair_dimension(a, cc) == 2);
    // lambda = 1: x4z g_ab + x1y g_bc; lambda = 0: x3z g_ad - x2y g_cd
    const SparseVec one{{id(c, 0b0011), Scalar(1)}, {id(c, 0b0110), Scalar(1)}};
    const SparseVec zero{{id(c, 0b1001), Scalar(1)}, {id(c, 0b1100), Scalar(-1)}};
    for (const auto& target : {one, zero}) {
      const auto lambda = parameters_for_product(sp, a, cc, target);
      REQUIRE(lambda.has_value());
      const auto m = sp.point(*lambda);
      CHECK(m.product(a, cc) == target);
      CHECK(check_dga_axioms(m).all());
    }
    CHECK_FALSE(parameters_for_product(sp, a, cc, SparseVec{{id(c, 0b0011), Scalar(1)}}).has_value());
  }
  SECTION("every point satisfies the non-associative axioms") {
    for (const auto& ideal : catalog::random_corpus(5, 10)) {
      const auto res = minimal_resolution(ideal);
      const auto sp = leibniz_solution_space(res.complex);
      std::vector<Scalar> lambda(sp.dimension());
      for (std::size_t i = 0; i < lambda.size(); ++i) lambda[i] = Scalar(static_cast<long>(i % 5) - 2, 3);
      CHECK(check_dga_axioms(sp.point(lambda), {.associativity = false}).all_but_associativity());
    }
  }
  SECTION("a particular multiplication that breaks Leibniz is rejected") {
    const auto ideal = catalog::x_squared_xy_xz().ideal;
    auto taylor = taylor_multiplication(ideal);
    const auto& c = taylor.complex();
    taylor.set_commutative(id(c, 0b001), id(c, 0b010), SparseVec{{id(c, 0b011), Scalar(3)}});
    CHECK_THROWS_AS(leibniz_solution_space(taylor.complex_ptr(), &taylor), InputError);
  }
}

TEST_CASE("associativity scan is reproducible") {
  const auto res = minimal_resolution(catalog::four_cycle_with_tails().ideal);
  const auto sp = leibniz_solution_space(res.complex);
  const auto s1 = associativity_scan(sp, 3, 42);
  const auto s2 = associativity_scan(sp, 3, 42);
  REQUIRE(s1.samples.size() == s2.samples.size());
  for (std::size_t i = 0; i < s1.samples.size(); ++i) CHECK(s1.samples[i].lambda == s2.samples[i].lambda);
  // length three: every point is associative
  for (const auto& s : s1.samples) CHECK(s.nonzero_associators == 0);
}

TEST_CASE("sign matching of multiplication tables") {
  const auto m = taylor_multiplication(catalog::x_squared_xy_xz().ideal);
  const auto eps = match_up_to_basis_signs(m, m, true);
  REQUIRE(eps.has_value());
  for (auto e : *eps) CHECK(e == 1);

  // flipping the sign of one basis element is detected and undone
  const auto& c = m.complex();
  const std::size_t flip = id(c, 0b011);
  FreeComplex twisted(c.num_vars());
  for (std::size_t g = 1; g < c.size(); ++g) twisted.add_basis(c.basis(g).hdeg, c.basis(g).mdeg, c.basis(g).label);
  for (std::size_t g = 1; g < c.size(); ++g) {
    SparseVec d = c.differential(g);
    for (auto& [h, v] : d) {
      if ((g == flip) != (h == flip)) v = -v;
    }
    twisted.set_differential(g, d);
  }
  auto tp = std::make_shared<const FreeComplex>(std::move(twisted));
  Multiplication t(tp);
  for (const auto& [key, v] : m.table()) {
    SparseVec w = v;
    for (auto& [e, s] : w) {
      if (((key.first == flip) != (key.second == flip)) != (e == flip)) s = -s;
    }
    t.set(key.first, key.second, w);
  }
  CHECK(check_dga_axioms(t).all());
  const auto found = match_up_to_basis_signs(t, m, true);
  REQUIRE(found.has_value());
  for (std::size_t g = 0; g < c.size(); ++g) CHECK((*found)[g] == (g == flip ? -1 : 1));

  auto broken = t;
  broken.set_commutative(id(c, 0b001), id(c, 0b010), SparseVec{{flip, Scalar(2)}});
  CHECK_FALSE(match_up_to_basis_signs(broken, m).has_value());
}
