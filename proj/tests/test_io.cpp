#include <catch_amalgamated.hpp>

#include "mres.hpp"

using namespace mres;

namespace {

std::string error_of(std::string_view text) {
  try {
    parse_ideal(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("ideal files") {
  SECTION("the three monomial spellings agree") {
    const auto a = parse_ideal("x1^2*x3\nx2*x3\n");
    const auto b = parse_ideal("# comment\nvars: 3\nx_1^2 * x_3   # trailing\n\nx_2*x_3\n");
    const auto c = parse_ideal("[2,0,1]\n[0,1,1]\n");
    CHECK(a == b);
    CHECK(a == c);
    CHECK(a.num_vars() == 3);
    CHECK(a.generator(0) == Multidegree{2, 0, 1});
  }
  SECTION("the header widens the ring") {
    CHECK(parse_ideal("vars: 5\nx1\n").num_vars() == 5);
  }
  SECTION("format and parse are inverse") {
    for (const auto& n : named_ideals()) CHECK(parse_ideal(format_ideal(n.ideal)) == n.ideal);
  }
  SECTION("errors carry line and column") {
    CHECK(error_of("x1\nx2*y3\n") == "line 2, column 4: expected a variable such as x3");
    CHECK(error_of("vars: 2\nx1\nx2*x3\n") == "line 3, column 4: x3 is outside the ring x1..x2");
    CHECK(error_of("x0\n") == "line 1, column 1: variables are numbered from 1");
    CHECK(error_of("[1,2\n") == "line 1, column 5: expected ']'");
    CHECK(error_of("x1 x2\n").starts_with("line 1, column 4: unexpected character 'x'"));
    CHECK(error_of("x1\nvars: 2\n") == "line 2, column 1: 'vars:' must come first");
    CHECK(error_of("[1,0]\n[1,0,1]\n").starts_with("line 2, column 1: exponent vector has 3 entries"));
    CHECK(error_of("[0,0]\n") == "line 1, column 1: the unit ideal is not supported");
    CHECK(error_of("x1\nx1*x2\n").starts_with("line 2, column 1: generator x1*x2 is divisible by x1 (line 1)"));
    CHECK(error_of("x1\nx1\n").starts_with("line 2, column 1"));
    CHECK(error_of("# nothing\n") == "no generators");
  }
}

TEST_CASE("complex files") {
  const auto d = parse_complex("# a cone\nvertices: 4\n0 1 3\n1,2,3\n");
  CHECK(d == catalog::cone_over_path3());
  CHECK(parse_complex(format_complex(d)) == d);
  const auto empty = parse_complex("{}\n");
  CHECK(empty.faces().size() == 1);
  CHECK_THROWS_AS(parse_complex("0 x\n"), InputError);
  CHECK_THROWS_AS(parse_complex("vertices: 2\n0 2\n"), InputError);
  CHECK_THROWS_AS(parse_complex("0 0\n"), InputError);
  CHECK_THROWS_AS(read_file("/nonexistent/file.ideal"), InputError);
}

TEST_CASE("JSON round trips") {
  for (const auto& n : named_ideals()) {
    INFO(n.name);
    const auto& ideal = n.ideal;
    const auto j = to_json(ideal);
    CHECK(ideal_from_json(Json::parse(j.dump())) == ideal);

    const auto b = betti_table(ideal);
    const auto jb = to_json(b);
    CHECK(to_json(betti_from_json(Json::parse(jb.dump()))).dump() == jb.dump());

    const auto res = minimal_resolution(ideal);
    const auto jc = to_json(*res.complex);
    const auto c = std::make_shared<const FreeComplex>(complex_from_json(Json::parse(jc.dump())));
    CHECK(to_json(*c).dump() == jc.dump());
    CHECK(is_resolution(*c, ideal));

    const auto m = laurent_dga(res.complex);
    const auto jm = to_json(m);
    const auto back = multiplication_from_json(Json::parse(jm.dump()), c);
    CHECK(to_json(back).dump() == jm.dump());
    CHECK(back.table() == m.table());
  }
}

TEST_CASE("JSON rejects inconsistent tables") {
  const auto ideal = catalog::x_squared_xy_xz().ideal;
  const auto m = taylor_multiplication(ideal);
  auto j = to_json(m);
  REQUIRE_FALSE(j["products"].empty());
  j["products"][0]["monomial"] = Json::array({9, 9, 9});
  CHECK_THROWS_AS(multiplication_from_json(j, m.complex_ptr()), InputError);
  auto k = to_json(m);
  k["products"][0]["scalar"] = "one";
  CHECK_THROWS_AS(multiplication_from_json(k, m.complex_ptr()), InputError);
}
