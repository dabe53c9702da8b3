#include <doctest.h>

#include "equirank/error.hpp"
#include "equirank/group.hpp"

using namespace equirank;

namespace {

bool is_group_table(const FiniteGroup& g) {
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b)
      for (Element c = 0; c < g.order(); ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) return false;
  for (Element a = 0; a < g.order(); ++a)
    if (g.mul(a, g.inv(a)) != g.identity()) return false;
  return true;
}

std::size_t involutions(const FiniteGroup& g) {
  std::size_t n = 0;
  for (Element a = 0; a < g.order(); ++a) n += g.element_order(a) == 2;
  return n;
}

}  // namespace

TEST_CASE("standard families have the right orders and are groups") {
  CHECK(make_cyclic(1).order() == 1);
  CHECK(make_cyclic(7).order() == 7);
  CHECK(make_symmetric(4).order() == 24);
  CHECK(make_dihedral(4).order() == 8);
  CHECK(make_quaternion().order() == 8);
  for (const auto& g : {make_cyclic(6), make_symmetric(3), make_dihedral(4),
                        make_quaternion(), direct_product(make_cyclic(2), make_cyclic(4))}) {
    CHECK(is_group_table(g));
  }
}

TEST_CASE("Q8 and D4 are told apart by their involutions") {
  CHECK(involutions(make_quaternion()) == 1);
  CHECK_FALSE(make_quaternion().is_abelian());
  CHECK(involutions(make_dihedral(4)) == 5);
}

TEST_CASE("cyclic group is addition mod n") {
  const auto z = make_cyclic(6);
  CHECK(z.identity() == 0);
  CHECK(z.mul(4, 5) == 3);
  CHECK(z.inv(2) == 4);
  CHECK(z.element_order(2) == 3);
}

TEST_CASE("S3 Cayley table with e,a,b,c,f,g") {
  const auto g = make_s3_labelled_table();
  const auto& l = s3_table_labels();
  REQUIRE(l == std::vector<std::string>{"e", "a", "b", "c", "f", "g"});
  // a^-1 f a = g
  CHECK(g.conjugate_element(1, 4) == 5);
  CHECK(g.mul(1, 1) == 0);
  CHECK(g.element_order(4) == 3);
}

TEST_CASE("S3 display order is an isomorphic image of the labelled table") {
  const auto s3 = make_symmetric(3);
  const auto table = make_s3_labelled_table();
  const auto& order = s3.display_order();
  REQUIRE(order.size() == 6);
  for (Element x = 0; x < 6; ++x)
    for (Element y = 0; y < 6; ++y)
      CHECK(s3.mul(order[x], order[y]) == order[table.mul(x, y)]);
}

TEST_CASE("isomorphism search") {
  CHECK(find_isomorphism(make_cyclic(4), make_cyclic(4)).has_value());
  CHECK_FALSE(find_isomorphism(make_cyclic(4), direct_product(make_cyclic(2), make_cyclic(2)))
                  .has_value());
  CHECK_FALSE(find_isomorphism(make_quaternion(), make_dihedral(4)).has_value());
  CHECK(find_isomorphism(make_dihedral(3), make_symmetric(3)).has_value());
}

TEST_CASE("direct product indexing") {
  const auto p = direct_product(make_cyclic(2), make_cyclic(3));
  CHECK(p.order() == 6);
  CHECK(p.is_abelian());
  // (1,2) * (1,2) = (0,1)
  CHECK(p.mul(1 * 3 + 2, 1 * 3 + 2) == 0 * 3 + 1);
  CHECK(find_isomorphism(p, make_cyclic(6)).has_value());
}

TEST_CASE("cycle notation round trip and errors") {
  const auto p = parse_cycles("(0 2 1)(3 4)", 5);
  CHECK(p == Permutation{2, 0, 1, 4, 3});
  CHECK(cycle_notation(p) == "(0 2 1)(3 4)");
  CHECK(cycle_notation(Permutation{0, 1, 2}) == "()");
  CHECK_THROWS_AS(parse_cycles("(0 1", 3), SpecError);
  CHECK_THROWS_AS(parse_cycles("(0 5)", 3), SpecError);
  CHECK_THROWS_AS(parse_cycles("(0 1 0)", 3), SpecError);
}

TEST_CASE("permutation generators close to the generated group") {
  std::vector<Permutation> gens{parse_cycles("(0 1)", 4), parse_cycles("(0 1 2 3)", 4)};
  CHECK(from_permutation_generators(4, gens).order() == 24);
  std::vector<Permutation> klein{parse_cycles("(0 1)(2 3)", 4), parse_cycles("(0 2)(1 3)", 4)};
  const auto k = from_permutation_generators(4, klein);
  CHECK(k.order() == 4);
  CHECK(involutions(k) == 3);
}

TEST_CASE("budgets are enforced before allocation") {
  CHECK_THROWS_AS(make_cyclic(1'000'000), BudgetError);
  CHECK_THROWS_AS(make_symmetric(9), BudgetError);
  CHECK_THROWS_AS(make_cyclic(0), SpecError);
  try {
    make_cyclic(20000);
  } catch (const Error& e) {
    CHECK(e.exit_code() == ExitCode::kBudget);
  }
}

TEST_CASE("tables that are not groups are rejected") {
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 1}}, {}), SpecError);
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 0}, {0, 0}}, {}), SpecError);
  // Latin square with identity but not associative.
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1, 2, 3, 4},
                                           {1, 0, 3, 4, 2},
                                           {2, 4, 0, 1, 3},
                                           {3, 2, 4, 0, 1},
                                           {4, 3, 1, 2, 0}},
                                          {}),
                  SpecError);
}
