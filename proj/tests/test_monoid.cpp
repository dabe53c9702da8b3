#include <doctest.h>

#include <set>

#include "equirank/error.hpp"
#include "equirank/monoid.hpp"
#include "equirank/shift.hpp"
#include "equirank/spec.hpp"
#include "oracles.hpp"

using namespace equirank;

namespace {

std::set<std::vector<Point>> as_set(const MonoidClosure& m) {
  std::set<std::vector<Point>> out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const auto img = m.elements[i];
    out.emplace(img.begin(), img.end());
  }
  return out;
}

GSetPtr cosets(const std::string& g, std::vector<Element> h) {
  const auto group = parse_group_spec(g);
  return std::make_shared<const GSet>(coset_action(group, *as_subgroup(*group, h)));
}

}  // namespace

TEST_CASE("image store deduplicates and grows") {
  ImageStore s(3);
  CHECK(s.insert(std::vector<Point>{0, 1, 2}).second);
  CHECK_FALSE(s.insert(std::vector<Point>{0, 1, 2}).second);
  for (Point a = 0; a < 20; ++a)
    for (Point b = 0; b < 20; ++b) s.insert(std::vector<Point>{a, b, 7});
  CHECK(s.size() == 401);
  CHECK(s.find(std::vector<Point>{19, 19, 7}).has_value());
  CHECK_FALSE(s.find(std::vector<Point>{19, 19, 8}).has_value());
  CHECK(s[0][2] == 2);
}

TEST_CASE("enumeration agrees with the all-arrays oracle for m <= 8") {
  std::vector<GSetPtr> cases = {
      build_shift(parse_group_spec("Z2"), 2).gset,
      build_shift(parse_group_spec("Z3"), 2).gset,
      build_shift(parse_group_spec("Z1"), 5).gset,
      cosets("S3", {0, 1}),
      cosets("Z4", {0}),
      cosets("Z2xZ2", {0}),
  };
  const auto z4 = parse_group_spec("Z4");
  cases.push_back(std::make_shared<const GSet>(
      disjoint_union(coset_action(z4, Subgroup(4, {0, 2})), coset_action(z4, Subgroup(4, {0})))));
  for (const auto& x : cases) {
    const auto oracle_maps = oracle::all_equivariant_maps(*x);
    const auto end = enumerate_end(x);
    CHECK(as_set(end) == std::set<std::vector<Point>>(oracle_maps.begin(), oracle_maps.end()));
    CHECK(BigInt(end.size()) == predicted_end_size(*x));
    std::size_t bij = 0;
    for (const auto& f : oracle_maps) {
      std::set<Point> img(f.begin(), f.end());
      bij += img.size() == f.size();
    }
    CHECK(enumerate_aut(x).size() == bij);
  }
}

TEST_CASE("End and Aut sizes") {
  const auto z2 = build_shift(parse_group_spec("Z2"), 2).gset;
  CHECK(enumerate_end(z2).size() == 16);
  CHECK(enumerate_aut(z2).size() == 4);
  const auto z3 = build_shift(parse_group_spec("Z3"), 2).gset;
  CHECK(enumerate_aut(z3).size() == 36);
  CHECK(enumerate_end(z3).size() == 256);
  // trivial group: every map is equivariant
  const auto z1 = build_shift(parse_group_spec("Z1"), 4).gset;
  CHECK(enumerate_end(z1).size() == 256);
  // transitive: End = Aut
  const auto t = cosets("S3", {0, 1});
  CHECK(enumerate_end(t).size() == enumerate_aut(t).size());
}

TEST_CASE("visitor sees each map once") {
  const auto x = build_shift(parse_group_spec("Z2"), 3).gset;
  std::size_t visits = 0;
  ImageStore seen(x->size());
  for_each_end(*x, [&](std::span<const Point> img) {
    ++visits;
    seen.insert(img);
  });
  CHECK(visits == 19683);
  CHECK(seen.size() == 19683);
}

TEST_CASE("budgets are explicit errors") {
  const auto s3 = build_shift(parse_group_spec("S3"), 2).gset;
  CHECK_THROWS_AS(enumerate_end(s3), BudgetError);
  const auto z2 = build_shift(parse_group_spec("Z2"), 2).gset;
  CHECK_THROWS_AS(enumerate_end(z2, 10), BudgetError);
  std::vector<EquivariantMap> gens{point_push(z2, 1, 0), point_swap(z2, 0, 3)};
  CHECK_THROWS_AS(closure(z2, gens, 2), BudgetError);
}

TEST_CASE("closure") {
  const auto z2 = build_shift(parse_group_spec("Z2"), 2).gset;
  const auto c = closure(z2, {identity_map(z2)});
  CHECK(c.size() == 1);
  CHECK(c.contains(identity_map(z2)));
  std::vector<Point> bad{0, 1, 1, 3};
  CHECK_THROWS_AS(closure(z2, {EquivariantMap::unchecked(z2, bad)}), DomainError);
}

TEST_CASE("non-units form an ideal") {
  for (const auto& [g, q] : std::vector<std::pair<std::string, std::size_t>>{
           {"Z2", 2}, {"Z3", 2}, {"Z1", 3}, {"Z1", 4}}) {
    const auto x = build_shift(parse_group_spec(g), q).gset;
    const auto end = enumerate_end(x);
    REQUIRE(end.size() <= 512);
    CHECK(non_units_form_ideal(end));
  }
}

TEST_CASE("symmetric and full transformation generators") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto c = sym_generators_check(n);
    CHECK(c.passed);
  }
  CHECK(sym_generators_check(3).closure_size == 6);
  const auto t3 = trans_generators_check(3);
  CHECK(t3.passed);
  CHECK(t3.closure_size == 27);
  for (std::size_t n = 1; n <= 5; ++n) {
    CHECK(trans_generators_check(n).passed);
    const auto without = trans_generators_check(n, false);
    CHECK(without.passed);
    CHECK(without.closure_size == without.expected);
  }
  CHECK(trans_generators_check(4, false).closure_size == 24);
  CHECK_THROWS_AS(sym_generators_check(7), BudgetError);
  CHECK_THROWS_AS(trans_generators_check(6), BudgetError);
}
