#include <doctest.h>

#include <algorithm>
#include <random>

#include "equirank/error.hpp"
#include "equirank/monoid.hpp"
#include "equirank/shift.hpp"
#include "equirank/spec.hpp"

using namespace equirank;

namespace {

// Z2 binary shift: points 0 = 00, 1 = 01, 2 = 10, 3 = 11.
GSetPtr z2_shift() { return build_shift(parse_group_spec("Z2"), 2).gset; }

}  // namespace

TEST_CASE("identity and composition") {
  const auto x = z2_shift();
  const auto id = identity_map(x);
  const auto push = point_push(x, 1, 0);
  CHECK(compose(push, id) == push);
  CHECK(compose(id, push) == push);
  CHECK(compose(push, push) == push);
}

TEST_CASE("non-equivariant arrays are detected") {
  const auto x = z2_shift();
  CHECK_FALSE(is_equivariant(*x, std::vector<Point>{0, 1, 1, 3}));
  CHECK(is_equivariant(*x, std::vector<Point>{0, 2, 1, 3}));
  CHECK_THROWS_AS(EquivariantMap(x, {0, 1, 1, 3}), DomainError);
}

TEST_CASE("maps on different G-sets do not compose") {
  const auto a = z2_shift();
  const auto b = build_shift(parse_group_spec("Z2"), 3).gset;
  CHECK_THROWS_AS(compose(identity_map(a), identity_map(b)), DomainError);
}

TEST_CASE("point push") {
  const auto x = z2_shift();
  CHECK(point_push(x, 2, 2) == identity_map(x));
  CHECK(point_push(x, 1, 0).image() == std::vector<Point>{0, 0, 0, 3});
  CHECK_FALSE(point_push(x, 1, 0).is_bijective());
  CHECK_THROWS_AS(point_push(x, 0, 1), DomainError);
  try {
    point_push(x, 0, 1);
  } catch (const Error& e) {
    CHECK(e.code() == "stabilizer-containment");
  }
}

TEST_CASE("point swap") {
  const auto x = z2_shift();
  CHECK(point_swap(x, 1, 1) == identity_map(x));
  CHECK(point_swap(x, 0, 3).image() == std::vector<Point>{3, 1, 2, 0});
  CHECK(point_swap(x, 1, 2).image() == std::vector<Point>{0, 2, 1, 3});
  CHECK_THROWS_AS(point_swap(x, 0, 1), DomainError);
  // orbit translation on a Z4 free orbit
  const auto z4 = build_shift(parse_group_spec("Z4"), 2).gset;
  const auto t = point_swap(z4, 1, 2);
  CHECK(t.is_bijective());
  CHECK(t(1) == 2);
  CHECK(t(2) == 4);
}

TEST_CASE("kernel pairs and rank") {
  const auto x = z2_shift();
  CHECK(kernel_pairs(identity_map(x)).empty());
  const auto k = kernel_pairs(point_push(x, 1, 0));
  CHECK(k.size() == 6);
  CHECK(std::find(k.begin(), k.end(), std::pair<Point, Point>{0, 1}) != k.end());
  CHECK(std::find(k.begin(), k.end(), std::pair<Point, Point>{2, 1}) != k.end());
  CHECK(map_rank(point_push(x, 1, 0)) == 2);
  CHECK(map_rank(identity_map(x)) == 4);
}

TEST_CASE("kernel properties over End of small instances") {
  std::mt19937 rng(3);
  for (const auto& [g, q] : std::vector<std::pair<std::string, std::size_t>>{
           {"Z2", 2}, {"Z3", 2}, {"Z2", 3}}) {
    CAPTURE(g);
    const auto x = build_shift(parse_group_spec(g), q).gset;
    const auto end = enumerate_end(x);
    const auto aut = enumerate_aut(x);
    std::uniform_int_distribution<std::size_t> pe(0, end.size() - 1);
    std::uniform_int_distribution<std::size_t> pa(0, aut.size() - 1);
    for (int t = 0; t < 200; ++t) {
      const auto tau = end.element(pe(rng));
      const auto sigma = end.element(pe(rng));
      const auto unit = aut.element(pa(rng));
      // |ker| is unchanged by an automorphism applied after.
      CHECK(kernel_pairs(compose(unit, tau)).size() == kernel_pairs(tau).size());
      // ker(tau) is contained in ker(sigma tau).
      const auto small = kernel_pairs(tau);
      const auto big = kernel_pairs(compose(sigma, tau));
      CHECK(std::includes(big.begin(), big.end(), small.begin(), small.end()));
      // injective iff surjective
      CHECK(tau.is_bijective() == (map_rank(tau) == x->size()));
    }
  }
}

TEST_CASE("Aut is closed under inverse") {
  const auto x = build_shift(parse_group_spec("Z3"), 2).gset;
  const auto aut = enumerate_aut(x);
  for (std::size_t i = 0; i < aut.size(); ++i) {
    const auto inv = inverse(aut.element(i));
    CHECK(is_equivariant(*x, inv.image()));
    CHECK(aut.contains(inv));
    CHECK(compose(inv, aut.element(i)) == identity_map(x));
  }
  CHECK_THROWS_AS(inverse(point_push(z2_shift(), 1, 0)), DomainError);
}
