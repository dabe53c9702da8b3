#include <doctest.h>

#include "equirank/error.hpp"
#include "equirank/shift.hpp"
#include "equirank/spec.hpp"
#include "equirank/wreath.hpp"

using namespace equirank;

namespace {

BoxDecomposition shift_boxes(const std::string& g, std::size_t q) {
  auto group = parse_group_spec(g);
  auto lat = std::make_shared<const SubgroupLattice>(group);
  return BoxDecomposition(build_shift(group, q).gset, lat);
}

bool keeps_box(const BoxDecomposition& boxes, const EquivariantMap& f, std::size_t i) {
  for (Point p : boxes.box(i).points)
    if (boxes.box_of(f(p)) != i) return false;
  return true;
}

}  // namespace

TEST_CASE("box decomposition recomposes") {
  for (const auto& [g, q] : std::vector<std::pair<std::string, std::size_t>>{
           {"Z3", 2}, {"Z2", 3}, {"Z4", 2}}) {
    const auto boxes = shift_boxes(g, q);
    const auto end = enumerate_end(boxes.gset_ptr());
    for (std::size_t i = 0; i < end.size(); ++i) {
      const auto tau = end.element(i);
      const auto factors = decompose_by_boxes(boxes, tau);
      CHECK(factors.size() == boxes.size());
      CHECK(recompose(factors) == tau);
    }
  }
}

TEST_CASE("box coordinates are a bijection") {
  const auto boxes = shift_boxes("S3", 2);
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    const BoxCoordinates c(boxes, i);
    CHECK(c.orbit_count() == boxes.box(i).alpha());
    CHECK(c.coset_count() * c.orbit_count() == boxes.box(i).points.size());
    for (Point p : boxes.box(i).points) {
      REQUIRE(c.contains(p));
      CHECK(c.point(c.orbit_of(p), c.coset_of(p)) == p);
    }
  }
}

TEST_CASE("factorization is a homomorphism into the wreath product") {
  const auto boxes = shift_boxes("Z3", 2);
  const auto end = enumerate_end(boxes.gset_ptr());
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    const BoxCoordinates c(boxes, i);
    std::vector<EquivariantMap> inside;
    for (std::size_t k = 0; k < end.size(); ++k) {
      auto f = end.element(k);
      if (keeps_box(boxes, f, i)) inside.push_back(std::move(f));
    }
    REQUIRE_FALSE(inside.empty());
    for (const auto& p : inside) {
      const auto wp = wreath_factorize(c, p);
      CHECK(coset_maps_equivariant(c, wp));
      for (const auto& t : inside) {
        CHECK(wreath_factorize(c, compose(p, t)) ==
              wreath_product(wp, wreath_factorize(c, t)));
      }
    }
  }
}

TEST_CASE("factorizing a map that leaves the box throws") {
  const auto boxes = shift_boxes("Z2", 2);
  const BoxCoordinates c(boxes, 0);
  CHECK_THROWS_AS(wreath_factorize(c, point_push(boxes.gset_ptr(), 1, 0)), DomainError);
}

TEST_CASE("order formulas") {
  const auto z4 = shift_boxes("Z4", 2);
  CHECK(predicted_aut_order(z4) == 1536);
  for (const auto& [g, q] : std::vector<std::pair<std::string, std::size_t>>{
           {"Z2", 2}, {"Z3", 2}, {"Z4", 2}, {"Z2", 3}, {"S3", 2}, {"Z2xZ2", 2}}) {
    CAPTURE(g);
    const auto boxes = shift_boxes(g, q);
    for (const auto& check : wreath_order_checks(boxes)) {
      CAPTURE(check.name);
      if (check.observed) CHECK(*check.observed == check.predicted);
    }
  }
}
