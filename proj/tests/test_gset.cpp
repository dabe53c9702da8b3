#include <doctest.h>

#include <random>

#include "equirank/boxes.hpp"
#include "equirank/error.hpp"
#include "equirank/shift.hpp"
#include "equirank/spec.hpp"
#include "oracles.hpp"

using namespace equirank;

namespace {

struct Fixture {
  GroupPtr group;
  LatticePtr lattice;
  GSetPtr x;
};

Fixture shift(const std::string& g, std::size_t q) {
  auto group = parse_group_spec(g);
  auto lat = std::make_shared<const SubgroupLattice>(group);
  return {group, lat, build_shift(group, q).gset};
}

}  // namespace

TEST_CASE("Z4 binary shift: orbit and stabilizer examples") {
  const auto f = shift("Z4", 2);
  CHECK(orbit(*f.x, 1) == std::vector<Point>{1, 2, 4, 8});
  CHECK(stabilizer(*f.x, 10).elements() == std::vector<Element>{0, 2});
  CHECK(burnside_orbit_count(*f.x) == 6);
  CHECK(orbits(*f.x).size() == 6);
}

TEST_CASE("fixed points of {0,3} on the Z6 binary shift") {
  const auto f = shift("Z6", 2);
  CHECK(fix(*f.x, Subgroup(6, {0, 3})).size() == 8);
  CHECK(fix(*f.x, Subgroup(6, {0, 1, 2, 3, 4, 5})) == std::vector<Point>{0, 63});
}

TEST_CASE("coset action") {
  const auto g = parse_group_spec("S3");
  const auto x = coset_action(g, Subgroup(6, {0, 1}));
  CHECK(x.size() == 3);
  CHECK(orbits(x).size() == 1);
  CHECK(stabilizer(x, 0).elements() == std::vector<Element>{0, 1});
  for (Point p = 0; p < x.size(); ++p) CHECK(oracle::orbit(x, p).size() == 3);
}

TEST_CASE("disjoint union and restriction") {
  const auto g = parse_group_spec("Z4");
  const auto a = coset_action(g, Subgroup(4, {0, 2}));
  const auto b = coset_action(g, Subgroup(4, {0}));
  const auto u = disjoint_union(a, b);
  CHECK(u.size() == 6);
  CHECK(orbits(u).size() == 2);
  CHECK(u.label(2) == b.label(0) + "'");
  const auto r = restrict_to_invariant(u, {2, 3, 4, 5});
  CHECK(r.size() == 4);
  CHECK(orbits(r).size() == 1);
  CHECK_THROWS_AS(restrict_to_invariant(u, {2, 3}), DomainError);
  const auto other = parse_group_spec("Z2");
  CHECK_THROWS_AS(disjoint_union(a, coset_action(other, Subgroup(2, {0}))), SpecError);
}

TEST_CASE("invalid action tables are rejected") {
  const auto g = parse_group_spec("Z2");
  // identity row moves a point
  CHECK_THROWS_AS(GSet(g, 2, {1, 0, 0, 1}), SpecError);
  // non-bijective row
  CHECK_THROWS_AS(GSet(g, 2, {0, 1, 0, 0}), SpecError);
  // Z3 acting by a transposition is not an action
  const auto z3 = parse_group_spec("Z3");
  CHECK_THROWS_AS(GSet(z3, 2, {0, 1, 1, 0, 1, 0}), SpecError);
  CHECK_THROWS_AS(check_cell_budget(1000, 2000), BudgetError);
}

TEST_CASE("orbit-stabilizer and conjugate stabilizers, property over random unions") {
  std::mt19937 rng(7);
  for (const std::string spec : {"S3", "D4", "Q8", "Z2xZ2xZ2"}) {
    const auto g = parse_group_spec(spec);
    const SubgroupLattice lat(g);
    std::uniform_int_distribution<std::size_t> pick(0, lat.size() - 1);
    for (int t = 0; t < 10; ++t) {
      GSet x = coset_action(g, lat.subgroup(pick(rng)));
      x = disjoint_union(x, coset_action(g, lat.subgroup(pick(rng))));
      for (Point p = 0; p < x.size(); ++p) {
        const auto s = oracle::stabilizer(x, p);
        CHECK(oracle::orbit(x, p).size() * s.size() == g->order());
        for (Element a = 0; a < g->order(); ++a) {
          CHECK(oracle::stabilizer(x, x.act(a, p)) == oracle::conjugate(*g, s, a));
        }
      }
      CHECK(burnside_orbit_count(x) == orbits(x).size());
    }
  }
}

TEST_CASE("box decomposition invariants") {
  for (const auto& [g, q] : std::vector<std::pair<std::string, std::size_t>>{
           {"S3", 2}, {"Z6", 2}, {"D4", 2}, {"Z2", 3}, {"Z3", 3}}) {
    CAPTURE(g);
    const auto f = shift(g, q);
    const BoxDecomposition boxes(f.x, f.lattice);
    std::size_t total = 0;
    for (std::size_t i = 0; i < boxes.size(); ++i) {
      const Box& b = boxes.box(i);
      total += b.points.size();
      std::size_t in_orbits = 0;
      for (const auto& o : b.orbits) in_orbits += o.size();
      CHECK(in_orbits == b.points.size());
      std::size_t in_subs = 0;
      for (const auto& s : b.sub_boxes) in_subs += s.size();
      CHECK(in_subs == b.points.size());
      CHECK(alpha_moebius(*f.x, *f.lattice, b.representative) == b.alpha());
      CHECK(oracle::direct_alpha(*f.x, {f.lattice->subgroup(b.representative).elements().begin(),
                                        f.lattice->subgroup(b.representative).elements().end()}) ==
            b.alpha());
      if (i > 0) CHECK(boxes.box(i - 1).class_id < b.class_id);
    }
    CHECK(total == f.x->size());
  }
}

TEST_CASE("alpha values on binary shifts") {
  const auto z6 = shift("Z6", 2);
  CHECK(alpha_moebius(*z6.x, *z6.lattice, z6.lattice->id_of(Subgroup(6, {0, 3}))) == 2);
  const auto s3 = shift("S3", 2);
  CHECK(alpha_moebius(*s3.x, *s3.lattice, s3.lattice->trivial()) == 7);
  // a subgroup that stabilizes nothing
  const auto g = parse_group_spec("Z4");
  const auto lat = std::make_shared<const SubgroupLattice>(g);
  const auto free = std::make_shared<const GSet>(coset_action(g, Subgroup(4, {0})));
  CHECK_THROWS_AS(alpha_moebius(*free, *lat, lat->whole()), DomainError);
}

TEST_CASE("Aut-orbits per box") {
  const auto s3 = shift("S3", 2);
  const BoxDecomposition boxes(s3.x, s3.lattice);
  std::vector<std::size_t> counts;
  for (std::size_t i = 0; i < boxes.size(); ++i) counts.push_back(aut_orbits_in_box(boxes, i));
  CHECK(counts == std::vector<std::size_t>{1, 3, 1, 1});
  const auto z6 = shift("Z6", 2);
  const BoxDecomposition zb(z6.x, z6.lattice);
  for (std::size_t i = 0; i < zb.size(); ++i) CHECK(aut_orbits_in_box(zb, i) == 1);
}

TEST_CASE("kappa on shifts") {
  for (const std::string g : {"S3", "Z4", "Z2xZ2", "D4", "Z6"}) {
    const auto f = shift(g, 2);
    const BoxDecomposition boxes(f.x, f.lattice);
    CHECK(kappa(boxes) == predicted_shift_kappa(boxes, 2));
    for (std::size_t i = 0; i < boxes.size(); ++i) {
      const bool index_two = f.lattice->index(boxes.box(i).representative) == 2;
      CHECK((boxes.box(i).alpha() == 1) == index_two);
    }
  }
  for (const std::string g : {"Z2", "Z3", "S3"}) {
    const auto f = shift(g, 3);
    const BoxDecomposition boxes(f.x, f.lattice);
    CHECK(kappa(boxes).empty());
    for (const auto& b : boxes.boxes()) CHECK(b.alpha() >= 2);
  }
  const auto s3 = shift("S3", 2);
  const BoxDecomposition boxes(s3.x, s3.lattice);
  REQUIRE(kappa(boxes).size() == 1);
  CHECK(s3.lattice->subgroup(boxes.box(kappa(boxes)[0]).representative).order() == 3);
}

TEST_CASE("transitive action: one box, alpha 1") {
  const auto g = parse_group_spec("S3");
  const auto lat = std::make_shared<const SubgroupLattice>(g);
  const auto x = std::make_shared<const GSet>(coset_action(g, lat->subgroup(1)));
  const BoxDecomposition boxes(x, lat);
  CHECK(boxes.size() == 1);
  CHECK(boxes.box(0).alpha() == 1);
  CHECK(kappa(boxes).size() == 1);
}
