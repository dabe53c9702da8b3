#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "equirank/boxes.hpp"
#include "equirank/monoid.hpp"

namespace equirank {

// An N-conjugacy class of subgroups; `canonical` is its minimal id.
struct NClass {
  std::vector<SubgroupId> members;  // ascending
  SubgroupId canonical;

  friend bool operator==(const NClass&, const NClass&) = default;
  friend auto operator<=>(const NClass& a, const NClass& b) {
    return a.members <=> b.members;
  }
};

// U(H_i): N_i-classes of stabilizer subgroups containing H_i, ordered by
// canonical member.
std::vector<NClass> u_set(const BoxDecomposition& boxes, std::size_t i);

// Type of an elementary collapse: the box of the smaller stabilizer and
// the N_i-class of the stabilizer it is pushed to.
struct CollapseType {
  std::size_t box;
  NClass target;

  friend bool operator==(const CollapseType&, const CollapseType&) = default;
  friend auto operator<=>(const CollapseType& a, const CollapseType& b) {
    if (auto c = a.box <=> b.box; c != 0) return c;
    return a.target <=> b.target;
  }
};

struct Generator {
  EquivariantMap map;
  std::string tag;  // "push i->(i,j)" or "push i->i'"
  Point from;
  Point to;
};

struct ClassReport {
  std::size_t box;
  ClassId class_id;
  SubgroupId representative;
  SubgroupId normalizer;
  std::size_t alpha;
  std::vector<NClass> u;
};

struct RankReport {
  std::vector<ClassReport> classes;
  std::vector<std::size_t> kappa;
  std::size_t relative_rank;
  std::vector<Generator> generating_set;
};

// Sum of |U(H_i)| minus |kappa|, with the generating set V attached.
RankReport relative_rank(const BoxDecomposition& boxes);

// V: for each box i, x_i is the minimal point with stabilizer H_i. One push
// x_i -> y per N_i-class in U(H_i) other than [H_i], y the minimal point
// whose stabilizer is the canonical member; plus x_i -> x_i' into a second
// orbit of the box when alpha_i >= 2.
std::vector<Generator> generating_set_v(const BoxDecomposition& boxes);

// tau is an elementary collapse when its kernel equals the smallest
// G-invariant equivalence identifying some x and y with Gx != Gy and
// G_x <= G_y; that is, the kernel of [x -> y]. Returns such a pair.
std::optional<std::pair<Point, Point>> collapse_witness(const BoxDecomposition& boxes,
                                                        const EquivariantMap& tau);
bool is_elementary_collapse(const BoxDecomposition& boxes, const EquivariantMap& tau);

// Type read off a specific witness pair; the witness is first moved so that
// G_x is the class representative. Throws DomainError("not-a-collapse") if
// (x, y) does not witness tau.
CollapseType collapse_type_from(const BoxDecomposition& boxes,
                                const EquivariantMap& tau, Point x, Point y);
// Throws DomainError("not-a-collapse").
CollapseType collapse_type(const BoxDecomposition& boxes, const EquivariantMap& tau);

// All witness pairs (x, y) of tau, with x ranging over all points.
std::vector<std::pair<Point, Point>> all_collapse_witnesses(
    const BoxDecomposition& boxes, const EquivariantMap& tau);

// Realizable types, found by scanning pushes from x_i to every point of a
// different orbit with a larger stabilizer.
std::vector<CollapseType> collapse_type_census(const BoxDecomposition& boxes);

// Orbit swaps and orbit translations generating Aut_G(X).
std::vector<EquivariantMap> aut_generators(const BoxDecomposition& boxes);

// Order formulas for Aut_G(X) and End_G(B_i).
BigInt predicted_aut_order(const BoxDecomposition& boxes);
BigInt predicted_box_end_order(const BoxDecomposition& boxes, std::size_t i);

enum class CheckStatus { kPass, kFail, kSkipped };
const char* to_string(CheckStatus s);

struct PropertyResult {
  std::string name;
  CheckStatus status;
  std::string detail;
};

// Enumeration, generation, irredundancy and census checks, each skipped with
// a reason when it would exceed `cap`.
std::vector<PropertyResult> verify_rank(const BoxDecomposition& boxes,
                                        const RankReport& report,
                                        std::size_t cap = kDefaultClosureCap);

}  // namespace equirank
