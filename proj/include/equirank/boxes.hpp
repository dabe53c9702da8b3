#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "equirank/gset.hpp"
#include "equirank/lattice.hpp"

namespace equirank {

// The points whose stabilizer is conjugate to one class representative H_i,
// split into G-orbits and into the sub-boxes B_K, K in [H_i].
struct Box {
  ClassId class_id;
  SubgroupId representative;                 // H_i
  std::vector<Point> points;                 // ascending
  std::vector<std::vector<Point>> orbits;    // ordered by minimal point
  std::vector<SubgroupId> sub_box_groups;    // members K of [H_i]
  std::vector<std::vector<Point>> sub_boxes; // B_K, parallel to the above

  std::size_t alpha() const noexcept { return orbits.size(); }
};

// Box partition of a G-set. Only classes with nonempty boxes appear, in the
// lattice's class order, so box index i is the i-th class of Conj_G(X).
class BoxDecomposition {
 public:
  BoxDecomposition(GSetPtr gset, LatticePtr lattice);

  const GSet& gset() const noexcept { return *gset_; }
  const GSetPtr& gset_ptr() const noexcept { return gset_; }
  const SubgroupLattice& lattice() const noexcept { return *lattice_; }
  const LatticePtr& lattice_ptr() const noexcept { return lattice_; }

  const std::vector<Box>& boxes() const noexcept { return boxes_; }
  const Box& box(std::size_t i) const { return boxes_[i]; }
  std::size_t size() const noexcept { return boxes_.size(); }
  std::optional<std::size_t> box_of_class(ClassId c) const;

  SubgroupId stabilizer_of(Point p) const { return stabilizer_[p]; }
  std::size_t box_of(Point p) const { return box_of_point_[p]; }
  std::uint32_t orbit_of(Point p) const { return orbit_of_[p]; }
  const std::vector<std::vector<Point>>& orbits() const noexcept { return orbits_; }

  // Stab_G(X): subgroups occurring as point stabilizers, ascending ids.
  const std::vector<SubgroupId>& stabilizer_subgroups() const noexcept {
    return stab_subgroups_;
  }
  bool is_stabilizer(SubgroupId h) const;

  // Minimal point whose stabilizer is exactly h, if any.
  std::optional<Point> min_point_with_stabilizer(SubgroupId h) const;

 private:
  GSetPtr gset_;
  LatticePtr lattice_;
  std::vector<Box> boxes_;
  std::vector<SubgroupId> stabilizer_;
  std::vector<std::size_t> box_of_point_;
  std::vector<std::uint32_t> orbit_of_;
  std::vector<std::vector<Point>> orbits_;
  std::vector<SubgroupId> stab_subgroups_;
  std::vector<std::optional<Point>> min_point_;  // per subgroup id
};

// Orbit count of box [H] from the Moebius function:
//   ([G:N_G(H)] / [G:H]) * sum_{H <= K <= G} mu(H, K) |Fix(K)|.
// Throws DomainError when H stabilizes no point.
std::size_t alpha_moebius(const GSet& x, const SubgroupLattice& lattice,
                          SubgroupId h);

// Number of Aut_G(X)-orbits in box i, i.e. [G : N_G(H_i)]. Throws
// PropertyError if it disagrees with the count of nonempty sub-boxes.
std::size_t aut_orbits_in_box(const BoxDecomposition& boxes, std::size_t i);

// Box indices with exactly one G-orbit.
std::vector<std::size_t> kappa(const BoxDecomposition& boxes);

}  // namespace equirank
