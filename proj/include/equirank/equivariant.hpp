#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "equirank/gset.hpp"

namespace equirank {

// A G-equivariant self-map of a G-set, stored as its image array.
class EquivariantMap {
 public:
  // Throws DomainError("not-equivariant") unless f(g.x) = g.f(x) everywhere.
  EquivariantMap(GSetPtr gset, std::vector<Point> image);

  // Skips the equivariance check; for images produced by composition.
  static EquivariantMap unchecked(GSetPtr gset, std::vector<Point> image);

  const GSet& gset() const noexcept { return *gset_; }
  const GSetPtr& gset_ptr() const noexcept { return gset_; }
  const std::vector<Point>& image() const noexcept { return image_; }
  Point operator()(Point x) const { return image_[x]; }
  std::size_t size() const noexcept { return image_.size(); }

  bool is_bijective() const;

  friend bool operator==(const EquivariantMap& a, const EquivariantMap& b) {
    return a.image_ == b.image_;
  }

 private:
  EquivariantMap(GSetPtr gset, std::vector<Point> image, bool check);

  GSetPtr gset_;
  std::vector<Point> image_;
};

bool is_equivariant(const GSet& x, std::span<const Point> image);

// (f o g)(x) = f(g(x)). Throws DomainError("gset-mismatch").
EquivariantMap compose(const EquivariantMap& f, const EquivariantMap& g);
EquivariantMap identity_map(const GSetPtr& x);
// Throws DomainError("not-bijective").
EquivariantMap inverse(const EquivariantMap& f);

// [x -> y]: g.x -> g.y, identity off the orbit of x. Needs G_x <= G_y.
EquivariantMap point_push(const GSetPtr& x, Point from, Point to);

// [x <-> y]: needs G_x = G_y. Swaps the orbits Gx and Gy when they differ;
// when y = k.x it is the orbit translation g.x -> g.k.x.
EquivariantMap point_swap(const GSetPtr& x, Point a, Point b);

// Non-diagonal pairs (a, b) with f(a) = f(b), both orders, ascending.
std::vector<std::pair<Point, Point>> kernel_pairs(const EquivariantMap& f);

// Kernel as a labelling: class id per point, ids assigned in order of first
// appearance. Two maps have equal kernels iff these vectors are equal.
std::vector<std::uint32_t> kernel_labels(std::span<const Point> image);

std::size_t map_rank(const EquivariantMap& f);

}  // namespace equirank
