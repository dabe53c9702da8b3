#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "equirank/group.hpp"
#include "equirank/lattice.hpp"

namespace equirank {

using Point = std::uint32_t;

// Action tables larger than this many cells are rejected.
inline constexpr std::size_t kDefaultCellBudget = 1'000'000;

// A finite set with a left action of a finite group, stored as a dense
// |G| x m table. Immutable once built.
class GSet {
 public:
  // `table[g * m + x]` is g.x. Checks that the identity row is the identity,
  // that every row is a bijection, and compatibility (g1 g2).x = g1.(g2.x).
  GSet(GroupPtr group, std::size_t size, std::vector<Point> table,
       std::vector<std::string> labels = {},
       std::size_t cell_budget = kDefaultCellBudget);

  const FiniteGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  std::size_t size() const noexcept { return size_; }

  Point act(Element g, Point x) const noexcept {
    return table_[static_cast<std::size_t>(g) * size_ + x];
  }
  std::span<const Point> row(Element g) const {
    return {table_.data() + static_cast<std::size_t>(g) * size_, size_};
  }

  const std::string& label(Point x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

 private:
  GroupPtr group_;
  std::size_t size_;
  std::vector<Point> table_;
  std::vector<std::string> labels_;
};

using GSetPtr = std::shared_ptr<const GSet>;

// Throws BudgetError if |G| * m exceeds the budget; call before allocating.
void check_cell_budget(std::size_t group_order, std::size_t points,
                       std::size_t cell_budget = kDefaultCellBudget);

// Left cosets gH with g.(kH) = (gk)H. Point 0 is H itself; the remaining
// cosets are ordered by their minimal element.
GSet coset_action(const GroupPtr& group, const Subgroup& h);

// Points of `b` follow the points of `a`.
GSet disjoint_union(const GSet& a, const GSet& b);

// Restriction to a G-invariant point set; points are renumbered in
// ascending order of the original indices. Throws DomainError otherwise.
GSet restrict_to_invariant(const GSet& x, std::vector<Point> points);

std::vector<Point> orbit(const GSet& x, Point p);           // ascending
Subgroup stabilizer(const GSet& x, Point p);
// Orbit partition; each orbit ascending, orbits ordered by minimal point.
std::vector<std::vector<Point>> orbits(const GSet& x);
// orbit_index[p] for the partition returned by orbits().
std::vector<std::uint32_t> orbit_index(const GSet& x);

std::vector<Point> fix(const GSet& x, const Subgroup& k);

// Number of orbits via the average number of fixed points per element.
std::size_t burnside_orbit_count(const GSet& x);

}  // namespace equirank
