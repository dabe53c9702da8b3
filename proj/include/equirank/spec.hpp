#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "equirank/gset.hpp"
#include "equirank/shift.hpp"

namespace equirank {

// Group specs: "Z<n>", "S<n>", "D<n>" (order 2n), "Q8", products of those
// joined by 'x' such as "Z2xZ2", or "perm:<degree>:<cycles>;<cycles>;..."
// listing generators. Errors name the offending token and its position.
GroupPtr parse_group_spec(std::string_view text,
                          std::size_t budget = kDefaultGroupBudget);

struct ParsedGSet {
  GSetPtr gset;
  std::optional<ShiftSpace> shift;  // set for "shift:" specs
};

// G-set specs: "shift:q=<n>", "cosets:<element list>" (indices or labels,
// comma separated; empty for the trivial subgroup) and
// "union:<spec>+<spec>+...".
ParsedGSet parse_gset_spec(std::string_view text, const GroupPtr& group,
                           std::size_t cell_budget = kDefaultCellBudget);

}  // namespace equirank
