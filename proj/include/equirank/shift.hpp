#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "equirank/boxes.hpp"
#include "equirank/equivariant.hpp"

namespace equirank {

// A configuration x : G -> A, stored by display position: config[j] is
// x(g_j) where g_j is the j-th element of the group's display order.
using Config = std::vector<std::uint32_t>;

// A^G with (g.x)(h) = x(g^-1 h). Point n is the configuration whose base-q
// digits, most significant first, are its values in display order.
struct ShiftSpace {
  GroupPtr group;
  std::size_t q;
  GSetPtr gset;
  std::vector<std::size_t> position;  // display position of each element

  std::size_t points() const { return gset->size(); }
  Point encode(const Config& c) const;
  Config decode(Point n) const;
  // Value of configuration n at element g.
  std::uint32_t value(Point n, Element g) const;
};

// Throws DomainError("invalid-alphabet") for q < 2 and BudgetError when the
// action table would exceed the cell budget.
ShiftSpace build_shift(const GroupPtr& group, std::size_t q,
                       std::size_t cell_budget = kDefaultCellBudget);

// mu : A^S -> A. Patterns are encoded base q over S in display order, most
// significant first.
struct LocalRule {
  std::vector<Element> memory_set;  // sorted by display position
  std::vector<std::uint32_t> table;
};

// tau(x)(g) = mu(pattern of x(g s), s in S).
EquivariantMap ca_from_rule(const ShiftSpace& space, const LocalRule& rule);

// Local rule with memory set G and mu(x) = tau(x)(e). Throws
// DomainError("not-equivariant").
LocalRule rule_from_map(const ShiftSpace& space, const EquivariantMap& tau);

// Whether tau(x)(e) depends only on x restricted to S.
bool is_memory_set(const ShiftSpace& space, const EquivariantMap& tau,
                   std::vector<Element> s);

// Elements s such that changing x(s) alone can change tau(x)(e). Throws
// InternalError if the result fails to be a memory set.
std::vector<Element> minimal_memory_set(const ShiftSpace& space,
                                        const EquivariantMap& tau);

// Boxes with one orbit predicted for A^G: those of index 2 when q = 2,
// none otherwise.
std::vector<std::size_t> predicted_shift_kappa(const BoxDecomposition& boxes,
                                               std::size_t q);

}  // namespace equirank
