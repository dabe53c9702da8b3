#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace equirank {

using Element = std::uint32_t;

// Default cap on the order of any constructed group (7! * 2).
inline constexpr std::size_t kDefaultGroupBudget = 10080;

// A finite group given by its full multiplication table over the dense
// element indices 0..n-1. Immutable once built.
class FiniteGroup {
 public:
  // Validates closure, identity, inverses and associativity.
  static FiniteGroup from_table(std::vector<std::vector<Element>> table,
                                std::vector<std::string> labels = {});

  std::size_t order() const noexcept { return order_; }
  Element identity() const noexcept { return identity_; }

  Element mul(Element a, Element b) const noexcept {
    return table_[static_cast<std::size_t>(a) * order_ + b];
  }
  Element inv(Element a) const noexcept { return inverse_[a]; }

  // g^-1 h g
  Element conjugate_element(Element g, Element h) const noexcept {
    return mul(inv(g), mul(h, g));
  }

  std::size_t element_order(Element g) const;

  const std::string& label(Element g) const { return labels_[g]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  // Order in which elements are listed when configurations are printed or
  // encoded. Defaults to 0..n-1.
  const std::vector<Element>& display_order() const noexcept {
    return display_order_;
  }
  void set_display_order(std::vector<Element> order);
  void set_labels(std::vector<std::string> labels);

  bool is_abelian() const;

  // Left regular permutation of g: h -> g*h.
  std::vector<Element> left_regular(Element g) const;

  std::string name;

 private:
  friend struct GroupBuilder;
  FiniteGroup() = default;

  std::size_t order_ = 0;
  Element identity_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::string> labels_;
  std::vector<Element> display_order_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// A permutation of 0..degree-1 in one-line notation.
using Permutation = std::vector<std::uint32_t>;

FiniteGroup make_cyclic(std::size_t n, std::size_t budget = kDefaultGroupBudget);

// Elements in lexicographic one-line order, labels in cycle notation.
// Product convention: (a*b)(i) = a(b(i)). For n == 3 the display order is the
// e,a,b,c,f,g listing of the reference S_3 box tables (see
// s3_table_labels()).
FiniteGroup make_symmetric(std::size_t n,
                           std::size_t budget = kDefaultGroupBudget);

// Dihedral group of the regular n-gon, order 2n. Rotations r^i are 0..n-1,
// reflections r^i s are n..2n-1.
FiniteGroup make_dihedral(std::size_t n,
                          std::size_t budget = kDefaultGroupBudget);

// Componentwise product; element (x, y) has index x*|b| + y.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                           std::size_t budget = kDefaultGroupBudget);

// Closure of the generators under composition. Elements are sorted
// lexicographically by one-line notation, so index 0 is the identity.
FiniteGroup from_permutation_generators(std::size_t degree,
                                        std::span<const Permutation> gens,
                                        std::size_t budget = kDefaultGroupBudget);

// Quaternion group Q8 via its regular representation.
FiniteGroup make_quaternion();

// The S_3 Cayley table with elements e,a,b,c,f,g in that index order.
FiniteGroup make_s3_labelled_table();
const std::vector<std::string>& s3_table_labels();

// Cycle notation with 0-based points, "()" for the identity.
std::string cycle_notation(const Permutation& p);
// Parses "(0 1)(2 3)" style cycles into a permutation of the given degree.
Permutation parse_cycles(std::string_view text, std::size_t degree);

// Isomorphism search for small groups (order <= 8 in practice). Returns the
// image of each element of `a` in `b`, or nullopt.
std::optional<std::vector<Element>> find_isomorphism(const FiniteGroup& a,
                                                     const FiniteGroup& b);

}  // namespace equirank
