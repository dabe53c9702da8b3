#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "equirank/group.hpp"

namespace equirank {

// Default cap on the number of subgroups the lattice will hold.
inline constexpr std::size_t kDefaultSubgroupBudget = 20000;

// A subgroup as a sorted element list plus a membership bitmask.
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(std::size_t group_order, std::vector<Element> sorted_elements);

  const std::vector<Element>& elements() const noexcept { return elements_; }
  std::size_t order() const noexcept { return elements_.size(); }
  bool contains(Element g) const noexcept {
    return (mask_[g >> 6] >> (g & 63)) & 1u;
  }
  bool is_subset_of(const Subgroup& other) const noexcept;

  const std::vector<std::uint64_t>& mask() const noexcept { return mask_; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.elements_ == b.elements_;
  }
  // Orders by size, then lexicographically by element list.
  friend bool operator<(const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements_ < b.elements_;
  }

 private:
  std::vector<Element> elements_;
  std::vector<std::uint64_t> mask_;
};

// Smallest subgroup containing the given elements.
Subgroup generate_subgroup(const FiniteGroup& g, std::span<const Element> gens);

// Checks closure under the group operation; returns nullopt if the list is
// not a subgroup.
std::optional<Subgroup> as_subgroup(const FiniteGroup& g,
                                    std::vector<Element> elements);

// g H g^-1
Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& h, Element by);

using SubgroupId = std::uint32_t;
using ClassId = std::uint32_t;

struct ConjugacyClass {
  std::vector<SubgroupId> members;  // ascending
  SubgroupId representative;        // lexicographically minimal member
};

// Every subgroup of a finite group, with containment, conjugacy classes,
// normalizers and the Moebius function of the subgroup lattice.
//
// Subgroups are listed by ascending order, ties broken lexicographically, so
// subgroup 0 is trivial and the last subgroup is G itself. Classes are listed
// by the same key on their representatives.
class SubgroupLattice {
 public:
  explicit SubgroupLattice(GroupPtr group,
                           std::size_t budget = kDefaultSubgroupBudget);

  const FiniteGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }

  std::size_t size() const noexcept { return subgroups_.size(); }
  const Subgroup& subgroup(SubgroupId id) const { return subgroups_[id]; }
  const std::vector<Subgroup>& subgroups() const noexcept { return subgroups_; }

  std::optional<SubgroupId> find(const Subgroup& h) const;
  SubgroupId id_of(const Subgroup& h) const;  // throws if absent
  SubgroupId trivial() const noexcept { return 0; }
  SubgroupId whole() const noexcept {
    return static_cast<SubgroupId>(subgroups_.size() - 1);
  }

  bool leq(SubgroupId h, SubgroupId k) const {
    return (leq_[h][k >> 6] >> (k & 63)) & 1u;
  }
  // All (H, K) index pairs with H <= K.
  std::vector<std::pair<SubgroupId, SubgroupId>> containment_pairs() const;

  const std::vector<ConjugacyClass>& classes() const noexcept { return classes_; }
  ClassId class_of(SubgroupId h) const { return class_of_[h]; }

  SubgroupId normalizer(SubgroupId h) const { return normalizer_[h]; }
  // Subgroup id of g H g^-1.
  SubgroupId conjugate(SubgroupId h, Element g) const;

  // {n H n^-1 : n in N}, ascending ids.
  std::vector<SubgroupId> n_conjugacy_class(SubgroupId h, SubgroupId n) const;

  // Edges ([H_i], [H_j]) of the order graph on classes: [H_i] <= [H_j] iff
  // H_i is contained in some conjugate of H_j. Reflexive.
  std::vector<std::pair<ClassId, ClassId>> conj_order_graph() const;
  bool class_leq(ClassId a, ClassId b) const;

  // mu(H, K); throws DomainError unless H <= K.
  int moebius(SubgroupId h, SubgroupId k) const;
  // Full Moebius table keyed by (H, K) with H <= K.
  const std::map<std::pair<SubgroupId, SubgroupId>, int>& moebius_table() const {
    return moebius_;
  }

  std::size_t index(SubgroupId h) const { return group_->order() / subgroups_[h].order(); }

 private:
  void enumerate(std::size_t budget);
  void build_relations();
  void build_moebius();

  GroupPtr group_;
  std::vector<Subgroup> subgroups_;
  std::unordered_map<std::size_t, std::vector<SubgroupId>> by_hash_;
  std::vector<std::vector<std::uint64_t>> leq_;  // leq_[h] bitmask over k
  std::vector<SubgroupId> normalizer_;
  std::vector<ConjugacyClass> classes_;
  std::vector<ClassId> class_of_;
  std::vector<std::vector<bool>> class_leq_;
  std::map<std::pair<SubgroupId, SubgroupId>, int> moebius_;
};

using LatticePtr = std::shared_ptr<const SubgroupLattice>;

}  // namespace equirank
