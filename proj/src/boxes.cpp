#include "equirank/boxes.hpp"

#include <algorithm>

#include "equirank/error.hpp"

namespace equirank {

BoxDecomposition::BoxDecomposition(GSetPtr gset, LatticePtr lattice)
    : gset_(std::move(gset)), lattice_(std::move(lattice)) {
  const GSet& x = *gset_;
  const SubgroupLattice& lat = *lattice_;
  if (x.group().order() != lat.group().order()) {
    throw SpecError("group-mismatch", "lattice and G-set use different groups");
  }
  const std::size_t m = x.size();

  stabilizer_.resize(m);
  min_point_.assign(lat.size(), std::nullopt);
  for (Point p = 0; p < m; ++p) {
    stabilizer_[p] = lat.id_of(stabilizer(x, p));
    auto& slot = min_point_[stabilizer_[p]];
    if (!slot) slot = p;
  }
  for (SubgroupId h = 0; h < lat.size(); ++h) {
    if (min_point_[h]) stab_subgroups_.push_back(h);
  }

  orbit_of_ = orbit_index(x);
  orbits_ = equirank::orbits(x);

  std::vector<std::optional<std::size_t>> box_of_class(lat.classes().size());
  std::vector<ClassId> present;
  for (Point p = 0; p < m; ++p) present.push_back(lat.class_of(stabilizer_[p]));
  std::sort(present.begin(), present.end());
  present.erase(std::unique(present.begin(), present.end()), present.end());
  for (ClassId c : present) {
    box_of_class[c] = boxes_.size();
    Box b;
    b.class_id = c;
    b.representative = lat.classes()[c].representative;
    b.sub_box_groups = lat.classes()[c].members;
    b.sub_boxes.resize(b.sub_box_groups.size());
    boxes_.push_back(std::move(b));
  }

  box_of_point_.resize(m);
  for (Point p = 0; p < m; ++p) {
    const std::size_t bi = *box_of_class[lat.class_of(stabilizer_[p])];
    box_of_point_[p] = bi;
    Box& b = boxes_[bi];
    b.points.push_back(p);
    auto it = std::lower_bound(b.sub_box_groups.begin(), b.sub_box_groups.end(),
                               stabilizer_[p]);
    b.sub_boxes[static_cast<std::size_t>(it - b.sub_box_groups.begin())].push_back(p);
  }
  for (const auto& orb : orbits_) {
    boxes_[box_of_point_[orb.front()]].orbits.push_back(orb);
  }

  // Orbits in a box all have size [G : H_i].
  for (const Box& b : boxes_) {
    const std::size_t expected = lat.index(b.representative);
    for (const auto& orb : b.orbits) {
      check_internal(orb.size() == expected, "non-uniform orbit sizes in a box");
    }
  }
}

std::optional<std::size_t> BoxDecomposition::box_of_class(ClassId c) const {
  for (std::size_t i = 0; i < boxes_.size(); ++i) {
    if (boxes_[i].class_id == c) return i;
  }
  return std::nullopt;
}

bool BoxDecomposition::is_stabilizer(SubgroupId h) const {
  return min_point_[h].has_value();
}

std::optional<Point> BoxDecomposition::min_point_with_stabilizer(SubgroupId h) const {
  return min_point_[h];
}

std::size_t alpha_moebius(const GSet& x, const SubgroupLattice& lattice,
                          SubgroupId h) {
  long long exact = 0;  // |B_H|, points with stabilizer exactly H
  for (SubgroupId k = h; k < lattice.size(); ++k) {
    if (!lattice.leq(h, k)) continue;
    exact += static_cast<long long>(lattice.moebius(h, k)) *
             static_cast<long long>(fix(x, lattice.subgroup(k)).size());
  }
  if (exact <= 0) {
    throw DomainError("not-a-stabilizer", "subgroup stabilizes no point");
  }
  const auto conjugates =
      static_cast<long long>(lattice.index(lattice.normalizer(h)));
  const auto orbit_size = static_cast<long long>(lattice.index(h));
  const long long box_size = conjugates * exact;
  check_internal(box_size % orbit_size == 0,
                 "Moebius box size is not a multiple of the orbit size");
  return static_cast<std::size_t>(box_size / orbit_size);
}

std::size_t aut_orbits_in_box(const BoxDecomposition& boxes, std::size_t i) {
  const Box& b = boxes.box(i);
  const auto& lat = boxes.lattice();
  const std::size_t predicted = lat.index(lat.normalizer(b.representative));
  const auto nonempty = static_cast<std::size_t>(
      std::count_if(b.sub_boxes.begin(), b.sub_boxes.end(),
                    [](const auto& s) { return !s.empty(); }));
  if (nonempty != predicted) {
    throw PropertyError("structure-theorem",
                        "box " + std::to_string(i) + " has " +
                            std::to_string(nonempty) +
                            " nonempty sub-boxes but [G:N_G(H)] = " +
                            std::to_string(predicted));
  }
  return predicted;
}

std::vector<std::size_t> kappa(const BoxDecomposition& boxes) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    if (boxes.box(i).alpha() == 1) out.push_back(i);
  }
  return out;
}

}  // namespace equirank
