#include "equirank/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "equirank/error.hpp"

namespace equirank {

namespace {

std::size_t hash_elements(const std::vector<Element>& v) {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Element e : v) {
    h ^= e + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::vector<Element> closure_elements(const FiniteGroup& g,
                                      std::span<const Element> gens) {
  std::vector<bool> seen(g.order(), false);
  std::vector<Element> out{g.identity()};
  seen[g.identity()] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (Element s : gens) {
      const Element y = g.mul(out[i], s);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Subgroup::Subgroup(std::size_t group_order, std::vector<Element> sorted_elements)
    : elements_(std::move(sorted_elements)), mask_((group_order + 63) / 64, 0) {
  for (Element e : elements_) mask_[e >> 6] |= std::uint64_t{1} << (e & 63);
}

bool Subgroup::is_subset_of(const Subgroup& other) const noexcept {
  if (order() > other.order()) return false;
  for (std::size_t w = 0; w < mask_.size(); ++w) {
    if (mask_[w] & ~other.mask_[w]) return false;
  }
  return true;
}

Subgroup generate_subgroup(const FiniteGroup& g, std::span<const Element> gens) {
  return Subgroup(g.order(), closure_elements(g, gens));
}

std::optional<Subgroup> as_subgroup(const FiniteGroup& g,
                                    std::vector<Element> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (Element e : elements) {
    if (e >= g.order()) return std::nullopt;
  }
  Subgroup s(g.order(), elements);
  if (elements.empty() || !s.contains(g.identity())) return std::nullopt;
  for (Element a : elements) {
    if (!s.contains(g.inv(a))) return std::nullopt;
    for (Element b : elements) {
      if (!s.contains(g.mul(a, b))) return std::nullopt;
    }
  }
  return s;
}

Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& h, Element by) {
  std::vector<Element> out;
  out.reserve(h.order());
  const Element inv = g.inv(by);
  for (Element x : h.elements()) out.push_back(g.mul(by, g.mul(x, inv)));
  std::sort(out.begin(), out.end());
  return Subgroup(g.order(), std::move(out));
}

SubgroupLattice::SubgroupLattice(GroupPtr group, std::size_t budget)
    : group_(std::move(group)) {
  enumerate(budget);
  build_relations();
  build_moebius();
}

void SubgroupLattice::enumerate(std::size_t budget) {
  const FiniteGroup& g = *group_;
  // Bottom-up: every subgroup is the join of the cyclic subgroups it
  // contains, so closing the cyclic subgroups under pairwise joins with
  // cyclic generators reaches every subgroup.
  std::vector<Subgroup> found;
  std::vector<std::vector<Element>> gens_of;
  std::unordered_map<std::size_t, std::vector<std::size_t>> index;

  auto lookup = [&](const std::vector<Element>& elems) -> std::optional<std::size_t> {
    auto it = index.find(hash_elements(elems));
    if (it == index.end()) return std::nullopt;
    for (std::size_t i : it->second) {
      if (found[i].elements() == elems) return i;
    }
    return std::nullopt;
  };
  auto add = [&](std::vector<Element> elems, std::vector<Element> gens) {
    if (lookup(elems)) return;
    if (found.size() >= budget) {
      throw BudgetError("size-limit", "subgroup count exceeds budget of " +
                                          std::to_string(budget));
    }
    index[hash_elements(elems)].push_back(found.size());
    found.emplace_back(g.order(), std::move(elems));
    gens_of.push_back(std::move(gens));
  };

  add({g.identity()}, {});
  std::vector<Element> cyclic_gens;
  for (Element x = 0; x < g.order(); ++x) {
    const Element gen[] = {x};
    auto elems = closure_elements(g, gen);
    if (!lookup(elems)) {
      cyclic_gens.push_back(x);
      add(std::move(elems), {x});
    }
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (Element c : cyclic_gens) {
      if (found[i].contains(c)) continue;
      std::vector<Element> gens = gens_of[i];
      gens.push_back(c);
      add(closure_elements(g, gens), gens);
    }
  }

  std::sort(found.begin(), found.end());
  subgroups_ = std::move(found);
  for (SubgroupId i = 0; i < subgroups_.size(); ++i) {
    by_hash_[hash_elements(subgroups_[i].elements())].push_back(i);
  }
}

std::optional<SubgroupId> SubgroupLattice::find(const Subgroup& h) const {
  auto it = by_hash_.find(hash_elements(h.elements()));
  if (it == by_hash_.end()) return std::nullopt;
  for (SubgroupId i : it->second) {
    if (subgroups_[i] == h) return i;
  }
  return std::nullopt;
}

SubgroupId SubgroupLattice::id_of(const Subgroup& h) const {
  auto id = find(h);
  check_internal(id.has_value(), "subgroup missing from lattice");
  return *id;
}

SubgroupId SubgroupLattice::conjugate(SubgroupId h, Element g) const {
  return id_of(conjugate_subgroup(*group_, subgroups_[h], g));
}

void SubgroupLattice::build_relations() {
  const FiniteGroup& g = *group_;
  const std::size_t n = subgroups_.size();
  const std::size_t words = (n + 63) / 64;

  leq_.assign(n, std::vector<std::uint64_t>(words, 0));
  for (SubgroupId h = 0; h < n; ++h) {
    for (SubgroupId k = h; k < n; ++k) {
      if (subgroups_[h].is_subset_of(subgroups_[k])) {
        leq_[h][k >> 6] |= std::uint64_t{1} << (k & 63);
      }
    }
  }

  normalizer_.assign(n, 0);
  for (SubgroupId h = 0; h < n; ++h) {
    const Subgroup& sub = subgroups_[h];
    std::vector<Element> norm;
    for (Element x = 0; x < g.order(); ++x) {
      const Element xi = g.inv(x);
      bool ok = true;
      for (Element e : sub.elements()) {
        if (!sub.contains(g.mul(x, g.mul(e, xi)))) {
          ok = false;
          break;
        }
      }
      if (ok) norm.push_back(x);
    }
    normalizer_[h] = id_of(Subgroup(g.order(), std::move(norm)));
  }

  constexpr ClassId kUnset = ~ClassId{0};
  class_of_.assign(n, kUnset);
  for (SubgroupId h = 0; h < n; ++h) {
    if (class_of_[h] != kUnset) continue;
    ConjugacyClass cls;
    for (Element x = 0; x < g.order(); ++x) cls.members.push_back(conjugate(h, x));
    std::sort(cls.members.begin(), cls.members.end());
    cls.members.erase(std::unique(cls.members.begin(), cls.members.end()),
                      cls.members.end());
    cls.representative = cls.members.front();
    check_internal(cls.representative == h, "class representative is not minimal");
    for (SubgroupId m : cls.members) class_of_[m] = static_cast<ClassId>(classes_.size());
    classes_.push_back(std::move(cls));
  }

  const std::size_t c = classes_.size();
  class_leq_.assign(c, std::vector<bool>(c, false));
  for (ClassId a = 0; a < c; ++a) {
    const SubgroupId rep = classes_[a].representative;
    for (ClassId b = 0; b < c; ++b) {
      for (SubgroupId m : classes_[b].members) {
        if (leq(rep, m)) {
          class_leq_[a][b] = true;
          break;
        }
      }
    }
  }
}

void SubgroupLattice::build_moebius() {
  const std::size_t n = subgroups_.size();
  for (SubgroupId h = 0; h < n; ++h) {
    std::vector<SubgroupId> up;
    for (SubgroupId k = h; k < n; ++k) {
      if (leq(h, k)) up.push_back(k);
    }
    // Ids are a linear extension of containment, so every K < L precedes L.
    std::vector<int> mu(up.size(), 0);
    for (std::size_t li = 0; li < up.size(); ++li) {
      if (li == 0) {
        mu[0] = 1;
      } else {
        int sum = 0;
        for (std::size_t ki = 0; ki < li; ++ki) {
          if (leq(up[ki], up[li])) sum += mu[ki];
        }
        mu[li] = -sum;
      }
      moebius_.emplace(std::make_pair(h, up[li]), mu[li]);
    }
  }
}

int SubgroupLattice::moebius(SubgroupId h, SubgroupId k) const {
  auto it = moebius_.find({h, k});
  if (it == moebius_.end()) {
    throw DomainError("not-contained", "moebius(H, K) requires H <= K");
  }
  return it->second;
}

std::vector<std::pair<SubgroupId, SubgroupId>> SubgroupLattice::containment_pairs()
    const {
  std::vector<std::pair<SubgroupId, SubgroupId>> out;
  for (SubgroupId h = 0; h < subgroups_.size(); ++h)
    for (SubgroupId k = h; k < subgroups_.size(); ++k)
      if (leq(h, k)) out.emplace_back(h, k);
  return out;
}

std::vector<SubgroupId> SubgroupLattice::n_conjugacy_class(SubgroupId h,
                                                           SubgroupId n) const {
  std::vector<SubgroupId> out;
  for (Element x : subgroups_[n].elements()) out.push_back(conjugate(h, x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::pair<ClassId, ClassId>> SubgroupLattice::conj_order_graph() const {
  std::vector<std::pair<ClassId, ClassId>> out;
  for (ClassId a = 0; a < classes_.size(); ++a)
    for (ClassId b = 0; b < classes_.size(); ++b)
      if (class_leq_[a][b]) out.emplace_back(a, b);
  return out;
}

bool SubgroupLattice::class_leq(ClassId a, ClassId b) const {
  return class_leq_[a][b];
}

}  // namespace equirank
