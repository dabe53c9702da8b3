#include "equirank/gset.hpp"

#include <algorithm>
#include <numeric>

#include "equirank/error.hpp"

namespace equirank {

namespace {

// Greedy generating set: each new element lies outside the span so far.
std::vector<Element> generating_set(const FiniteGroup& g) {
  std::vector<Element> gens;
  Subgroup span = generate_subgroup(g, gens);
  for (Element x = 0; x < g.order() && span.order() < g.order(); ++x) {
    if (!span.contains(x)) {
      gens.push_back(x);
      span = generate_subgroup(g, gens);
    }
  }
  return gens;
}

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0u);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    // Keep the smaller index as the root so roots are orbit minima.
    if (a < b) parent[b] = a;
    else parent[a] = b;
  }
  std::vector<std::uint32_t> parent;
};

bool same_group(const FiniteGroup& a, const FiniteGroup& b) {
  if (&a == &b) return true;
  if (a.order() != b.order()) return false;
  for (Element x = 0; x < a.order(); ++x)
    for (Element y = 0; y < a.order(); ++y)
      if (a.mul(x, y) != b.mul(x, y)) return false;
  return true;
}

}  // namespace

void check_cell_budget(std::size_t group_order, std::size_t points,
                       std::size_t cell_budget) {
  if (points != 0 && group_order > cell_budget / points) {
    throw BudgetError("size-limit",
                      "action table of " + std::to_string(group_order) + " x " +
                          std::to_string(points) + " cells exceeds budget of " +
                          std::to_string(cell_budget));
  }
}

GSet::GSet(GroupPtr group, std::size_t size, std::vector<Point> table,
           std::vector<std::string> labels, std::size_t cell_budget)
    : group_(std::move(group)),
      size_(size),
      table_(std::move(table)),
      labels_(std::move(labels)) {
  const FiniteGroup& g = *group_;
  check_cell_budget(g.order(), size_, cell_budget);
  if (table_.size() != g.order() * size_) {
    throw SpecError("invalid-action", "action table must be |G| x m");
  }
  std::vector<bool> hit(size_);
  for (Element e = 0; e < g.order(); ++e) {
    std::fill(hit.begin(), hit.end(), false);
    for (Point x = 0; x < size_; ++x) {
      const Point y = act(e, x);
      if (y >= size_ || hit[y]) {
        throw SpecError("invalid-action", "row " + std::to_string(e) +
                                              " is not a bijection on points");
      }
      hit[y] = true;
    }
  }
  for (Point x = 0; x < size_; ++x) {
    if (act(g.identity(), x) != x) {
      throw SpecError("invalid-action", "identity does not act trivially");
    }
  }
  // Checking (g s).x = g.(s.x) for s in a generating set implies it for all
  // pairs by induction on word length.
  for (Element s : generating_set(g)) {
    for (Element a = 0; a < g.order(); ++a) {
      const Element as = g.mul(a, s);
      for (Point x = 0; x < size_; ++x) {
        if (act(as, x) != act(a, act(s, x))) {
          throw SpecError("invalid-action", "action is not compatible with the "
                                            "group multiplication");
        }
      }
    }
  }
  if (labels_.empty()) {
    labels_.resize(size_);
    for (Point x = 0; x < size_; ++x) labels_[x] = std::to_string(x);
  } else if (labels_.size() != size_) {
    throw SpecError("invalid-action", "label count does not match point count");
  }
}

GSet coset_action(const GroupPtr& group, const Subgroup& h) {
  const FiniteGroup& g = *group;
  const std::size_t n = g.order();
  constexpr Point kUnset = ~Point{0};
  std::vector<Point> coset_of(n, kUnset);
  std::vector<Element> reps;
  auto claim = [&](Element rep) {
    const auto id = static_cast<Point>(reps.size());
    reps.push_back(rep);
    for (Element x : h.elements()) coset_of[g.mul(rep, x)] = id;
  };
  claim(g.identity());
  for (Element x = 0; x < n; ++x) {
    if (coset_of[x] == kUnset) claim(x);
  }
  const std::size_t m = reps.size();
  check_cell_budget(n, m);
  std::vector<Point> table(n * m);
  std::vector<std::string> labels(m);
  for (Point c = 0; c < m; ++c) {
    Element min_elem = reps[c];
    for (Element x : h.elements()) min_elem = std::min(min_elem, g.mul(reps[c], x));
    labels[c] = g.label(min_elem) + "H";
    for (Element a = 0; a < n; ++a) table[a * m + c] = coset_of[g.mul(a, reps[c])];
  }
  return GSet(group, m, std::move(table), std::move(labels));
}

GSet disjoint_union(const GSet& a, const GSet& b) {
  if (!same_group(a.group(), b.group())) {
    throw SpecError("group-mismatch", "disjoint union needs the same group");
  }
  const std::size_t n = a.group().order();
  const std::size_t m = a.size() + b.size();
  check_cell_budget(n, m);
  std::vector<Point> table(n * m);
  for (Element g = 0; g < n; ++g) {
    for (Point x = 0; x < a.size(); ++x) table[g * m + x] = a.act(g, x);
    for (Point x = 0; x < b.size(); ++x) {
      table[g * m + a.size() + x] = static_cast<Point>(a.size() + b.act(g, x));
    }
  }
  std::vector<std::string> labels = a.labels();
  for (const auto& l : b.labels()) labels.push_back(l + "'");
  return GSet(a.group_ptr(), m, std::move(table), std::move(labels));
}

GSet restrict_to_invariant(const GSet& x, std::vector<Point> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  constexpr Point kAbsent = ~Point{0};
  std::vector<Point> new_index(x.size(), kAbsent);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i] >= x.size()) {
      throw DomainError("not-invariant", "point out of range");
    }
    new_index[points[i]] = static_cast<Point>(i);
  }
  const std::size_t n = x.group().order();
  const std::size_t m = points.size();
  std::vector<Point> table(n * m);
  std::vector<std::string> labels(m);
  for (std::size_t i = 0; i < m; ++i) labels[i] = x.label(points[i]);
  for (Element g = 0; g < n; ++g) {
    for (std::size_t i = 0; i < m; ++i) {
      const Point img = new_index[x.act(g, points[i])];
      if (img == kAbsent) {
        throw DomainError("not-invariant",
                          "point set is not G-invariant: " +
                              x.label(points[i]) + " leaves it");
      }
      table[g * m + i] = img;
    }
  }
  return GSet(x.group_ptr(), m, std::move(table), std::move(labels));
}

std::vector<Point> orbit(const GSet& x, Point p) {
  std::vector<Point> out;
  for (Element g = 0; g < x.group().order(); ++g) out.push_back(x.act(g, p));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Subgroup stabilizer(const GSet& x, Point p) {
  std::vector<Element> elems;
  for (Element g = 0; g < x.group().order(); ++g) {
    if (x.act(g, p) == p) elems.push_back(g);
  }
  return Subgroup(x.group().order(), std::move(elems));
}

std::vector<std::uint32_t> orbit_index(const GSet& x) {
  UnionFind uf(x.size());
  for (Element s : generating_set(x.group())) {
    for (Point p = 0; p < x.size(); ++p) uf.unite(p, x.act(s, p));
  }
  std::vector<std::uint32_t> root_to_index(x.size(), ~std::uint32_t{0});
  std::vector<std::uint32_t> out(x.size());
  std::uint32_t next = 0;
  for (Point p = 0; p < x.size(); ++p) {
    const auto r = uf.find(p);
    if (root_to_index[r] == ~std::uint32_t{0}) root_to_index[r] = next++;
    out[p] = root_to_index[r];
  }
  return out;
}

std::vector<std::vector<Point>> orbits(const GSet& x) {
  const auto idx = orbit_index(x);
  std::vector<std::vector<Point>> out;
  for (Point p = 0; p < x.size(); ++p) {
    if (idx[p] == out.size()) out.emplace_back();
    out[idx[p]].push_back(p);
  }
  return out;
}

std::vector<Point> fix(const GSet& x, const Subgroup& k) {
  std::vector<Point> out;
  for (Point p = 0; p < x.size(); ++p) {
    bool fixed = true;
    for (Element g : k.elements()) {
      if (x.act(g, p) != p) {
        fixed = false;
        break;
      }
    }
    if (fixed) out.push_back(p);
  }
  return out;
}

std::size_t burnside_orbit_count(const GSet& x) {
  std::size_t total = 0;
  for (Element g = 0; g < x.group().order(); ++g) {
    for (Point p = 0; p < x.size(); ++p) total += x.act(g, p) == p;
  }
  check_internal(total % x.group().order() == 0,
                 "fixed-point average is not an integer");
  return total / x.group().order();
}

}  // namespace equirank
