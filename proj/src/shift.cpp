#include "equirank/shift.hpp"

#include <algorithm>

#include "equirank/error.hpp"

namespace equirank {

Point ShiftSpace::encode(const Config& c) const {
  if (c.size() != group->order()) {
    throw DomainError("invalid-config", "configuration length differs from |G|");
  }
  Point n = 0;
  for (std::uint32_t d : c) {
    if (d >= q) throw DomainError("invalid-config", "digit outside the alphabet");
    n = static_cast<Point>(n * q + d);
  }
  return n;
}

Config ShiftSpace::decode(Point n) const {
  if (n >= points()) throw DomainError("invalid-config", "encoding out of range");
  Config c(group->order());
  for (std::size_t j = c.size(); j-- > 0;) {
    c[j] = static_cast<std::uint32_t>(n % q);
    n = static_cast<Point>(n / q);
  }
  return c;
}

std::uint32_t ShiftSpace::value(Point n, Element g) const {
  const std::size_t shift = group->order() - 1 - position[g];
  for (std::size_t k = 0; k < shift; ++k) n = static_cast<Point>(n / q);
  return static_cast<std::uint32_t>(n % q);
}

ShiftSpace build_shift(const GroupPtr& group, std::size_t q, std::size_t cell_budget) {
  if (q < 2) throw DomainError("invalid-alphabet", "alphabet needs at least 2 symbols");
  const FiniteGroup& g = *group;
  const std::size_t n = g.order();
  std::size_t m = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m > cell_budget / q) {
      throw BudgetError("size-limit", "q^|G| exceeds the cell budget");
    }
    m *= q;
  }
  check_cell_budget(n, m, cell_budget);

  ShiftSpace s{group, q, nullptr, std::vector<std::size_t>(n)};
  const auto& order = g.display_order();
  for (std::size_t j = 0; j < n; ++j) s.position[order[j]] = j;

  std::vector<Point> table(n * m);
  Config next(n);
  for (Point p = 0; p < m; ++p) {
    // Digits of p by display position, then pulled back along g^-1.
    Config x(n);
    Point r = p;
    for (std::size_t j = n; j-- > 0;) {
      x[j] = static_cast<std::uint32_t>(r % q);
      r = static_cast<Point>(r / q);
    }
    for (Element a = 0; a < n; ++a) {
      const Element ainv = g.inv(a);
      for (std::size_t j = 0; j < n; ++j) {
        next[j] = x[s.position[g.mul(ainv, order[j])]];
      }
      Point img = 0;
      for (std::uint32_t d : next) img = static_cast<Point>(img * q + d);
      table[a * m + p] = img;
    }
  }
  std::vector<std::string> labels(m);
  for (Point p = 0; p < m; ++p) labels[p] = std::to_string(p);
  s.gset = std::make_shared<const GSet>(group, m, std::move(table), std::move(labels),
                                        cell_budget);
  return s;
}

namespace {

std::vector<Element> sorted_by_position(const ShiftSpace& space,
                                        std::vector<Element> s) {
  for (Element e : s) {
    if (e >= space.group->order()) {
      throw DomainError("invalid-memory-set", "memory set element out of range");
    }
  }
  std::sort(s.begin(), s.end(), [&](Element a, Element b) {
    return space.position[a] < space.position[b];
  });
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::size_t pattern_of(const ShiftSpace& space, Point x, Element g,
                       const std::vector<Element>& s) {
  std::size_t pat = 0;
  for (Element e : s) pat = pat * space.q + space.value(x, space.group->mul(g, e));
  return pat;
}

std::size_t pattern_count(std::size_t q, std::size_t len) {
  std::size_t c = 1;
  for (std::size_t k = 0; k < len; ++k) c *= q;
  return c;
}

}  // namespace

EquivariantMap ca_from_rule(const ShiftSpace& space, const LocalRule& rule) {
  const auto s = sorted_by_position(space, rule.memory_set);
  if (s.size() != rule.memory_set.size()) {
    throw DomainError("invalid-memory-set", "memory set has repeated elements");
  }
  if (rule.table.size() != pattern_count(space.q, s.size())) {
    throw DomainError("invalid-rule", "rule table must have q^|S| entries");
  }
  for (auto v : rule.table) {
    if (v >= space.q) throw DomainError("invalid-rule", "rule value outside alphabet");
  }
  const auto& order = space.group->display_order();
  std::vector<Point> image(space.points());
  for (Point x = 0; x < space.points(); ++x) {
    Point y = 0;
    for (Element g : order) {
      y = static_cast<Point>(y * space.q + rule.table[pattern_of(space, x, g, s)]);
    }
    image[x] = y;
  }
  // Every cellular automaton commutes with the shift; checked, not assumed.
  return EquivariantMap(space.gset, std::move(image));
}

LocalRule rule_from_map(const ShiftSpace& space, const EquivariantMap& tau) {
  if (tau.size() != space.points() || !is_equivariant(*space.gset, tau.image())) {
    throw DomainError("not-equivariant", "map does not commute with the shift");
  }
  LocalRule r;
  r.memory_set = space.group->display_order();
  r.table.resize(space.points());
  const Element e = space.group->identity();
  // With S = G in display order the pattern of x at e is x's own encoding.
  for (Point x = 0; x < space.points(); ++x) r.table[x] = space.value(tau(x), e);
  return r;
}

bool is_memory_set(const ShiftSpace& space, const EquivariantMap& tau,
                   std::vector<Element> s) {
  s = sorted_by_position(space, std::move(s));
  const Element e = space.group->identity();
  constexpr auto kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> seen(pattern_count(space.q, s.size()), kUnset);
  for (Point x = 0; x < space.points(); ++x) {
    auto& slot = seen[pattern_of(space, x, e, s)];
    const auto v = space.value(tau(x), e);
    if (slot == kUnset) slot = v;
    else if (slot != v) return false;
  }
  return true;
}

std::vector<Element> minimal_memory_set(const ShiftSpace& space,
                                        const EquivariantMap& tau) {
  const Element e = space.group->identity();
  const std::size_t n = space.group->order();
  std::vector<Element> out;
  for (Element s = 0; s < n; ++s) {
    std::size_t weight = 1;
    for (std::size_t k = 0; k < n - 1 - space.position[s]; ++k) weight *= space.q;
    bool depends = false;
    for (Point x = 0; x < space.points() && !depends; ++x) {
      const auto d = space.value(x, s);
      const auto base = space.value(tau(x), e);
      for (std::uint32_t other = 0; other < space.q; ++other) {
        if (other == d) continue;
        const auto y = static_cast<Point>(x - d * weight + other * weight);
        if (space.value(tau(y), e) != base) {
          depends = true;
          break;
        }
      }
    }
    if (depends) out.push_back(s);
  }
  out = sorted_by_position(space, std::move(out));
  check_internal(is_memory_set(space, tau, out), "dependence set is not a memory set");
  return out;
}

std::vector<std::size_t> predicted_shift_kappa(const BoxDecomposition& boxes,
                                               std::size_t q) {
  std::vector<std::size_t> out;
  if (q != 2) return out;
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    if (boxes.lattice().index(boxes.box(i).representative) == 2) out.push_back(i);
  }
  return out;
}

}  // namespace equirank
