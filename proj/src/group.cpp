#include "equirank/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "equirank/error.hpp"

namespace equirank {

namespace {

void check_budget(std::size_t order, std::size_t budget, std::string_view what) {
  if (order > budget) {
    throw BudgetError("size-limit", std::string(what) + " has order " +
                                        std::to_string(order) +
                                        ", exceeding the group budget of " +
                                        std::to_string(budget));
  }
}

std::vector<std::string> index_labels(std::size_t n) {
  std::vector<std::string> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = std::to_string(i);
  return out;
}

Permutation compose_perm(const Permutation& a, const Permutation& b) {
  Permutation out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
  return out;
}

}  // namespace

// Internal helper shared by the structured constructors, which are groups by
// construction and skip the O(n^3) associativity scan.
struct GroupBuilder {
  static FiniteGroup build(std::size_t n, std::vector<Element> flat,
                           std::vector<std::string> labels, bool validate);
};

FiniteGroup GroupBuilder::build(std::size_t n, std::vector<Element> flat,
                                std::vector<std::string> labels, bool validate) {
  if (n == 0) throw SpecError("invalid-order", "group order must be positive");
  if (flat.size() != n * n) {
    throw SpecError("invalid-table", "multiplication table must be n x n");
  }
  for (Element e : flat) {
    if (e >= n) throw SpecError("invalid-table", "table entry out of range");
  }
  FiniteGroup g;
  g.order_ = n;
  g.table_ = std::move(flat);

  std::optional<Element> identity;
  for (Element e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) {
      ok = g.mul(e, x) == x && g.mul(x, e) == x;
    }
    if (ok) identity = e;
  }
  if (!identity) throw SpecError("invalid-table", "table has no identity");
  g.identity_ = *identity;

  g.inverse_.assign(n, 0);
  for (Element x = 0; x < n; ++x) {
    bool found = false;
    for (Element y = 0; y < n; ++y) {
      if (g.mul(x, y) == g.identity_ && g.mul(y, x) == g.identity_) {
        g.inverse_[x] = y;
        found = true;
        break;
      }
    }
    if (!found) {
      throw SpecError("invalid-table",
                      "element " + std::to_string(x) + " has no inverse");
    }
  }

  if (validate) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
            throw SpecError("invalid-table", "table is not associative");
  }

  g.labels_ = labels.empty() ? index_labels(n) : std::move(labels);
  if (g.labels_.size() != n) {
    throw SpecError("invalid-table", "label count does not match order");
  }
  g.display_order_.resize(n);
  std::iota(g.display_order_.begin(), g.display_order_.end(), Element{0});
  return g;
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<Element>> table,
                                    std::vector<std::string> labels) {
  const std::size_t n = table.size();
  std::vector<Element> flat;
  flat.reserve(n * n);
  for (const auto& row : table) {
    if (row.size() != n) {
      throw SpecError("invalid-table", "multiplication table must be square");
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return GroupBuilder::build(n, std::move(flat), std::move(labels), true);
}

std::size_t FiniteGroup::element_order(Element g) const {
  std::size_t k = 1;
  for (Element x = g; x != identity_; x = mul(x, g)) ++k;
  return k;
}

void FiniteGroup::set_display_order(std::vector<Element> order) {
  std::vector<Element> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  bool ok = sorted.size() == order_;
  for (std::size_t i = 0; ok && i < sorted.size(); ++i) ok = sorted[i] == i;
  if (!ok) throw SpecError("invalid-order", "display order must be a permutation");
  display_order_ = std::move(order);
}

void FiniteGroup::set_labels(std::vector<std::string> labels) {
  if (labels.size() != order_) {
    throw SpecError("invalid-table", "label count does not match order");
  }
  labels_ = std::move(labels);
}

bool FiniteGroup::is_abelian() const {
  for (Element a = 0; a < order_; ++a)
    for (Element b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<Element> FiniteGroup::left_regular(Element g) const {
  std::vector<Element> out(order_);
  for (Element h = 0; h < order_; ++h) out[h] = mul(g, h);
  return out;
}

FiniteGroup make_cyclic(std::size_t n, std::size_t budget) {
  if (n == 0) throw SpecError("invalid-order", "cyclic group order must be >= 1");
  check_budget(n, budget, "Z" + std::to_string(n));
  std::vector<Element> flat(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      flat[a * n + b] = static_cast<Element>((a + b) % n);
  auto g = GroupBuilder::build(n, std::move(flat), {}, false);
  g.name = "Z" + std::to_string(n);
  return g;
}

std::string cycle_notation(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j);
      first = false;
      j = p[j];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0u);
  std::vector<bool> used(degree, false);
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw SpecError("malformed-cycles", "cycle notation '" + std::string(text) +
                                            "' at position " +
                                            std::to_string(pos) + ": " + why);
  };
  while (pos < text.size()) {
    if (text[pos] == ' ') {
      ++pos;
      continue;
    }
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    std::vector<std::uint32_t> cycle;
    while (true) {
      while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',')) ++pos;
      if (pos >= text.size()) fail("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] < '0' || text[pos] > '9') fail("expected a point index");
      std::size_t v = 0;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        v = v * 10 + static_cast<std::size_t>(text[pos] - '0');
        ++pos;
      }
      if (v >= degree) fail("point " + std::to_string(v) + " exceeds degree");
      if (used[v]) fail("point " + std::to_string(v) + " repeated");
      used[v] = true;
      cycle.push_back(static_cast<std::uint32_t>(v));
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      p[cycle[k]] = cycle[(k + 1) % cycle.size()];
    }
  }
  return p;
}

FiniteGroup from_permutation_generators(std::size_t degree,
                                        std::span<const Permutation> gens,
                                        std::size_t budget) {
  if (degree == 0) throw SpecError("invalid-order", "degree must be >= 1");
  for (const auto& g : gens) {
    std::vector<bool> hit(degree, false);
    bool ok = g.size() == degree;
    for (std::size_t i = 0; ok && i < degree; ++i) {
      ok = g[i] < degree && !hit[g[i]];
      if (ok) hit[g[i]] = true;
    }
    if (!ok) throw SpecError("not-a-permutation", "generator is not a bijection");
  }
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0u);
  std::set<Permutation> seen{id};
  std::vector<Permutation> frontier{id};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& p : frontier) {
      for (const auto& g : gens) {
        auto q = compose_perm(g, p);
        if (seen.insert(q).second) {
          check_budget(seen.size(), budget, "permutation closure");
          next.push_back(std::move(q));
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Permutation> elems(seen.begin(), seen.end());
  std::map<Permutation, Element> index;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    index.emplace(elems[i], static_cast<Element>(i));
  }
  const std::size_t n = elems.size();
  std::vector<Element> flat(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    labels[a] = cycle_notation(elems[a]);
    for (std::size_t b = 0; b < n; ++b) {
      flat[a * n + b] = index.at(compose_perm(elems[a], elems[b]));
    }
  }
  return GroupBuilder::build(n, std::move(flat), std::move(labels), false);
}

const std::vector<std::string>& s3_table_labels() {
  static const std::vector<std::string> labels{"e", "a", "b", "c", "f", "g"};
  return labels;
}

FiniteGroup make_s3_labelled_table() {
  // Rows/columns in the order e, a, b, c, f, g.
  std::vector<std::vector<Element>> t{
      {0, 1, 2, 3, 4, 5}, {1, 0, 4, 5, 2, 3}, {2, 5, 0, 4, 3, 1},
      {3, 4, 5, 0, 1, 2}, {4, 3, 1, 2, 5, 0}, {5, 2, 3, 1, 0, 4},
  };
  auto g = FiniteGroup::from_table(std::move(t), s3_table_labels());
  g.name = "S3";
  return g;
}

FiniteGroup make_symmetric(std::size_t n, std::size_t budget) {
  if (n == 0) throw SpecError("invalid-order", "symmetric degree must be >= 1");
  std::size_t fact = 1;
  for (std::size_t k = 2; k <= n; ++k) {
    fact *= k;
    check_budget(fact, budget, "S" + std::to_string(n));
  }
  std::vector<Permutation> gens;
  if (n >= 2) {
    Permutation t(n), c(n);
    std::iota(t.begin(), t.end(), 0u);
    std::swap(t[0], t[1]);
    for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<std::uint32_t>((i + 1) % n);
    gens = {t, c};
  }
  auto g = from_permutation_generators(n, gens, budget);
  g.name = "S" + std::to_string(n);
  if (n == 3) {
    auto iso = find_isomorphism(make_s3_labelled_table(), g);
    check_internal(iso.has_value(), "S3 table is not isomorphic to Sym(3)");
    g.set_display_order(*iso);
  }
  return g;
}

FiniteGroup make_dihedral(std::size_t n, std::size_t budget) {
  if (n == 0) throw SpecError("invalid-order", "dihedral parameter must be >= 1");
  check_budget(2 * n, budget, "D" + std::to_string(n));
  const std::size_t order = 2 * n;
  std::vector<Element> flat(order * order);
  std::vector<std::string> labels(order);
  // r^a s^b * r^c s^d = r^(a + (-1)^b c) s^(b+d)
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t a = x % n, b = x / n;
    labels[x] = (a == 0 && b == 0) ? "e"
                : (b == 0)         ? "r" + std::to_string(a)
                                   : "r" + std::to_string(a) + "s";
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t c = y % n, d = y / n;
      const std::size_t rot = b == 0 ? (a + c) % n : (a + n - c) % n;
      flat[x * order + y] = static_cast<Element>(rot + n * ((b + d) % 2));
    }
  }
  auto g = GroupBuilder::build(order, std::move(flat), std::move(labels), false);
  g.name = "D" + std::to_string(n);
  return g;
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                           std::size_t budget) {
  const std::size_t na = a.order(), nb = b.order();
  check_budget(na * nb, budget, "direct product");
  const std::size_t n = na * nb;
  std::vector<Element> flat(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto xa = static_cast<Element>(x / nb), xb = static_cast<Element>(x % nb);
    labels[x] = "(" + a.label(xa) + "," + b.label(xb) + ")";
    for (std::size_t y = 0; y < n; ++y) {
      const auto ya = static_cast<Element>(y / nb), yb = static_cast<Element>(y % nb);
      flat[x * n + y] =
          static_cast<Element>(a.mul(xa, ya) * nb + b.mul(xb, yb));
    }
  }
  auto g = GroupBuilder::build(n, std::move(flat), std::move(labels), false);
  g.name = a.name + "x" + b.name;
  return g;
}

FiniteGroup make_quaternion() {
  // i = (0 1 3 6)(2 5 7 4), j = (0 2 3 7)(1 4 6 5)
  std::vector<Permutation> gens{parse_cycles("(0 1 3 6)(2 5 7 4)", 8),
                                parse_cycles("(0 2 3 7)(1 4 6 5)", 8)};
  auto g = from_permutation_generators(8, gens);
  g.name = "Q8";
  return g;
}

std::optional<std::vector<Element>> find_isomorphism(const FiniteGroup& a,
                                                     const FiniteGroup& b) {
  const std::size_t n = a.order();
  if (n != b.order()) return std::nullopt;
  constexpr Element kUnset = ~Element{0};
  std::vector<Element> map(n, kUnset);
  std::vector<bool> used(n, false);
  map[a.identity()] = b.identity();
  used[b.identity()] = true;

  std::vector<std::size_t> order_a(n), order_b(n);
  for (Element x = 0; x < n; ++x) {
    order_a[x] = a.element_order(x);
    order_b[x] = b.element_order(x);
  }

  auto consistent = [&](Element x) {
    for (Element y = 0; y < n; ++y) {
      if (map[y] == kUnset) continue;
      const Element xy = a.mul(x, y), yx = a.mul(y, x);
      if (map[xy] != kUnset && map[xy] != b.mul(map[x], map[y])) return false;
      if (map[yx] != kUnset && map[yx] != b.mul(map[y], map[x])) return false;
    }
    return true;
  };
  auto is_homomorphism = [&] {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        if (map[a.mul(x, y)] != b.mul(map[x], map[y])) return false;
    return true;
  };

  auto search = [&](auto&& self, Element x) -> bool {
    if (x == n) return is_homomorphism();
    if (map[x] != kUnset) return self(self, x + 1);
    for (Element y = 0; y < n; ++y) {
      if (used[y] || order_a[x] != order_b[y]) continue;
      map[x] = y;
      used[y] = true;
      if (consistent(x) && self(self, x + 1)) return true;
      map[x] = kUnset;
      used[y] = false;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return map;
}

}  // namespace equirank
