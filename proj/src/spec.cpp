#include "equirank/spec.hpp"

#include <algorithm>
#include <charconv>
#include <string>
#include <vector>

#include "equirank/error.hpp"

namespace equirank {

namespace {

[[noreturn]] void fail(std::string code, std::string_view text, std::size_t pos,
                       std::string_view why) {
  throw SpecError(std::move(code), std::string(why) + " at position " +
                                       std::to_string(pos) + " in \"" +
                                       std::string(text) + "\"");
}

std::optional<std::size_t> to_number(std::string_view s) {
  std::size_t v = 0;
  if (s.empty()) return std::nullopt;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

FiniteGroup parse_factor(std::string_view text, std::size_t offset,
                         std::string_view factor, std::size_t budget) {
  if (factor == "Q8") return make_quaternion();
  if (factor.size() >= 2) {
    const auto n = to_number(factor.substr(1));
    if (n) {
      switch (factor[0]) {
        case 'Z':
          if (*n == 0) fail("unknown-group-token", text, offset, "Z0 is not a group");
          return make_cyclic(*n, budget);
        case 'S':
          if (*n == 0) fail("unknown-group-token", text, offset, "S0 is not supported");
          return make_symmetric(*n, budget);
        case 'D':
          if (*n < 1) fail("unknown-group-token", text, offset, "D0 is not a group");
          return make_dihedral(*n, budget);
        default:
          break;
      }
    }
  }
  fail("unknown-group-token", text, offset,
       "unknown group token \"" + std::string(factor) + "\"");
}

GroupPtr parse_permutation_group(std::string_view text, std::size_t budget) {
  const std::size_t second = text.find(':', 5);
  if (second == std::string_view::npos) {
    fail("malformed-cycles", text, 5, "expected perm:<degree>:<cycles>");
  }
  const auto degree = to_number(text.substr(5, second - 5));
  if (!degree || *degree == 0) fail("malformed-cycles", text, 5, "bad degree");
  std::vector<Permutation> gens;
  std::size_t start = second + 1;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    const auto piece = text.substr(start, end - start);
    if (!piece.empty()) {
      try {
        gens.push_back(parse_cycles(piece, *degree));
      } catch (const SpecError& e) {
        fail("malformed-cycles", text, start, e.what());
      }
    }
    start = end + 1;
  }
  auto g = from_permutation_generators(*degree, gens, budget);
  g.name = std::string(text);
  return std::make_shared<const FiniteGroup>(std::move(g));
}

std::optional<Element> parse_element(const FiniteGroup& g, std::string_view token) {
  if (auto n = to_number(token); n && *n < g.order()) return static_cast<Element>(*n);
  for (Element e = 0; e < g.order(); ++e) {
    if (g.label(e) == token) return e;
  }
  return std::nullopt;
}

GSet parse_single(std::string_view whole, std::size_t offset, std::string_view text,
                  const GroupPtr& group, std::optional<ShiftSpace>& shift,
                  std::size_t cell_budget) {
  if (text.starts_with("shift:q=")) {
    const auto q = to_number(text.substr(8));
    if (!q) fail("invalid-alphabet", whole, offset + 8, "expected an integer q");
    if (*q < 2) fail("invalid-alphabet", whole, offset + 8, "q must be at least 2");
    shift = build_shift(group, *q, cell_budget);
    return *shift->gset;
  }
  if (text.starts_with("cosets:")) {
    std::vector<Element> elems;
    std::size_t start = 7;
    while (start < text.size()) {
      std::size_t end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      const auto token = text.substr(start, end - start);
      const auto e = parse_element(*group, token);
      if (!e) {
        fail("unknown-element", whole, offset + start,
             "unknown element \"" + std::string(token) + "\"");
      }
      elems.push_back(*e);
      start = end + 1;
    }
    elems.push_back(group->identity());
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    const auto h = as_subgroup(*group, elems);
    if (!h) fail("not-a-subgroup", whole, offset + 7, "element list is not a subgroup");
    check_cell_budget(group->order(), group->order() / h->order(), cell_budget);
    return coset_action(group, *h);
  }
  fail("unknown-gset-token", whole, offset, "unknown G-set spec");
}

}  // namespace

GroupPtr parse_group_spec(std::string_view text, std::size_t budget) {
  if (text.starts_with("perm:")) return parse_permutation_group(text, budget);
  std::vector<std::pair<std::size_t, std::string_view>> factors;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('x', start);
    if (end == std::string_view::npos) end = text.size();
    if (end == start) fail("unknown-group-token", text, start, "empty group factor");
    factors.emplace_back(start, text.substr(start, end - start));
    start = end + 1;
  }
  FiniteGroup g = parse_factor(text, factors[0].first, factors[0].second, budget);
  for (std::size_t k = 1; k < factors.size(); ++k) {
    const FiniteGroup next = parse_factor(text, factors[k].first, factors[k].second, budget);
    if (g.order() * next.order() > budget) {
      throw BudgetError("size-limit", "group product exceeds the group budget");
    }
    g = direct_product(g, next, budget);
  }
  g.name = std::string(text);
  return std::make_shared<const FiniteGroup>(std::move(g));
}

ParsedGSet parse_gset_spec(std::string_view text, const GroupPtr& group,
                           std::size_t cell_budget) {
  ParsedGSet out;
  if (text.starts_with("union:")) {
    std::optional<GSet> acc;
    std::size_t start = 6;
    while (start <= text.size()) {
      std::size_t end = text.find('+', start);
      if (end == std::string_view::npos) end = text.size();
      std::optional<ShiftSpace> ignored;
      GSet part = parse_single(text, start, text.substr(start, end - start), group,
                               ignored, cell_budget);
      if (acc) {
        check_cell_budget(group->order(), acc->size() + part.size(), cell_budget);
        acc = disjoint_union(*acc, part);
      } else {
        acc = std::move(part);
      }
      start = end + 1;
    }
    out.gset = std::make_shared<const GSet>(std::move(*acc));
    return out;
  }
  std::optional<ShiftSpace> shift;
  GSet x = parse_single(text, 0, text, group, shift, cell_budget);
  if (shift) {
    out.gset = shift->gset;
    out.shift = std::move(shift);
  } else {
    out.gset = std::make_shared<const GSet>(std::move(x));
  }
  return out;
}

}  // namespace equirank
