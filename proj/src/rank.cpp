#include "equirank/rank.hpp"

#include <algorithm>
#include <set>

#include "equirank/error.hpp"

namespace equirank {

namespace {

NClass n_class(const SubgroupLattice& lat, SubgroupId k, SubgroupId n) {
  auto members = lat.n_conjugacy_class(k, n);
  const SubgroupId canonical = members.front();
  return {std::move(members), canonical};
}

Point first_point(const BoxDecomposition& boxes, SubgroupId h) {
  const auto p = boxes.min_point_with_stabilizer(h);
  check_internal(p.has_value(), "no point with the requested stabilizer");
  return *p;
}

// (x, y) witnesses tau: different orbits, G_x <= G_y, ker tau = ker [x -> y].
bool witnesses(const BoxDecomposition& boxes, const EquivariantMap& tau,
               const std::vector<std::uint32_t>& tau_kernel, Point x, Point y) {
  if (tau(x) != tau(y) || boxes.orbit_of(x) == boxes.orbit_of(y)) return false;
  if (!boxes.lattice().leq(boxes.stabilizer_of(x), boxes.stabilizer_of(y))) return false;
  const auto push = point_push(boxes.gset_ptr(), x, y);
  return kernel_labels(push.image()) == tau_kernel;
}

}  // namespace

std::vector<NClass> u_set(const BoxDecomposition& boxes, std::size_t i) {
  const auto& lat = boxes.lattice();
  const SubgroupId h = boxes.box(i).representative;
  const SubgroupId n = lat.normalizer(h);
  std::set<NClass> out;
  for (SubgroupId k : boxes.stabilizer_subgroups()) {
    if (lat.leq(h, k)) out.insert(n_class(lat, k, n));
  }
  std::vector<NClass> v(out.begin(), out.end());
  std::sort(v.begin(), v.end(),
            [](const NClass& a, const NClass& b) { return a.canonical < b.canonical; });
  return v;
}

std::vector<Generator> generating_set_v(const BoxDecomposition& boxes) {
  std::vector<Generator> out;
  std::size_t u_total = 0;
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    const Box& box = boxes.box(i);
    const SubgroupId h = box.representative;
    const Point x = first_point(boxes, h);
    const auto u = u_set(boxes, i);
    u_total += u.size();
    for (std::size_t j = 0; j < u.size(); ++j) {
      if (u[j].canonical == h) continue;
      const Point y = first_point(boxes, u[j].canonical);
      out.push_back({point_push(boxes.gset_ptr(), x, y),
                     "push " + std::to_string(i) + "->(" + std::to_string(i) + "," +
                         std::to_string(j) + ")",
                     x, y});
    }
    if (box.alpha() >= 2) {
      std::optional<Point> other;
      for (Point p : box.points) {
        if (boxes.stabilizer_of(p) == h && boxes.orbit_of(p) != boxes.orbit_of(x)) {
          other = p;
          break;
        }
      }
      check_internal(other.has_value(), "box with two orbits lacks a second x_i");
      out.push_back({point_push(boxes.gset_ptr(), x, *other),
                     "push " + std::to_string(i) + "->" + std::to_string(i) + "'", x,
                     *other});
    }
  }
  check_internal(out.size() == u_total - kappa(boxes).size(),
                 "|V| differs from the rank formula");
  return out;
}

RankReport relative_rank(const BoxDecomposition& boxes) {
  RankReport r;
  const auto& lat = boxes.lattice();
  std::size_t u_total = 0;
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    const Box& b = boxes.box(i);
    ClassReport c{i, b.class_id, b.representative, lat.normalizer(b.representative),
                  b.alpha(), u_set(boxes, i)};
    u_total += c.u.size();
    r.classes.push_back(std::move(c));
  }
  r.kappa = kappa(boxes);
  r.relative_rank = u_total - r.kappa.size();
  r.generating_set = generating_set_v(boxes);
  return r;
}

std::optional<std::pair<Point, Point>> collapse_witness(const BoxDecomposition& boxes,
                                                        const EquivariantMap& tau) {
  if (tau.is_bijective()) return std::nullopt;
  const auto ker = kernel_labels(tau.image());
  const auto& lat = boxes.lattice();
  for (const auto& orb : boxes.orbits()) {
    const Point a = orb.front();
    for (Point b = 0; b < tau.size(); ++b) {
      if (tau(b) != tau(a) || boxes.orbit_of(b) == boxes.orbit_of(a)) continue;
      const SubgroupId sa = boxes.stabilizer_of(a);
      const SubgroupId sb = boxes.stabilizer_of(b);
      if (lat.leq(sa, sb)) {
        if (witnesses(boxes, tau, ker, a, b)) return std::pair{a, b};
      } else if (lat.leq(sb, sa)) {
        if (witnesses(boxes, tau, ker, b, a)) return std::pair{b, a};
      }
    }
  }
  return std::nullopt;
}

bool is_elementary_collapse(const BoxDecomposition& boxes, const EquivariantMap& tau) {
  return collapse_witness(boxes, tau).has_value();
}

CollapseType collapse_type_from(const BoxDecomposition& boxes,
                                const EquivariantMap& tau, Point x, Point y) {
  if (!witnesses(boxes, tau, kernel_labels(tau.image()), x, y)) {
    throw DomainError("not-a-collapse", "pair does not witness an elementary collapse");
  }
  const auto& lat = boxes.lattice();
  const GSet& s = boxes.gset();
  const std::size_t i = boxes.box_of(x);
  const SubgroupId h = boxes.box(i).representative;
  for (Element g = 0; g < s.group().order(); ++g) {
    const Point gx = s.act(g, x);
    if (boxes.stabilizer_of(gx) != h) continue;
    const SubgroupId k = boxes.stabilizer_of(tau(gx));
    return {i, n_class(lat, k, lat.normalizer(h))};
  }
  throw InternalError("stabilizer of a box point is not conjugate to H_i");
}

CollapseType collapse_type(const BoxDecomposition& boxes, const EquivariantMap& tau) {
  const auto w = collapse_witness(boxes, tau);
  if (!w) throw DomainError("not-a-collapse", "map is not an elementary collapse");
  return collapse_type_from(boxes, tau, w->first, w->second);
}

std::vector<std::pair<Point, Point>> all_collapse_witnesses(
    const BoxDecomposition& boxes, const EquivariantMap& tau) {
  std::vector<std::pair<Point, Point>> out;
  if (tau.is_bijective()) return out;
  const auto ker = kernel_labels(tau.image());
  for (Point x = 0; x < tau.size(); ++x) {
    for (Point y = 0; y < tau.size(); ++y) {
      if (witnesses(boxes, tau, ker, x, y)) out.emplace_back(x, y);
    }
  }
  return out;
}

std::vector<CollapseType> collapse_type_census(const BoxDecomposition& boxes) {
  const auto& lat = boxes.lattice();
  std::set<CollapseType> out;
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    const SubgroupId h = boxes.box(i).representative;
    const SubgroupId n = lat.normalizer(h);
    const Point x = first_point(boxes, h);
    for (Point y = 0; y < boxes.gset().size(); ++y) {
      if (boxes.orbit_of(y) == boxes.orbit_of(x)) continue;
      const SubgroupId k = boxes.stabilizer_of(y);
      if (lat.leq(h, k)) out.insert({i, n_class(lat, k, n)});
    }
  }
  return {out.begin(), out.end()};
}

std::vector<EquivariantMap> aut_generators(const BoxDecomposition& boxes) {
  const GSet& s = boxes.gset();
  const auto& lat = boxes.lattice();
  std::vector<EquivariantMap> out;
  for (const Box& box : boxes.boxes()) {
    const SubgroupId h = box.representative;
    std::vector<Point> reps;
    for (const auto& orb : box.orbits) {
      for (Point p : orb) {
        if (boxes.stabilizer_of(p) == h) {
          reps.push_back(p);
          break;
        }
      }
    }
    for (std::size_t j = 1; j < reps.size(); ++j) {
      out.push_back(point_swap(boxes.gset_ptr(), reps[0], reps[j]));
    }
    std::vector<bool> used(s.size());
    used[reps[0]] = true;
    for (Element n : lat.subgroup(lat.normalizer(h)).elements()) {
      const Point target = s.act(n, reps[0]);
      if (used[target]) continue;
      used[target] = true;
      out.push_back(point_swap(boxes.gset_ptr(), reps[0], target));
    }
  }
  return out;
}

BigInt predicted_aut_order(const BoxDecomposition& boxes) {
  BigInt total = 1;
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    const Box& b = boxes.box(i);
    const auto& lat = boxes.lattice();
    const std::size_t quotient =
        lat.subgroup(lat.normalizer(b.representative)).order() /
        lat.subgroup(b.representative).order();
    for (std::size_t k = 0; k < b.alpha(); ++k) total *= quotient;
    for (std::size_t k = 2; k <= b.alpha(); ++k) total *= k;
  }
  return total;
}

BigInt predicted_box_end_order(const BoxDecomposition& boxes, std::size_t i) {
  const Box& b = boxes.box(i);
  const auto& lat = boxes.lattice();
  const std::size_t quotient = lat.subgroup(lat.normalizer(b.representative)).order() /
                               lat.subgroup(b.representative).order();
  BigInt total = 1;
  for (std::size_t k = 0; k < b.alpha(); ++k) total *= quotient * b.alpha();
  return total;
}

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kSkipped: return "skipped";
  }
  return "?";
}

std::vector<PropertyResult> verify_rank(const BoxDecomposition& boxes,
                                        const RankReport& report, std::size_t cap) {
  std::vector<PropertyResult> out;
  auto add = [&](std::string name, bool ok, std::string detail) {
    out.push_back({std::move(name), ok ? CheckStatus::kPass : CheckStatus::kFail,
                   std::move(detail)});
  };
  auto skip = [&](std::string name, std::string why) {
    out.push_back({std::move(name), CheckStatus::kSkipped, std::move(why)});
  };

  const auto census = collapse_type_census(boxes);
  add("census-size", census.size() == report.relative_rank,
      std::to_string(census.size()) + " types");

  std::set<CollapseType> v_types;
  bool all_collapses = true;
  for (const auto& g : report.generating_set) {
    const auto w = collapse_witness(boxes, g.map);
    if (!w) {
      all_collapses = false;
      continue;
    }
    v_types.insert(collapse_type(boxes, g.map));
  }
  add("v-distinct-types",
      all_collapses && v_types.size() == report.generating_set.size() &&
          std::equal(v_types.begin(), v_types.end(), census.begin(), census.end()),
      std::to_string(v_types.size()) + " distinct types in V");

  const BigInt aut_order = predicted_aut_order(boxes);
  const auto aut_gens = aut_generators(boxes);
  if (aut_order <= cap) {
    const auto aut = closure(boxes.gset_ptr(), aut_gens, cap);
    add("aut-order", aut.size() == aut_order,
        "closure " + std::to_string(aut.size()) + ", formula " + aut_order.str());
  } else {
    skip("aut-order", "formula gives " + aut_order.str() + ", above cap");
  }

  const BigInt end_order = predicted_end_size(boxes.gset());
  if (end_order > cap) {
    const std::string why = "|End| = " + end_order.str() + ", above cap";
    skip("end-enumeration", why);
    skip("generation", why);
    skip("irredundancy", why);
    return out;
  }
  const auto end = enumerate_end(boxes.gset_ptr(), cap);
  add("end-enumeration", end.size() == end_order,
      "enumerated " + std::to_string(end.size()));

  auto seed = aut_gens;
  for (const auto& g : report.generating_set) seed.push_back(g.map);
  const auto gen = closure(boxes.gset_ptr(), seed, cap);
  add("generation", gen.size() == end.size(),
      "closure " + std::to_string(gen.size()) + " of " + std::to_string(end.size()));

  bool irredundant = true;
  std::string detail;
  for (std::size_t k = 0; k < report.generating_set.size(); ++k) {
    auto partial = aut_gens;
    for (std::size_t j = 0; j < report.generating_set.size(); ++j) {
      if (j != k) partial.push_back(report.generating_set[j].map);
    }
    const auto c = closure(boxes.gset_ptr(), partial, cap);
    if (c.size() >= end.size()) {
      irredundant = false;
      detail += report.generating_set[k].tag + " is redundant; ";
    }
  }
  add("irredundancy", irredundant,
      irredundant ? "every generator is needed" : detail);
  return out;
}

}  // namespace equirank
