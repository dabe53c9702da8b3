#include "equirank/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "equirank/error.hpp"
#include "equirank/wreath.hpp"

namespace equirank {

DumbScan dumb_scan(const GSet& x, std::size_t limit, ImageStore* sink) {
  const std::size_t m = x.size();
  std::size_t total = 1;
  for (std::size_t k = 0; k < m; ++k) {
    if (total > limit / std::max<std::size_t>(m, 1)) {
      throw BudgetError("enumeration-cap", "m^m exceeds the dumb scan limit");
    }
    total *= m;
  }
  DumbScan out;
  if (m == 0) {
    out.end = out.aut = 1;
    return out;
  }
  std::vector<Point> image(m, 0);
  std::vector<bool> hit(m);
  for (;;) {
    if (is_equivariant(x, image)) {
      ++out.end;
      std::fill(hit.begin(), hit.end(), false);
      bool bij = true;
      for (Point p : image) {
        if (hit[p]) bij = false;
        hit[p] = true;
      }
      out.aut += bij;
      if (sink) sink->insert(image);
    }
    std::size_t k = 0;
    while (k < m && ++image[k] == m) image[k++] = 0;
    if (k == m) break;
  }
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

struct Instance {
  std::string name;
  LatticePtr lattice;
  ParsedGSet x;
};

LatticePtr lattice_of(const std::string& group_spec) {
  return std::make_shared<const SubgroupLattice>(parse_group_spec(group_spec));
}

Instance shift_instance(const std::string& group_spec, const LatticePtr& lat,
                        std::size_t q) {
  auto x = parse_gset_spec("shift:q=" + std::to_string(q), lat->group_ptr());
  return {group_spec + " shift:q=" + std::to_string(q), lat, std::move(x)};
}

// One transitive action per class of subgroups, then their disjoint union.
std::vector<Instance> coset_instances(const std::string& group_spec,
                                      const LatticePtr& lat) {
  std::vector<Instance> out;
  std::optional<GSet> all;
  for (const auto& cls : lat->classes()) {
    GSet c = coset_action(lat->group_ptr(), lat->subgroup(cls.representative));
    all = all ? disjoint_union(*all, c) : c;
    out.push_back({group_spec + " G/H" + std::to_string(cls.representative), lat,
                   {std::make_shared<const GSet>(std::move(c)), std::nullopt}});
  }
  out.push_back({group_spec + " union of cosets", lat,
                 {std::make_shared<const GSet>(std::move(*all)), std::nullopt}});
  return out;
}

const std::vector<std::string>& small_groups() {
  static const std::vector<std::string> groups = {
      "Z1", "Z2", "Z3",  "Z4", "Z2xZ2", "Z5",       "Z6",
      "S3", "Z7", "Z8",  "Z4xZ2",       "Z2xZ2xZ2", "D4", "Q8"};
  return groups;
}

std::vector<Instance> criterion4_instances() {
  std::vector<Instance> out;
  const auto z1 = lattice_of("Z1");
  for (std::size_t q = 2; q <= 16; ++q) out.push_back(shift_instance("Z1", z1, q));
  const auto z2 = lattice_of("Z2");
  for (std::size_t q = 2; q <= 4; ++q) out.push_back(shift_instance("Z2", z2, q));
  const auto z3 = lattice_of("Z3");
  out.push_back(shift_instance("Z3", z3, 2));
  for (const std::string g : {"Z1", "Z2", "Z3", "Z2xZ2", "Z4"}) {
    for (auto& inst : coset_instances(g, lattice_of(g))) out.push_back(std::move(inst));
  }
  return out;
}

std::vector<Instance> criterion5_instances() {
  std::vector<Instance> out;
  for (const auto& g : small_groups()) {
    const auto lat = lattice_of(g);
    for (auto& inst : coset_instances(g, lat)) out.push_back(std::move(inst));
    out.push_back(shift_instance(g, lat, 2));
  }
  return out;
}

BoxDecomposition boxes_of(const Instance& inst) {
  return BoxDecomposition(inst.x.gset, inst.lattice);
}

// Aut-orbits of a box from the orbit swaps and translations.
std::size_t aut_orbit_count(const BoxDecomposition& boxes, std::size_t i) {
  const auto gens = aut_generators(boxes);
  const std::size_t m = boxes.gset().size();
  std::vector<Point> parent(m);
  std::iota(parent.begin(), parent.end(), 0u);
  std::function<Point(Point)> find = [&](Point p) {
    return parent[p] == p ? p : parent[p] = find(parent[p]);
  };
  for (const auto& g : gens)
    for (Point p = 0; p < m; ++p) parent[find(p)] = find(g(p));
  std::set<Point> roots;
  for (Point p : boxes.box(i).points) roots.insert(find(p));
  return roots.size();
}

struct Tally {
  std::size_t checks = 0;
  std::size_t skipped = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures.size() < 5) failures.push_back(what);
    else if (!ok) failures.back() = "...";
  }
  bool passed() const { return failures.empty(); }
  std::string summary() const {
    std::string s = std::to_string(checks) + " checks";
    if (skipped) s += ", " + std::to_string(skipped) + " enumerations over budget (formula only)";
    for (const auto& f : failures) s += "; FAIL " + f;
    return s;
  }
};

CriterionResult criterion1() {
  const auto t0 = Clock::now();
  const auto lat = lattice_of("S3");
  const auto inst = shift_instance("S3", lat, 2);
  const auto boxes = boxes_of(inst);
  const auto r = relative_rank(boxes);
  std::vector<std::size_t> u;
  for (const auto& c : r.classes) u.push_back(c.u.size());
  const double t = seconds_since(t0);
  const bool ok = r.relative_rank == 8 && u == std::vector<std::size_t>{4, 2, 2, 1} &&
                  r.kappa.size() == 1 && r.generating_set.size() == 8 && t < 5.0;
  return {1, "S3 binary shift relative rank", ok,
          "rank " + std::to_string(r.relative_rank) + ", U sizes " + join(u) +
              ", |kappa| " + std::to_string(r.kappa.size()),
          t};
}

std::set<Point> as_set(const std::vector<Point>& v) { return {v.begin(), v.end()}; }

CriterionResult criterion2() {
  const auto t0 = Clock::now();
  Tally tally;

  const auto z6 = lattice_of("Z6");
  const auto zb = boxes_of(shift_instance("Z6", z6, 2));
  auto z6_box = [&](std::size_t order) -> const Box& {
    for (const Box& b : zb.boxes()) {
      if (z6->subgroup(b.representative).order() == order) return b;
    }
    throw InternalError("missing Z6 box");
  };
  tally.expect(zb.size() == 4, "Z6 box count");
  tally.expect(as_set(z6_box(6).points) == std::set<Point>{0, 63}, "Z6 [G] box");
  tally.expect(as_set(z6_box(3).points) == std::set<Point>{21, 42}, "Z6 order-3 box");
  tally.expect(as_set(z6_box(2).points) == std::set<Point>{9, 18, 27, 36, 45, 54},
               "Z6 order-2 box");
  const Box& z6_free = z6_box(1);
  tally.expect(z6_free.points.size() == 54 && z6_free.alpha() == 9,
               "Z6 free box: 54 points in 9 orbits");
  for (const auto& o : z6_free.orbits) tally.expect(o.size() == 6, "Z6 free orbit size");

  const auto s3 = lattice_of("S3");
  const auto sb = boxes_of(shift_instance("S3", s3, 2));
  auto s3_box = [&](std::size_t order, std::size_t members) -> std::size_t {
    for (std::size_t i = 0; i < sb.size(); ++i) {
      const Box& b = sb.box(i);
      if (s3->subgroup(b.representative).order() == order &&
          b.sub_box_groups.size() == members)
        return i;
    }
    throw InternalError("missing S3 box");
  };
  tally.expect(sb.size() == 4, "S3 box count");
  tally.expect(as_set(sb.box(s3_box(6, 1)).points) == std::set<Point>{0, 63}, "S3 [G] box");
  tally.expect(as_set(sb.box(s3_box(3, 1)).points) == std::set<Point>{28, 35},
               "S3 [A3] box");
  const std::size_t c2 = s3_box(2, 3);
  const Box& b2 = sb.box(c2);
  tally.expect(b2.points.size() == 18 && b2.alpha() == 6, "S3 order-2 box: 18 in 6 orbits");
  for (const auto& o : b2.orbits) tally.expect(o.size() == 3, "S3 order-2 orbit size");
  tally.expect(aut_orbits_in_box(sb, c2) == 3, "S3 order-2 box has 3 Aut-orbits");
  tally.expect(aut_orbit_count(sb, c2) == 3, "S3 order-2 box Aut-orbits from generators");
  // H_a = {e, a}; a is the second element of the display order.
  const FiniteGroup& g = s3->group();
  const Element a = g.display_order()[1];
  const SubgroupId ha = s3->id_of(generate_subgroup(g, std::vector<Element>{a}));
  for (std::size_t k = 0; k < b2.sub_box_groups.size(); ++k) {
    if (b2.sub_box_groups[k] == ha) {
      tally.expect(as_set(b2.sub_boxes[k]) == std::set<Point>{5, 48, 10, 15, 58, 53},
                   "S3 H_a sub-box");
    }
  }
  const Box& s3_free = sb.box(s3_box(1, 1));
  tally.expect(s3_free.points.size() == 42 && s3_free.alpha() == 7,
               "S3 free box: 42 points in 7 orbits");
  for (const auto& o : s3_free.orbits) tally.expect(o.size() == 6, "S3 free orbit size");

  const double t = seconds_since(t0);
  tally.expect(t < 5.0, "runtime under 5 s");
  return {2, "Z6 and S3 box tables", tally.passed(), tally.summary(), t};
}

CriterionResult criterion3() {
  const auto t0 = Clock::now();
  const auto lat = lattice_of("Z2xZ2");
  const auto boxes = boxes_of(shift_instance("Z2xZ2", lat, 2));
  // Order [G], then the three subgroups of order 2, then the trivial one.
  std::vector<std::size_t> profile;
  std::vector<std::size_t> order2;
  std::size_t top = 0, bottom = 0;
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    const auto n = lat->subgroup(boxes.box(i).representative).order();
    if (n == 4) top = boxes.box(i).alpha();
    else if (n == 1) bottom = boxes.box(i).alpha();
    else order2.push_back(boxes.box(i).alpha());
  }
  profile.push_back(top);
  profile.insert(profile.end(), order2.begin(), order2.end());
  profile.push_back(bottom);
  const bool ok = profile == std::vector<std::size_t>{2, 1, 1, 1, 2};
  return {3, "Klein four alpha profile", ok, "alpha " + join(profile), seconds_since(t0)};
}

CriterionResult criterion4() {
  const auto t0 = Clock::now();
  Tally tally;
  for (const auto& inst : criterion4_instances()) {
    const auto boxes = boxes_of(inst);
    const GSet& x = *inst.x.gset;
    const std::string& n = inst.name;
    const BigInt end_count = predicted_end_size(x);
    const BigInt aut_formula = predicted_aut_order(boxes);

    std::optional<MonoidClosure> end;
    if (end_count <= kDefaultClosureCap) {
      end = enumerate_end(inst.x.gset);
      tally.expect(BigInt(end->size()) == end_count, n + ": enumeration size");
      bool equivariant = true;
      for (std::size_t i = 0; i < end->size(); ++i)
        equivariant = equivariant && is_equivariant(x, end->elements[i]);
      tally.expect(equivariant, n + ": enumerated maps are equivariant");
    } else {
      ++tally.skipped;
    }

    std::size_t mm = 1;
    bool dumb_ok = x.size() <= 8;
    for (std::size_t k = 0; dumb_ok && k < x.size(); ++k) mm *= x.size();
    if (dumb_ok && mm <= kDumbScanLimit) {
      const bool keep = end.has_value();
      ImageStore sink(x.size());
      const auto dumb = dumb_scan(x, kDumbScanLimit, keep ? &sink : nullptr);
      tally.expect(BigInt(dumb.end) == end_count, n + ": dumb |End|");
      tally.expect(BigInt(dumb.aut) == aut_formula, n + ": dumb |Aut| vs formula");
      if (keep) {
        bool same = sink.size() == end->size();
        for (std::size_t i = 0; same && i < sink.size(); ++i)
          same = end->elements.find(sink[i]).has_value();
        tally.expect(same, n + ": dumb and enumerated End agree as sets");
      }
    }

    if (aut_candidate_bound(x) <= kDefaultClosureCap) {
      tally.expect(BigInt(enumerate_aut(inst.x.gset).size()) == aut_formula,
                   n + ": enumerated |Aut| vs formula");
    } else if (aut_formula <= kDefaultClosureCap) {
      tally.expect(BigInt(closure(inst.x.gset, aut_generators(boxes)).size()) == aut_formula,
                   n + ": |<Aut generators>| vs formula");
    } else {
      ++tally.skipped;
    }

    for (std::size_t i = 0; i < boxes.size(); ++i) {
      const auto box = std::make_shared<const GSet>(
          restrict_to_invariant(x, boxes.box(i).points));
      const BigInt formula = predicted_box_end_order(boxes, i);
      const BigInt count = predicted_end_size(*box);
      tally.expect(count == formula, n + ": box End count vs formula");
      if (count <= kDefaultClosureCap) {
        tally.expect(BigInt(enumerate_end(box).size()) == formula,
                     n + ": enumerated box End vs formula");
      }
    }

    if (n == "Z2 shift:q=2") {
      const auto r = relative_rank(boxes);
      tally.expect(end && end->size() == 16, "Z2: |End| = 16");
      tally.expect(aut_formula == 4, "Z2: |Aut| = 4");
      tally.expect(r.relative_rank == 2, "Z2: rank 2");
      for (const auto& p : verify_rank(boxes, r)) {
        if (p.name == "generation" || p.name == "irredundancy") {
          tally.expect(p.status == CheckStatus::kPass, "Z2: " + p.name + " " + p.detail);
        }
      }
    }
  }
  const double t = seconds_since(t0);
  tally.expect(t < 60.0, "runtime under 60 s");
  return {4, "oracle, enumeration and order formulas agree", tally.passed(),
          tally.summary(), t};
}

CriterionResult criterion5() {
  const auto t0 = Clock::now();
  Tally tally;
  for (const auto& inst : criterion5_instances()) {
    const auto boxes = boxes_of(inst);
    for (std::size_t i = 0; i < boxes.size(); ++i) {
      const Box& b = boxes.box(i);
      for (SubgroupId k : b.sub_box_groups) {
        tally.expect(alpha_moebius(*inst.x.gset, *inst.lattice, k) == b.alpha(),
                     inst.name + ": box " + std::to_string(i));
      }
    }
  }
  const double t = seconds_since(t0);
  tally.expect(t < 120.0, "runtime under 120 s");
  return {5, "Moebius alpha equals direct alpha", tally.passed(), tally.summary(), t};
}

CriterionResult criterion6() {
  const auto t0 = Clock::now();
  Tally tally;
  std::mt19937 rng(20240601u);
  for (const auto& g : small_groups()) {
    const auto lat = lattice_of(g);
    std::uniform_int_distribution<std::size_t> parts(1, 4);
    std::uniform_int_distribution<std::size_t> pick(0, lat->size() - 1);
    for (int trial = 0; trial < 50; ++trial) {
      GSet x = coset_action(lat->group_ptr(), lat->subgroup(pick(rng)));
      const std::size_t k = parts(rng);
      for (std::size_t j = 1; j < k; ++j) {
        x = disjoint_union(x, coset_action(lat->group_ptr(), lat->subgroup(pick(rng))));
      }
      tally.expect(burnside_orbit_count(x) == orbits(x).size(),
                   g + " trial " + std::to_string(trial));
    }
  }
  return {6, "Burnside count equals orbit count", tally.passed(), tally.summary(),
          seconds_since(t0)};
}

CriterionResult criterion7() {
  const auto t0 = Clock::now();
  Tally tally;
  for (const auto& inst : criterion5_instances()) {
    const auto boxes = boxes_of(inst);
    for (std::size_t i = 0; i < boxes.size(); ++i) {
      const std::size_t predicted = aut_orbits_in_box(boxes, i);
      tally.expect(aut_orbit_count(boxes, i) == predicted,
                   inst.name + ": box " + std::to_string(i));
    }
  }
  return {7, "Aut-orbits per box = [G:N_G(H)] = nonempty sub-boxes", tally.passed(),
          tally.summary(), seconds_since(t0)};
}

CriterionResult criterion8() {
  const auto t0 = Clock::now();
  Tally tally;
  std::size_t maps = 0;
  for (const auto& inst : criterion4_instances()) {
    if (predicted_end_size(*inst.x.gset) > 10'000) continue;
    const auto boxes = boxes_of(inst);
    const auto end = enumerate_end(inst.x.gset);
    bool ok = true;
    for (std::size_t i = 0; i < end.size(); ++i) {
      const auto tau = end.element(i);
      const auto factors = decompose_by_boxes(boxes, tau);
      for (const auto& f : factors) ok = ok && is_equivariant(boxes.gset(), f.image());
      ok = ok && recompose(factors) == tau;
      ++maps;
    }
    tally.expect(ok, inst.name + ": recomposition");
  }

  // The free box of the Z4 binary shift: 12 points, 3 orbits, 1728 maps.
  const auto z4 = lattice_of("Z4");
  const auto shift = shift_instance("Z4", z4, 2);
  const auto full = boxes_of(shift);
  const auto box = std::make_shared<const GSet>(
      restrict_to_invariant(*shift.x.gset, full.box(0).points));
  const BoxDecomposition boxes(box, z4);
  const BoxCoordinates coords(boxes, 0);
  const auto monoid = enumerate_end(box);
  tally.expect(monoid.size() == 1728, "Z4 free box monoid has 1728 maps");
  std::vector<WreathElement> factored;
  for (std::size_t i = 0; i < monoid.size(); ++i) {
    factored.push_back(wreath_factorize(coords, monoid.element(i)));
  }
  bool components = true;
  for (const auto& w : factored) components = components && coset_maps_equivariant(coords, w);
  tally.expect(components, "coset maps commute with the coset action");
  std::set<std::pair<std::vector<std::uint32_t>, std::vector<std::vector<Point>>>> distinct;
  for (const auto& w : factored) distinct.emplace(w.orbit_map, w.coset_maps);
  tally.expect(distinct.size() == factored.size(), "factorization is faithful");
  bool functorial = true;
  std::vector<Point> prod(box->size());
  for (std::size_t i = 0; i < monoid.size() && functorial; ++i) {
    const auto p = monoid.elements[i];
    for (std::size_t j = 0; j < monoid.size(); ++j) {
      const auto t = monoid.elements[j];
      for (Point x = 0; x < prod.size(); ++x) prod[x] = p[t[x]];
      const auto k = monoid.elements.find(prod);
      if (!k || factored[*k] != wreath_product(factored[i], factored[j])) {
        functorial = false;
        break;
      }
    }
  }
  tally.expect(functorial, "wreath factorization respects composition");
  return {8, "box decomposition and wreath factorization", tally.passed(),
          tally.summary() + ", " + std::to_string(maps) + " maps recomposed",
          seconds_since(t0)};
}

CriterionResult criterion9() {
  const auto t0 = Clock::now();
  Tally tally;
  std::size_t classified = 0;
  for (const auto& inst : criterion4_instances()) {
    const auto boxes = boxes_of(inst);
    const auto r = relative_rank(boxes);
    const auto census = collapse_type_census(boxes);
    tally.expect(census.size() == r.relative_rank, inst.name + ": census size");
    if (predicted_end_size(*inst.x.gset) > kDefaultClosureCap) {
      ++tally.skipped;
      continue;
    }
    const auto end = enumerate_end(inst.x.gset);
    std::set<CollapseType> seen;
    bool unique = true;
    for (std::size_t i = 0; i < end.size(); ++i) {
      const auto tau = end.element(i);
      if (!collapse_witness(boxes, tau)) continue;
      std::set<CollapseType> types;
      for (auto [x, y] : all_collapse_witnesses(boxes, tau)) {
        types.insert(collapse_type_from(boxes, tau, x, y));
      }
      unique = unique && types.size() == 1;
      seen.insert(types.begin(), types.end());
      ++classified;
    }
    tally.expect(unique, inst.name + ": one type per collapse");
    tally.expect(std::equal(seen.begin(), seen.end(), census.begin(), census.end()),
                 inst.name + ": realized types match the census");
  }
  return {9, "collapse census and type uniqueness", tally.passed(),
          tally.summary() + ", " + std::to_string(classified) + " collapses classified",
          seconds_since(t0)};
}

CriterionResult criterion10() {
  const auto t0 = Clock::now();
  Tally tally;
  std::string sizes;
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto c = sym_generators_check(n);
    tally.expect(c.passed, "Sym(" + std::to_string(n) + ")");
  }
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto with = trans_generators_check(n, true);
    const auto without = trans_generators_check(n, false);
    tally.expect(with.passed, "Trans(" + std::to_string(n) + ")");
    tally.expect(without.passed, "Trans(" + std::to_string(n) + ") without defect map");
    sizes += (n > 1 ? "," : "") + std::to_string(with.closure_size);
  }
  const double t = seconds_since(t0);
  tally.expect(t < 60.0, "runtime under 60 s");
  return {10, "Sym and Trans generators", tally.passed(),
          tally.summary() + ", Trans sizes " + sizes, t};
}

CriterionResult criterion11() {
  const auto t0 = Clock::now();
  Tally tally;
  auto round_trip = [&](const ShiftSpace& s, const EquivariantMap& tau) {
    return ca_from_rule(s, rule_from_map(s, tau)) == tau;
  };
  const auto z2 = lattice_of("Z2");
  const auto s2 = build_shift(z2->group_ptr(), 2);
  const auto end2 = enumerate_end(s2.gset);
  tally.expect(end2.size() == 16, "Z2 End has 16 maps");
  for (std::size_t i = 0; i < end2.size(); ++i) {
    tally.expect(round_trip(s2, end2.element(i)), "Z2 map " + std::to_string(i));
  }
  const auto z4 = lattice_of("Z4");
  const auto s4 = build_shift(z4->group_ptr(), 2);
  const auto end4 = enumerate_end(s4.gset);
  std::mt19937 rng(11u);
  std::uniform_int_distribution<std::size_t> pick(0, end4.size() - 1);
  for (int k = 0; k < 100; ++k) {
    const auto i = pick(rng);
    tally.expect(round_trip(s4, end4.element(i)), "Z4 map " + std::to_string(i));
  }
  const auto id = identity_map(s4.gset);
  tally.expect(minimal_memory_set(s4, id) == std::vector<Element>{s4.group->identity()},
               "minimal memory set of the identity");
  return {11, "Curtis-Hedlund round trip", tally.passed(), tally.summary(),
          seconds_since(t0)};
}

}  // namespace

CriterionResult run_criterion(int id) {
  static const std::vector<std::function<CriterionResult()>> table = {
      criterion1, criterion2, criterion3, criterion4,  criterion5, criterion6,
      criterion7, criterion8, criterion9, criterion10, criterion11};
  if (id < 1 || id > kCriterionCount) {
    throw DomainError("unknown-criterion", "no criterion " + std::to_string(id));
  }
  const auto t0 = Clock::now();
  try {
    return table[static_cast<std::size_t>(id - 1)]();
  } catch (const std::exception& e) {
    return {id, "criterion " + std::to_string(id), false,
            std::string("error: ") + e.what(), seconds_since(t0)};
  }
}

std::vector<CriterionResult> run_acceptance() {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id));
  return out;
}

std::vector<PropertyResult> verify_instance(const LatticePtr& lattice,
                                            const ParsedGSet& parsed, std::size_t cap) {
  std::vector<PropertyResult> out;
  auto add = [&](std::string name, bool ok, std::string detail) {
    out.push_back({std::move(name), ok ? CheckStatus::kPass : CheckStatus::kFail,
                   std::move(detail)});
  };
  auto guarded = [&](const std::string& name, const std::function<void()>& body) {
    try {
      body();
    } catch (const BudgetError& e) {
      out.push_back({name, CheckStatus::kSkipped, e.what()});
    } catch (const PropertyError& e) {
      add(name, false, e.what());
    }
  };
  const GSet& x = *parsed.gset;
  const FiniteGroup& g = x.group();
  const BoxDecomposition boxes(parsed.gset, lattice);

  guarded("orbit-stabilizer", [&] {
    bool ok = true;
    for (Point p = 0; p < x.size(); ++p) {
      ok = ok && orbit(x, p).size() * lattice->subgroup(boxes.stabilizer_of(p)).order() ==
                     g.order();
      for (Element a = 0; a < g.order() && ok; ++a) {
        ok = boxes.stabilizer_of(x.act(a, p)) == lattice->conjugate(boxes.stabilizer_of(p), a);
      }
    }
    std::size_t total = 0;
    for (const Box& b : boxes.boxes()) total += b.points.size();
    add("orbit-stabilizer", ok && total == x.size(),
        "stabilizers conjugate along orbits, boxes partition X");
  });
  guarded("alpha-moebius", [&] {
    bool ok = true;
    for (const Box& b : boxes.boxes())
      ok = ok && alpha_moebius(x, *lattice, b.representative) == b.alpha();
    add("alpha-moebius", ok, std::to_string(boxes.size()) + " boxes");
  });
  guarded("burnside", [&] {
    add("burnside", burnside_orbit_count(x) == boxes.orbits().size(),
        std::to_string(boxes.orbits().size()) + " orbits");
  });
  guarded("aut-orbits", [&] {
    bool ok = true;
    for (std::size_t i = 0; i < boxes.size(); ++i)
      ok = ok && aut_orbit_count(boxes, i) == aut_orbits_in_box(boxes, i);
    add("aut-orbits", ok, "[G:N_G(H)] per box");
  });
  const auto report = relative_rank(boxes);
  for (auto& p : verify_rank(boxes, report, cap)) out.push_back(std::move(p));
  guarded("wreath-orders", [&] {
    const auto checks = wreath_order_checks(boxes, cap);
    std::size_t observed = 0;
    for (const auto& c : checks) observed += c.observed.has_value();
    add("wreath-orders", true,
        std::to_string(observed) + " of " + std::to_string(checks.size()) +
            " orders enumerated");
  });
  if (predicted_end_size(x) <= 10'000) {
    const auto end = enumerate_end(parsed.gset, cap);
    bool ok = true;
    for (std::size_t i = 0; i < end.size(); ++i) {
      const auto tau = end.element(i);
      ok = ok && recompose(decompose_by_boxes(boxes, tau)) == tau;
    }
    add("box-decomposition", ok, std::to_string(end.size()) + " maps recomposed");
    if (parsed.shift) {
      bool rt = true;
      for (std::size_t i = 0; i < end.size(); ++i) {
        const auto tau = end.element(i);
        rt = rt && ca_from_rule(*parsed.shift, rule_from_map(*parsed.shift, tau)) == tau;
      }
      add("curtis-hedlund", rt, std::to_string(end.size()) + " maps round-tripped");
    }
  } else {
    out.push_back({"box-decomposition", CheckStatus::kSkipped, "|End| above 10000"});
  }
  guarded("dumb-oracle", [&] {
    if (x.size() > 8) {
      out.push_back({"dumb-oracle", CheckStatus::kSkipped, "more than 8 points"});
      return;
    }
    const auto dumb = dumb_scan(x, kDumbScanLimit);
    add("dumb-oracle",
        BigInt(dumb.end) == predicted_end_size(x) &&
            BigInt(dumb.aut) == predicted_aut_order(boxes),
        "|End| " + std::to_string(dumb.end) + ", |Aut| " + std::to_string(dumb.aut));
  });
  if (parsed.shift) {
    add("index-two", predicted_shift_kappa(boxes, parsed.shift->q) == report.kappa,
        "kappa " + join(report.kappa));
  }
  return out;
}

}  // namespace equirank
