#include "equirank/monoid.hpp"

#include <algorithm>

#include <boost/container_hash/hash.hpp>

#include "equirank/error.hpp"

namespace equirank {

ImageStore::ImageStore(std::size_t width) : width_(width), slots_(64, 0) {}

std::size_t ImageStore::hash(std::span<const Point> image) const {
  return boost::hash_range(image.begin(), image.end());
}

std::optional<std::size_t> ImageStore::find(std::span<const Point> image) const {
  const std::size_t mask = slots_.size() - 1;
  for (std::size_t s = hash(image) & mask;; s = (s + 1) & mask) {
    const std::uint32_t slot = slots_[s];
    if (slot == 0) return std::nullopt;
    if (std::ranges::equal((*this)[slot - 1], image)) return slot - 1;
  }
}

std::pair<std::size_t, bool> ImageStore::insert(std::span<const Point> image) {
  check_internal(image.size() == width_, "image width mismatch");
  if (auto i = find(image)) return {*i, false};
  if (2 * (count_ + 1) > slots_.size()) grow();
  const std::size_t mask = slots_.size() - 1;
  std::size_t s = hash(image) & mask;
  while (slots_[s] != 0) s = (s + 1) & mask;
  data_.insert(data_.end(), image.begin(), image.end());
  slots_[s] = static_cast<std::uint32_t>(++count_);
  return {count_ - 1, true};
}

void ImageStore::grow() {
  std::vector<std::uint32_t> next(slots_.size() * 2, 0);
  const std::size_t mask = next.size() - 1;
  for (std::size_t i = 0; i < count_; ++i) {
    std::size_t s = hash((*this)[i]) & mask;
    while (next[s] != 0) s = (s + 1) & mask;
    next[s] = static_cast<std::uint32_t>(i + 1);
  }
  slots_ = std::move(next);
}

EquivariantMap MonoidClosure::element(std::size_t i) const {
  const auto img = elements[i];
  return EquivariantMap::unchecked(gset, {img.begin(), img.end()});
}

MonoidClosure closure(const GSetPtr& x, std::vector<EquivariantMap> generators,
                      std::size_t cap) {
  for (const auto& g : generators) {
    if (g.size() != x->size() || !is_equivariant(*x, g.image())) {
      throw DomainError("not-equivariant", "closure generator is not equivariant");
    }
  }
  MonoidClosure out{x, std::move(generators), ImageStore(x->size())};
  const std::size_t m = x->size();
  std::vector<Point> current(m), next(m);
  for (Point p = 0; p < m; ++p) current[p] = p;
  out.elements.insert(current);
  for (std::size_t i = 0; i < out.elements.size(); ++i) {
    const auto src = out.elements[i];
    std::copy(src.begin(), src.end(), current.begin());
    for (const auto& gen : out.generators) {
      const auto& img = gen.image();
      for (Point p = 0; p < m; ++p) next[p] = img[current[p]];
      if (out.elements.insert(next).second && out.elements.size() > cap) {
        throw BudgetError("closure-cap", "closure exceeds cap of " +
                                             std::to_string(cap) + " maps");
      }
    }
  }
  return out;
}

namespace {

struct OrbitPlan {
  Point rep;
  std::vector<std::pair<Element, Point>> transversal;  // (g, g.rep)
  std::vector<Point> targets;
};

std::vector<OrbitPlan> plan(const GSet& x, bool equal_stabilizers) {
  std::vector<Subgroup> stab;
  stab.reserve(x.size());
  for (Point p = 0; p < x.size(); ++p) stab.push_back(stabilizer(x, p));
  std::vector<OrbitPlan> out;
  for (const auto& orb : orbits(x)) {
    OrbitPlan op;
    op.rep = orb.front();
    std::vector<bool> seen(x.size());
    for (Element g = 0; g < x.group().order(); ++g) {
      const Point p = x.act(g, op.rep);
      if (!seen[p]) {
        seen[p] = true;
        op.transversal.emplace_back(g, p);
      }
    }
    for (Point y = 0; y < x.size(); ++y) {
      const bool ok = equal_stabilizers ? stab[op.rep] == stab[y]
                                        : stab[op.rep].is_subset_of(stab[y]);
      if (ok) op.targets.push_back(y);
    }
    out.push_back(std::move(op));
  }
  return out;
}

BigInt count_of(const std::vector<OrbitPlan>& plans) {
  BigInt total = 1;
  for (const auto& p : plans) total *= p.targets.size();
  return total;
}

void odometer(const GSet& x, const std::vector<OrbitPlan>& plans,
              const std::function<void(std::span<const Point>)>& visit) {
  std::vector<Point> image(x.size());
  std::vector<std::size_t> digit(plans.size(), 0);
  auto apply = [&](std::size_t k) {
    const Point y = plans[k].targets[digit[k]];
    for (auto [g, p] : plans[k].transversal) image[p] = x.act(g, y);
  };
  for (std::size_t k = 0; k < plans.size(); ++k) apply(k);
  for (;;) {
    visit(image);
    std::size_t k = 0;
    while (k < plans.size() && ++digit[k] == plans[k].targets.size()) {
      digit[k] = 0;
      apply(k);
      ++k;
    }
    if (k == plans.size()) return;
    apply(k);
  }
}

void require_within(const BigInt& count, std::size_t cap, const char* what) {
  if (count > cap) {
    throw BudgetError("enumeration-cap", std::string(what) + " has " + count.str() +
                                             " candidates, cap is " +
                                             std::to_string(cap));
  }
}

}  // namespace

BigInt predicted_end_size(const GSet& x) { return count_of(plan(x, false)); }

BigInt aut_candidate_bound(const GSet& x) { return count_of(plan(x, true)); }

void for_each_end(const GSet& x,
                  const std::function<void(std::span<const Point>)>& visit,
                  std::size_t cap) {
  const auto plans = plan(x, false);
  require_within(count_of(plans), cap, "End_G(X)");
  odometer(x, plans, visit);
}

MonoidClosure enumerate_end(const GSetPtr& x, std::size_t cap) {
  MonoidClosure out{x, {}, ImageStore(x->size())};
  for_each_end(*x, [&](std::span<const Point> img) { out.elements.insert(img); }, cap);
  return out;
}

MonoidClosure enumerate_aut(const GSetPtr& x, std::size_t cap) {
  const auto plans = plan(*x, true);
  require_within(count_of(plans), cap, "Aut_G(X)");
  MonoidClosure out{x, {}, ImageStore(x->size())};
  std::vector<bool> hit(x->size());
  odometer(*x, plans, [&](std::span<const Point> img) {
    std::fill(hit.begin(), hit.end(), false);
    for (Point p : img) {
      if (hit[p]) return;
      hit[p] = true;
    }
    out.elements.insert(img);
  });
  return out;
}

bool non_units_form_ideal(const MonoidClosure& m) {
  const std::size_t w = m.elements.width();
  auto bijective = [w](std::span<const Point> f) {
    std::vector<bool> hit(w);
    for (Point p : f) {
      if (hit[p]) return false;
      hit[p] = true;
    }
    return true;
  };
  std::vector<Point> prod(w);
  for (std::size_t i = 0; i < m.size(); ++i) {
    const auto f = m.elements[i];
    if (bijective(f)) continue;
    for (std::size_t j = 0; j < m.size(); ++j) {
      const auto g = m.elements[j];
      for (Point p = 0; p < w; ++p) prod[p] = f[g[p]];
      if (bijective(prod)) return false;
      for (Point p = 0; p < w; ++p) prod[p] = g[f[p]];
      if (bijective(prod)) return false;
    }
  }
  return true;
}

namespace {

GSetPtr trivial_action(std::size_t n) {
  auto one = std::make_shared<const FiniteGroup>(make_cyclic(1));
  std::vector<Point> table(n);
  for (Point p = 0; p < n; ++p) table[p] = p;
  return std::make_shared<const GSet>(one, n, std::move(table));
}

std::vector<EquivariantMap> coxeter_pair(const GSetPtr& x) {
  const std::size_t n = x->size();
  std::vector<Point> swap(n), cycle(n);
  for (Point p = 0; p < n; ++p) {
    swap[p] = p;
    cycle[p] = static_cast<Point>((p + 1) % n);
  }
  if (n >= 2) std::swap(swap[0], swap[1]);
  return {EquivariantMap(x, swap), EquivariantMap(x, cycle)};
}

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

GeneratorCheck sym_generators_check(std::size_t n) {
  if (n == 0 || n > 6) throw BudgetError("size-limit", "Sym check supports 1 <= n <= 6");
  const auto x = trivial_action(n);
  const auto c = closure(x, coxeter_pair(x));
  const std::size_t expected = factorial(n);
  return {c.size() == expected, c.size(), expected};
}

GeneratorCheck trans_generators_check(std::size_t n, bool with_defect_map) {
  if (n == 0 || n > 5) throw BudgetError("size-limit", "Trans check supports 1 <= n <= 5");
  const auto x = trivial_action(n);
  auto gens = coxeter_pair(x);
  std::size_t expected = factorial(n);
  if (with_defect_map) {
    std::size_t full = 1;
    for (std::size_t i = 0; i < n; ++i) full *= n;
    expected = full;
    if (n >= 2) {
      std::vector<Point> defect(n);
      for (Point p = 0; p < n; ++p) defect[p] = p;
      defect[1] = 0;
      gens.emplace_back(x, defect);
    }
  }
  const auto c = closure(x, std::move(gens));
  return {c.size() == expected, c.size(), expected};
}

}  // namespace equirank
