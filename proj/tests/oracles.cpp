#include "oracles.hpp"

#include <algorithm>
#include <functional>

namespace oracle {

std::vector<ElementSet> all_subgroups(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<ElementSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (!((mask >> g.identity()) & 1)) continue;
    bool closed = true;
    for (Element a = 0; a < n && closed; ++a) {
      if (!((mask >> a) & 1)) continue;
      for (Element b = 0; b < n && closed; ++b) {
        if ((mask >> b) & 1) closed = (mask >> g.mul(a, b)) & 1;
      }
    }
    if (!closed) continue;
    ElementSet s;
    for (Element a = 0; a < n; ++a)
      if ((mask >> a) & 1) s.insert(a);
    out.push_back(std::move(s));
  }
  return out;
}

int chain_moebius(const std::vector<ElementSet>& subgroups, const ElementSet& h,
                  const ElementSet& k) {
  if (h == k) return 1;
  auto strictly_inside = [](const ElementSet& a, const ElementSet& b) {
    return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  // Sum over chains h = c0 < c1 < ... < cr = k of (-1)^r.
  std::function<int(const ElementSet&)> chains = [&](const ElementSet& c) {
    if (c == k) return 0;
    int total = strictly_inside(c, k) ? -1 : 0;  // the step c < k directly
    for (const auto& d : subgroups) {
      if (d != k && strictly_inside(c, d) && strictly_inside(d, k)) total -= chains(d);
    }
    return total;
  };
  return chains(h);
}

ElementSet conjugate(const FiniteGroup& g, const ElementSet& h, Element by) {
  ElementSet out;
  for (Element x : h) out.insert(g.mul(g.mul(by, x), g.inv(by)));
  return out;
}

bool conjugate_subgroups(const FiniteGroup& g, const ElementSet& a, const ElementSet& b) {
  for (Element t = 0; t < g.order(); ++t)
    if (conjugate(g, a, t) == b) return true;
  return false;
}

ElementSet stabilizer(const GSet& x, Point p) {
  ElementSet out;
  for (Element g = 0; g < x.group().order(); ++g)
    if (x.act(g, p) == p) out.insert(g);
  return out;
}

std::set<Point> orbit(const GSet& x, Point p) {
  std::set<Point> out;
  for (Element g = 0; g < x.group().order(); ++g) out.insert(x.act(g, p));
  return out;
}

std::size_t direct_alpha(const GSet& x, const ElementSet& h) {
  std::set<std::set<Point>> orbits;
  for (Point p = 0; p < x.size(); ++p) {
    if (conjugate_subgroups(x.group(), oracle::stabilizer(x, p), h)) orbits.insert(oracle::orbit(x, p));
  }
  return orbits.size();
}

bool is_equivariant(const GSet& x, const Map& f) {
  for (Element g = 0; g < x.group().order(); ++g)
    for (Point p = 0; p < x.size(); ++p)
      if (f[x.act(g, p)] != x.act(g, f[p])) return false;
  return true;
}

std::vector<Map> all_equivariant_maps(const GSet& x) {
  const std::size_t m = x.size();
  std::vector<Map> out;
  Map f(m, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == m) {
      if (is_equivariant(x, f)) out.push_back(f);
      return;
    }
    for (Point v = 0; v < m; ++v) {
      f[k] = v;
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

std::vector<std::uint32_t> kernel(const Map& f) {
  std::map<Point, std::uint32_t> label;
  std::vector<std::uint32_t> out;
  for (Point v : f) {
    auto [it, fresh] = label.emplace(v, static_cast<std::uint32_t>(label.size()));
    out.push_back(it->second);
  }
  return out;
}

std::vector<std::uint32_t> invariant_closure(const GSet& x, Point a, Point b) {
  // Identify g.a with g.b for every g, then take connected components.
  std::vector<Point> rep(x.size());
  for (Point p = 0; p < x.size(); ++p) rep[p] = p;
  std::function<Point(Point)> find = [&](Point p) {
    return rep[p] == p ? p : rep[p] = find(rep[p]);
  };
  for (Element g = 0; g < x.group().order(); ++g) rep[find(x.act(g, a))] = find(x.act(g, b));
  Map roots(x.size());
  for (Point p = 0; p < x.size(); ++p) roots[p] = find(p);
  return kernel(roots);
}

std::vector<std::uint32_t> shift_tuple(const FiniteGroup& g,
                                       const std::vector<Element>& order,
                                       const std::vector<std::uint32_t>& x, Element by) {
  std::vector<std::uint32_t> out(x.size());
  for (std::size_t j = 0; j < order.size(); ++j) {
    const Element src = g.mul(g.inv(by), order[j]);
    const auto pos = std::find(order.begin(), order.end(), src) - order.begin();
    out[j] = x[static_cast<std::size_t>(pos)];
  }
  return out;
}

}  // namespace oracle
