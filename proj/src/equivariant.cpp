#include "equirank/equivariant.hpp"

#include <algorithm>

#include "equirank/error.hpp"

namespace equirank {

namespace {

void require_same(const EquivariantMap& f, const EquivariantMap& g) {
  if (f.gset_ptr() == g.gset_ptr()) return;
  const GSet& a = f.gset();
  const GSet& b = g.gset();
  bool same = a.size() == b.size() && a.group_ptr() == b.group_ptr();
  for (Element e = 0; same && e < a.group().order(); ++e) {
    same = std::ranges::equal(a.row(e), b.row(e));
  }
  if (!same) throw DomainError("gset-mismatch", "maps act on different G-sets");
}

}  // namespace

EquivariantMap::EquivariantMap(GSetPtr gset, std::vector<Point> image)
    : EquivariantMap(std::move(gset), std::move(image), true) {}

EquivariantMap::EquivariantMap(GSetPtr gset, std::vector<Point> image, bool check)
    : gset_(std::move(gset)), image_(std::move(image)) {
  if (image_.size() != gset_->size()) {
    throw DomainError("invalid-map", "image array length differs from |X|");
  }
  for (Point p : image_) {
    if (p >= gset_->size()) throw DomainError("invalid-map", "image out of range");
  }
  if (check && !is_equivariant(*gset_, image_)) {
    throw DomainError("not-equivariant", "map does not commute with the action");
  }
}

EquivariantMap EquivariantMap::unchecked(GSetPtr gset, std::vector<Point> image) {
  return EquivariantMap(std::move(gset), std::move(image), false);
}

bool EquivariantMap::is_bijective() const {
  std::vector<bool> hit(image_.size());
  for (Point p : image_) {
    if (hit[p]) return false;
    hit[p] = true;
  }
  return true;
}

bool is_equivariant(const GSet& x, std::span<const Point> image) {
  if (image.size() != x.size()) return false;
  for (Element g = 0; g < x.group().order(); ++g) {
    for (Point p = 0; p < x.size(); ++p) {
      if (image[x.act(g, p)] != x.act(g, image[p])) return false;
    }
  }
  return true;
}

EquivariantMap compose(const EquivariantMap& f, const EquivariantMap& g) {
  require_same(f, g);
  std::vector<Point> out(g.size());
  for (Point p = 0; p < g.size(); ++p) out[p] = f(g(p));
  return EquivariantMap::unchecked(f.gset_ptr(), std::move(out));
}

EquivariantMap identity_map(const GSetPtr& x) {
  std::vector<Point> out(x->size());
  for (Point p = 0; p < x->size(); ++p) out[p] = p;
  return EquivariantMap::unchecked(x, std::move(out));
}

EquivariantMap inverse(const EquivariantMap& f) {
  if (!f.is_bijective()) throw DomainError("not-bijective", "map is not invertible");
  std::vector<Point> out(f.size());
  for (Point p = 0; p < f.size(); ++p) out[f(p)] = p;
  return EquivariantMap::unchecked(f.gset_ptr(), std::move(out));
}

EquivariantMap point_push(const GSetPtr& x, Point from, Point to) {
  const GSet& s = *x;
  if (from >= s.size() || to >= s.size()) {
    throw DomainError("invalid-point", "point out of range");
  }
  if (!stabilizer(s, from).is_subset_of(stabilizer(s, to))) {
    throw DomainError("stabilizer-containment",
                      "push needs Stab(" + s.label(from) + ") <= Stab(" +
                          s.label(to) + ")");
  }
  std::vector<Point> out(s.size());
  for (Point p = 0; p < s.size(); ++p) out[p] = p;
  for (Element g = 0; g < s.group().order(); ++g) {
    out[s.act(g, from)] = s.act(g, to);
  }
  return EquivariantMap::unchecked(x, std::move(out));
}

EquivariantMap point_swap(const GSetPtr& x, Point a, Point b) {
  const GSet& s = *x;
  if (a >= s.size() || b >= s.size()) {
    throw DomainError("invalid-point", "point out of range");
  }
  if (!(stabilizer(s, a) == stabilizer(s, b))) {
    throw DomainError("stabilizer-equality", "swap needs Stab(" + s.label(a) +
                                                 ") = Stab(" + s.label(b) + ")");
  }
  std::vector<Point> out(s.size());
  for (Point p = 0; p < s.size(); ++p) out[p] = p;
  const auto orb = orbit(s, a);
  if (std::binary_search(orb.begin(), orb.end(), b)) {
    for (Element g = 0; g < s.group().order(); ++g) out[s.act(g, a)] = s.act(g, b);
  } else {
    for (Element g = 0; g < s.group().order(); ++g) {
      out[s.act(g, a)] = s.act(g, b);
      out[s.act(g, b)] = s.act(g, a);
    }
  }
  return EquivariantMap::unchecked(x, std::move(out));
}

std::vector<std::pair<Point, Point>> kernel_pairs(const EquivariantMap& f) {
  std::vector<std::vector<Point>> fibres(f.size());
  for (Point p = 0; p < f.size(); ++p) fibres[f(p)].push_back(p);
  std::vector<std::pair<Point, Point>> out;
  for (const auto& fib : fibres) {
    for (Point a : fib)
      for (Point b : fib)
        if (a != b) out.emplace_back(a, b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint32_t> kernel_labels(std::span<const Point> image) {
  constexpr auto kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> label_of_image(image.size(), kUnset);
  std::vector<std::uint32_t> out(image.size());
  std::uint32_t next = 0;
  for (std::size_t p = 0; p < image.size(); ++p) {
    auto& l = label_of_image[image[p]];
    if (l == kUnset) l = next++;
    out[p] = l;
  }
  return out;
}

std::size_t map_rank(const EquivariantMap& f) {
  std::vector<Point> img = f.image();
  std::sort(img.begin(), img.end());
  return static_cast<std::size_t>(std::unique(img.begin(), img.end()) - img.begin());
}

}  // namespace equirank
