#include "equirank/wreath.hpp"

#include "equirank/error.hpp"

namespace equirank {

std::vector<EquivariantMap> decompose_by_boxes(const BoxDecomposition& boxes,
                                               const EquivariantMap& tau) {
  if (tau.size() != boxes.gset().size() || !is_equivariant(boxes.gset(), tau.image())) {
    throw DomainError("not-equivariant", "map is not an endomorphism of the G-set");
  }
  std::vector<EquivariantMap> out;
  for (std::size_t k = 0; k < boxes.size(); ++k) {
    std::vector<Point> img(tau.size());
    for (Point p = 0; p < tau.size(); ++p) img[p] = boxes.box_of(p) == k ? tau(p) : p;
    out.push_back(EquivariantMap::unchecked(boxes.gset_ptr(), std::move(img)));
  }
  return out;
}

EquivariantMap recompose(const std::vector<EquivariantMap>& factors) {
  check_internal(!factors.empty(), "nothing to recompose");
  EquivariantMap acc = factors.back();
  for (std::size_t k = factors.size() - 1; k-- > 0;) acc = compose(factors[k], acc);
  return acc;
}

BoxCoordinates::BoxCoordinates(const BoxDecomposition& boxes, std::size_t box) {
  const Box& b = boxes.box(box);
  const GSet& x = boxes.gset();
  const auto& lat = boxes.lattice();
  const Subgroup& h = lat.subgroup(b.representative);
  cosets_ = std::make_shared<const GSet>(coset_action(x.group_ptr(), h));

  // Element sending coset 0 (= H) to each coset c.
  std::vector<Element> coset_rep(cosets_->size());
  std::vector<bool> have(cosets_->size());
  for (Element g = 0; g < x.group().order(); ++g) {
    const Point c = cosets_->act(g, 0);
    if (!have[c]) {
      have[c] = true;
      coset_rep[c] = g;
    }
  }

  orbit_of_.assign(x.size(), kAbsent);
  coset_of_.assign(x.size(), 0);
  for (const auto& orb : b.orbits) {
    Point rep = orb.front();
    for (Point p : orb) {
      if (boxes.stabilizer_of(p) == b.representative) {
        rep = p;
        break;
      }
    }
    check_internal(boxes.stabilizer_of(rep) == b.representative,
                   "orbit without a point stabilized by H");
    const auto lambda = static_cast<std::uint32_t>(reps_.size());
    reps_.push_back(rep);
    for (Point c = 0; c < cosets_->size(); ++c) {
      const Point p = x.act(coset_rep[c], rep);
      points_.push_back(p);
      orbit_of_[p] = lambda;
      coset_of_[p] = c;
    }
  }
}

WreathElement wreath_factorize(const BoxCoordinates& coords, const EquivariantMap& tau) {
  WreathElement w;
  const std::size_t a = coords.orbit_count();
  const std::size_t n = coords.coset_count();
  w.orbit_map.resize(a);
  w.coset_maps.assign(a, std::vector<Point>(n));
  for (std::uint32_t l = 0; l < a; ++l) {
    for (Point c = 0; c < n; ++c) {
      const Point img = tau(coords.point(l, c));
      if (!coords.contains(img)) {
        throw DomainError("leaves-box", "map sends a box point outside the box");
      }
      if (c == 0) w.orbit_map[l] = coords.orbit_of(img);
      check_internal(coords.orbit_of(img) == w.orbit_map[l],
                     "orbit image is not a single orbit");
      w.coset_maps[l][c] = coords.coset_of(img);
    }
  }
  return w;
}

WreathElement wreath_product(const WreathElement& p, const WreathElement& t) {
  WreathElement out;
  const std::size_t a = t.orbit_map.size();
  out.orbit_map.resize(a);
  out.coset_maps.resize(a);
  for (std::size_t l = 0; l < a; ++l) {
    const auto mid = t.orbit_map[l];
    out.orbit_map[l] = p.orbit_map[mid];
    const auto& inner = t.coset_maps[l];
    const auto& outer = p.coset_maps[mid];
    out.coset_maps[l].resize(inner.size());
    for (std::size_t c = 0; c < inner.size(); ++c) out.coset_maps[l][c] = outer[inner[c]];
  }
  return out;
}

bool coset_maps_equivariant(const BoxCoordinates& coords, const WreathElement& w) {
  for (const auto& s : w.coset_maps) {
    if (!is_equivariant(coords.cosets(), s)) return false;
  }
  return true;
}

std::vector<OrderCheck> wreath_order_checks(const BoxDecomposition& boxes,
                                            std::size_t cap) {
  std::vector<OrderCheck> out;
  auto settle = [&](OrderCheck c) {
    if (c.observed && *c.observed != c.predicted) {
      throw PropertyError("structure-theorem",
                          c.name + ": formula " + c.predicted.str() +
                              ", enumeration " + c.observed->str());
    }
    out.push_back(std::move(c));
  };

  OrderCheck aut{"aut", predicted_aut_order(boxes), std::nullopt};
  if (aut_candidate_bound(boxes.gset()) <= cap) {
    aut.observed = BigInt(enumerate_aut(boxes.gset_ptr(), cap).size());
  }
  settle(std::move(aut));

  for (std::size_t i = 0; i < boxes.size(); ++i) {
    OrderCheck c{"end-box-" + std::to_string(i), predicted_box_end_order(boxes, i),
                 std::nullopt};
    const auto box = std::make_shared<const GSet>(
        restrict_to_invariant(boxes.gset(), boxes.box(i).points));
    if (predicted_end_size(*box) <= cap) {
      c.observed = BigInt(enumerate_end(box, cap).size());
    }
    settle(std::move(c));
  }
  return out;
}

}  // namespace equirank
