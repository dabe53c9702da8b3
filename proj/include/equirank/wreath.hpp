#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "equirank/rank.hpp"

namespace equirank {

// tau = tau_1 o tau_2 o ... o tau_r, where tau_k agrees with tau on box k and
// is the identity elsewhere. The last factor is applied first.
std::vector<EquivariantMap> decompose_by_boxes(const BoxDecomposition& boxes,
                                               const EquivariantMap& tau);
EquivariantMap recompose(const std::vector<EquivariantMap>& factors);

// Coordinates of one box: orbit lambda has representative x_lambda with
// stabilizer exactly H, and point r_c . x_lambda is (lambda, c) for the coset
// c = r_c H of G/H.
class BoxCoordinates {
 public:
  BoxCoordinates(const BoxDecomposition& boxes, std::size_t box);

  std::size_t orbit_count() const noexcept { return reps_.size(); }
  std::size_t coset_count() const noexcept { return cosets_->size(); }
  const GSet& cosets() const noexcept { return *cosets_; }
  Point point(std::uint32_t orbit, Point coset) const {
    return points_[orbit * coset_count() + coset];
  }
  std::uint32_t orbit_of(Point p) const { return orbit_of_[p]; }
  Point coset_of(Point p) const { return coset_of_[p]; }
  bool contains(Point p) const { return orbit_of_[p] != kAbsent; }

 private:
  static constexpr std::uint32_t kAbsent = ~std::uint32_t{0};
  std::shared_ptr<const GSet> cosets_;
  std::vector<Point> reps_;
  std::vector<Point> points_;
  std::vector<std::uint32_t> orbit_of_;
  std::vector<Point> coset_of_;
};

// (sigma, f): orbit map f and, for each orbit lambda, the coset map
// sigma(lambda) taking the coordinates in lambda to those in f(lambda).
struct WreathElement {
  std::vector<std::uint32_t> orbit_map;
  std::vector<std::vector<Point>> coset_maps;

  friend bool operator==(const WreathElement&, const WreathElement&) = default;
};

// Throws DomainError("leaves-box") if tau maps a box point outside the box.
WreathElement wreath_factorize(const BoxCoordinates& coords, const EquivariantMap& tau);
// (sigma_p, f_p)(sigma_t, f_t) = (l -> sigma_p(f_t(l)) o sigma_t(l), f_p o f_t).
WreathElement wreath_product(const WreathElement& p, const WreathElement& t);
// tau is equivariant on the box iff each sigma(lambda) commutes with the
// action on G/H.
bool coset_maps_equivariant(const BoxCoordinates& coords, const WreathElement& w);

struct OrderCheck {
  std::string name;
  BigInt predicted;
  std::optional<BigInt> observed;  // absent when enumeration is over cap
};

// |Aut_G(X)| and each |End_G(B_i)| against enumeration when within `cap`.
// Throws PropertyError("structure-theorem") on a mismatch.
std::vector<OrderCheck> wreath_order_checks(const BoxDecomposition& boxes,
                                            std::size_t cap = kDefaultClosureCap);

}  // namespace equirank
