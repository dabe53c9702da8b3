#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "equirank/equivariant.hpp"

namespace equirank {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::size_t kDefaultClosureCap = 2'000'000;

// Deduplicated set of image arrays of one fixed width, kept in insertion
// order. Open addressing over indices into a flat buffer.
class ImageStore {
 public:
  explicit ImageStore(std::size_t width);

  // Index of the array and whether it was newly inserted.
  std::pair<std::size_t, bool> insert(std::span<const Point> image);
  std::optional<std::size_t> find(std::span<const Point> image) const;

  std::size_t size() const noexcept { return count_; }
  std::size_t width() const noexcept { return width_; }
  std::span<const Point> operator[](std::size_t i) const {
    return {data_.data() + i * width_, width_};
  }

 private:
  std::size_t hash(std::span<const Point> image) const;
  void grow();

  std::size_t width_;
  std::size_t count_ = 0;
  std::vector<Point> data_;
  std::vector<std::uint32_t> slots_;  // element index + 1, 0 = empty
};

// A finite set of equivariant maps: the closure of `generators`, or a full
// enumeration (then `generators` is empty).
struct MonoidClosure {
  GSetPtr gset;
  std::vector<EquivariantMap> generators;
  ImageStore elements;

  std::size_t size() const noexcept { return elements.size(); }
  EquivariantMap element(std::size_t i) const;
  bool contains(const EquivariantMap& f) const {
    return elements.find(f.image()).has_value();
  }
};

// Breadth-first closure under composition, starting from the identity.
// Throws BudgetError("closure-cap") as soon as the size would exceed `cap`.
MonoidClosure closure(const GSetPtr& x, std::vector<EquivariantMap> generators,
                      std::size_t cap = kDefaultClosureCap);

// prod over orbit representatives r of |{y : G_r <= G_y}|.
BigInt predicted_end_size(const GSet& x);
// prod over orbit representatives r of |{y : G_r = G_y}|; bounds |Aut|.
BigInt aut_candidate_bound(const GSet& x);

// Visits every equivariant self-map: one image per orbit representative
// among the admissible targets, extended along the orbit. Throws
// BudgetError before visiting anything if the count exceeds `cap`.
void for_each_end(const GSet& x,
                  const std::function<void(std::span<const Point>)>& visit,
                  std::size_t cap = kDefaultClosureCap);

MonoidClosure enumerate_end(const GSetPtr& x, std::size_t cap = kDefaultClosureCap);
MonoidClosure enumerate_aut(const GSetPtr& x, std::size_t cap = kDefaultClosureCap);

// Non-units form an ideal: every product with a non-bijection is a
// non-bijection. Checks all ordered pairs; intended for small monoids.
bool non_units_form_ideal(const MonoidClosure& m);

struct GeneratorCheck {
  bool passed;
  std::size_t closure_size;
  std::size_t expected;
};

// Closure of {(0 1), (0 1 ... n-1)} on n points against n!; n <= 6.
GeneratorCheck sym_generators_check(std::size_t n);
// The same generators plus the defect-1 map 1 -> 0 against n^n; n <= 5.
// Without the defect map the expected size is n!.
GeneratorCheck trans_generators_check(std::size_t n, bool with_defect_map = true);

}  // namespace equirank
