// Runs every acceptance criterion and prints one line per criterion.
#include <array>
#include <cstdio>

#include "equirank/error.hpp"
#include "equirank/verify.hpp"

namespace {

// Tolerances checked inside each criterion; printed for the record.
constexpr std::array<const char*, equirank::kCriterionCount> kTolerance = {
    "exact, under 5 s",   "exact, under 5 s", "exact",
    "exact, under 60 s",  "exact, under 120 s", "exact",
    "exact",              "exact",            "exact",
    "exact, under 60 s",  "exact",
};

}  // namespace

int main() {
  int failures = 0;
  for (int id = 1; id <= equirank::kCriterionCount; ++id) {
    equirank::CriterionResult r;
    try {
      r = equirank::run_criterion(id);
    } catch (const std::exception& e) {
      r = {id, "criterion " + std::to_string(id), false,
           std::string("threw: ") + e.what(), 0.0};
    }
    failures += !r.passed;
    std::printf("criterion %d %s: %s [%s] (%s; %.3fs)\n", r.id,
                r.passed ? "PASS" : "FAIL", r.title.c_str(),
                kTolerance[static_cast<std::size_t>(id - 1)], r.detail.c_str(),
                r.seconds);
  }
  std::printf("%d/%d criteria passed\n", equirank::kCriterionCount - failures,
              equirank::kCriterionCount);
  return failures == 0 ? 0 : 1;
}
