#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "equirank/rank.hpp"
#include "equirank/spec.hpp"

namespace equirank {

// Scans all m^m self-maps of X and keeps the equivariant ones.
struct DumbScan {
  std::size_t end = 0;
  std::size_t aut = 0;
};
// Throws BudgetError when m^m exceeds `limit`. Equivariant maps are also
// inserted into `sink` when it is non-null.
DumbScan dumb_scan(const GSet& x, std::size_t limit, ImageStore* sink = nullptr);
inline constexpr std::size_t kDumbScanLimit = 20'000'000;

// Every property that applies to one (G, X) instance; skipped checks carry
// the reason.
std::vector<PropertyResult> verify_instance(const LatticePtr& lattice,
                                            const ParsedGSet& x,
                                            std::size_t cap = kDefaultClosureCap);

struct CriterionResult {
  int id;
  std::string title;
  bool passed;
  std::string detail;
  double seconds;
};

// The numbered acceptance criteria, each with its own timing budget.
std::vector<CriterionResult> run_acceptance();
CriterionResult run_criterion(int id);
inline constexpr int kCriterionCount = 11;

}  // namespace equirank
