#ifndef HIVELR_SWEEP_HPP_
#define HIVELR_SWEEP_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hivelr {

enum class SweepFamily { kProducts, kSkews };

struct SweepOptions {
  SweepFamily family = SweepFamily::kProducts;
  int m = 3;  // box columns
  int n = 3;  // box rows
  std::optional<std::size_t> sample;  // random subset of this size
  std::uint64_t seed = 0;
};

struct SweepReport {
  std::size_t checked = 0;
  std::size_t agree = 0;
  std::size_t disagree = 0;
  // One line per disagreement: the query, the verdict and the enumerated
  // maximum multiplicity.
  std::vector<std::string> disagreements;
};

// Compares the structural classifier with enumeration. Products: every
// ordered pair mu, nu in the m x n box. Skews: every non-empty basic
// lambda/mu with lambda in the box. With a sample size, a seeded random
// subset is checked in its original order.
SweepReport verify_sweep(const SweepOptions& opts);

}  // namespace hivelr

#endif  // HIVELR_SWEEP_HPP_
