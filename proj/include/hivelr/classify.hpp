#ifndef HIVELR_CLASSIFY_HPP_
#define HIVELR_CLASSIFY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hivelr/expansion.hpp"
#include "hivelr/partition.hpp"
#include "hivelr/skew_shape.hpp"

namespace hivelr {

// Outcome of a structural multiplicity-freeness test. `cases` lists every
// case label that holds, in label order; the verdict is positive exactly when
// at least one does.
struct MFVerdict {
  bool multiplicity_free = false;
  std::vector<std::string> cases;

  friend bool operator==(const MFVerdict&, const MFVerdict&) = default;
};

// Products s_mu s_nu. Cases:
//   P0  mu or nu is 0
//   P1  mu or nu is a one-line rectangle
//   P2  one is a two-line rectangle, the other a fat hook
//   P3  one is a rectangle, the other a near-rectangle
//   P4  both are rectangles
MFVerdict stembridge_mf(const Partition& mu, const Partition& nu);

// Basic skew shapes lambda/mu, with lambda* the complement of lambda in the
// m x n box, m = lambda_1, n = l(lambda), and shortness measured in that box.
//   R0  mu or lambda* is 0
//   R1  mu or lambda* is a rectangle of shortness 1
//   R2  one of mu, lambda* is a rectangle of shortness 2, the other a fat hook
//   R3  one is a rectangle, the other a fat hook of shortness 1
//   R4  both are rectangles
// Throws std::invalid_argument for an empty or non-basic shape; normalize
// with to_basic first.
MFVerdict gty_mf(const SkewShape& s);

// Products s_theta s_phi of two non-empty basic skew shapes. "phi or phi^pi
// is a partition" means phi is straight or its 180-degree rotation is.
//   V1  theta a one-line rectangle, phi or phi^pi a partition
//   V2  theta a two-line rectangle, phi or phi^pi a fat hook
//   V3  theta a rectangle, phi or phi^pi a near-rectangle
//   V4  both rectangles
// each "or vice versa".
MFVerdict skew_product_mf(const SkewShape& theta, const SkewShape& phi);

struct MultiplicityWitness {
  Partition term;
  std::int64_t coefficient = 0;
  friend bool operator==(const MultiplicityWitness&,
                         const MultiplicityWitness&) = default;
};

// Lexicographically smallest term with coefficient >= 2, if any.
std::optional<MultiplicityWitness> find_multiplicity_witness(
    const Expansion& e);
std::optional<MultiplicityWitness> find_multiplicity_witness(
    const Partition& mu, const Partition& nu, Method method = Method::kHive);
std::optional<MultiplicityWitness> find_multiplicity_witness(
    const SkewShape& s, Method method = Method::kHive);

}  // namespace hivelr

#endif  // HIVELR_CLASSIFY_HPP_
