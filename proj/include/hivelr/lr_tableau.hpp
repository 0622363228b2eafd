#ifndef HIVELR_LR_TABLEAU_HPP_
#define HIVELR_LR_TABLEAU_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include "hivelr/partition.hpp"
#include "hivelr/skew_shape.hpp"

namespace hivelr {

// A filling of a skew shape. entries[r] holds row r's entries from column
// inner_r to outer_r - 1.
struct LRTableau {
  SkewShape shape;
  std::vector<std::vector<int>> entries;

  int at(int row, int col) const {
    return entries[static_cast<std::size_t>(row)]
                  [static_cast<std::size_t>(col - shape.inner()[static_cast<std::size_t>(row)])];
  }
  friend bool operator==(const LRTableau&, const LRTableau&) = default;
};

struct TableauSearchOptions {
  // Check the lattice condition on every prefix while filling. When false the
  // condition is only checked on complete fillings.
  bool prune_lattice = true;
};

// Littlewood-Richardson tableaux of shape lambda/mu and content nu: rows weakly
// increase, columns strictly increase, and the reverse reading word (rows
// right to left, top to bottom) is a lattice word.
std::vector<LRTableau> enumerate_lr_tableaux(const Partition& lambda,
                                             const Partition& mu,
                                             const Partition& nu,
                                             TableauSearchOptions opts = {});

std::int64_t lr_tableau_count(const Partition& lambda, const Partition& mu,
                              const Partition& nu,
                              TableauSearchOptions opts = {});

// Full re-check of the three defining conditions, independent of the search.
bool is_lr_tableau(const LRTableau& t, const Partition& content);

}  // namespace hivelr

#endif  // HIVELR_LR_TABLEAU_HPP_
