#ifndef HIVELR_SKEW_SHAPE_HPP_
#define HIVELR_SKEW_SHAPE_HPP_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hivelr/partition.hpp"

namespace hivelr {

// outer/inner with inner ⊆ outer. Cells are (r, c), 0-based, with
// inner_r <= c < outer_r.
class SkewShape {
 public:
  SkewShape() = default;
  SkewShape(Partition outer, Partition inner);
  explicit SkewShape(Partition outer) : outer_(std::move(outer)) {}

  // "OUTER/INNER" with partition syntax on both sides; a bare partition
  // means inner = 0.
  static SkewShape parse(std::string_view text);

  const Partition& outer() const noexcept { return outer_; }
  const Partition& inner() const noexcept { return inner_; }

  int cells() const noexcept { return outer_.weight() - inner_.weight(); }
  bool is_straight() const noexcept { return inner_.empty(); }

  std::string str() const;

  friend bool operator==(const SkewShape&, const SkewShape&) = default;
  friend auto operator<=>(const SkewShape&, const SkewShape&) = default;

 private:
  Partition outer_;
  Partition inner_;
};

std::ostream& operator<<(std::ostream& os, const SkewShape& s);

// 180-degree rotation inside the outer_1 x l(outer) bounding box.
SkewShape rotate_pi(const SkewShape& s);

// Deletes empty rows and empty columns.
SkewShape to_basic(const SkewShape& s);

bool is_row_basic(const SkewShape& s);
bool is_basic(const SkewShape& s);

// Edge-connected components, top to bottom, each normalized by to_basic.
// Throws std::invalid_argument for non-basic input.
std::vector<SkewShape> components(const SkewShape& s);

// Joins two basic shapes corner to corner, `upper` to the northeast of
// `lower`, so that components() returns them back (in that order when both
// are connected).
SkewShape join_corner(const SkewShape& upper, const SkewShape& lower);

// All basic skew shapes with between 1 and max_cells cells.
std::vector<SkewShape> basic_shapes_up_to(int max_cells);

// Rows of '#' (cell) and '.' (inner box) for a quick look at a diagram.
std::string ascii_diagram(const SkewShape& s);

}  // namespace hivelr

#endif  // HIVELR_SKEW_SHAPE_HPP_
