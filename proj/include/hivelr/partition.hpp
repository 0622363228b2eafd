#ifndef HIVELR_PARTITION_HPP_
#define HIVELR_PARTITION_HPP_

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hivelr {

// A weakly decreasing sequence of positive integers. Zero parts are never
// stored, so the empty sequence is the zero partition and two partitions are
// equal exactly when their diagrams are.
class Partition {
 public:
  Partition() = default;

  // Accepts trailing zeros (they are stripped). Throws std::invalid_argument
  // on a negative part or an increasing adjacent pair.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  // Parses "4,3,2,1", "4 3 2 1" or exponent notation "9^2,6^3". The tokens
  // "0" and "" denote the zero partition.
  static Partition parse(std::string_view text);

  std::span<const int> parts() const noexcept { return parts_; }

  // Part i (0-based); reads as 0 past the length.
  int operator[](std::size_t i) const noexcept {
    return i < parts_.size() ? parts_[i] : 0;
  }

  std::size_t length() const noexcept { return parts_.size(); }
  int weight() const noexcept { return weight_; }
  bool empty() const noexcept { return parts_.empty(); }
  int first() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

  // Parts zero-padded (or truncated, which callers must not rely on) to n.
  std::vector<int> padded(std::size_t n) const;

  // Canonical text form "4,3,2,1"; the zero partition prints as "0".
  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  // Lexicographic on parts.
  friend std::strong_ordering operator<=>(const Partition& a,
                                          const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

Partition conjugate(const Partition& p);

// Componentwise sum with implicit zero padding.
Partition add(const Partition& p, const Partition& q);

// Multiset union of parts, sorted decreasingly.
Partition unite(const Partition& p, const Partition& q);

// (v^k), the zero partition when v or k is 0.
Partition rectangle(int v, int k);

// True iff inner_i <= outer_i for every i.
bool contains(const Partition& inner, const Partition& outer);

// True iff p fits inside the m-column, n-row box.
bool fits_in_box(const Partition& p, int m, int n);

// The m^n-complement: result_k = m - p_{n-k+1}. Throws std::invalid_argument
// when p does not fit in the box.
Partition complement(const Partition& p, int m, int n);

struct ShapeClass {
  bool is_rectangle = false;
  bool is_one_line_rectangle = false;
  bool is_two_line_rectangle = false;
  bool is_fat_hook = false;
  bool is_near_rectangle = false;
};

ShapeClass shape_class(const Partition& p);

// Run-length form (a1^p1, a2^p2, ...) with a1 > a2 > ... > 0.
struct PartRun {
  int value;
  int multiplicity;
};
std::vector<PartRun> part_runs(const Partition& p);

// Alternating vertical/horizontal run lengths of the lattice path that
// separates the diagram of p from the rest of the m x n box, traversed from
// the southwest corner to the northeast corner. Zero-length runs are omitted.
struct SegmentSeq {
  std::vector<int> lengths;
  bool starts_vertical = true;

  int vertical_total() const;
  int horizontal_total() const;
  friend bool operator==(const SegmentSeq&, const SegmentSeq&) = default;
};

SegmentSeq boundary_segments(const Partition& p, int m, int n);

// Length of the shortest straight segment of boundary_segments(p, m, n).
int shortness(const Partition& p, int m, int n);

// All partitions of `weight` with first part <= max_part and length <=
// max_len, in decreasing lexicographic order.
std::vector<Partition> partitions_of(int weight, int max_part, int max_len);
std::vector<Partition> partitions_of(int weight);

// All partitions fitting in the m x n box (including 0), grouped by weight.
std::vector<Partition> partitions_in_box(int m, int n);

// All partitions p of `weight` with lower ⊆ p ⊆ upper, decreasing
// lexicographic order.
std::vector<Partition> partitions_between(int weight, const Partition& lower,
                                          const Partition& upper);

}  // namespace hivelr

#endif  // HIVELR_PARTITION_HPP_
