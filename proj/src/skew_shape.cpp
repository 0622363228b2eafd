#include "hivelr/skew_shape.hpp"

#include <ostream>
#include <stdexcept>

namespace hivelr {

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!contains(inner_, outer_)) {
    throw std::invalid_argument("skew shape " + outer_.str() + "/" +
                                inner_.str() + ": inner not contained in outer");
  }
}

SkewShape SkewShape::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return SkewShape(Partition::parse(text));
  }
  if (text.find('/', slash + 1) != std::string_view::npos) {
    throw std::invalid_argument("skew shape '" + std::string(text) +
                                "' has more than one '/'");
  }
  return SkewShape(Partition::parse(text.substr(0, slash)),
                   Partition::parse(text.substr(slash + 1)));
}

std::string SkewShape::str() const { return outer_.str() + "/" + inner_.str(); }

std::ostream& operator<<(std::ostream& os, const SkewShape& s) {
  return os << s.str();
}

SkewShape rotate_pi(const SkewShape& s) {
  int m = s.outer().first();
  int n = static_cast<int>(s.outer().length());
  return SkewShape(complement(s.inner(), m, n), complement(s.outer(), m, n));
}

namespace {

// Drops rows r with outer_r == inner_r.
SkewShape drop_empty_rows(const SkewShape& s) {
  std::vector<int> outer;
  std::vector<int> inner;
  for (std::size_t r = 0; r < s.outer().length(); ++r) {
    if (s.outer()[r] == s.inner()[r]) continue;
    outer.push_back(s.outer()[r]);
    inner.push_back(s.inner()[r]);
  }
  return SkewShape(Partition(std::move(outer)), Partition(std::move(inner)));
}

SkewShape transpose(const SkewShape& s) {
  return SkewShape(conjugate(s.outer()), conjugate(s.inner()));
}

}  // namespace

SkewShape to_basic(const SkewShape& s) {
  return transpose(drop_empty_rows(transpose(drop_empty_rows(s))));
}

bool is_row_basic(const SkewShape& s) {
  for (std::size_t r = 0; r < s.outer().length(); ++r) {
    if (s.inner()[r] >= s.outer()[r]) return false;
  }
  return true;
}

bool is_basic(const SkewShape& s) {
  return is_row_basic(s) && is_row_basic(transpose(s));
}

std::vector<SkewShape> components(const SkewShape& s) {
  if (!is_basic(s)) {
    throw std::invalid_argument("components: " + s.str() +
                                " is not basic; call to_basic first");
  }
  std::vector<SkewShape> out;
  const std::size_t rows = s.outer().length();
  std::size_t start = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    // Row r and row r+1 share an edge iff their column intervals overlap.
    bool split = r + 1 == rows || s.inner()[r] >= s.outer()[r + 1];
    if (!split) continue;
    std::vector<int> outer;
    std::vector<int> inner;
    for (std::size_t k = start; k <= r; ++k) {
      outer.push_back(s.outer()[k]);
      inner.push_back(s.inner()[k]);
    }
    out.push_back(
        to_basic(SkewShape(Partition(std::move(outer)), Partition(std::move(inner)))));
    start = r + 1;
  }
  return out;
}

SkewShape join_corner(const SkewShape& upper, const SkewShape& lower) {
  if (!is_basic(upper) || !is_basic(lower) || upper.cells() == 0 ||
      lower.cells() == 0) {
    throw std::invalid_argument("join_corner needs two non-empty basic shapes");
  }
  const int shift = lower.outer().first();
  std::vector<int> outer;
  std::vector<int> inner;
  for (std::size_t r = 0; r < upper.outer().length(); ++r) {
    outer.push_back(upper.outer()[r] + shift);
    inner.push_back(upper.inner()[r] + shift);
  }
  for (std::size_t r = 0; r < lower.outer().length(); ++r) {
    outer.push_back(lower.outer()[r]);
    inner.push_back(lower.inner()[r]);
  }
  return SkewShape(Partition(std::move(outer)), Partition(std::move(inner)));
}

std::vector<SkewShape> basic_shapes_up_to(int max_cells) {
  std::vector<SkewShape> out;
  for (const auto& outer : partitions_in_box(max_cells, max_cells)) {
    if (outer.empty()) continue;
    // Basic forces inner_i <= outer_{i+1}.
    std::vector<int> cap;
    for (std::size_t i = 1; i < outer.length(); ++i) cap.push_back(outer[i]);
    Partition upper(std::move(cap));
    int lo = std::max(0, outer.weight() - max_cells);
    for (int w = lo; w < outer.weight(); ++w) {
      for (auto& inner : partitions_between(w, Partition{}, upper)) {
        SkewShape s(outer, std::move(inner));
        if (is_basic(s)) out.push_back(std::move(s));
      }
    }
  }
  return out;
}

std::string ascii_diagram(const SkewShape& s) {
  std::string out;
  for (std::size_t r = 0; r < s.outer().length(); ++r) {
    out.append(static_cast<std::size_t>(s.inner()[r]), '.');
    out.append(static_cast<std::size_t>(s.outer()[r] - s.inner()[r]), '#');
    out += '\n';
  }
  return out;
}

}  // namespace hivelr
