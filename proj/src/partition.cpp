#include "hivelr/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace hivelr {

namespace {

int parse_int(std::string_view tok, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw std::invalid_argument("bad partition token '" + std::string(tok) +
                                "' in '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) {
      throw std::invalid_argument("partition has a negative part");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ',' || text[pos] == ' ' ||
                                 text[pos] == '\t')) {
      ++pos;
    }
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && text[end] != ',' && text[end] != ' ' &&
           text[end] != '\t') {
      ++end;
    }
    std::string_view tok = text.substr(pos, end - pos);
    pos = end;

    auto caret = tok.find('^');
    if (caret == std::string_view::npos) {
      parts.push_back(parse_int(tok, text));
      continue;
    }
    int value = parse_int(tok.substr(0, caret), text);
    int times = parse_int(tok.substr(caret + 1), text);
    if (times < 1) {
      throw std::invalid_argument("exponent must be at least 1 in '" +
                                  std::string(tok) + "'");
    }
    parts.insert(parts.end(), static_cast<std::size_t>(times), value);
  }
  return Partition(std::move(parts));
}

std::vector<int> Partition::padded(std::size_t n) const {
  std::vector<int> out(n, 0);
  std::copy_n(parts_.begin(), std::min(n, parts_.size()), out.begin());
  return out;
}

std::string Partition::str() const {
  if (parts_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
  return os << p.str();
}

Partition conjugate(const Partition& p) {
  std::vector<int> out(static_cast<std::size_t>(p.first()), 0);
  for (int part : p.parts()) {
    for (int j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(out));
}

Partition add(const Partition& p, const Partition& q) {
  std::size_t n = std::max(p.length(), q.length());
  std::vector<int> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = p[i] + q[i];
  return Partition(std::move(out));
}

Partition unite(const Partition& p, const Partition& q) {
  std::vector<int> out(p.parts().begin(), p.parts().end());
  out.insert(out.end(), q.parts().begin(), q.parts().end());
  std::sort(out.begin(), out.end(), std::greater<>());
  return Partition(std::move(out));
}

Partition rectangle(int v, int k) {
  if (v < 0 || k < 0) throw std::invalid_argument("negative rectangle side");
  return Partition(std::vector<int>(static_cast<std::size_t>(k), v));
}

bool contains(const Partition& inner, const Partition& outer) {
  if (inner.length() > outer.length()) return false;
  for (std::size_t i = 0; i < inner.length(); ++i) {
    if (inner[i] > outer[i]) return false;
  }
  return true;
}

bool fits_in_box(const Partition& p, int m, int n) {
  return m >= 0 && n >= 0 && p.first() <= m &&
         p.length() <= static_cast<std::size_t>(n);
}

Partition complement(const Partition& p, int m, int n) {
  if (!fits_in_box(p, m, n)) {
    throw std::invalid_argument("partition " + p.str() + " does not fit in " +
                                std::to_string(m) + "^" + std::to_string(n));
  }
  auto un = static_cast<std::size_t>(n);
  std::vector<int> out(un);
  for (std::size_t k = 0; k < un; ++k) out[k] = m - p[un - 1 - k];
  return Partition(std::move(out));
}

std::vector<PartRun> part_runs(const Partition& p) {
  std::vector<PartRun> runs;
  for (int part : p.parts()) {
    if (!runs.empty() && runs.back().value == part) {
      ++runs.back().multiplicity;
    } else {
      runs.push_back({part, 1});
    }
  }
  return runs;
}

ShapeClass shape_class(const Partition& p) {
  ShapeClass c;
  auto runs = part_runs(p);
  if (runs.size() == 1) {
    int a = runs[0].value;
    int k = runs[0].multiplicity;
    c.is_rectangle = true;
    c.is_one_line_rectangle = (a == 1 || k == 1);
    c.is_two_line_rectangle = a > 1 && k > 1 && (a == 2 || k == 2);
  } else if (runs.size() == 2) {
    const auto& [a, r] = runs[0];
    const auto& [b, s] = runs[1];
    c.is_fat_hook = true;
    c.is_near_rectangle = (a - b == 1 || b == 1 || r == 1 || s == 1);
  }
  return c;
}

int SegmentSeq::vertical_total() const {
  int total = 0;
  for (std::size_t i = starts_vertical ? 0 : 1; i < lengths.size(); i += 2) {
    total += lengths[i];
  }
  return total;
}

int SegmentSeq::horizontal_total() const {
  int total = 0;
  for (std::size_t i = starts_vertical ? 1 : 0; i < lengths.size(); i += 2) {
    total += lengths[i];
  }
  return total;
}

SegmentSeq boundary_segments(const Partition& p, int m, int n) {
  if (!fits_in_box(p, m, n)) {
    throw std::invalid_argument("partition " + p.str() + " does not fit in " +
                                std::to_string(m) + "^" + std::to_string(n));
  }
  SegmentSeq seq;
  bool have_dir = false;
  bool last_vertical = false;
  auto step = [&](bool vertical, int len) {
    if (len == 0) return;
    if (have_dir && last_vertical == vertical) {
      seq.lengths.back() += len;
      return;
    }
    if (!have_dir) seq.starts_vertical = vertical;
    have_dir = true;
    last_vertical = vertical;
    seq.lengths.push_back(len);
  };
  // Walk up from the bottom row; x is the current column of the path.
  int x = 0;
  for (int row = n - 1; row >= 0; --row) {
    int part = p[static_cast<std::size_t>(row)];
    step(false, part - x);
    x = std::max(x, part);
    step(true, 1);
  }
  step(false, m - x);
  return seq;
}

int shortness(const Partition& p, int m, int n) {
  auto seq = boundary_segments(p, m, n);
  if (seq.lengths.empty()) return 0;
  return *std::min_element(seq.lengths.begin(), seq.lengths.end());
}

std::vector<Partition> partitions_between(int weight, const Partition& lower,
                                          const Partition& upper) {
  std::vector<Partition> out;
  if (weight < lower.weight() || weight > upper.weight() ||
      !contains(lower, upper)) {
    return out;
  }
  const std::size_t rows = upper.length();
  // Suffix sums of the lower bound so we never leave too little weight.
  std::vector<int> lower_tail(rows + 1, 0);
  std::vector<int> upper_tail(rows + 1, 0);
  for (std::size_t i = rows; i-- > 0;) {
    lower_tail[i] = lower_tail[i + 1] + lower[i];
    upper_tail[i] = upper_tail[i + 1] + upper[i];
  }
  std::vector<int> current;
  current.reserve(rows);

  std::function<void(std::size_t, int, int)> rec = [&](std::size_t row,
                                                       int remaining,
                                                       int cap) {
    if (remaining == 0) {
      if (row >= lower.length()) out.emplace_back(current);
      return;
    }
    if (row >= rows) return;
    int hi = std::min({cap, upper[row], remaining - lower_tail[row + 1]});
    int lo = std::max(lower[row], 1);
    for (int v = hi; v >= lo; --v) {
      // The rows below can hold at most min(v, upper_i) each.
      if (remaining - v > upper_tail[row + 1]) break;
      current.push_back(v);
      rec(row + 1, remaining - v, v);
      current.pop_back();
    }
  };
  rec(0, weight, upper.first());
  return out;
}

std::vector<Partition> partitions_of(int weight, int max_part, int max_len) {
  if (weight < 0 || max_part < 0 || max_len < 0) return {};
  return partitions_between(weight, Partition{}, rectangle(max_part, max_len));
}

std::vector<Partition> partitions_of(int weight) {
  return partitions_of(weight, weight, weight);
}

std::vector<Partition> partitions_in_box(int m, int n) {
  std::vector<Partition> out;
  for (int w = 0; w <= m * n; ++w) {
    auto level = partitions_of(w, m, n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace hivelr
