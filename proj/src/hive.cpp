#include "hivelr/hive.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>
#include <string>

namespace hivelr {

namespace {

constexpr std::int64_t kMaxWeight = std::int64_t{1} << 31;

struct Rhombus {
  // Vertices on the shared edge, then the two opposite vertices.
  Vertex obtuse[2];
  Vertex acute[2];
};

std::vector<Rhombus> unit_rhombi(int n) {
  std::vector<Rhombus> out;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; i + j <= n; ++j) {
      if (i + j + 2 <= n) {
        out.push_back({{{i + 1, j}, {i, j + 1}}, {{i, j}, {i + 1, j + 1}}});
      }
      if (j >= 1 && i + j + 1 <= n) {
        out.push_back({{{i, j}, {i + 1, j}}, {{i, j + 1}, {i + 1, j - 1}}});
      }
      if (i >= 1 && i + j + 1 <= n) {
        out.push_back({{{i, j}, {i, j + 1}}, {{i + 1, j}, {i - 1, j + 1}}});
      }
    }
  }
  return out;
}

bool rhombus_holds(const Hive& h, const Rhombus& r) {
  return h.at(r.obtuse[0]) + h.at(r.obtuse[1]) >=
         h.at(r.acute[0]) + h.at(r.acute[1]);
}

std::vector<Vertex> interior_in_order(int n, ScanOrder order) {
  std::vector<Vertex> out;
  if (order == ScanOrder::kRowMajor) {
    for (int i = 1; i < n; ++i) {
      for (int j = 1; i + j < n; ++j) out.push_back({i, j});
    }
  } else {
    for (int s = 2; s < n; ++s) {
      for (int i = 1; i < s; ++i) out.push_back({i, s - i});
    }
  }
  return out;
}

// Depth-first search over interior labels. Each rhombus inequality is applied
// as a bound on whichever of its vertices comes last in the scan order, so
// every partial assignment that survives satisfies all fully-assigned rhombi.
class HiveSearch {
 public:
  HiveSearch(const HiveBoundary& boundary, ScanOrder order)
      : boundary_(boundary),
        hive_(boundary.skeleton()),
        order_(interior_in_order(boundary.n, order)),
        steps_(order_.size()),
        upper_(static_cast<std::int64_t>(boundary.lambda.weight())) {
    const int n = boundary.n;
    std::vector<int> position((n + 1) * (n + 1), -1);
    for (std::size_t k = 0; k < order_.size(); ++k) {
      position[order_[k].i * (n + 1) + order_[k].j] = static_cast<int>(k);
    }
    auto pos = [&](Vertex v) { return position[v.i * (n + 1) + v.j]; };

    for (const auto& r : unit_rhombi(n)) {
      Vertex all[4] = {r.obtuse[0], r.obtuse[1], r.acute[0], r.acute[1]};
      int last = -1;
      int role = -1;
      for (int k = 0; k < 4; ++k) {
        if (pos(all[k]) > last) {
          last = pos(all[k]);
          role = k;
        }
      }
      if (last < 0) {
        if (!rhombus_holds(hive_, r)) infeasible_ = true;
        continue;
      }
      Bound b;
      if (role < 2) {
        // a_v >= acute0 + acute1 - other obtuse
        b.is_lower = true;
        b.plus = {r.acute[0], r.acute[1]};
        b.minus = r.obtuse[1 - role];
      } else {
        // a_v <= obtuse0 + obtuse1 - other acute
        b.is_lower = false;
        b.plus = {r.obtuse[0], r.obtuse[1]};
        b.minus = r.acute[1 - (role - 2)];
      }
      steps_[static_cast<std::size_t>(last)].push_back(b);
    }
  }

  std::int64_t run(const std::function<bool(const Hive&)>& visit) {
    if (infeasible_) return 0;
    visit_ = &visit;
    found_ = 0;
    stopped_ = false;
    descend(0);
    return found_;
  }

 private:
  struct Bound {
    bool is_lower;
    std::array<Vertex, 2> plus;
    Vertex minus;
  };

  void descend(std::size_t k) {
    if (stopped_) return;
    if (k == order_.size()) {
      if (!is_valid_lr_hive(hive_, boundary_)) {
        throw std::logic_error("hive search produced an invalid hive");
      }
      ++found_;
      if (!(*visit_)(hive_)) stopped_ = true;
      return;
    }
    std::int64_t lo = 0;
    std::int64_t hi = upper_;
    for (const auto& b : steps_[k]) {
      std::int64_t v = hive_.at(b.plus[0]) + hive_.at(b.plus[1]) - hive_.at(b.minus);
      if (b.is_lower) {
        lo = std::max(lo, v);
      } else {
        hi = std::min(hi, v);
      }
    }
    const Vertex at = order_[k];
    for (std::int64_t x = lo; x <= hi && !stopped_; ++x) {
      hive_.at(at.i, at.j) = x;
      descend(k + 1);
    }
    hive_.at(at.i, at.j) = 0;
  }

  const HiveBoundary& boundary_;
  Hive hive_;
  std::vector<Vertex> order_;
  std::vector<std::vector<Bound>> steps_;
  std::int64_t upper_;
  bool infeasible_ = false;
  const std::function<bool(const Hive&)>* visit_ = nullptr;
  std::int64_t found_ = 0;
  bool stopped_ = false;
};

}  // namespace

Hive::Hive(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("hive size must be non-negative");
  labels_.assign(static_cast<std::size_t>((n + 1) * (n + 1)), 0);
}

std::size_t Hive::index(int i, int j) const {
  if (i < 0 || j < 0 || i + j > n_) {
    throw std::out_of_range("hive vertex (" + std::to_string(i) + "," +
                            std::to_string(j) + ") outside a " +
                            std::to_string(n_) + "-hive");
  }
  return static_cast<std::size_t>(i * (n_ + 1) + j);
}

std::int64_t Hive::edge_label(EdgeDirection d, Vertex tail) const {
  switch (d) {
    case EdgeDirection::kLambda:
      return at(tail.i + 1, tail.j) - at(tail);
    case EdgeDirection::kNu:
      return at(tail.i, tail.j + 1) - at(tail);
    case EdgeDirection::kMu:
      return at(tail.i + 1, tail.j - 1) - at(tail);
  }
  throw std::invalid_argument("unknown edge direction");
}

std::vector<std::vector<std::int64_t>> Hive::rows() const {
  std::vector<std::vector<std::int64_t>> out;
  for (int r = 0; r <= n_; ++r) {
    std::vector<std::int64_t> row;
    for (int i = 0; i <= r; ++i) row.push_back(at(i, r - i));
    out.push_back(std::move(row));
  }
  return out;
}

HiveBoundary::HiveBoundary(Partition l, Partition m, Partition v, int size)
    : n(size), lambda(std::move(l)), mu(std::move(m)), nu(std::move(v)) {
  if (n < 1) throw std::invalid_argument("hive size must be at least 1");
  auto un = static_cast<std::size_t>(n);
  if (lambda.length() > un || mu.length() > un || nu.length() > un) {
    throw std::invalid_argument("partition longer than hive size " +
                                std::to_string(n));
  }
  if (mu.weight() + nu.weight() != lambda.weight()) {
    throw std::invalid_argument("hive boundary needs |mu| + |nu| = |lambda|");
  }
  if (lambda.weight() > kMaxWeight) {
    throw std::out_of_range("weight too large for hive labels");
  }
}

std::int64_t HiveBoundary::label(Vertex v) const {
  auto prefix = [](const Partition& p, int k) {
    std::int64_t s = 0;
    for (int t = 0; t < k; ++t) s += p[static_cast<std::size_t>(t)];
    return s;
  };
  if (v.i == 0) return prefix(nu, v.j);
  if (v.j == 0) return prefix(lambda, v.i);
  if (v.i + v.j == n) return nu.weight() + prefix(mu, v.i);
  throw std::invalid_argument("vertex is not on the hive boundary");
}

Hive HiveBoundary::skeleton() const {
  Hive h(n);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; i + j <= n; ++j) {
      if (on_boundary({i, j})) h.at(i, j) = label({i, j});
    }
  }
  return h;
}

bool is_valid_lr_hive(const Hive& h, const HiveBoundary& b) {
  if (h.n() != b.n) {
    throw std::invalid_argument("hive size " + std::to_string(h.n()) +
                                " does not match boundary size " +
                                std::to_string(b.n));
  }
  for (int i = 0; i <= b.n; ++i) {
    for (int j = 0; i + j <= b.n; ++j) {
      if (b.on_boundary({i, j}) && h.at(i, j) != b.label({i, j})) return false;
    }
  }
  for (const auto& r : unit_rhombi(b.n)) {
    if (!rhombus_holds(h, r)) return false;
  }
  return true;
}

std::int64_t for_each_lr_hive(const Partition& lambda, const Partition& mu,
                              const Partition& nu, int n, ScanOrder order,
                              const std::function<bool(const Hive&)>& visit) {
  if (mu.weight() + nu.weight() != lambda.weight()) return 0;
  HiveBoundary boundary(lambda, mu, nu, n);
  HiveSearch search(boundary, order);
  return search.run(visit);
}

std::vector<Hive> enumerate_lr_hives(const Partition& lambda,
                                     const Partition& mu, const Partition& nu,
                                     int n, ScanOrder order) {
  std::vector<Hive> out;
  for_each_lr_hive(lambda, mu, nu, n, order, [&](const Hive& h) {
    out.push_back(h);
    return true;
  });
  return out;
}

std::int64_t count_lr_hives(const Partition& lambda, const Partition& mu,
                            const Partition& nu, int n, ScanOrder order) {
  return for_each_lr_hive(lambda, mu, nu, n, order,
                          [](const Hive&) { return true; });
}

bool lr_support(const Partition& lambda, const Partition& mu,
                const Partition& nu) {
  if (lambda.weight() != mu.weight() + nu.weight()) return false;
  if (mu.length() > lambda.length() || nu.length() > lambda.length()) {
    return false;
  }
  if (lambda.length() > mu.length() + nu.length()) return false;
  return contains(mu, lambda) && contains(nu, lambda);
}

std::int64_t lr_coefficient_hive(const Partition& lambda, const Partition& mu,
                                 const Partition& nu) {
  if (!lr_support(lambda, mu, nu)) return 0;
  int n = static_cast<int>(
      std::max(lambda.length(), mu.length() + nu.length()));
  return count_lr_hives(lambda, mu, nu, std::max(n, 1));
}

std::vector<Vertex> free_interior_vertices(const Partition& lambda,
                                           const Partition& mu,
                                           const Partition& nu, int n) {
  auto hives = enumerate_lr_hives(lambda, mu, nu, n);
  if (hives.empty()) {
    throw std::domain_error("no LR-hive for lambda=" + lambda.str() +
                            " mu=" + mu.str() + " nu=" + nu.str());
  }
  std::vector<Vertex> out;
  for (const auto& v : interior_in_order(n, ScanOrder::kRowMajor)) {
    const auto first = hives.front().at(v);
    bool varies = std::any_of(hives.begin(), hives.end(),
                              [&](const Hive& h) { return h.at(v) != first; });
    if (varies) out.push_back(v);
  }
  return out;
}

}  // namespace hivelr
