#ifndef HIVELR_HIVE_HPP_
#define HIVELR_HIVE_HPP_

#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

#include "hivelr/partition.hpp"

namespace hivelr {

// Vertex (i, j) of the triangular graph, 0 <= i, j and i + j <= n.
struct Vertex {
  int i = 0;
  int j = 0;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

// Directions of the three edge families. Each edge label is the label at the
// head minus the label at the tail; with these orientations the boundary
// edges carry the parts of lambda (i grows), nu (j grows) and mu (along the
// side i + j = n).
enum class EdgeDirection { kLambda, kNu, kMu };

// n-hive: integer labels a_ij on the vertices of a side-n triangle.
class Hive {
 public:
  explicit Hive(int n);

  int n() const noexcept { return n_; }

  std::int64_t at(int i, int j) const { return labels_[index(i, j)]; }
  std::int64_t& at(int i, int j) { return labels_[index(i, j)]; }
  std::int64_t at(Vertex v) const { return at(v.i, v.j); }

  // Label of the edge leaving `tail` in direction d. Requires the head to be
  // inside the hive.
  std::int64_t edge_label(EdgeDirection d, Vertex tail) const;

  // Rows from the apex a_00 down to the base i + j = n; row r lists
  // a_{0,r}, a_{1,r-1}, ..., a_{r,0}.
  std::vector<std::vector<std::int64_t>> rows() const;

  friend bool operator==(const Hive&, const Hive&) = default;
  friend auto operator<=>(const Hive&, const Hive&) = default;

 private:
  std::size_t index(int i, int j) const;

  int n_;
  std::vector<std::int64_t> labels_;
};

// Boundary data of an LR-hive: lambda, mu, nu zero-padded to length n.
struct HiveBoundary {
  // Throws std::invalid_argument when a length exceeds n, n < 1, or
  // |mu| + |nu| != |lambda|.
  HiveBoundary(Partition lambda, Partition mu, Partition nu, int n);

  bool on_boundary(Vertex v) const noexcept {
    return v.i == 0 || v.j == 0 || v.i + v.j == n;
  }
  // a_{0,i} = nu_1 + ... + nu_i, a_{j,n-j} = |nu| + mu_1 + ... + mu_j,
  // a_{k,0} = lambda_1 + ... + lambda_k.
  std::int64_t label(Vertex v) const;

  // The hive with boundary labels set and zero interior.
  Hive skeleton() const;

  int n;
  Partition lambda;
  Partition mu;
  Partition nu;
};

// Boundary match plus the rhombus inequality on every unit rhombus: the two
// labels on the shared edge sum to at least the two opposite labels. Throws
// std::invalid_argument on a size mismatch.
bool is_valid_lr_hive(const Hive& h, const HiveBoundary& b);

enum class ScanOrder { kRowMajor, kAntiDiagonal };

// Depth-first enumeration of all integer LR-hives with the given boundary.
// Returns nothing when |mu| + |nu| != |lambda|. Output order is the order of
// discovery, i.e. lexicographic in the scan order of interior vertices.
std::vector<Hive> enumerate_lr_hives(const Partition& lambda,
                                     const Partition& mu, const Partition& nu,
                                     int n,
                                     ScanOrder order = ScanOrder::kRowMajor);

// Same search without materializing the hives.
std::int64_t count_lr_hives(const Partition& lambda, const Partition& mu,
                            const Partition& nu, int n,
                            ScanOrder order = ScanOrder::kRowMajor);

// Streams each hive to `visit`; returning false from visit stops the search.
// Returns the number of hives visited.
std::int64_t for_each_lr_hive(const Partition& lambda, const Partition& mu,
                              const Partition& nu, int n, ScanOrder order,
                              const std::function<bool(const Hive&)>& visit);

// Necessary conditions for c^lambda_{mu nu} != 0: weights add up, lengths
// satisfy max(l(mu), l(nu)) <= l(lambda) <= l(mu) + l(nu), mu, nu ⊆ lambda.
bool lr_support(const Partition& lambda, const Partition& mu,
                const Partition& nu);

// c^lambda_{mu nu} as the number of LR-hives, with n = max(l(lambda),
// l(mu) + l(nu)). Zero without search when lr_support fails.
std::int64_t lr_coefficient_hive(const Partition& lambda, const Partition& mu,
                                 const Partition& nu);

// Interior vertices whose label is not the same in every LR-hive. Throws
// std::domain_error when there is no LR-hive.
std::vector<Vertex> free_interior_vertices(const Partition& lambda,
                                           const Partition& mu,
                                           const Partition& nu, int n);

}  // namespace hivelr

#endif  // HIVELR_HIVE_HPP_
