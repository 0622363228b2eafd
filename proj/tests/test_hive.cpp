#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "hivelr/hive.hpp"
#include "hivelr/lr_tableau.hpp"
#include "oracles.hpp"

using hivelr::Hive;
using hivelr::HiveBoundary;
using hivelr::Partition;
using hivelr::ScanOrder;
using hivelr::Vertex;

namespace {

struct Triple {
  Partition lambda, mu, nu;
};

// Every (lambda, mu, nu) with |lambda| <= max_weight, all lengths <= max_len,
// mu ⊆ lambda and |nu| = |lambda| - |mu|.
std::vector<Triple> all_triples(int max_weight, int max_len) {
  std::vector<Triple> out;
  for (int w = 0; w <= max_weight; ++w) {
    for (const auto& lambda : hivelr::partitions_of(w, w, max_len)) {
      for (int k = 0; k <= w; ++k) {
        for (const auto& mu : hivelr::partitions_of(k, w, max_len)) {
          if (!contains(mu, lambda)) continue;
          for (const auto& nu : hivelr::partitions_of(w - k, w, max_len)) {
            out.push_back({lambda, mu, nu});
          }
        }
      }
    }
  }
  return out;
}

int default_n(const Triple& t) {
  return std::max<int>({1, static_cast<int>(t.lambda.length()),
                        static_cast<int>(t.mu.length() + t.nu.length())});
}

// Edge labels are non-negative and weakly decrease along each line parallel
// to the boundary edge of the same family.
bool edge_labels_monotone(const Hive& h) {
  const int n = h.n();
  for (int j = 0; j < n; ++j) {  // lambda family: (i,j) -> (i+1,j)
    std::int64_t prev = -1;
    for (int i = 0; i + j < n; ++i) {
      auto x = h.edge_label(hivelr::EdgeDirection::kLambda, {i, j});
      if (x < 0 || (prev >= 0 && x > prev)) return false;
      prev = x;
    }
  }
  for (int i = 0; i < n; ++i) {  // nu family: (i,j) -> (i,j+1)
    std::int64_t prev = -1;
    for (int j = 0; i + j < n; ++j) {
      auto x = h.edge_label(hivelr::EdgeDirection::kNu, {i, j});
      if (x < 0 || (prev >= 0 && x > prev)) return false;
      prev = x;
    }
  }
  for (int s = 1; s <= n; ++s) {  // mu family: (i,j) -> (i+1,j-1), i + j = s
    std::int64_t prev = -1;
    for (int i = 0; i < s; ++i) {
      auto x = h.edge_label(hivelr::EdgeDirection::kMu, {i, s - i});
      if (x < 0 || (prev >= 0 && x > prev)) return false;
      prev = x;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("hive storage and rows") {
  Hive h(2);
  h.at(1, 0) = 5;
  h.at(0, 2) = 3;
  CHECK(h.at(Vertex{1, 0}) == 5);
  CHECK_THROWS_AS(h.at(2, 1), std::out_of_range);
  auto rows = h.rows();
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == std::vector<std::int64_t>{0});
  CHECK(rows[1] == std::vector<std::int64_t>{0, 5});
  CHECK(rows[2] == std::vector<std::int64_t>{3, 0, 0});
}

TEST_CASE("boundary labels") {
  HiveBoundary b(Partition{3, 2, 1}, Partition{2, 1}, Partition{2, 1}, 3);
  CHECK(b.label({0, 0}) == 0);
  CHECK(b.label({0, 1}) == 2);
  CHECK(b.label({0, 3}) == 3);
  CHECK(b.label({1, 2}) == 5);
  CHECK(b.label({3, 0}) == 6);
  CHECK(b.label({2, 0}) == 5);
  CHECK_THROWS_AS(HiveBoundary(Partition{3, 2, 1}, Partition{2, 1}, Partition{2}, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(HiveBoundary(Partition{1, 1, 1}, Partition{1, 1}, Partition{1}, 2),
                  std::invalid_argument);
}

TEST_CASE("is_valid_lr_hive") {
  // n = 2 has no interior vertex; the boundary alone is a hive iff c = 1.
  HiveBoundary b(Partition{2, 1}, Partition{1}, Partition{1, 1}, 2);
  Hive h = b.skeleton();
  CHECK(is_valid_lr_hive(h, b));
  CHECK(oracle::lr_brute(Partition{2, 1}, Partition{1}, Partition{1, 1}) == 1);
  Hive off = h;
  off.at(0, 1) += 1;
  CHECK_FALSE(is_valid_lr_hive(off, b));

  auto hives = enumerate_lr_hives(Partition{3, 2, 1}, Partition{2, 1}, Partition{2, 1}, 3);
  REQUIRE(hives.size() == 2);
  HiveBoundary b3(Partition{3, 2, 1}, Partition{2, 1}, Partition{2, 1}, 3);
  for (const auto& g : hives) {
    CHECK(is_valid_lr_hive(g, b3));
    Hive bent = g;
    bent.at(1, 1) += 5;  // breaks a rhombus inequality
    CHECK_FALSE(is_valid_lr_hive(bent, b3));
  }
  CHECK_THROWS_AS(is_valid_lr_hive(Hive(4), b3), std::invalid_argument);
}

TEST_CASE("enumerate_lr_hives examples") {
  CHECK(enumerate_lr_hives(Partition{3, 2, 1}, Partition{2, 1}, Partition{2, 1}, 3).size() == 2);
  for (int n = 3; n <= 5; ++n) {
    CHECK(enumerate_lr_hives(Partition{3, 2, 1}, Partition{3, 2, 1}, Partition{}, n).size() == 1);
  }
  CHECK(enumerate_lr_hives(Partition{4, 2}, Partition{2, 1}, Partition{2, 1}, 4).size() == 1);
  CHECK(oracle::lr_brute(Partition{4, 2}, Partition{2, 1}, Partition{2, 1}) == 1);
  CHECK(enumerate_lr_hives(Partition{3, 2}, Partition{2, 1}, Partition{2, 1}, 4).empty());
}

TEST_CASE("lr_coefficient_hive examples") {
  CHECK(hivelr::lr_coefficient_hive(Partition{3, 2, 1}, Partition{2, 1}, Partition{2, 1}) == 2);
  CHECK(hivelr::lr_coefficient_hive(Partition{4, 3, 2, 1}, Partition{2, 2}, Partition{3, 2, 1}) == 2);
  CHECK(hivelr::lr_coefficient_hive(Partition{6, 6, 4, 4, 2, 2}, Partition{3, 3, 3},
                                    Partition{5, 4, 3, 2, 1}) == 2);
  CHECK(hivelr::lr_coefficient_hive(Partition{2, 1}, Partition{2, 1}, Partition{1}) == 0);
  CHECK_FALSE(hivelr::lr_support(Partition{2, 2}, Partition{3}, Partition{1}));
}

TEST_CASE("free interior vertices") {
  auto v = hivelr::free_interior_vertices(Partition{3, 2, 1}, Partition{2, 1}, Partition{2, 1}, 3);
  CHECK(v == std::vector<Vertex>{{1, 1}});
  CHECK(hivelr::free_interior_vertices(Partition{4, 2}, Partition{2, 1}, Partition{2, 1}, 4).empty());
  auto w = hivelr::free_interior_vertices(Partition{4, 3, 2, 1}, Partition{2, 2},
                                          Partition{3, 2, 1}, 4);
  REQUIRE(w.size() == 1);
  CHECK(w[0].i + w[0].j < 4);
  CHECK(w[0].i > 0);
  CHECK(w[0].j > 0);
  CHECK_THROWS_AS(hivelr::free_interior_vertices(Partition{3, 2}, Partition{2, 1},
                                                 Partition{2, 1}, 4),
                  std::domain_error);
}

TEST_CASE("for_each_lr_hive can stop early") {
  int seen = 0;
  hivelr::for_each_lr_hive(Partition{3, 2, 1}, Partition{2, 1}, Partition{2, 1}, 3,
                           ScanOrder::kRowMajor, [&](const Hive&) {
                             ++seen;
                             return false;
                           });
  CHECK(seen == 1);
}

// ---- properties -------------------------------------------------------------

TEST_CASE("hive count equals brute-force filling count for |lambda| <= 7") {
  for (const auto& t : all_triples(7, 4)) {
    REQUIRE(hivelr::count_lr_hives(t.lambda, t.mu, t.nu, default_n(t)) ==
            oracle::lr_brute(t.lambda, t.mu, t.nu));
  }
}

TEST_CASE("hive count equals tableau count for |lambda| <= 10, lengths <= 5") {
  std::size_t checked = 0;
  for (const auto& t : all_triples(10, 5)) {
    const auto h = hivelr::lr_coefficient_hive(t.lambda, t.mu, t.nu);
    REQUIRE(h == hivelr::lr_tableau_count(t.lambda, t.mu, t.nu));
    ++checked;
  }
  CHECK(checked > 10000);
}

TEST_CASE("hive count equals tableau count on random triples up to weight 16") {
  std::mt19937_64 rng(20241016);
  int nonzero = 0;
  for (int k = 0; k < 200; ++k) {
    const int w = std::uniform_int_distribution<int>(1, 16)(rng);
    const Partition lambda = oracle::random_partition(rng, w, 6);
    // mu: random sub-diagram of lambda.
    std::vector<int> m;
    int prev = lambda.first();
    for (std::size_t r = 0; r < lambda.length(); ++r) {
      int x = std::uniform_int_distribution<int>(0, std::min(prev, lambda[r]))(rng);
      m.push_back(x);
      prev = x;
    }
    const Partition mu(m);
    const Partition nu = oracle::random_partition(rng, w - mu.weight(), 6);
    const auto h = hivelr::lr_coefficient_hive(lambda, mu, nu);
    REQUIRE(h == hivelr::lr_tableau_count(lambda, mu, nu));
    if (h > 0) ++nonzero;
  }
  CHECK(nonzero > 20);
}

TEST_CASE("scan order does not change the hive set; edge labels are monotone") {
  for (const auto& t : all_triples(8, 4)) {
    if (!hivelr::lr_support(t.lambda, t.mu, t.nu)) continue;
    const int n = default_n(t);
    auto a = enumerate_lr_hives(t.lambda, t.mu, t.nu, n, ScanOrder::kRowMajor);
    auto b = enumerate_lr_hives(t.lambda, t.mu, t.nu, n, ScanOrder::kAntiDiagonal);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    REQUIRE(a == b);
    const HiveBoundary bd(t.lambda, t.mu, t.nu, n);
    for (const auto& h : a) {
      REQUIRE(is_valid_lr_hive(h, bd));
      REQUIRE(edge_labels_monotone(h));
    }
  }
}

TEST_CASE("hive size beyond the minimum does not change the count") {
  for (const auto& t : all_triples(6, 3)) {
    const int n = default_n(t);
    REQUIRE(hivelr::count_lr_hives(t.lambda, t.mu, t.nu, n) ==
            hivelr::count_lr_hives(t.lambda, t.mu, t.nu, n + 1));
  }
}

TEST_CASE("symmetry under swapping factors and conjugating, |lambda| <= 10") {
  for (const auto& t : all_triples(10, 10)) {
    const auto c = hivelr::lr_coefficient_hive(t.lambda, t.mu, t.nu);
    REQUIRE(c == hivelr::lr_coefficient_hive(t.lambda, t.nu, t.mu));
    REQUIRE(c == hivelr::lr_coefficient_hive(conjugate(t.lambda), conjugate(t.mu),
                                             conjugate(t.nu)));
  }
}

TEST_CASE("adding a column or a row never lowers the coefficient") {
  std::mt19937_64 rng(7);
  std::vector<Triple> pool;
  for (const auto& t : all_triples(10, 5)) {
    if (hivelr::lr_coefficient_hive(t.lambda, t.mu, t.nu) > 0) pool.push_back(t);
  }
  REQUIRE(pool.size() > 100);
  for (int k = 0; k < 100; ++k) {
    const Triple& t = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    const int a = std::uniform_int_distribution<int>(1, 3)(rng);
    const int b = std::uniform_int_distribution<int>(0, a)(rng);
    const int c = a - b;
    const auto base = hivelr::lr_coefficient_hive(t.lambda, t.mu, t.nu);
    using hivelr::rectangle;
    const auto col = hivelr::lr_coefficient_hive(add(t.lambda, rectangle(1, a)),
                                                 add(t.mu, rectangle(1, b)),
                                                 add(t.nu, rectangle(1, c)));
    const auto row = hivelr::lr_coefficient_hive(unite(t.lambda, Partition{a}),
                                                 unite(t.mu, Partition{b}),
                                                 unite(t.nu, Partition{c}));
    REQUIRE(col >= base);
    REQUIRE(row >= base);
  }
}

TEST_CASE("complement identity in boxes up to 4x4") {
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= 4; ++n) {
      const auto box = hivelr::partitions_in_box(m, n);
      for (const auto& lambda : box) {
        for (const auto& mu : box) {
          for (const auto& nu : box) {
            if (lambda.weight() != mu.weight() + nu.weight()) continue;
            REQUIRE(hivelr::lr_coefficient_hive(lambda, mu, nu) ==
                    hivelr::lr_coefficient_hive(complement(nu, m, n),
                                                complement(lambda, m, n), mu));
          }
        }
      }
    }
  }
}
