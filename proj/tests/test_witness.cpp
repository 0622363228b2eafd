#include <doctest.h>

#include <stdexcept>

#include "hivelr/lr_tableau.hpp"
#include "hivelr/skew_shape.hpp"
#include "hivelr/witness.hpp"

using hivelr::Expectation;
using hivelr::Partition;
using hivelr::Witness;
using hivelr::WitnessParams;

namespace {

std::int64_t tableau_count(const Witness& w) {
  return hivelr::lr_tableau_count(w.lambda, w.mu, w.nu);
}

}  // namespace

TEST_CASE("product witnesses") {
  Witness w = hivelr::product_witness("Q1", {2, 1, 2, 1});
  CHECK(w.lambda == Partition{3, 2, 1});
  CHECK(w.constructed() == Partition{3, 2, 1});
  CHECK(w.mu == Partition{2, 1});
  CHECK(w.nu == Partition{2, 1});
  CHECK(w.expected == Expectation::kExactlyTwo);
  CHECK(verify_witness(w).count == 2);

  w = hivelr::product_witness("Q2", {3, 2, 1, 2});
  CHECK(w.lambda == Partition{4, 3, 2, 1});
  CHECK(verify_witness(w).count == 2);
  CHECK(tableau_count(w) == 2);

  w = hivelr::product_witness("Q3", {4, 2, 3});
  CHECK(w.lambda == Partition{6, 5, 4, 3, 2, 1});
  CHECK(verify_witness(w).count == 2);
  CHECK(tableau_count(w) == 2);

  CHECK_THROWS_AS(hivelr::product_witness("Q1", {1, 1, 2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(hivelr::product_witness("Q2", {3, 2, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(hivelr::product_witness("Q3", {3, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(hivelr::product_witness("Q4", {3, 2, 3}), std::invalid_argument);
}

TEST_CASE("skew witnesses") {
  Witness w = hivelr::skew_witness("T1i", {3, 2, 1, 2, 1});
  CHECK(w.lambda == Partition{3, 2, 1});
  CHECK(w.mu == Partition{2, 1});
  CHECK(w.nu == Partition{2, 1});
  CHECK(w.constructed() == Partition{2, 1});
  CHECK(verify_witness(w).count == 2);

  // Parameters in both subcases: both formulas give the same nu here, and
  // the plain family label selects subcase (i).
  w = hivelr::skew_witness("T2", {4, 3, 2, 1, 2});
  CHECK(w.case_label == "T2i");
  CHECK(w.nu == Partition{3, 2, 1});
  CHECK(hivelr::skew_witness("T2ii", {4, 3, 2, 1, 2}).nu == Partition{3, 2, 1});
  CHECK(verify_witness(w).count == 2);

  w = hivelr::skew_witness("T3", {6, 4, 2, 3});
  CHECK(w.case_label == "T3i");
  CHECK(w.lambda == Partition{6, 6, 4, 4, 2, 2});
  CHECK(w.mu == Partition{3, 3, 3});
  CHECK(w.nu == Partition{5, 4, 3, 2, 1});
  CHECK(hivelr::skew_witness("T3ii", {6, 4, 2, 3}).nu == Partition{5, 4, 3, 2, 1});
  CHECK(verify_witness(w).count == 2);
  CHECK(tableau_count(w) == 2);

  // Subcase (ii) only.
  w = hivelr::skew_witness("T1", {5, 4, 1, 3, 1});
  CHECK(w.case_label == "T1ii");

  CHECK_THROWS_AS(hivelr::skew_witness("T1i", {3, 3, 1, 2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(hivelr::skew_witness("T1", {3, 2, 1, 3, 2}), std::invalid_argument);
  CHECK_THROWS_AS(hivelr::skew_witness("T4", {3, 2, 1, 2, 1}), std::invalid_argument);
}

TEST_CASE("lifted witnesses") {
  // U1(i), b > e: rho from T1 on 431/21 is (3,2), lifted by a row of 4.
  Witness w = hivelr::lifted_witness("U1i", {4, 3, 1, 2, 1});
  CHECK(w.lambda == Partition{4, 4, 3, 1});
  CHECK(w.mu == Partition{2, 1});
  CHECK(hivelr::skew_witness("T1", {4, 3, 1, 2, 1}).nu == Partition{3, 2});
  CHECK(w.nu == Partition{4, 3, 2});
  CHECK(w.expected == Expectation::kAtLeastTwo);
  CHECK(verify_witness(w).count >= 2);
  CHECK(tableau_count(w) == verify_witness(w).count);

  // U2(ii) with d = e: nothing is added to rho.
  w = hivelr::lifted_witness("U2ii", {5, 4, 3, 2, 2});
  CHECK(w.lambda == Partition{5, 4, 3, 2, 2});
  CHECK(w.mu == Partition{2, 2, 2});
  CHECK(w.nu == hivelr::skew_witness("T2", {5, 4, 3, 2, 2}).nu);
  CHECK(verify_witness(w).count >= 2);

  // U3(ii) needs b > d + 1; (6,4,3,3) does not satisfy it.
  CHECK_THROWS_AS(hivelr::lifted_witness("U3ii", {6, 4, 3, 3}), std::invalid_argument);
  w = hivelr::lifted_witness("U3ii", {7, 5, 3, 3});
  CHECK(w.lambda == Partition{7, 7, 5, 5, 3, 3, 3});
  CHECK(w.mu == Partition{3, 3, 3, 3});
  CHECK(verify_witness(w).count >= 2);

  // b = e branch of U1(i).
  w = hivelr::lifted_witness("U1i", {4, 2, 1, 3, 2});
  CHECK(verify_witness(w).count >= 2);
  CHECK(tableau_count(w) == verify_witness(w).count);

  // Not basic: b < e leaves an empty column.
  CHECK_THROWS_AS(hivelr::lifted_witness("U1i", {5, 2, 1, 4, 3}), std::invalid_argument);
}

TEST_CASE("make_witness, labels, arity and parameter parsing") {
  CHECK(hivelr::witness_case_labels().size() == 15);
  CHECK(hivelr::make_witness("Q1", {2, 1, 2, 1}).case_label == "Q1");
  CHECK(hivelr::make_witness("U1i", {4, 3, 1, 2, 1}).case_label == "U1i");
  CHECK_THROWS_AS(hivelr::make_witness("X1", {}), std::invalid_argument);
  CHECK(hivelr::witness_arity("Q3") == 3);
  CHECK(hivelr::witness_arity("T3ii") == 4);
  CHECK(hivelr::witness_arity("U2i") == 5);
  CHECK(hivelr::witness_applies("Q1", {2, 1, 2, 1}));
  CHECK_FALSE(hivelr::witness_applies("Q1", {1, 2, 2, 1}));

  CHECK(hivelr::parse_witness_params("a=4,b=3,c=1,d=2,e=1") == WitnessParams{4, 3, 1, 2, 1});
  CHECK(hivelr::parse_witness_params("4,3,1") == WitnessParams{4, 3, 1, 0, 0});
  CHECK(hivelr::parse_witness_params("c=1 a=4") == WitnessParams{4, 0, 1, 0, 0});
  CHECK_THROWS_AS(hivelr::parse_witness_params("f=1"), std::invalid_argument);
  CHECK_THROWS_AS(hivelr::parse_witness_params("a=x"), std::invalid_argument);
  CHECK_THROWS_AS(hivelr::parse_witness_params("1,2,3,4,5,6"), std::invalid_argument);
  CHECK_THROWS_AS(hivelr::parse_witness_params("a=1,2"), std::invalid_argument);
}

// ---- properties -------------------------------------------------------------

TEST_CASE("every witness with parameters up to 7 verifies") {
  for (const auto& label : hivelr::witness_case_labels()) {
    const auto grid = hivelr::witness_grid(label, 7);
    CAPTURE(label);
    REQUIRE(!grid.empty());
    for (const auto& p : grid) {
      const Witness w = hivelr::make_witness(label, p);
      CAPTURE(w.lambda.str());
      CAPTURE(w.mu.str());
      CAPTURE(w.nu.str());
      const auto check = verify_witness(w);
      REQUIRE(check.ok);
      if (w.expected == Expectation::kExactlyTwo) REQUIRE(check.count == 2);
      if (label[0] != 'Q') REQUIRE(hivelr::is_basic(hivelr::SkewShape(w.lambda, w.mu)));
    }
  }
}

TEST_CASE("witness counts agree with the tableau engine on the small grid") {
  for (const auto& label : hivelr::witness_case_labels()) {
    for (const auto& p : hivelr::witness_grid(label, 5)) {
      const Witness w = hivelr::make_witness(label, p);
      REQUIRE(tableau_count(w) == verify_witness(w).count);
    }
  }
}
