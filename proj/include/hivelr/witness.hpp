#ifndef HIVELR_WITNESS_HPP_
#define HIVELR_WITNESS_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hivelr/partition.hpp"

namespace hivelr {

enum class Expectation { kExactlyTwo, kAtLeastTwo };

std::string_view to_string(Expectation e);

// Integer parameters a..e of a witness family. Families that use fewer
// parameters ignore the rest.
struct WitnessParams {
  int a = 0;
  int b = 0;
  int c = 0;
  int d = 0;
  int e = 0;
  friend bool operator==(const WitnessParams&, const WitnessParams&) = default;
};

// A triple (lambda, mu, nu) with c^lambda_{mu nu} >= 2. For Q-cases the
// constructed partition is lambda (a term of s_mu s_nu); for T- and U-cases
// it is nu (a term of s_{lambda/mu}).
struct Witness {
  std::string case_label;
  Partition lambda;
  Partition mu;
  Partition nu;
  Expectation expected = Expectation::kExactlyTwo;

  const Partition& constructed() const;
};

// Q1: mu=(a,b), nu=(c,d), a>b>0, c>d>0.
// Q2: mu=(a,b,c), nu=(d,d), a>b>c>0, d>1.
// Q3: mu=(a,a,b,b), nu=(c,c,c), a>b+1, b>1, c>2.
// Throws std::invalid_argument on an unknown label or a violated condition.
Witness product_witness(std::string_view case_label, const WitnessParams& p);

// T1: lambda=(a,b,c), mu=(d,e)
//   (i)  a>b>=c+1>=d>=e+1>1    (ii) a>b>=d>=c+1>=e+1>1
// T2: lambda=(a,b,c,d), mu=(e,e)
//   (i)  a>b>c>=d+1>=e>1       (ii) a>b>c>=e>=d+1>1
// T3: lambda=(a,a,b,b,c,c), mu=(d,d,d)
//   (i)  a-1>b>c+1>=d>2        (ii) a-1>b>d>=c+1>2
// Labels "T1i".."T3ii" select a subcase; "T1", "T2", "T3" pick (i) when it
// applies and (ii) otherwise. The shape lambda/mu must be basic.
Witness skew_witness(std::string_view case_label, const WitnessParams& p);

// U1i:  lambda=(a,a,b,c),    mu=(d,e),     a>b>c>0, d>e>0, a>d
// U1ii: lambda=(a,b,c,c),    mu=(d,d,e),   a>b>c>0, d>e>0, b>d, c>e
// U2i:  lambda=(a,a,b,c,d),  mu=(e,e),     a>b>c>d>0, a>e+1>2
// U2ii: lambda=(a,b,c,d,d),  mu=(e,e,e),   a>b>c>d>0, c>e>1, d>1
// U3i:  lambda=(a^3,b^2,c^2), mu=(d^3),    a>b+1, b>c+1, c>1, a>d+2>4
// U3ii: lambda=(a^2,b^2,c^3), mu=(d^4),    a>b+1, b>c+1, c>2, b>d+1>3
// The shape lambda/mu must be basic. nu is obtained by reducing to a T-case
// shape, building its witness rho and adding back the removed row.
Witness lifted_witness(std::string_view case_label, const WitnessParams& p);

// Dispatches on the first letter of the label.
Witness make_witness(std::string_view case_label, const WitnessParams& p);

// Whether make_witness would accept the parameters.
bool witness_applies(std::string_view case_label, const WitnessParams& p);

// Number of parameters (starting from a) the family uses.
int witness_arity(std::string_view case_label);

// Every explicit case label: Q1..Q3, T1i..T3ii, U1i..U3ii.
const std::vector<std::string>& witness_case_labels();

// All parameter tuples with entries in 1..max_param accepted by the case, in
// lexicographic order.
std::vector<WitnessParams> witness_grid(std::string_view case_label,
                                        int max_param);

struct WitnessCheck {
  std::int64_t count = 0;
  bool ok = false;
};

// Recomputes c^lambda_{mu nu} by hive enumeration and compares it with the
// expectation.
WitnessCheck verify_witness(const Witness& w);

// Parses "a=4,b=3,c=1" or positional "4,3,1" (also space separated).
WitnessParams parse_witness_params(std::string_view text);

}  // namespace hivelr

#endif  // HIVELR_WITNESS_HPP_
