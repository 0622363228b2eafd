#ifndef HIVELR_EXPANSION_HPP_
#define HIVELR_EXPANSION_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "hivelr/partition.hpp"
#include "hivelr/skew_shape.hpp"

namespace hivelr {

enum class Method { kHive, kTableau };

std::string_view to_string(Method m);
// "hive" or "tableau"; throws std::invalid_argument otherwise.
Method parse_method(std::string_view text);

// A finite sum of Schur functions with positive integer coefficients.
// Iteration runs in decreasing lexicographic order of the partitions.
class Expansion {
 public:
  using Terms = std::map<Partition, std::int64_t, std::greater<>>;

  // Adds coeff * s_p. Zero coefficients are dropped; throws
  // std::invalid_argument if p has a different weight from existing terms or
  // the coefficient would become negative.
  void add(const Partition& p, std::int64_t coeff);

  std::int64_t coefficient(const Partition& p) const;
  const Terms& terms() const& noexcept { return terms_; }
  Terms terms() && { return std::move(terms_); }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  // Common weight of all terms, or nullopt for the empty expansion.
  std::optional<int> weight() const;

  friend bool operator==(const Expansion&, const Expansion&) = default;

 private:
  Terms terms_;
};

// The single-engine coefficient c^lambda_{mu nu}.
std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu,
                            const Partition& nu, Method method);

// s_mu s_nu = sum_lambda c^lambda_{mu nu} s_lambda. The hive engine uses
// n = l(mu) + l(nu).
Expansion product_expansion(const Partition& mu, const Partition& nu,
                            Method method = Method::kHive);

// s_{lambda/mu} = sum_nu c^lambda_{mu nu} s_nu. The hive engine uses
// n = l(lambda).
Expansion skew_expansion(const SkewShape& s, Method method = Method::kHive);

// Product of two expansions, expanded back into Schur functions.
Expansion multiply(const Expansion& a, const Expansion& b,
                   Method method = Method::kHive);

// Largest coefficient; 0 for the empty expansion.
std::int64_t max_multiplicity(const Expansion& e);

// Coefficient of s_nu in s_{lambda/mu} equals coefficient of s_lambda in
// s_mu s_nu, both computed by full expansion with the hive engine.
bool duality_check(const Partition& lambda, const Partition& mu,
                   const Partition& nu);

}  // namespace hivelr

#endif  // HIVELR_EXPANSION_HPP_
