#include "hivelr/expansion.hpp"

#include <algorithm>
#include <stdexcept>

#include "hivelr/hive.hpp"
#include "hivelr/lr_tableau.hpp"

namespace hivelr {

std::string_view to_string(Method m) {
  return m == Method::kHive ? "hive" : "tableau";
}

Method parse_method(std::string_view text) {
  if (text == "hive") return Method::kHive;
  if (text == "tableau") return Method::kTableau;
  throw std::invalid_argument("unknown method '" + std::string(text) + "'");
}

void Expansion::add(const Partition& p, std::int64_t coeff) {
  if (coeff == 0) return;
  if (auto w = weight(); w && *w != p.weight()) {
    throw std::invalid_argument("expansion term " + p.str() +
                                " has the wrong weight");
  }
  auto& slot = terms_[p];
  slot += coeff;
  if (slot < 0) throw std::invalid_argument("negative expansion coefficient");
  if (slot == 0) terms_.erase(p);
}

std::int64_t Expansion::coefficient(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? 0 : it->second;
}

std::optional<int> Expansion::weight() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.weight();
}

std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu,
                            const Partition& nu, Method method) {
  return method == Method::kHive ? lr_coefficient_hive(lambda, mu, nu)
                                 : lr_tableau_count(lambda, mu, nu);
}

Expansion product_expansion(const Partition& mu, const Partition& nu,
                            Method method) {
  const int weight = mu.weight() + nu.weight();
  const std::size_t rows = mu.length() + nu.length();
  const int n = std::max(1, static_cast<int>(rows));

  std::vector<int> lower(std::max(mu.length(), nu.length()));
  for (std::size_t i = 0; i < lower.size(); ++i) lower[i] = std::max(mu[i], nu[i]);
  const Partition upper = rectangle(mu.first() + nu.first(), static_cast<int>(rows));

  Expansion out;
  for (const auto& lambda :
       partitions_between(weight, Partition(std::move(lower)), upper)) {
    std::int64_t c = 0;
    if (method == Method::kHive) {
      if (lr_support(lambda, mu, nu)) c = count_lr_hives(lambda, mu, nu, n);
    } else {
      c = lr_tableau_count(lambda, mu, nu);
    }
    out.add(lambda, c);
  }
  return out;
}

Expansion skew_expansion(const SkewShape& s, Method method) {
  const auto& lambda = s.outer();
  const auto& mu = s.inner();
  const int n = std::max(1, static_cast<int>(lambda.length()));
  Expansion out;
  for (const auto& nu : partitions_between(s.cells(), Partition{}, lambda)) {
    std::int64_t c = 0;
    if (method == Method::kHive) {
      if (lr_support(lambda, mu, nu)) c = count_lr_hives(lambda, mu, nu, n);
    } else {
      c = lr_tableau_count(lambda, mu, nu);
    }
    out.add(nu, c);
  }
  return out;
}

Expansion multiply(const Expansion& a, const Expansion& b, Method method) {
  Expansion out;
  for (const auto& [p, x] : a.terms()) {
    for (const auto& [q, y] : b.terms()) {
      const Expansion pq = product_expansion(p, q, method);
      for (const auto& [r, z] : pq.terms()) {
        out.add(r, x * y * z);
      }
    }
  }
  return out;
}

std::int64_t max_multiplicity(const Expansion& e) {
  std::int64_t best = 0;
  for (const auto& [p, c] : e.terms()) best = std::max(best, c);
  return best;
}

bool duality_check(const Partition& lambda, const Partition& mu,
                   const Partition& nu) {
  std::int64_t skew_side = 0;
  if (contains(mu, lambda)) {
    skew_side = skew_expansion(SkewShape(lambda, mu)).coefficient(nu);
  }
  std::int64_t product_side = product_expansion(mu, nu).coefficient(lambda);
  return skew_side == product_side;
}

}  // namespace hivelr
