#include "hivelr/classify.hpp"

#include <stdexcept>

namespace hivelr {

namespace {

MFVerdict make_verdict(std::vector<std::string> cases) {
  MFVerdict v;
  v.multiplicity_free = !cases.empty();
  v.cases = std::move(cases);
  return v;
}

void require_basic_nonempty(const SkewShape& s, const char* who) {
  if (s.cells() == 0) {
    throw std::invalid_argument(std::string(who) + ": empty skew shape");
  }
  if (!is_basic(s)) {
    throw std::invalid_argument(std::string(who) + ": " + s.str() +
                                " is not basic; normalize with to_basic (" +
                                to_basic(s).str() + ")");
  }
}

// Partitions p with phi = p or phi^pi = p.
std::vector<Partition> straight_forms(const SkewShape& phi) {
  std::vector<Partition> out;
  if (phi.is_straight()) out.push_back(phi.outer());
  SkewShape rotated = rotate_pi(phi);
  if (rotated.is_straight() && rotated != phi) out.push_back(rotated.outer());
  return out;
}

}  // namespace

MFVerdict stembridge_mf(const Partition& mu, const Partition& nu) {
  const ShapeClass a = shape_class(mu);
  const ShapeClass b = shape_class(nu);
  std::vector<std::string> cases;
  if (mu.empty() || nu.empty()) cases.emplace_back("P0");
  if (a.is_one_line_rectangle || b.is_one_line_rectangle) cases.emplace_back("P1");
  if ((a.is_two_line_rectangle && b.is_fat_hook) ||
      (b.is_two_line_rectangle && a.is_fat_hook)) {
    cases.emplace_back("P2");
  }
  if ((a.is_rectangle && b.is_near_rectangle) ||
      (b.is_rectangle && a.is_near_rectangle)) {
    cases.emplace_back("P3");
  }
  if (a.is_rectangle && b.is_rectangle) cases.emplace_back("P4");
  return make_verdict(std::move(cases));
}

MFVerdict gty_mf(const SkewShape& s) {
  require_basic_nonempty(s, "gty_mf");
  const int m = s.outer().first();
  const int n = static_cast<int>(s.outer().length());
  const Partition& mu = s.inner();
  const Partition star = complement(s.outer(), m, n);
  const ShapeClass a = shape_class(mu);
  const ShapeClass b = shape_class(star);
  const int short_mu = shortness(mu, m, n);
  const int short_star = shortness(star, m, n);

  std::vector<std::string> cases;
  if (mu.empty() || star.empty()) cases.emplace_back("R0");
  if ((a.is_rectangle && short_mu == 1) || (b.is_rectangle && short_star == 1)) {
    cases.emplace_back("R1");
  }
  if ((a.is_rectangle && short_mu == 2 && b.is_fat_hook) ||
      (b.is_rectangle && short_star == 2 && a.is_fat_hook)) {
    cases.emplace_back("R2");
  }
  if ((a.is_rectangle && b.is_fat_hook && short_star == 1) ||
      (b.is_rectangle && a.is_fat_hook && short_mu == 1)) {
    cases.emplace_back("R3");
  }
  if (a.is_rectangle && b.is_rectangle) cases.emplace_back("R4");
  return make_verdict(std::move(cases));
}

MFVerdict skew_product_mf(const SkewShape& theta, const SkewShape& phi) {
  require_basic_nonempty(theta, "skew_product_mf");
  require_basic_nonempty(phi, "skew_product_mf");

  bool v1 = false, v2 = false, v3 = false, v4 = false;
  auto check = [&](const SkewShape& x, const SkewShape& y) {
    if (!x.is_straight()) return;
    const ShapeClass cx = shape_class(x.outer());
    for (const auto& p : straight_forms(y)) {
      const ShapeClass cy = shape_class(p);
      v1 = v1 || cx.is_one_line_rectangle;
      v2 = v2 || (cx.is_two_line_rectangle && cy.is_fat_hook);
      v3 = v3 || (cx.is_rectangle && cy.is_near_rectangle);
    }
    if (y.is_straight() && cx.is_rectangle &&
        shape_class(y.outer()).is_rectangle) {
      v4 = true;
    }
  };
  check(theta, phi);
  check(phi, theta);

  std::vector<std::string> cases;
  if (v1) cases.emplace_back("V1");
  if (v2) cases.emplace_back("V2");
  if (v3) cases.emplace_back("V3");
  if (v4) cases.emplace_back("V4");
  return make_verdict(std::move(cases));
}

std::optional<MultiplicityWitness> find_multiplicity_witness(
    const Expansion& e) {
  std::optional<MultiplicityWitness> best;
  // Terms iterate in decreasing order, so the last hit is the smallest.
  for (const auto& [p, c] : e.terms()) {
    if (c >= 2) best = MultiplicityWitness{p, c};
  }
  return best;
}

std::optional<MultiplicityWitness> find_multiplicity_witness(
    const Partition& mu, const Partition& nu, Method method) {
  return find_multiplicity_witness(product_expansion(mu, nu, method));
}

std::optional<MultiplicityWitness> find_multiplicity_witness(
    const SkewShape& s, Method method) {
  return find_multiplicity_witness(skew_expansion(s, method));
}

}  // namespace hivelr
