#include "hivelr/witness.hpp"

#include <array>
#include <charconv>
#include <functional>
#include <stdexcept>

#include "hivelr/hive.hpp"
#include "hivelr/skew_shape.hpp"

namespace hivelr {

namespace {

Partition rep(std::initializer_list<std::pair<int, int>> runs) {
  std::vector<int> parts;
  for (auto [v, k] : runs) parts.insert(parts.end(), static_cast<std::size_t>(k), v);
  return Partition(std::move(parts));
}

[[noreturn]] void reject(std::string_view label, const std::string& why) {
  throw std::invalid_argument(std::string(label) + ": " + why);
}

void require(bool cond, std::string_view label, const char* what) {
  if (!cond) reject(label, std::string("requires ") + what);
}

void require_basic(const Partition& lambda, const Partition& mu,
                   std::string_view label) {
  require(contains(mu, lambda), label, "mu inside lambda");
  require(is_basic(SkewShape(lambda, mu)), label, "a basic shape lambda/mu");
}

// ---- Q cases ---------------------------------------------------------------

Witness q_case(std::string_view label, const WitnessParams& p) {
  const auto [a, b, c, d, e] = p;
  (void)e;
  Witness w;
  w.case_label = std::string(label);
  w.expected = Expectation::kExactlyTwo;
  if (label == "Q1") {
    require(a > b && b > 0 && c > d && d > 0, label, "a>b>0, c>d>0");
    w.mu = {a, b};
    w.nu = {c, d};
    w.lambda = {a + c - 1, b + d, 1};
  } else if (label == "Q2") {
    require(a > b && b > c && c > 0 && d > 1, label, "a>b>c>0, d>1");
    w.mu = {a, b, c};
    w.nu = {d, d};
    w.lambda = {a + d - 1, b + d - 1, c + 1, 1};
  } else if (label == "Q3") {
    require(a > b + 1 && b > 1 && c > 2, label, "a>b+1, b>1, c>2");
    w.mu = {a, a, b, b};
    w.nu = {c, c, c};
    w.lambda = {a + c - 1, a + c - 2, b + c - 1, b + 1, 2, 1};
  } else {
    reject(label, "unknown product case");
  }
  return w;
}

// ---- T cases ---------------------------------------------------------------

bool t_conditions(std::string_view label, const WitnessParams& p) {
  const auto [a, b, c, d, e] = p;
  if (label == "T1i") return a > b && b >= c + 1 && c + 1 >= d && d >= e + 1 && e + 1 > 1;
  if (label == "T1ii") return a > b && b >= d && d >= c + 1 && c + 1 >= e + 1 && e + 1 > 1;
  if (label == "T2i") return a > b && b > c && c >= d + 1 && d + 1 >= e && e > 1;
  if (label == "T2ii") return a > b && b > c && c >= e && e >= d + 1 && d + 1 > 1;
  if (label == "T3i") return a - 1 > b && b > c + 1 && c + 1 >= d && d > 2;
  if (label == "T3ii") return a - 1 > b && b > d && d >= c + 1 && c + 1 > 2;
  reject(label, "unknown skew case");
}

Witness t_subcase(std::string_view label, const WitnessParams& p) {
  const auto [a, b, c, d, e] = p;
  if (!t_conditions(label, p)) reject(label, "subcase conditions do not hold");
  Witness w;
  w.case_label = std::string(label);
  w.expected = Expectation::kExactlyTwo;
  if (label == "T1i") {
    w.lambda = {a, b, c};
    w.mu = {d, e};
    w.nu = Partition({a - 1, b - e, c - d + 1});
  } else if (label == "T1ii") {
    w.lambda = {a, b, c};
    w.mu = {d, e};
    w.nu = Partition({a - 1, b + c - d - e + 1, 0});
  } else if (label == "T2i") {
    w.lambda = {a, b, c, d};
    w.mu = {e, e};
    w.nu = Partition({a - 1, b - 1, c - e + 1, d - e + 1});
  } else if (label == "T2ii") {
    w.lambda = {a, b, c, d};
    w.mu = {e, e};
    w.nu = Partition({a - 1, b + d - e, c - e + 1, 0});
  } else if (label == "T3i") {
    w.lambda = rep({{a, 2}, {b, 2}, {c, 2}});
    w.mu = rep({{d, 3}});
    w.nu = Partition({a - 1, a - 2, b - 1, b - d + 1, c - d + 2, c - d + 1});
  } else {
    w.lambda = rep({{a, 2}, {b, 2}, {c, 2}});
    w.mu = rep({{d, 3}});
    w.nu = Partition({a - 1, a + c - d - 1, b + c - d, b - d + 1, 1, 0});
  }
  require_basic(w.lambda, w.mu, label);
  return w;
}

Witness t_case(std::string_view label, const WitnessParams& p) {
  if (label == "T1" || label == "T2" || label == "T3") {
    const std::string first = std::string(label) + "i";
    const std::string second = std::string(label) + "ii";
    if (t_conditions(first, p)) return t_subcase(first, p);
    if (t_conditions(second, p)) return t_subcase(second, p);
    reject(label, "neither subcase (i) nor (ii) applies");
  }
  return t_subcase(label, p);
}

// T-family witness for a row-basic shape of the given family, after deleting
// empty columns. Returns rho, a term of s_{sigma/tau} with coefficient 2.
Partition reduced_witness(int family, const Partition& sigma,
                          const Partition& tau) {
  const SkewShape s = to_basic(SkewShape(sigma, tau));
  const auto& o = s.outer();
  const auto& i = s.inner();
  WitnessParams q;
  bool fits = false;
  if (family == 1 && o.length() == 3 && i.length() == 2) {
    q = {o[0], o[1], o[2], i[0], i[1]};
    fits = true;
  } else if (family == 2 && o.length() == 4 && i.length() == 2 && i[0] == i[1]) {
    q = {o[0], o[1], o[2], o[3], i[0]};
    fits = true;
  } else if (family == 3 && o.length() == 6 && i.length() == 3 && o[0] == o[1] &&
             o[2] == o[3] && o[4] == o[5] && i[0] == i[2]) {
    q = {o[0], o[2], o[4], i[0], 0};
    fits = true;
  }
  if (!fits) {
    throw std::logic_error("reduced shape " + s.str() +
                           " is not of the expected family T" +
                           std::to_string(family));
  }
  return t_case("T" + std::to_string(family), q).nu;
}

// ---- U cases ---------------------------------------------------------------

bool u_conditions(std::string_view label, const WitnessParams& p) {
  const auto [a, b, c, d, e] = p;
  if (label == "U1i") return a > b && b > c && c > 0 && d > e && e > 0 && a > d;
  if (label == "U1ii") return a > b && b > c && c > 0 && d > e && e > 0 && b > d && c > e;
  if (label == "U2i") return a > b && b > c && c > d && d > 0 && a > e + 1 && e + 1 > 2;
  if (label == "U2ii") return a > b && b > c && c > d && d > 0 && c > e && e > 1 && d > 1;
  if (label == "U3i") return a > b + 1 && b > c + 1 && c > 1 && a > d + 2 && d + 2 > 4;
  if (label == "U3ii") return a > b + 1 && b > c + 1 && c > 2 && b > d + 1 && d + 1 > 3;
  reject(label, "unknown lifted case");
}

Witness u_case(std::string_view label, const WitnessParams& p) {
  const auto [a, b, c, d, e] = p;
  if (!u_conditions(label, p)) reject(label, "case conditions do not hold");
  Witness w;
  w.case_label = std::string(label);
  w.expected = Expectation::kAtLeastTwo;
  Partition rho;
  Partition extra;
  if (label == "U1i") {
    w.lambda = {a, a, b, c};
    w.mu = {d, e};
    require_basic(w.lambda, w.mu, label);
    if (b > e) {
      rho = reduced_witness(1, {a, b, c}, {d, e});
      extra = {a};
    } else {
      rho = reduced_witness(1, {a - 1, b, c}, {d - 1, b - 1});
      extra = {a - 1};
    }
  } else if (label == "U1ii") {
    w.lambda = {a, b, c, c};
    w.mu = {d, d, e};
    require_basic(w.lambda, w.mu, label);
    rho = reduced_witness(1, {a, b, c}, {d, e});
    extra = Partition({c - d});
  } else if (label == "U2i") {
    w.lambda = {a, a, b, c, d};
    w.mu = {e, e};
    require_basic(w.lambda, w.mu, label);
    if (b > e) {
      rho = reduced_witness(2, {a, b, c, d}, {e, e});
      extra = {a};
    } else {
      rho = reduced_witness(2, {a - 1, b, c, d}, {b - 1, b - 1});
      extra = {a - 1};
    }
  } else if (label == "U2ii") {
    w.lambda = {a, b, c, d, d};
    w.mu = {e, e, e};
    require_basic(w.lambda, w.mu, label);
    rho = reduced_witness(2, {a, b, c, d}, {e, e});
    extra = Partition({d - e});
  } else if (label == "U3i") {
    w.lambda = rep({{a, 3}, {b, 2}, {c, 2}});
    w.mu = rep({{d, 3}});
    require_basic(w.lambda, w.mu, label);
    if (b > d) {
      rho = reduced_witness(3, rep({{a, 2}, {b, 2}, {c, 2}}), rep({{d, 3}}));
      extra = {a};
    } else {
      rho = reduced_witness(3, rep({{a - 1, 2}, {b, 2}, {c, 2}}),
                            rep({{b - 1, 3}}));
      extra = {a - 1};
    }
  } else {
    w.lambda = rep({{a, 2}, {b, 2}, {c, 3}});
    w.mu = rep({{d, 4}});
    require_basic(w.lambda, w.mu, label);
    rho = reduced_witness(3, rep({{a, 2}, {b, 2}, {c, 2}}), rep({{d, 3}}));
    extra = Partition({c - d});
  }
  w.nu = unite(rho, extra);
  return w;
}

int parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad integer '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

std::string_view to_string(Expectation e) {
  return e == Expectation::kExactlyTwo ? "exactly 2" : "at least 2";
}

const Partition& Witness::constructed() const {
  return case_label.front() == 'Q' ? lambda : nu;
}

Witness product_witness(std::string_view case_label, const WitnessParams& p) {
  return q_case(case_label, p);
}

Witness skew_witness(std::string_view case_label, const WitnessParams& p) {
  return t_case(case_label, p);
}

Witness lifted_witness(std::string_view case_label, const WitnessParams& p) {
  return u_case(case_label, p);
}

Witness make_witness(std::string_view case_label, const WitnessParams& p) {
  if (case_label.empty()) throw std::invalid_argument("empty case label");
  switch (case_label.front()) {
    case 'Q': return product_witness(case_label, p);
    case 'T': return skew_witness(case_label, p);
    case 'U': return lifted_witness(case_label, p);
    default: throw std::invalid_argument("unknown case '" + std::string(case_label) + "'");
  }
}

bool witness_applies(std::string_view case_label, const WitnessParams& p) {
  try {
    make_witness(case_label, p);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

int witness_arity(std::string_view case_label) {
  if (case_label == "Q1" || case_label == "Q2") return 4;
  if (case_label == "Q3") return 3;
  if (case_label.starts_with("T3") || case_label.starts_with("U3")) return 4;
  if (case_label.starts_with("T") || case_label.starts_with("U")) return 5;
  throw std::invalid_argument("unknown case '" + std::string(case_label) + "'");
}

const std::vector<std::string>& witness_case_labels() {
  static const std::vector<std::string> labels = {
      "Q1",  "Q2",   "Q3",  "T1i",  "T1ii", "T2i",  "T2ii", "T3i",
      "T3ii", "U1i", "U1ii", "U2i", "U2ii", "U3i", "U3ii"};
  return labels;
}

std::vector<WitnessParams> witness_grid(std::string_view case_label,
                                        int max_param) {
  const int k = witness_arity(case_label);
  std::vector<WitnessParams> out;
  std::array<int, 5> v{};
  std::function<void(int)> fill = [&](int pos) {
    if (pos == k) {
      WitnessParams p{v[0], v[1], v[2], v[3], v[4]};
      if (witness_applies(case_label, p)) out.push_back(p);
      return;
    }
    for (int x = 1; x <= max_param; ++x) {
      v[static_cast<std::size_t>(pos)] = x;
      fill(pos + 1);
    }
    v[static_cast<std::size_t>(pos)] = 0;
  };
  fill(0);
  return out;
}

WitnessCheck verify_witness(const Witness& w) {
  WitnessCheck r;
  r.count = lr_coefficient_hive(w.lambda, w.mu, w.nu);
  r.ok = w.expected == Expectation::kExactlyTwo ? r.count == 2 : r.count >= 2;
  return r;
}

WitnessParams parse_witness_params(std::string_view text) {
  std::array<int, 5> v{};
  std::size_t positional = 0;
  bool named = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find_first_of(", ", pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(pos, end - pos);
    pos = end + 1;
    if (tok.empty()) continue;
    if (auto eq = tok.find('='); eq != std::string_view::npos) {
      std::string_view key = tok.substr(0, eq);
      if (key.size() != 1 || key[0] < 'a' || key[0] > 'e') {
        throw std::invalid_argument("unknown parameter '" + std::string(key) + "'");
      }
      v[static_cast<std::size_t>(key[0] - 'a')] = parse_int(tok.substr(eq + 1));
      named = true;
    } else {
      if (positional >= v.size()) throw std::invalid_argument("too many parameters");
      v[positional++] = parse_int(tok);
    }
  }
  if (named && positional > 0) {
    throw std::invalid_argument("mix of named and positional parameters");
  }
  return {v[0], v[1], v[2], v[3], v[4]};
}

}  // namespace hivelr
