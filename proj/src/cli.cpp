#include "hivelr/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "hivelr/classify.hpp"
#include "hivelr/expansion.hpp"
#include "hivelr/hive.hpp"
#include "hivelr/lr_tableau.hpp"
#include "hivelr/partition.hpp"
#include "hivelr/skew_shape.hpp"
#include "hivelr/sweep.hpp"
#include "hivelr/witness.hpp"

namespace hivelr::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

// Input problems detected after flag parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int max_weight() {
  const char* env = std::getenv("HIVE_LR_MAX_WEIGHT");
  if (env == nullptr || *env == '\0') return 40;
  try {
    return std::stoi(env);
  } catch (const std::exception&) {
    throw UsageError("HIVE_LR_MAX_WEIGHT must be an integer");
  }
}

void check_weight(int w) {
  const int cap = max_weight();
  if (w > cap) {
    throw UsageError("weight " + std::to_string(w) + " exceeds the limit " +
                     std::to_string(cap) + " (set HIVE_LR_MAX_WEIGHT)");
  }
}

json to_json(const Partition& p) {
  json a = json::array();
  for (int x : p.parts()) a.push_back(x);
  return a;
}

json to_json(const SkewShape& s) {
  return json{{"outer", to_json(s.outer())}, {"inner", to_json(s.inner())}};
}

std::string join(const std::vector<std::string>& xs, const char* sep) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : sep) + x;
  return out;
}

std::string expansion_text(const Expansion& e) {
  if (e.empty()) return "0";
  std::string out;
  for (const auto& [p, c] : e.terms()) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += std::to_string(c) + " ";
    out += "s[" + p.str() + "]";
  }
  return out;
}

json expansion_json(json query, Method method, const Expansion& e) {
  json terms = json::array();
  for (const auto& [p, c] : e.terms()) {
    terms.push_back(json{{"partition", to_json(p)}, {"coeff", c}});
  }
  return json{{"query", std::move(query)},
              {"method", std::string(to_string(method))},
              {"terms", std::move(terms)},
              {"max_multiplicity", max_multiplicity(e)}};
}

void print_expansion(std::ostream& out, bool as_json, json query,
                     Method method, const Expansion& e) {
  if (as_json) {
    out << expansion_json(std::move(query), method, e).dump(2) << '\n';
    return;
  }
  out << expansion_text(e) << '\n';
  out << "terms: " << e.size() << ", max multiplicity: " << max_multiplicity(e)
      << '\n';
}

std::string hive_text(const Hive& h) {
  const auto rows = h.rows();
  std::vector<std::vector<std::string>> cells;
  std::size_t width = 1;
  for (const auto& row : rows) {
    auto& r = cells.emplace_back();
    for (auto v : row) {
      r.push_back(std::to_string(v));
      width = std::max(width, r.back().size());
    }
  }
  std::ostringstream os;
  const std::size_t n = rows.size() - 1;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    std::string line((n - r) * (width + 1) / 2, ' ');
    for (std::size_t k = 0; k < cells[r].size(); ++k) {
      if (k > 0) line += ' ';
      line += std::string(width - cells[r][k].size(), ' ') + cells[r][k];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  return os.str();
}

struct Args {
  std::string format = "text";
  std::string lambda, mu, nu, shape, theta, phi;
  std::string method = "hive";
  bool check = false;
  bool normalize = false;
  std::string witness_case;
  std::string params;
  int n = 0;
  bool dump = false;
  std::string family;
  std::string box;
  std::size_t sample = 0;
  std::uint64_t seed = 0;
};

void add_format(CLI::App* sub, Args& a) {
  sub->add_option("--format", a.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

// ---- subcommands -----------------------------------------------------------

int cmd_lrcoef(const Args& a, std::ostream& out, std::ostream& err) {
  const auto lambda = Partition::parse(a.lambda);
  const auto mu = Partition::parse(a.mu);
  const auto nu = Partition::parse(a.nu);
  check_weight(lambda.weight());
  const bool json_out = a.format == "json";
  json query{{"lambda", to_json(lambda)}, {"mu", to_json(mu)}, {"nu", to_json(nu)}};

  if (a.method == "both") {
    const auto h = lr_coefficient(lambda, mu, nu, Method::kHive);
    const auto t = lr_coefficient(lambda, mu, nu, Method::kTableau);
    if (json_out) {
      out << json{{"query", query}, {"hive", h}, {"tableau", t}, {"agree", h == t}}.dump(2)
          << '\n';
    } else {
      out << "hive: " << h << '\n' << "tableau: " << t << '\n';
    }
    if (h != t) {
      err << "engines disagree: hive " << h << ", tableau " << t << '\n';
      return kMismatch;
    }
    return kOk;
  }
  const Method m = parse_method(a.method);
  const auto c = lr_coefficient(lambda, mu, nu, m);
  if (json_out) {
    out << json{{"query", query}, {"method", std::string(to_string(m))}, {"coefficient", c}}
               .dump(2)
        << '\n';
  } else {
    out << c << '\n';
  }
  return kOk;
}

int cmd_product(const Args& a, std::ostream& out) {
  const auto mu = Partition::parse(a.mu);
  const auto nu = Partition::parse(a.nu);
  check_weight(mu.weight() + nu.weight());
  const Method m = parse_method(a.method);
  print_expansion(out, a.format == "json",
                  json{{"mu", to_json(mu)}, {"nu", to_json(nu)}}, m,
                  product_expansion(mu, nu, m));
  return kOk;
}

int cmd_skew(const Args& a, std::ostream& out) {
  const auto s = SkewShape::parse(a.shape);
  check_weight(s.outer().weight());
  const Method m = parse_method(a.method);
  print_expansion(out, a.format == "json", json{{"shape", to_json(s)}}, m,
                  skew_expansion(s, m));
  return kOk;
}

SkewShape basic_input(const std::string& text, bool normalize, const char* what) {
  SkewShape s = SkewShape::parse(text);
  if (s.cells() == 0) throw UsageError(std::string(what) + " is empty");
  if (!is_basic(s)) {
    if (!normalize) {
      throw UsageError(std::string(what) + " " + s.str() +
                       " is not basic; pass --normalize to use " +
                       to_basic(s).str());
    }
    s = to_basic(s);
  }
  return s;
}

int cmd_mf(const std::string& kind, const Args& a, std::ostream& out,
           std::ostream& err) {
  MFVerdict verdict;
  json query;
  // Computes the expansion whose coefficients the verdict is about.
  std::function<Expansion()> expand;

  if (kind == "product") {
    const auto mu = Partition::parse(a.mu);
    const auto nu = Partition::parse(a.nu);
    check_weight(mu.weight() + nu.weight());
    verdict = stembridge_mf(mu, nu);
    query = json{{"mu", to_json(mu)}, {"nu", to_json(nu)}};
    expand = [mu, nu] { return product_expansion(mu, nu); };
  } else if (kind == "skew") {
    const auto s = basic_input(a.shape, a.normalize, "shape");
    check_weight(s.outer().weight());
    verdict = gty_mf(s);
    query = json{{"shape", to_json(s)}};
    expand = [s] { return skew_expansion(s); };
  } else {
    const auto theta = basic_input(a.theta, a.normalize, "theta");
    const auto phi = basic_input(a.phi, a.normalize, "phi");
    check_weight(theta.outer().weight() + phi.outer().weight());
    verdict = skew_product_mf(theta, phi);
    query = json{{"theta", to_json(theta)}, {"phi", to_json(phi)}};
    expand = [theta, phi] {
      return multiply(skew_expansion(theta), skew_expansion(phi));
    };
  }

  std::optional<MultiplicityWitness> witness;
  std::optional<std::int64_t> enumerated;
  if (a.check || !verdict.multiplicity_free) {
    const Expansion e = expand();
    witness = find_multiplicity_witness(e);
    enumerated = max_multiplicity(e);
  }
  const bool disagree =
      enumerated && verdict.multiplicity_free != (*enumerated <= 1);

  if (a.format == "json") {
    json j{{"query", query},
           {"multiplicity_free", verdict.multiplicity_free},
           {"cases", verdict.cases}};
    j["witness"] = witness ? json{{"partition", to_json(witness->term)},
                                  {"coeff", witness->coefficient}}
                           : json(nullptr);
    if (a.check) {
      j["check"] = json{{"max_multiplicity", *enumerated}, {"agree", !disagree}};
    }
    out << j.dump(2) << '\n';
  } else {
    if (verdict.multiplicity_free) {
      out << "multiplicity-free (" << join(verdict.cases, ", ") << ")\n";
    } else {
      out << "not multiplicity-free\n";
    }
    if (witness) {
      out << "coefficient " << witness->coefficient << " at ("
          << witness->term.str() << ")\n";
    }
    if (a.check) {
      out << "check: max multiplicity " << *enumerated << ", "
          << (disagree ? "DISAGREES" : "agrees") << '\n';
    }
  }
  if (disagree) {
    err << "classifier and enumeration disagree\n";
    return kMismatch;
  }
  return kOk;
}

int cmd_witness(const Args& a, std::ostream& out, std::ostream& err) {
  const WitnessParams p = parse_witness_params(a.params);
  const Witness w = make_witness(a.witness_case, p);
  check_weight(w.lambda.weight());
  const WitnessCheck c = verify_witness(w);
  if (a.format == "json") {
    out << json{{"case", w.case_label},
                {"lambda", to_json(w.lambda)},
                {"mu", to_json(w.mu)},
                {"nu", to_json(w.nu)},
                {"constructed", to_json(w.constructed())},
                {"expected", std::string(to_string(w.expected))},
                {"count", c.count},
                {"verified", c.ok}}
               .dump(2)
        << '\n';
  } else {
    out << w.case_label << ": lambda=(" << w.lambda.str() << ") mu=("
        << w.mu.str() << ") nu=(" << w.nu.str() << ")\n";
    out << "constructed: (" << w.constructed().str() << ")\n";
    out << "count: " << c.count << " (expected " << to_string(w.expected)
        << ")\n";
  }
  if (!c.ok) {
    err << "witness does not verify\n";
    return kMismatch;
  }
  return kOk;
}

int cmd_hives(const Args& a, std::ostream& out) {
  const auto lambda = Partition::parse(a.lambda);
  const auto mu = Partition::parse(a.mu);
  const auto nu = Partition::parse(a.nu);
  check_weight(lambda.weight());
  int n = a.n;
  if (n == 0) {
    n = std::max<int>({1, static_cast<int>(lambda.length()),
                       static_cast<int>(mu.length() + nu.length())});
  }
  if (n < static_cast<int>(std::max({lambda.length(), mu.length(), nu.length()}))) {
    throw UsageError("--n is smaller than a partition length");
  }
  if (lambda.weight() != mu.weight() + nu.weight()) {
    throw UsageError("weights do not satisfy |lambda| = |mu| + |nu|");
  }
  const bool json_out = a.format == "json";
  if (!a.dump) {
    const auto count = count_lr_hives(lambda, mu, nu, n);
    if (json_out) {
      out << json{{"n", n}, {"count", count}}.dump(2) << '\n';
    } else {
      out << count << '\n';
    }
    return kOk;
  }
  const auto hives = enumerate_lr_hives(lambda, mu, nu, n);
  if (json_out) {
    json list = json::array();
    for (const auto& h : hives) list.push_back(h.rows());
    out << json{{"n", n}, {"count", hives.size()}, {"hives", list}}.dump(2) << '\n';
  } else {
    out << "count: " << hives.size() << '\n';
    for (std::size_t k = 0; k < hives.size(); ++k) {
      out << "\nhive " << (k + 1) << '\n' << hive_text(hives[k]);
    }
  }
  return kOk;
}

int cmd_verify(const Args& a, std::ostream& out, std::ostream& err) {
  SweepOptions opts;
  opts.family = a.family == "products" ? SweepFamily::kProducts : SweepFamily::kSkews;
  const auto x = a.box.find_first_of("xX");
  if (x == std::string::npos) throw UsageError("--box must look like 3x3");
  try {
    opts.m = std::stoi(a.box.substr(0, x));
    opts.n = std::stoi(a.box.substr(x + 1));
  } catch (const std::exception&) {
    throw UsageError("--box must look like 3x3");
  }
  if (opts.m < 0 || opts.n < 0) throw UsageError("--box sizes must be non-negative");
  const int largest = opts.family == SweepFamily::kProducts ? 2 * opts.m * opts.n
                                                            : opts.m * opts.n;
  check_weight(largest);
  if (a.sample > 0) opts.sample = a.sample;
  opts.seed = a.seed;
  const SweepReport r = verify_sweep(opts);
  if (a.format == "json") {
    out << json{{"family", a.family},
                {"box", {opts.m, opts.n}},
                {"sample", a.sample > 0 ? json(a.sample) : json(nullptr)},
                {"seed", opts.seed},
                {"checked", r.checked},
                {"agree", r.agree},
                {"disagree", r.disagree},
                {"disagreements", r.disagreements}}
               .dump(2)
        << '\n';
  } else {
    out << a.family << " in " << opts.m << "x" << opts.n << ": checked "
        << r.checked << ", agree " << r.agree << ", disagree " << r.disagree
        << '\n';
    for (const auto& d : r.disagreements) out << "  " << d << '\n';
  }
  if (r.disagree > 0) {
    err << r.disagree << " disagreement(s)\n";
    return kMismatch;
  }
  return kOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err) {
  Args a;
  CLI::App app{"Littlewood-Richardson coefficients via hives", "hivelr"};
  app.require_subcommand(1);

  auto* lrcoef = app.add_subcommand("lrcoef", "Coefficient c^lambda_{mu nu}");
  lrcoef->add_option("--lambda", a.lambda, "Outer partition, e.g. 3,2,1")->required();
  lrcoef->add_option("--mu", a.mu, "First factor")->required();
  lrcoef->add_option("--nu", a.nu, "Second factor")->required();
  lrcoef->add_option("--method", a.method, "hive, tableau or both")
      ->check(CLI::IsMember({"hive", "tableau", "both"}))
      ->capture_default_str();
  add_format(lrcoef, a);

  auto* product = app.add_subcommand("product", "Expand s_mu s_nu");
  product->add_option("--mu", a.mu, "First factor")->required();
  product->add_option("--nu", a.nu, "Second factor")->required();
  product->add_option("--method", a.method, "hive or tableau")
      ->check(CLI::IsMember({"hive", "tableau"}))
      ->capture_default_str();
  add_format(product, a);

  auto* skew = app.add_subcommand("skew", "Expand s_{lambda/mu}");
  skew->add_option("--shape", a.shape, "Skew shape OUTER/INNER, e.g. 4,3,2,1/2,2")
      ->required();
  skew->add_option("--method", a.method, "hive or tableau")
      ->check(CLI::IsMember({"hive", "tableau"}))
      ->capture_default_str();
  add_format(skew, a);

  auto* mf = app.add_subcommand("mf", "Multiplicity-free classification");
  mf->require_subcommand(1);
  auto mf_common = [&](CLI::App* sub) {
    sub->add_flag("--check", a.check, "Also expand and compare");
    add_format(sub, a);
  };
  auto* mf_product = mf->add_subcommand("product", "s_mu s_nu");
  mf_product->add_option("--mu", a.mu, "First factor")->required();
  mf_product->add_option("--nu", a.nu, "Second factor")->required();
  mf_common(mf_product);
  auto* mf_skew = mf->add_subcommand("skew", "s_{lambda/mu} for a basic shape");
  mf_skew->add_option("--shape", a.shape, "Skew shape OUTER/INNER")->required();
  mf_skew->add_flag("--normalize", a.normalize, "Delete empty rows and columns first");
  mf_common(mf_skew);
  auto* mf_pair = mf->add_subcommand("pair", "s_theta s_phi for basic shapes");
  mf_pair->add_option("--theta", a.theta, "First skew shape")->required();
  mf_pair->add_option("--phi", a.phi, "Second skew shape")->required();
  mf_pair->add_flag("--normalize", a.normalize, "Delete empty rows and columns first");
  mf_common(mf_pair);

  auto* witness = app.add_subcommand("witness", "Build and verify a multiplicity-2 witness");
  witness->add_option("case", a.witness_case, "Q1..Q3, T1..T3 (or T1i..T3ii), U1i..U3ii")
      ->required();
  witness->add_option("--params", a.params, "a=..,b=.. or positional a,b,...")->required();
  add_format(witness, a);

  auto* hives = app.add_subcommand("hives", "Count or list LR-hives");
  hives->add_option("--lambda", a.lambda, "Outer partition")->required();
  hives->add_option("--mu", a.mu, "First factor")->required();
  hives->add_option("--nu", a.nu, "Second factor")->required();
  hives->add_option("--n", a.n, "Hive size (default max(l(lambda), l(mu)+l(nu)))")
      ->check(CLI::PositiveNumber);
  hives->add_flag("--dump", a.dump, "Print every hive");
  add_format(hives, a);

  auto* verify = app.add_subcommand("verify", "Classifier against enumeration");
  verify->add_option("--family", a.family, "products or skews")
      ->check(CLI::IsMember({"products", "skews"}))
      ->required();
  verify->add_option("--box", a.box, "Box size mXn")->required();
  verify->add_option("--sample", a.sample, "Check a random subset of this size");
  verify->add_option("--seed", a.seed, "Sampling seed")->capture_default_str();
  add_format(verify, a);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*lrcoef) return cmd_lrcoef(a, out, err);
    if (*product) return cmd_product(a, out);
    if (*skew) return cmd_skew(a, out);
    if (*mf_product) return cmd_mf("product", a, out, err);
    if (*mf_skew) return cmd_mf("skew", a, out, err);
    if (*mf_pair) return cmd_mf("pair", a, out, err);
    if (*witness) return cmd_witness(a, out, err);
    if (*hives) return cmd_hives(a, out);
    if (*verify) return cmd_verify(a, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace hivelr::cli
