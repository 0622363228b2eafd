#include "hivelr/sweep.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "hivelr/classify.hpp"
#include "hivelr/expansion.hpp"
#include "hivelr/partition.hpp"
#include "hivelr/skew_shape.hpp"

namespace hivelr {

namespace {

std::vector<std::size_t> pick(std::size_t total, const SweepOptions& opts) {
  std::vector<std::size_t> idx(total);
  std::iota(idx.begin(), idx.end(), 0);
  if (opts.sample && *opts.sample < total) {
    std::mt19937_64 rng(opts.seed);
    std::shuffle(idx.begin(), idx.end(), rng);
    idx.resize(*opts.sample);
    std::sort(idx.begin(), idx.end());
  }
  return idx;
}

void record(SweepReport& r, const std::string& query, const MFVerdict& v,
            std::int64_t max_mult) {
  ++r.checked;
  if (v.multiplicity_free == (max_mult <= 1)) {
    ++r.agree;
    return;
  }
  ++r.disagree;
  std::string cases;
  for (const auto& c : v.cases) cases += (cases.empty() ? "" : ",") + c;
  r.disagreements.push_back(query + ": classifier " +
                            (v.multiplicity_free ? "free (" + cases + ")" : "not free") +
                            ", max multiplicity " + std::to_string(max_mult));
}

}  // namespace

SweepReport verify_sweep(const SweepOptions& opts) {
  if (opts.m < 0 || opts.n < 0) throw std::invalid_argument("negative box size");
  SweepReport report;
  const auto box = partitions_in_box(opts.m, opts.n);
  if (opts.family == SweepFamily::kProducts) {
    const std::size_t k = box.size();
    for (std::size_t t : pick(k * k, opts)) {
      const Partition& mu = box[t / k];
      const Partition& nu = box[t % k];
      record(report, mu.str() + " x " + nu.str(), stembridge_mf(mu, nu),
             max_multiplicity(product_expansion(mu, nu)));
    }
  } else {
    std::vector<SkewShape> shapes;
    for (const auto& lambda : box) {
      for (const auto& mu : box) {
        if (!contains(mu, lambda) || mu == lambda) continue;
        SkewShape s(lambda, mu);
        if (is_basic(s)) shapes.push_back(std::move(s));
      }
    }
    for (std::size_t t : pick(shapes.size(), opts)) {
      const SkewShape& s = shapes[t];
      record(report, s.str(), gty_mf(s), max_multiplicity(skew_expansion(s)));
    }
  }
  return report;
}

}  // namespace hivelr
