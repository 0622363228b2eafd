#include "hivelr/lr_tableau.hpp"

#include <algorithm>

namespace hivelr {

namespace {

struct Cell {
  int row;
  int col;
};

class TableauSearch {
 public:
  TableauSearch(const Partition& lambda, const Partition& mu,
                const Partition& nu, TableauSearchOptions opts)
      : lambda_(lambda), mu_(mu), nu_(nu), opts_(opts) {
    for (std::size_t r = 0; r < lambda.length(); ++r) {
      for (int c = lambda[r] - 1; c >= mu[r]; --c) {
        cells_.push_back({static_cast<int>(r), c});
      }
      grid_.emplace_back(static_cast<std::size_t>(lambda[r]), 0);
    }
    count_.assign(nu.length() + 1, 0);
  }

  std::int64_t run(const std::function<void(const LRTableau&)>& visit) {
    visit_ = &visit;
    found_ = 0;
    descend(0);
    return found_;
  }

 private:
  int& at(int r, int c) {
    return grid_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  }

  bool word_is_lattice() const {
    std::vector<int> seen(nu_.length() + 1, 0);
    for (const auto& cell : cells_) {
      int v = grid_[static_cast<std::size_t>(cell.row)]
                   [static_cast<std::size_t>(cell.col)];
      ++seen[static_cast<std::size_t>(v)];
      if (v > 1 && seen[static_cast<std::size_t>(v)] >
                       seen[static_cast<std::size_t>(v - 1)]) {
        return false;
      }
    }
    return true;
  }

  void emit() {
    if (!opts_.prune_lattice && !word_is_lattice()) return;
    ++found_;
    if (!*visit_) return;
    LRTableau t{SkewShape(lambda_, mu_), {}};
    for (std::size_t r = 0; r < grid_.size(); ++r) {
      t.entries.emplace_back(grid_[r].begin() + mu_[r], grid_[r].end());
    }
    (*visit_)(t);
  }

  void descend(std::size_t k) {
    if (k == cells_.size()) {
      emit();
      return;
    }
    const auto [r, c] = cells_[k];
    int lo = 1;
    int hi = static_cast<int>(nu_.length());
    // Strictly below the cell above, when that cell is part of the shape.
    if (r > 0 && c >= mu_[static_cast<std::size_t>(r - 1)]) lo = at(r - 1, c) + 1;
    // Weakly left of the (already filled) cell to the right.
    if (c + 1 < lambda_[static_cast<std::size_t>(r)]) hi = std::min(hi, at(r, c + 1));
    for (int v = lo; v <= hi; ++v) {
      auto uv = static_cast<std::size_t>(v);
      if (count_[uv] >= nu_[uv - 1]) continue;
      if (opts_.prune_lattice && v > 1 && count_[uv] + 1 > count_[uv - 1]) continue;
      ++count_[uv];
      at(r, c) = v;
      descend(k + 1);
      --count_[uv];
    }
    at(r, c) = 0;
  }

  const Partition& lambda_;
  const Partition& mu_;
  const Partition& nu_;
  TableauSearchOptions opts_;
  std::vector<Cell> cells_;
  std::vector<std::vector<int>> grid_;
  std::vector<int> count_;
  const std::function<void(const LRTableau&)>* visit_ = nullptr;
  std::int64_t found_ = 0;
};

std::int64_t search(const Partition& lambda, const Partition& mu,
                    const Partition& nu, TableauSearchOptions opts,
                    const std::function<void(const LRTableau&)>& visit) {
  if (!contains(mu, lambda) || lambda.weight() != mu.weight() + nu.weight()) {
    return 0;
  }
  TableauSearch s(lambda, mu, nu, opts);
  return s.run(visit);
}

}  // namespace

std::vector<LRTableau> enumerate_lr_tableaux(const Partition& lambda,
                                             const Partition& mu,
                                             const Partition& nu,
                                             TableauSearchOptions opts) {
  std::vector<LRTableau> out;
  search(lambda, mu, nu, opts,
         [&](const LRTableau& t) { out.push_back(t); });
  return out;
}

std::int64_t lr_tableau_count(const Partition& lambda, const Partition& mu,
                              const Partition& nu, TableauSearchOptions opts) {
  return search(lambda, mu, nu, opts, nullptr);
}

bool is_lr_tableau(const LRTableau& t, const Partition& content) {
  const auto& outer = t.shape.outer();
  const auto& inner = t.shape.inner();
  if (t.entries.size() != outer.length()) return false;
  for (std::size_t r = 0; r < outer.length(); ++r) {
    if (t.entries[r].size() != static_cast<std::size_t>(outer[r] - inner[r])) {
      return false;
    }
  }
  const int letters = static_cast<int>(content.length());
  std::vector<int> seen(content.length() + 1, 0);
  for (std::size_t r = 0; r < outer.length(); ++r) {
    const int row = static_cast<int>(r);
    for (int c = inner[r]; c < outer[r]; ++c) {
      int v = t.at(row, c);
      if (v < 1 || v > letters) return false;
      if (c + 1 < outer[r] && t.at(row, c + 1) < v) return false;
      if (r + 1 < outer.length() && c >= inner[r + 1] && c < outer[r + 1] &&
          t.at(row + 1, c) <= v) {
        return false;
      }
    }
    // Reverse reading word: this row right to left.
    for (int c = outer[r] - 1; c >= inner[r]; --c) {
      int v = t.at(row, c);
      ++seen[static_cast<std::size_t>(v)];
      if (v > 1 && seen[static_cast<std::size_t>(v)] >
                       seen[static_cast<std::size_t>(v - 1)]) {
        return false;
      }
    }
  }
  for (std::size_t i = 0; i < content.length(); ++i) {
    if (seen[i + 1] != content[i]) return false;
  }
  return true;
}

}  // namespace hivelr
