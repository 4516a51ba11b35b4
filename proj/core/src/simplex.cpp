#include "hypermatch/simplex.hpp"

#include <limits>
#include <optional>

#include "hypermatch/error.hpp"

namespace hypermatch {

PackingSimplex::PackingSimplex(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                               std::vector<Rational> c)
    : rows_(b.size()), vars_(c.size()), cols_(c.size() + b.size()) {
  if (a.size() != rows_) throw Error(ErrorCode::invalid_argument, "constraint matrix row count mismatch");
  tableau_.resize(rows_);
  basis_.resize(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (a[i].size() != vars_) throw Error(ErrorCode::invalid_argument, "constraint matrix column count mismatch");
    if (sgn(b[i]) < 0) throw Error(ErrorCode::invalid_argument, "right-hand side must be non-negative");
    auto& row = tableau_[i];
    row.assign(cols_ + 1, Rational(0));
    for (std::size_t j = 0; j < vars_; ++j) row[j] = std::move(a[i][j]);
    row[vars_ + i] = 1;
    row[cols_] = std::move(b[i]);
    basis_[i] = vars_ + i;
  }
  objective_.assign(cols_ + 1, Rational(0));
  for (std::size_t j = 0; j < vars_; ++j) objective_[j] = -c[j];
}

void PackingSimplex::pivot(std::size_t row, std::size_t col) {
  auto& prow = tableau_[row];
  const Rational inv = 1 / prow[col];
  nonzero_.clear();
  for (std::size_t j = 0; j <= cols_; ++j) {
    if (sgn(prow[j]) != 0) {
      prow[j] *= inv;
      nonzero_.push_back(j);
    }
  }
  Rational factor;
  auto eliminate = [&](std::vector<Rational>& target) {
    if (sgn(target[col]) == 0) return;
    factor = target[col];
    for (std::size_t j : nonzero_) target[j] -= factor * prow[j];
  };
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i != row) eliminate(tableau_[i]);
  }
  eliminate(objective_);
  basis_[row] = col;
}

PackingSimplex::Result PackingSimplex::solve() {
  Result result;
  while (true) {
    std::optional<std::size_t> entering;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (sgn(objective_[j]) < 0) {
        entering = j;
        break;
      }
    }
    if (!entering) break;

    std::optional<std::size_t> leaving;
    Rational best_ratio;
    Rational ratio;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Rational& t = tableau_[i][*entering];
      if (sgn(t) <= 0) continue;
      ratio = tableau_[i][cols_] / t;
      if (!leaving || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[*leaving])) {
        leaving = i;
        best_ratio = ratio;
      }
    }
    if (!leaving) {
      result.bounded = false;
      return result;
    }
    pivot(*leaving, *entering);
    ++result.pivots;
  }

  result.value = objective_[cols_];
  result.primal.assign(vars_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i) {
    if (basis_[i] < vars_) result.primal[basis_[i]] = tableau_[i][cols_];
  }
  result.dual.resize(rows_);
  for (std::size_t i = 0; i < rows_; ++i) result.dual[i] = objective_[vars_ + i];
  return result;
}

}  // namespace hypermatch
