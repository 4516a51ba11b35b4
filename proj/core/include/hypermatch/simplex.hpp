#pragma once

#include <cstddef>
#include <vector>

#include "hypermatch/rational.hpp"

namespace hypermatch {

/// Exact dense simplex for   maximize c.x  subject to  A x <= b, x >= 0
/// with b >= 0, so the slack basis is feasible and no phase one is needed.
/// Pivoting follows Bland's rule (lowest-index entering column, ties in the
/// ratio test broken by lowest basic index), which rules out cycling.
class PackingSimplex {
 public:
  struct Result {
    bool bounded = true;
    Rational value;
    std::vector<Rational> primal;  // one per column of A
    std::vector<Rational> dual;    // one per row of A, read from the slack reduced costs
    std::size_t pivots = 0;
  };

  PackingSimplex(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                 std::vector<Rational> c);

  Result solve();

 private:
  void pivot(std::size_t row, std::size_t col);

  std::size_t rows_;
  std::size_t vars_;
  std::size_t cols_;  // vars_ + rows_
  std::vector<std::vector<Rational>> tableau_;  // rows_ x (cols_ + 1), last column is the rhs
  std::vector<Rational> objective_;             // reduced costs z_j - c_j, last entry is the value
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> nonzero_;            // scratch
};

}  // namespace hypermatch
