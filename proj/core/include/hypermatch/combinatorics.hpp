#pragma once

#include <cstdint>
#include <span>
#include <type_traits>
#include <vector>

#include "hypermatch/rational.hpp"

namespace hypermatch {

/// C(n, r), zero outside 0 <= r <= n. Throws Error(domain) on 64-bit overflow.
std::uint64_t binomial(std::int64_t n, std::int64_t r);

BigInt binomial_big(std::int64_t n, std::int64_t r);

/// Visits every r-subset of {0..n-1} in lexicographic order. The callback
/// receives a sorted span that is only valid for the duration of the call;
/// returning false from it stops the walk.
template <class Visit>
void for_each_combination(int n, int r, Visit&& visit) {
  if (r < 0 || r > n) return;
  std::vector<int> c(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) c[static_cast<std::size_t>(i)] = i;
  while (true) {
    if constexpr (std::is_same_v<decltype(visit(std::span<const int>(c))), bool>) {
      if (!visit(std::span<const int>(c))) return;
    } else {
      visit(std::span<const int>(c));
    }
    int i = r - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - r + i) --i;
    if (i < 0) return;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j) {
      c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

std::vector<std::vector<int>> combinations(int n, int r);

/// Colexicographic rank of a sorted subset: sum of C(c_i, i + 1).
std::uint64_t colex_rank(std::span<const int> sorted);

}  // namespace hypermatch
