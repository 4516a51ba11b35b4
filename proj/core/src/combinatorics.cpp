#include "hypermatch/combinatorics.hpp"

#include <string>

#include "hypermatch/error.hpp"

namespace hypermatch {

std::uint64_t binomial(std::int64_t n, std::int64_t r) {
  const BigInt exact = binomial_big(n, r);
  if (!mpz_fits_ulong_p(exact.get_mpz_t())) {
    throw Error(ErrorCode::domain, "binomial C(" + std::to_string(n) + "," + std::to_string(r) +
                                       ") overflows 64 bits");
  }
  return exact.get_ui();
}

BigInt binomial_big(std::int64_t n, std::int64_t r) {
  if (r < 0 || n < 0 || r > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  return out;
}

std::vector<std::vector<int>> combinations(int n, int r) {
  std::vector<std::vector<int>> out;
  for_each_combination(n, r, [&](std::span<const int> c) { out.emplace_back(c.begin(), c.end()); });
  return out;
}

std::uint64_t colex_rank(std::span<const int> sorted) {
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    rank += binomial(sorted[i], static_cast<std::int64_t>(i) + 1);
  }
  return rank;
}

}  // namespace hypermatch
