#include "hypermatch/rational.hpp"

#include <cctype>

#include "hypermatch/error.hpp"

namespace hypermatch {

std::string_view code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::edge_arity: return "edge_arity";
    case ErrorCode::vertex_out_of_range: return "vertex_out_of_range";
    case ErrorCode::duplicate_edge: return "duplicate_edge";
    case ErrorCode::parse_error: return "parse_error";
    case ErrorCode::domain: return "domain";
    case ErrorCode::infeasible_size: return "infeasible_size";
    case ErrorCode::solver_failure: return "solver_failure";
    case ErrorCode::no_sign_change: return "no_sign_change";
  }
  return "unknown";
}

std::string to_string(const Rational& value) {
  Rational q = value;
  q.canonicalize();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool is_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den) || den[0] == '-' || den[0] == '+') {
    throw Error(ErrorCode::parse_error, "not a rational: '" + std::string(text) + "'");
  }
  BigInt p{std::string(num[0] == '+' ? num.substr(1) : num)};
  BigInt q{std::string(den)};
  if (q == 0) {
    throw Error(ErrorCode::parse_error, "zero denominator: '" + std::string(text) + "'");
  }
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Rational make_rational(long numerator, long denominator) {
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

Rational from_big(const BigInt& value) { return Rational(value); }

BigInt floor(const Rational& value) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

BigInt ceil(const Rational& value) {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

Rational pow(const Rational& base, unsigned exponent) {
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace hypermatch
