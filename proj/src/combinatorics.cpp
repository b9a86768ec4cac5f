#include "chebderiv/combinatorics.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace chebderiv {

namespace {

unsigned long to_ulong(std::int64_t v, const char* what) {
  if (v < 0 || static_cast<std::uint64_t>(v) > std::numeric_limits<unsigned long>::max()) {
    throw std::invalid_argument(std::string(what) + " out of range: " + std::to_string(v));
  }
  return static_cast<unsigned long>(v);
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

ExactRational make_rational(const ExactInt& num, const ExactInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  ExactRational q(num, den);
  q.canonicalize();
  return q;
}

ExactRational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_text = body.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num_text) || !all_digits(den_text)) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  ExactInt num(std::string(num_text), 10);
  const ExactInt den(std::string(den_text), 10);
  if (den == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  if (negative) num = -num;
  return make_rational(num, den);
}

std::string to_string(const ExactRational& value) { return value.get_str(10); }

ExactInt binomial(std::int64_t m, std::int64_t r) {
  if (m < 0) {
    throw std::invalid_argument("binomial: negative upper index " + std::to_string(m));
  }
  if (r < 0 || r > m) return 0;
  ExactInt out;
  mpz_bin_uiui(out.get_mpz_t(), to_ulong(m, "binomial upper index"),
               to_ulong(r, "binomial lower index"));
  return out;
}

ExactInt falling_factorial(std::int64_t x, std::int64_t m) {
  if (m < 0) {
    throw std::invalid_argument("falling_factorial: negative length " + std::to_string(m));
  }
  // Chain hits zero once it covers both x and 0.
  if (x >= 0 && m > x) return 0;
  ExactInt out = 1;
  for (std::int64_t i = 0; i < m; ++i) {
    out *= ExactInt(static_cast<long>(x - i));
  }
  return out;
}

ExactInt factorial(std::int64_t n) {
  ExactInt out;
  mpz_fac_ui(out.get_mpz_t(), to_ulong(n, "factorial argument"));
  return out;
}

ExactInt pow2(std::int64_t e) {
  ExactInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, to_ulong(e, "pow2 exponent"));
  return out;
}

}  // namespace chebderiv
