#include "chebderiv/polynomial.hpp"

#include <stdexcept>
#include <string>

namespace chebderiv {

namespace {

void require_nonnegative(int value, const char* what) {
  if (value < 0) {
    throw std::invalid_argument(std::string(what) + " must be nonnegative, got " +
                                std::to_string(value));
  }
}

}  // namespace

std::string_view basis_symbol(ChebBasis basis) {
  return basis == ChebBasis::FirstKind ? "T" : "U";
}

ChebBasis parse_basis(std::string_view symbol) {
  if (symbol == "T") return ChebBasis::FirstKind;
  if (symbol == "U") return ChebBasis::SecondKind;
  throw std::invalid_argument("unknown Chebyshev basis '" + std::string(symbol) + "'");
}

SparseCoeffs::SparseCoeffs(std::initializer_list<std::pair<const int, ExactRational>> terms) {
  for (const auto& [degree, value] : terms) add(degree, value);
}

void SparseCoeffs::add(int degree, const ExactRational& value) {
  require_nonnegative(degree, "degree");
  if (value == 0) return;
  auto [it, inserted] = terms_.try_emplace(degree, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) terms_.erase(it);
  }
}

void SparseCoeffs::scale(const ExactRational& factor) {
  if (factor == 0) {
    terms_.clear();
    return;
  }
  for (auto& [degree, value] : terms_) value *= factor;
}

ExactRational SparseCoeffs::coefficient(int degree) const {
  const auto it = terms_.find(degree);
  return it == terms_.end() ? ExactRational(0) : it->second;
}

std::optional<int> SparseCoeffs::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

ExactRational MonomialPoly::evaluate(const ExactRational& x) const {
  ExactRational acc = 0;
  int current = degree().value_or(0);
  for (auto it = terms().rbegin(); it != terms().rend(); ++it) {
    for (; current > it->first; --current) acc *= x;
    acc += it->second;
  }
  for (; current > 0; --current) acc *= x;
  return acc;
}

MonomialPoly chebyshev_u_monomial(int n) {
  require_nonnegative(n, "n");
  MonomialPoly out;
  for (int k = 0; 2 * k <= n; ++k) {
    ExactInt c = binomial(n - k, k) * pow2(n - 2 * k);
    if (k % 2 == 1) c = -c;
    out.add(n - 2 * k, ExactRational(c));
  }
  return out;
}

MonomialPoly chebyshev_t_monomial(int n) {
  require_nonnegative(n, "n");
  if (n == 0) return MonomialPoly{{0, 1}};
  MonomialPoly out;
  for (int k = 0; 2 * k <= n; ++k) {
    // n/(n-k) * C(n-k, k) is an integer, but the pieces are not.
    ExactRational c = make_rational(ExactInt(n) * binomial(n - k, k), ExactInt(n - k));
    if (n - 1 - 2 * k >= 0) {
      c *= ExactRational(pow2(n - 1 - 2 * k));
    } else {
      c /= ExactRational(pow2(2 * k + 1 - n));
    }
    if (k % 2 == 1) c = -c;
    out.add(n - 2 * k, c);
  }
  return out;
}

MonomialPoly chebyshev_monomial(ChebBasis basis, int n) {
  return basis == ChebBasis::FirstKind ? chebyshev_t_monomial(n) : chebyshev_u_monomial(n);
}

ChebExpansion monomial_power_to_u(int j) {
  require_nonnegative(j, "power");
  ChebExpansion out(ChebBasis::SecondKind);
  const ExactInt denom = pow2(j);
  // C(j, h) carried incrementally; C(j, -1) = 0 for the h = 0 term.
  ExactInt binom_h = 1;
  ExactInt binom_prev = 0;
  for (int h = 0; 2 * h <= j; ++h) {
    if (h > 0) {
      binom_prev = binom_h;
      binom_h = binom_h * (j - h + 1) / h;
    }
    out.add(j - 2 * h, make_rational(binom_h - binom_prev, denom));
  }
  return out;
}

ChebExpansion monomial_to_u(const MonomialPoly& p) {
  ChebExpansion out(ChebBasis::SecondKind);
  for (const auto& [power, coeff] : p.terms()) {
    const ChebExpansion power_in_u = monomial_power_to_u(power);
    for (const auto& [degree, value] : power_in_u.terms()) {
      out.add(degree, coeff * value);
    }
  }
  return out;
}

MonomialPoly expansion_to_monomial(const ChebExpansion& e) {
  MonomialPoly out;
  for (const auto& [degree, coeff] : e.terms()) {
    const MonomialPoly basis_poly = chebyshev_monomial(e.basis(), degree);
    for (const auto& [power, value] : basis_poly.terms()) {
      out.add(power, coeff * value);
    }
  }
  return out;
}

MonomialPoly differentiate(const MonomialPoly& p, int order) {
  require_nonnegative(order, "derivative order");
  MonomialPoly out;
  for (const auto& [power, coeff] : p.terms()) {
    if (power < order) continue;
    out.add(power - order, coeff * ExactRational(falling_factorial(power, order)));
  }
  return out;
}

ExactRational clenshaw_eval(const ChebExpansion& e, const ExactRational& x) {
  const auto top = e.degree();
  if (!top) return 0;
  const ExactRational two_x = 2 * x;
  // b_k = c_k + 2x b_{k+1} - b_{k+2}, run from the top degree down to 0.
  ExactRational b1 = 0;
  ExactRational b2 = 0;
  for (int k = *top; k >= 1; --k) {
    ExactRational b0 = e.coefficient(k) + two_x * b1 - b2;
    b2 = std::move(b1);
    b1 = std::move(b0);
  }
  // Closing step uses P_1 - 2x P_0, which is 0 for U and -x for T.
  ExactRational result = e.coefficient(0) + two_x * b1 - b2;
  if (e.basis() == ChebBasis::FirstKind) result -= x * b1;
  return result;
}

}  // namespace chebderiv
