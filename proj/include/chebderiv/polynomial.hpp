#pragma once

#include "chebderiv/combinatorics.hpp"

#include <map>
#include <optional>
#include <utility>
#include <string_view>

namespace chebderiv {

enum class ChebBasis { FirstKind, SecondKind };

/// "T" or "U".
std::string_view basis_symbol(ChebBasis basis);
/// Inverse of basis_symbol; throws std::invalid_argument on anything else.
ChebBasis parse_basis(std::string_view symbol);

/// Degree -> coefficient map in canonical sparse form: a zero coefficient is
/// never stored, so two equal polynomials have identical maps.
class SparseCoeffs {
 public:
  using Map = std::map<int, ExactRational>;

  SparseCoeffs() = default;
  SparseCoeffs(std::initializer_list<std::pair<const int, ExactRational>> terms);

  /// Adds value to the coefficient of x^degree (or P_degree), dropping the
  /// entry if it cancels to zero. Negative degrees are rejected.
  void add(int degree, const ExactRational& value);
  void scale(const ExactRational& factor);

  ExactRational coefficient(int degree) const;
  std::optional<int> degree() const;
  bool is_zero() const { return terms_.empty(); }
  const Map& terms() const& { return terms_; }
  Map terms() && { return std::move(terms_); }

  friend bool operator==(const SparseCoeffs&, const SparseCoeffs&) = default;

 private:
  Map terms_;
};

/// Polynomial in the monomial basis 1, x, x^2, ...
class MonomialPoly : public SparseCoeffs {
 public:
  using SparseCoeffs::SparseCoeffs;

  /// Horner evaluation.
  ExactRational evaluate(const ExactRational& x) const;

  friend bool operator==(const MonomialPoly&, const MonomialPoly&) = default;
};

/// Polynomial as a combination of T_k or U_k.
class ChebExpansion : public SparseCoeffs {
 public:
  explicit ChebExpansion(ChebBasis basis) : basis_(basis) {}
  ChebExpansion(ChebBasis basis,
                std::initializer_list<std::pair<const int, ExactRational>> terms)
      : SparseCoeffs(terms), basis_(basis) {}

  ChebBasis basis() const { return basis_; }

  friend bool operator==(const ChebExpansion&, const ChebExpansion&) = default;

 private:
  ChebBasis basis_;
};

/// U_n(x) = sum_{k <= n/2} (-1)^k C(n-k, k) (2x)^{n-2k}.
MonomialPoly chebyshev_u_monomial(int n);

/// T_n(x) = sum_{k <= n/2} (-1)^k n/(n-k) C(n-k, k) 2^{n-1-2k} x^{n-2k}; T_0 = 1.
MonomialPoly chebyshev_t_monomial(int n);

MonomialPoly chebyshev_monomial(ChebBasis basis, int n);

/// x^j = 2^{-j} sum_{h <= j/2} [C(j, h) - C(j, h-1)] U_{j-2h}.
ChebExpansion monomial_power_to_u(int j);

ChebExpansion monomial_to_u(const MonomialPoly& p);

MonomialPoly expansion_to_monomial(const ChebExpansion& e);

/// Term-by-term power rule, applied `order` times.
MonomialPoly differentiate(const MonomialPoly& p, int order);

/// Clenshaw summation with the shared recurrence P_{k+1} = 2x P_k - P_{k-1}.
ExactRational clenshaw_eval(const ChebExpansion& e, const ExactRational& x);

}  // namespace chebderiv
