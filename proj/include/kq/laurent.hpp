#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kq {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exact element of Z[A, A^-1].
///
/// Stored sparsely as exponent -> coefficient. Zero coefficients are never
/// stored, so the zero polynomial is the empty map and equality is map
/// equality.
class LaurentPoly {
public:
  using Terms = std::map<int, Integer>;

  LaurentPoly() = default;
  LaurentPoly(long constant); // NOLINT: integers embed as constants
  explicit LaurentPoly(const Integer& constant);

  static LaurentPoly monomial(const Integer& coeff, int exponent);
  static LaurentPoly A() { return monomial(1, 1); }
  static LaurentPoly from_terms(const Terms& terms);
  /// Ascending coefficients c0 + c1 A + c2 A^2 + ...
  static LaurentPoly from_coefficients(const std::vector<long>& coeffs, int lowest_exponent = 0);
  /// Parses the `c*A^k` text form, e.g. "1 - A + A^2" or "-A^-1 + 3".
  static LaurentPoly parse(std::string_view text);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  /// True iff the polynomial is a unit +-A^k.
  bool is_unit() const;
  const Terms& terms() const { return terms_; }
  Integer coeff(int exponent) const;
  // Both require a nonzero polynomial.
  int min_exponent() const;
  int max_exponent() const;
  Integer leading_coeff() const;
  Integer lowest_coeff() const;
  /// gcd of the coefficients (nonnegative, zero for the zero polynomial).
  Integer content() const;

  /// Multiplication by the unit A^k.
  LaurentPoly shifted(int k) const;
  /// Exact division by an integer; the caller guarantees divisibility.
  LaurentPoly divided_by(const Integer& d) const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);

  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  friend LaurentPoly operator-(const LaurentPoly& p);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  std::string to_string() const;

private:
  void add_term(int exponent, const Integer& coeff);
  Terms terms_;
};

LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b);

/// Multiplies by the unit +-A^k making the lowest exponent 0 and the lowest
/// coefficient positive. Zero stays zero.
LaurentPoly laurent_normalize(const LaurentPoly& p);

/// gcd in Z[A^+-1] in normalized form; gcd(0, 0) = 0.
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Quotient a / b if b divides a in Z[A^+-1], nullopt otherwise.
/// Throws std::domain_error when b is zero.
std::optional<LaurentPoly> laurent_divide_exact(const LaurentPoly& a, const LaurentPoly& b);

/// True iff a and b differ by a unit +-A^k.
bool unit_equivalent(const LaurentPoly& a, const LaurentPoly& b);

/// Exact evaluation at a nonzero rational; throws std::domain_error at 0.
Rational laurent_eval(const LaurentPoly& p, const Rational& a);

/// Substitution A -> A^-1 (mirror image).
LaurentPoly laurent_mirror(const LaurentPoly& p);

} // namespace kq
