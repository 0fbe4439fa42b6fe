#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace salem {

using Integer = mpz_class;
/// Exact rational; GMP keeps it canonical (reduced, positive denominator).
using Rational = mpq_class;

/// Dense univariate polynomial over Z, coefficients stored in ascending
/// degree order. Always canonical: no trailing zero coefficient, so the zero
/// polynomial has an empty coefficient vector and degree() == -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Integer& c);
  static IntPoly monomial(const Integer& c, int degree);
  /// x^n - 1
  static IntPoly x_pow_minus_one(int n);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

  /// Coefficient of x^i; zero beyond the degree.
  Integer coeff(int i) const;
  const Integer& leading() const { return coeffs_.back(); }
  std::span<const Integer> coeffs() const { return coeffs_; }

  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  IntPoly& operator*=(const IntPoly& rhs);
  IntPoly& operator*=(const Integer& c);

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

IntPoly operator+(IntPoly p, const IntPoly& q);
IntPoly operator-(IntPoly p, const IntPoly& q);
IntPoly operator-(const IntPoly& p);
IntPoly operator*(const IntPoly& p, const IntPoly& q);
IntPoly operator*(IntPoly p, const Integer& c);

IntPoly add(const IntPoly& p, const IntPoly& q);
IntPoly mul(const IntPoly& p, const IntPoly& q);

Integer eval(const IntPoly& p, const Integer& x);
Rational eval_rational(const IntPoly& p, const Rational& x);
/// Sign of p(x) without forming the full rational value's denominator.
int sign_at(const IntPoly& p, const Rational& x);

IntPoly derivative(const IntPoly& p);
/// p(-x)
IntPoly reflect(const IntPoly& p);

/// gcd of the coefficients, nonnegative; zero for the zero polynomial.
Integer content(const IntPoly& p);
/// p / content(p), sign preserved.
IntPoly primitive_part(const IntPoly& p);

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r with deg r < deg b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

struct DivResult {
  IntPoly quotient;
  IntPoly remainder;
};
/// Division over Z by a divisor whose leading coefficient divides every
/// intermediate leading term. Throws std::domain_error if a non-integral
/// quotient coefficient would arise.
DivResult divide(const IntPoly& a, const IntPoly& b);
/// True when b divides a exactly in Z[x]; the quotient is written to *q.
bool divides_exactly(const IntPoly& b, const IntPoly& a, IntPoly* q = nullptr);

/// Res(p, q) via the subresultant PRS. Res(c, q) = c^deg q for constant c.
/// Throws std::invalid_argument for a zero input.
Integer resultant(const IntPoly& p, const IntPoly& q);

/// Primitive gcd with positive leading coefficient; the constant 1 when the
/// inputs share no complex root. Throws std::invalid_argument for zero input.
IntPoly gcd_over_rationals(const IntPoly& p, const IntPoly& q);

/// S(x) = x^t T(x + 1/x). Requires deg T == t.
IntPoly compose_trace_lift(const IntPoly& T, int t);

/// x^deg p * p(1/x) == p
bool is_reciprocal(const IntPoly& p);

/// Ascending comma-separated coefficients, "3,0,-4,0,1"; the zero
/// polynomial prints as "0".
std::string to_string(const IntPoly& p);
/// Inverse of to_string. Whitespace is ignored. Throws std::invalid_argument.
IntPoly parse_poly(std::string_view text);
/// Human-readable form, e.g. "x^4 - 4*x^2 + 3".
std::string to_pretty(const IntPoly& p);

/// "p/q", an integer, or a decimal such as "2.618".
Rational parse_rational(std::string_view text);

}  // namespace salem
