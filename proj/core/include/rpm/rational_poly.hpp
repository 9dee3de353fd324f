#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "rpm/bigfloat.hpp"

namespace rpm {

/// Parses "3", "-1/2", "0.25" or "1e-3" into an exact rational.
/// Throws InvalidArgument on malformed input.
mpq_class parse_rational(std::string_view text);

/// Exact univariate polynomial with rational coefficients, lowest degree
/// first. Always canonical: no trailing zero coefficient, so the zero
/// polynomial has an empty coefficient list and degree kZeroDegree.
class RationalPoly {
 public:
  static constexpr int kZeroDegree = -1;

  RationalPoly() = default;
  explicit RationalPoly(std::vector<mpq_class> coeffs);
  RationalPoly(std::initializer_list<mpq_class> coeffs);
  /// The monomial c * x^k.
  static RationalPoly monomial(const mpq_class& c, int k);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of x^k, zero beyond the degree.
  mpq_class coeff(int k) const;
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }

  RationalPoly& operator+=(const RationalPoly& rhs);
  RationalPoly& operator-=(const RationalPoly& rhs);
  RationalPoly& operator*=(const mpq_class& s);
  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
  friend RationalPoly operator*(RationalPoly a, const mpq_class& s) { return a *= s; }
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  RationalPoly operator-() const;
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) = default;

  mpq_class operator()(const mpq_class& x) const;
  /// Horner evaluation in floating point at the precision of `x`.
  BigFloat operator()(const BigFloat& x) const;

  RationalPoly derivative() const;
  /// p(s * x) for a rational scale s.
  RationalPoly compose_scale(const mpq_class& s) const;

  /// Least common multiple of the coefficient denominators.
  mpz_class denominator_lcm() const;

  /// Human readable, highest degree first, e.g. "1/3*e - 1".
  std::string to_string(std::string_view var = "e") const;

 private:
  void normalize();
  std::vector<mpq_class> coeffs_;
};

/// Integer-coefficient form of a rational polynomial: p(x) = num(x) / den.
/// Used on hot evaluation paths where rational normalisation would dominate.
struct ScaledIntegerPoly {
  std::vector<mpz_class> num;  // lowest degree first
  mpz_class den = 1;

  static ScaledIntegerPoly from(const RationalPoly& p);
  int degree() const { return static_cast<int>(num.size()) - 1; }
  /// Exact value at a dyadic rational m / 2^k, returned as (numerator, denominator).
  mpq_class eval_dyadic(const mpz_class& m, unsigned long k) const;
  mpq_class eval(const mpq_class& x) const;
};

}  // namespace rpm
