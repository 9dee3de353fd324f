#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace rpm {

/// Working precision of a BigFloat. Stored in bits; constructed from decimal
/// digits at API boundaries.
class Precision {
 public:
  static Precision bits(mpfr_prec_t b);
  static Precision digits(int decimal_digits);

  mpfr_prec_t bits() const { return bits_; }
  /// Number of decimal digits representable, rounded down.
  int digits() const;

  Precision operator+(Precision other) const { return bits(bits_ + other.bits_); }
  auto operator<=>(const Precision&) const = default;

 private:
  explicit Precision(mpfr_prec_t b) : bits_(b) {}
  mpfr_prec_t bits_;
};

/// Arbitrary-precision real number (MPFR, round-to-nearest).
///
/// Every value carries its own precision. Binary arithmetic produces a result
/// at the larger of the two operand precisions.
class BigFloat {
 public:
  explicit BigFloat(Precision p = Precision::bits(64));
  BigFloat(long v, Precision p);
  BigFloat(double v, Precision p);
  BigFloat(const mpq_class& v, Precision p);
  BigFloat(const mpz_class& v, Precision p);
  /// Parses a decimal literal such as "10.368507161836337127" or "1e-20".
  BigFloat(std::string_view decimal, Precision p);

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  Precision precision() const { return Precision::bits(mpfr_get_prec(v_)); }
  /// Copy rounded to precision `p`.
  BigFloat with_precision(Precision p) const;

  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator-=(const BigFloat& rhs);
  BigFloat& operator*=(const BigFloat& rhs);
  BigFloat& operator/=(const BigFloat& rhs);
  BigFloat& operator*=(long rhs);
  BigFloat& operator/=(long rhs);
  BigFloat operator-() const;

  friend BigFloat operator+(BigFloat lhs, const BigFloat& rhs) { return lhs += rhs; }
  friend BigFloat operator-(BigFloat lhs, const BigFloat& rhs) { return lhs -= rhs; }
  friend BigFloat operator*(BigFloat lhs, const BigFloat& rhs) { return lhs *= rhs; }
  friend BigFloat operator/(BigFloat lhs, const BigFloat& rhs) { return lhs /= rhs; }
  friend BigFloat operator*(BigFloat lhs, long rhs) { return lhs *= rhs; }
  friend BigFloat operator/(BigFloat lhs, long rhs) { return lhs /= rhs; }

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);

  /// -1, 0 or +1.
  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Exact binary value as a rational; finite values only.
  mpq_class to_rational() const;
  /// Base-2 exponent e with 0.5 <= |x|/2^e < 1; zero maps to LONG_MIN.
  long exponent2() const;

  /// Fixed-point decimal rendering with `significant` significant digits,
  /// e.g. 10.368507161836337127. Falls back to scientific notation outside
  /// 1e-30 .. 1e30.
  std::string to_string(int significant) const;
  /// Scientific rendering, e.g. 3.6882e-12.
  std::string to_scientific(int significant) const;

  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

BigFloat abs(BigFloat x);
BigFloat sqrt(const BigFloat& x);
BigFloat cbrt(const BigFloat& x);
BigFloat log10(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat pow(const BigFloat& x, const BigFloat& y);
BigFloat gamma(const BigFloat& x);
BigFloat min(const BigFloat& a, const BigFloat& b);
BigFloat max(const BigFloat& a, const BigFloat& b);
BigFloat pi(Precision p);
/// 10^k at precision p.
BigFloat pow10(long k, Precision p);

}  // namespace rpm
