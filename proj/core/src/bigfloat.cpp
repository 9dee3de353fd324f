#include "rpm/bigfloat.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <stdexcept>

namespace rpm {

Precision Precision::bits(mpfr_prec_t b) {
  return Precision(std::max<mpfr_prec_t>(b, MPFR_PREC_MIN));
}

Precision Precision::digits(int decimal_digits) {
  // log2(10) = 3.3219...
  const double b = std::ceil(std::max(decimal_digits, 1) * 3.321928094887362) + 1;
  return Precision(static_cast<mpfr_prec_t>(b));
}

int Precision::digits() const {
  return static_cast<int>(std::floor((bits_ - 1) / 3.321928094887362));
}

BigFloat::BigFloat(Precision p) {
  mpfr_init2(v_, p.bits());
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long v, Precision p) {
  mpfr_init2(v_, p.bits());
  mpfr_set_si(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(double v, Precision p) {
  mpfr_init2(v_, p.bits());
  mpfr_set_d(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const mpq_class& v, Precision p) {
  mpfr_init2(v_, p.bits());
  mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const mpz_class& v, Precision p) {
  mpfr_init2(v_, p.bits());
  mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(std::string_view decimal, Precision p) {
  mpfr_init2(v_, p.bits());
  const std::string s(decimal);
  char* end = nullptr;
  mpfr_strtofr(v_, s.c_str(), &end, 10, MPFR_RNDN);
  if (end == s.c_str() || *end != '\0') {
    mpfr_clear(v_);
    throw std::invalid_argument("not a decimal number: " + s);
  }
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::with_precision(Precision p) const {
  BigFloat r(p);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

namespace {

void widen_to(mpfr_t dst, mpfr_srcptr other) {
  if (mpfr_get_prec(other) > mpfr_get_prec(dst)) mpfr_prec_round(dst, mpfr_get_prec(other), MPFR_RNDN);
}

}  // namespace

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
  widen_to(v_, rhs.v_);
  mpfr_add(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
  widen_to(v_, rhs.v_);
  mpfr_sub(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
  widen_to(v_, rhs.v_);
  mpfr_mul(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
  widen_to(v_, rhs.v_);
  mpfr_div(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(long rhs) {
  mpfr_mul_si(v_, v_, rhs, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(long rhs) {
  mpfr_div_si(v_, v_, rhs, MPFR_RNDN);
  return *this;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.v_, b.v_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

mpq_class BigFloat::to_rational() const {
  if (!is_finite()) throw std::domain_error("BigFloat::to_rational on non-finite value");
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), v_);
  return q;
}

long BigFloat::exponent2() const {
  if (is_zero()) return LONG_MIN;
  return mpfr_get_exp(v_);
}

std::string BigFloat::to_scientific(int significant) const {
  if (!is_finite()) return mpfr_nan_p(v_) ? "nan" : (sign() < 0 ? "-inf" : "inf");
  significant = std::max(significant, 1);
  const std::string fmt = "%." + std::to_string(significant - 1) + "Re";
  char* buf = nullptr;
  mpfr_asprintf(&buf, fmt.c_str(), v_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

std::string BigFloat::to_string(int significant) const {
  if (!is_finite()) return to_scientific(significant);
  if (is_zero()) return "0";
  significant = std::max(significant, 1);
  mpfr_exp_t e10 = 0;
  char* raw = mpfr_get_str(nullptr, &e10, 10, static_cast<size_t>(significant), v_, MPFR_RNDN);
  std::string digits(raw);
  mpfr_free_str(raw);
  bool negative = false;
  if (!digits.empty() && digits[0] == '-') {
    negative = true;
    digits.erase(0, 1);
  }
  if (e10 > 30 || e10 < -30) return to_scientific(significant);
  // value = 0.digits * 10^e10
  std::string out;
  if (e10 <= 0) {
    out = "0." + std::string(static_cast<size_t>(-e10), '0') + digits;
  } else if (static_cast<size_t>(e10) >= digits.size()) {
    out = digits + std::string(static_cast<size_t>(e10) - digits.size(), '0');
  } else {
    out = digits.substr(0, static_cast<size_t>(e10)) + "." + digits.substr(static_cast<size_t>(e10));
  }
  return negative ? "-" + out : out;
}

BigFloat abs(BigFloat x) {
  mpfr_abs(x.get(), x.get(), MPFR_RNDN);
  return x;
}

BigFloat sqrt(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat cbrt(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_cbrt(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat log10(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_log10(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat exp(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_exp(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat sin(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_sin(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat pow(const BigFloat& x, const BigFloat& y) {
  BigFloat r(std::max(x.precision(), y.precision()));
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

BigFloat gamma(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_gamma(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat min(const BigFloat& a, const BigFloat& b) { return (b < a) ? b : a; }
BigFloat max(const BigFloat& a, const BigFloat& b) { return (a < b) ? b : a; }

BigFloat pi(Precision p) {
  BigFloat r(p);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

BigFloat pow10(long k, Precision p) {
  BigFloat r(p);
  mpfr_ui_pow_ui(r.get(), 10, static_cast<unsigned long>(k < 0 ? -k : k), MPFR_RNDN);
  if (k < 0) mpfr_ui_div(r.get(), 1, r.get(), MPFR_RNDN);
  return r;
}

}  // namespace rpm
