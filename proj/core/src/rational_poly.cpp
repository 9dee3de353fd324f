#include "rpm/rational_poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "rpm/errors.hpp"

namespace rpm {

mpq_class parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.empty()) throw InvalidArgument("empty rational literal");
  const auto bad = [&] { return InvalidArgument("malformed rational literal: '" + std::string(text) + "'"); };

  if (const auto slash = s.find('/'); slash != std::string::npos) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw bad();
    if (q.get_den() == 0) throw InvalidArgument("zero denominator in rational literal: '" + std::string(text) + "'");
    q.canonicalize();
    return q;
  }

  // Decimal with optional exponent: [sign] digits [. digits] [e [sign] digits]
  size_t i = 0;
  bool negative = false;
  if (s[i] == '+' || s[i] == '-') negative = (s[i++] == '-');
  std::string mantissa;
  size_t frac_digits = 0;
  bool seen_point = false;
  for (; i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.'); ++i) {
    if (s[i] == '.') {
      if (seen_point) throw bad();
      seen_point = true;
    } else {
      mantissa.push_back(s[i]);
      if (seen_point) ++frac_digits;
    }
  }
  if (mantissa.empty()) throw bad();
  long exponent = 0;
  if (i < s.size()) {
    if (s[i] != 'e' && s[i] != 'E') throw bad();
    ++i;
    const std::string exp_part = s.substr(i);
    if (exp_part.empty()) throw bad();
    size_t used = 0;
    try {
      exponent = std::stol(exp_part, &used);
    } catch (const std::exception&) {
      throw bad();
    }
    if (used != exp_part.size()) throw bad();
  }
  mpz_class num(mantissa, 10);
  const long shift = exponent - static_cast<long>(frac_digits);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  mpq_class q = shift < 0 ? mpq_class(num, scale) : mpq_class(num * scale);
  q.canonicalize();
  return negative ? mpq_class(-q) : q;
}

RationalPoly::RationalPoly(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

RationalPoly::RationalPoly(std::initializer_list<mpq_class> coeffs) : coeffs_(coeffs) { normalize(); }

RationalPoly RationalPoly::monomial(const mpq_class& c, int k) {
  std::vector<mpq_class> v(static_cast<size_t>(k) + 1);
  v.back() = c;
  return RationalPoly(std::move(v));
}

void RationalPoly::normalize() {
  for (auto& c : coeffs_) c.canonicalize();
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpq_class RationalPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<size_t>(k)];
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

RationalPoly& RationalPoly::operator*=(const mpq_class& s) {
  if (s == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RationalPoly(std::move(r));
}

RationalPoly RationalPoly::operator-() const {
  RationalPoly r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

mpq_class RationalPoly::operator()(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigFloat RationalPoly::operator()(const BigFloat& x) const {
  const Precision p = x.precision();
  BigFloat acc(p);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += BigFloat(*it, p);
  }
  return acc;
}

RationalPoly RationalPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<mpq_class> r(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) r[i - 1] = coeffs_[i] * static_cast<long>(i);
  return RationalPoly(std::move(r));
}

RationalPoly RationalPoly::compose_scale(const mpq_class& s) const {
  std::vector<mpq_class> r(coeffs_);
  mpq_class power = 1;
  for (auto& c : r) {
    c *= power;
    power *= s;
  }
  return RationalPoly(std::move(r));
}

mpz_class RationalPoly::denominator_lcm() const {
  mpz_class l = 1;
  for (const auto& c : coeffs_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

std::string RationalPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const mpq_class& c = coeffs_[static_cast<size_t>(k)];
    if (c == 0) continue;
    mpq_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

ScaledIntegerPoly ScaledIntegerPoly::from(const RationalPoly& p) {
  ScaledIntegerPoly r;
  r.den = p.denominator_lcm();
  r.num.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    mpz_class n = c.get_num() * (r.den / c.get_den());
    r.num.push_back(std::move(n));
  }
  return r;
}

mpq_class ScaledIntegerPoly::eval_dyadic(const mpz_class& m, unsigned long k) const {
  // sum_i num_i m^i 2^{k(n-i)} / (den 2^{kn})
  if (num.empty()) return 0;
  const size_t n = num.size() - 1;
  mpz_class acc = num[n];
  for (size_t i = n; i-- > 0;) {
    acc *= m;
    mpz_class term = num[i];
    mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), k * (n - i));
    acc += term;
  }
  mpz_class d = den;
  mpz_mul_2exp(d.get_mpz_t(), d.get_mpz_t(), k * n);
  mpq_class q(acc, d);
  q.canonicalize();
  return q;
}

mpq_class ScaledIntegerPoly::eval(const mpq_class& x) const {
  // Homogenised Horner to stay in integers: x = a/b.
  if (num.empty()) return 0;
  const mpz_class& a = x.get_num();
  const mpz_class& b = x.get_den();
  const size_t n = num.size() - 1;
  mpz_class acc = num[n];
  mpz_class bpow = 1;
  for (size_t i = n; i-- > 0;) {
    bpow *= b;
    acc = acc * a + num[i] * bpow;
  }
  mpq_class q(acc, den * bpow);
  q.canonicalize();
  return q;
}

}  // namespace rpm
