#include "rpm/hankel.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "rpm/errors.hpp"
#include "rpm/real_roots.hpp"

namespace rpm {
namespace {

using Matrix = std::vector<std::vector<BigFloat>>;

/// Determinant by Gaussian elimination with partial pivoting, in place.
BigFloat float_determinant(Matrix& a) {
  const size_t n = a.size();
  const Precision p = a[0][0].precision();
  BigFloat det(1L, p);
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    BigFloat best = abs(a[k][k]);
    for (size_t i = k + 1; i < n; ++i) {
      BigFloat v = abs(a[i][k]);
      if (v > best) {
        best = std::move(v);
        piv = i;
      }
    }
    if (best.is_zero()) return BigFloat(p);
    if (piv != k) {
      std::swap(a[piv], a[k]);
      det = -det;
    }
    det *= a[k][k];
    for (size_t i = k + 1; i < n; ++i) {
      if (a[i][k].is_zero()) continue;
      const BigFloat factor = a[i][k] / a[k][k];
      for (size_t j = k + 1; j < n; ++j) a[i][j] -= factor * a[k][j];
    }
  }
  return det;
}

/// Solves a x = rhs with partial pivoting; returns the determinant of a.
BigFloat float_solve(Matrix a, std::vector<BigFloat>& rhs) {
  const size_t n = a.size();
  const Precision p = a[0][0].precision();
  BigFloat det(1L, p);
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    BigFloat best = abs(a[k][k]);
    for (size_t i = k + 1; i < n; ++i) {
      BigFloat v = abs(a[i][k]);
      if (v > best) {
        best = std::move(v);
        piv = i;
      }
    }
    if (best.is_zero()) return BigFloat(p);
    if (piv != k) {
      std::swap(a[piv], a[k]);
      std::swap(rhs[piv], rhs[k]);
      det = -det;
    }
    det *= a[k][k];
    for (size_t i = k + 1; i < n; ++i) {
      const BigFloat factor = a[i][k] / a[k][k];
      for (size_t j = k + 1; j < n; ++j) a[i][j] -= factor * a[k][j];
      rhs[i] -= factor * rhs[k];
    }
  }
  for (size_t k = n; k-- > 0;) {
    for (size_t j = k + 1; j < n; ++j) rhs[k] -= a[k][j] * rhs[j];
    rhs[k] /= a[k][k];
  }
  return det;
}

void check_spec(const CoefficientTable& table, HankelSpec spec) {
  if (spec.dimension < 1) throw InvalidArgument("Hankel dimension must be >= 1");
  if (spec.offset < 0) throw InvalidArgument("Hankel offset d must be >= 0");
  if (spec.max_index() >= table.size()) throw InsufficientCoefficients(spec.max_index(), table.size());
}

BigFloat tolerance(int digits, Precision p) { return pow10(-digits, p); }

mpq_class decimal_tolerance(int digits) {
  mpz_class ten;
  mpz_ui_pow_ui(ten.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  return mpq_class(mpz_class(1), ten);
}

}  // namespace

int hankel_guard_digits(int dimension) { return 20 + 3 * dimension; }

HankelEvaluator::HankelEvaluator(const CoefficientTable& table, HankelSpec spec) : spec_(spec) {
  check_spec(table, spec);
  for (int k = spec.offset + 1; k <= spec.max_index(); ++k) {
    entries_.push_back(table[k]);
    scaled_.push_back(ScaledIntegerPoly::from(table[k]));
  }
}

int HankelEvaluator::degree_bound() const {
  int total = 0;
  for (int i = 0; i < spec_.dimension; ++i) {
    int row = 0;
    for (int j = 0; j < spec_.dimension; ++j) row = std::max(row, entries_[static_cast<size_t>(i + j)].degree());
    total += row;
  }
  return total;
}

std::vector<mpq_class> HankelEvaluator::exact_entries(const mpq_class& eps) const {
  std::vector<mpq_class> v;
  v.reserve(scaled_.size());
  for (const auto& p : scaled_) v.push_back(p.eval(eps));
  return v;
}

BigFloat HankelEvaluator::operator()(const BigFloat& eps, int digits) const {
  const Precision p = Precision::digits(digits + hankel_guard_digits(spec_.dimension));
  // eps is a binary float, i.e. m / 2^k exactly.
  const mpq_class q = eps.to_rational();
  const mpz_class& den = q.get_den();
  const unsigned long k = den == 1 ? 0 : mpz_scan1(den.get_mpz_t(), 0);
  std::vector<BigFloat> values;
  values.reserve(scaled_.size());
  for (const auto& poly : scaled_) values.emplace_back(poly.eval_dyadic(q.get_num(), k), p);

  const auto D = static_cast<size_t>(spec_.dimension);
  Matrix m(D, std::vector<BigFloat>(D, BigFloat(p)));
  for (size_t i = 0; i < D; ++i)
    for (size_t j = 0; j < D; ++j) m[i][j] = values[i + j];
  return float_determinant(m);
}

mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> m) {
  const size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  mpz_class prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        mpz_class t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

mpq_class HankelEvaluator::exact(const mpq_class& eps) const {
  const std::vector<mpq_class> values = exact_entries(eps);
  mpz_class l = 1;
  for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  const auto D = static_cast<size_t>(spec_.dimension);
  std::vector<std::vector<mpz_class>> m(D, std::vector<mpz_class>(D));
  for (size_t i = 0; i < D; ++i)
    for (size_t j = 0; j < D; ++j) {
      const mpq_class& v = values[i + j];
      m[i][j] = v.get_num() * (l / v.get_den());
    }
  mpz_class scale;
  mpz_pow_ui(scale.get_mpz_t(), l.get_mpz_t(), D);
  mpq_class r(bareiss_determinant(std::move(m)), scale);
  r.canonicalize();
  return r;
}

BigFloat hankel_eval(const CoefficientTable& table, HankelSpec spec, const BigFloat& eps, int digits) {
  return HankelEvaluator(table, spec)(eps, digits);
}

mpq_class hankel_eval_exact(const CoefficientTable& table, HankelSpec spec, const mpq_class& eps) {
  return HankelEvaluator(table, spec).exact(eps);
}

RationalPoly hankel_polynomial(const CoefficientTable& table, HankelSpec spec) {
  const HankelEvaluator eval(table, spec);
  const int deg = eval.degree_bound();
  const size_t n = static_cast<size_t>(deg) + 1;
  // Nodes 0, 1, -1, 2, -2, ... keep |node| small.
  std::vector<mpq_class> xs(n);
  for (size_t i = 0; i < n; ++i) {
    const long mag = static_cast<long>((i + 1) / 2);
    xs[i] = (i % 2 == 1) ? mag : -mag;
  }
  std::vector<mpq_class> c(n);
  for (size_t i = 0; i < n; ++i) c[i] = eval.exact(xs[i]);
  // Newton divided differences.
  for (size_t k = 1; k < n; ++k)
    for (size_t i = n - 1; i >= k; --i) c[i] = (c[i] - c[i - 1]) / (xs[i] - xs[i - k]);
  RationalPoly poly{c[n - 1]};
  for (size_t i = n - 1; i-- > 0;) {
    poly = poly * RationalPoly{mpq_class(-xs[i]), 1} + RationalPoly{c[i]};
  }
  const mpq_class check_node = static_cast<long>(n / 2 + 1) * (n % 2 == 0 ? -1 : 1);
  if (poly(check_node) != eval.exact(check_node)) {
    throw Error("hankel_polynomial: interpolation check failed (degree bound too small)");
  }
  return poly;
}

RootRecord refine_in_bracket(const HankelEvaluator& eval, const BigFloat& lo_in, const BigFloat& hi_in, int digits) {
  const Precision p = Precision::digits(digits + hankel_guard_digits(eval.spec().dimension));
  BigFloat lo = lo_in.with_precision(p);
  BigFloat hi = hi_in.with_precision(p);
  const BigFloat tol = tolerance(digits, p);
  const BigFloat half_tol = tol / 2L;
  BigFloat f_lo = eval(lo, digits);
  BigFloat f_hi = eval(hi, digits);
  if (f_lo.is_zero()) return {lo, BigFloat(p), eval.spec(), false};
  if (f_hi.is_zero()) return {hi, BigFloat(p), eval.spec(), false};
  if (f_lo.sign() == f_hi.sign()) {
    throw NoConvergence("refine_in_bracket: no sign change on bracket", lo.to_string(25), hi.to_string(25));
  }
  const int s_lo = f_lo.sign();
  const BigFloat h = pow10(-(digits / 2), p);

  BigFloat x = (lo + hi) / 2L;
  for (int iter = 0; iter < 2000; ++iter) {
    if ((hi - lo) / 2L <= tol) break;
    const BigFloat fx = eval(x, digits);
    if (fx.is_zero()) return {x, BigFloat(p), eval.spec(), false};
    if (fx.sign() == s_lo) {
      lo = x;
    } else {
      hi = x;
    }
    const BigFloat hx = h * max(BigFloat(1L, p), abs(x));
    const BigFloat deriv = (eval(x + hx, digits) - eval(x - hx, digits)) / (hx * 2L);
    BigFloat next(p);
    bool newton_ok = false;
    if (!deriv.is_zero()) {
      const BigFloat step = fx / deriv;
      next = x - step;
      newton_ok = next > lo && next < hi;
      if (newton_ok && abs(step) < half_tol) {
        // Converged: certify a bracket of width tol around the iterate.
        const BigFloat a = next - half_tol;
        const BigFloat b = next + half_tol;
        const BigFloat fa = eval(a, digits);
        const BigFloat fb = eval(b, digits);
        if (fa.sign() != fb.sign() && fa.sign() != 0 && fb.sign() != 0) {
          return {next, half_tol, eval.spec(), true};
        }
      }
    }
    x = newton_ok ? std::move(next) : (lo + hi) / 2L;
  }
  if ((hi - lo) / 2L > tol) {
    throw NoConvergence("refine_in_bracket: iteration limit", lo.to_string(25), hi.to_string(25));
  }
  return {(lo + hi) / 2L, (hi - lo) / 2L, eval.spec(), true};
}

RootRecord refine_root(const CoefficientTable& table, HankelSpec spec, const BigFloat& seed, int digits) {
  const HankelEvaluator eval(table, spec);
  const Precision p = Precision::digits(digits + hankel_guard_digits(spec.dimension));
  const BigFloat one(1L, p);
  const BigFloat tol = tolerance(digits, p);
  const BigFloat h = pow10(-(digits / 2), p);
  BigFloat x = seed.with_precision(p);

  // Plain Newton first.
  for (int iter = 0; iter < 60; ++iter) {
    const BigFloat fx = eval(x, digits);
    if (fx.is_zero()) return {x, BigFloat(p), spec, false};
    const BigFloat hx = h * max(one, abs(x));
    const BigFloat deriv = (eval(x + hx, digits) - eval(x - hx, digits)) / (hx * 2L);
    if (deriv.is_zero()) break;
    const BigFloat step = fx / deriv;
    x -= step;
    if (abs(x - seed) > max(one, abs(seed))) break;  // wandered off
    if (abs(step) < tol / 2L) {
      const BigFloat a = x - tol / 2L;
      const BigFloat b = x + tol / 2L;
      if (eval(a, digits).sign() * eval(b, digits).sign() < 0) return {x, tol / 2L, spec, true};
      break;
    }
  }

  // Fallback: find a sign change around the seed, then bisect/Newton inside it.
  BigFloat width = BigFloat(1L, p) / 1000L * max(one, abs(seed));
  const BigFloat limit = max(one, abs(seed));
  const BigFloat s = seed.with_precision(p);
  while (width <= limit) {
    const BigFloat a = s - width;
    const BigFloat b = s + width;
    if (eval(a, digits).sign() * eval(b, digits).sign() < 0) return refine_in_bracket(eval, a, b, digits);
    width *= 2L;
  }
  throw NoConvergence("refine_root: no simple root near seed " + seed.to_string(25), (s - limit).to_string(25),
                      (s + limit).to_string(25));
}

std::vector<RootRecord> scan_roots(const CoefficientTable& table, HankelSpec spec, const BigFloat& lo, const BigFloat& hi,
                                   int grid, int digits) {
  if (!(lo < hi)) throw InvalidArgument("scan_roots: lo must be < hi");
  if (grid < 2) throw InvalidArgument("scan_roots: grid must have at least 2 points");
  const HankelEvaluator eval(table, spec);
  const Precision p = Precision::digits(digits + hankel_guard_digits(spec.dimension));
  const BigFloat step = (hi.with_precision(p) - lo.with_precision(p)) / static_cast<long>(grid - 1);
  std::vector<RootRecord> out;
  BigFloat prev_x = lo.with_precision(p);
  BigFloat prev_f = eval(prev_x, digits);
  if (prev_f.is_zero()) out.push_back({prev_x, BigFloat(p), spec, false});
  for (int i = 1; i < grid; ++i) {
    BigFloat x = (i == grid - 1) ? hi.with_precision(p) : lo.with_precision(p) + step * static_cast<long>(i);
    BigFloat fx = eval(x, digits);
    if (fx.is_zero()) {
      out.push_back({x, BigFloat(p), spec, false});
    } else if (!prev_f.is_zero() && prev_f.sign() != fx.sign()) {
      out.push_back(refine_in_bracket(eval, prev_x, x, digits));
    }
    prev_x = std::move(x);
    prev_f = std::move(fx);
  }
  std::sort(out.begin(), out.end(), [](const RootRecord& a, const RootRecord& b) { return a.value < b.value; });
  return out;
}

std::vector<RootRecord> isolate_roots(const CoefficientTable& table, HankelSpec spec, const mpq_class& lo,
                                      const mpq_class& hi, int digits) {
  const HankelEvaluator eval(table, spec);
  const RationalPoly poly = hankel_polynomial(table, spec);
  std::vector<RootRecord> out;
  if (poly.is_zero()) return out;

  // Sign checks use the full polynomial so even-multiplicity roots drop out.
  std::vector<mpz_class> full;
  {
    const mpz_class l = poly.denominator_lcm();
    for (const auto& c : poly.coeffs()) full.push_back(c.get_num() * (l / c.get_den()));
  }
  const Precision p = Precision::digits(digits + hankel_guard_digits(spec.dimension));
  std::optional<std::vector<mpz_class>> sqf;
  for (IsolatingInterval iv : isolate_real_roots(poly, lo, hi)) {
    if (!iv.exact && (sign_at(full, iv.lo) == 0 || sign_at(full, iv.hi) == 0)) {
      // An endpoint is a neighbouring exact root. Pull both ends inward until
      // the simple root of the square-free part is strictly bracketed.
      if (!sqf) sqf = squarefree_integer_part(poly);
      mpq_class delta = (iv.hi - iv.lo) / 4;
      while (sign_at(*sqf, iv.lo + delta) * sign_at(*sqf, iv.hi - delta) >= 0) delta /= 2;
      iv = {iv.lo + delta, iv.hi - delta, false};
    }
    if (iv.exact) {
      // Rational root: keep it when its multiplicity is odd.
      int order = 0;
      for (RationalPoly q = poly; q(iv.lo) == 0; q = q.derivative()) ++order;
      if (order % 2 == 1) out.push_back({BigFloat(iv.lo, p), BigFloat(p), spec, true});
      continue;
    }
    if (sign_at(full, iv.lo) * sign_at(full, iv.hi) >= 0) continue;  // tangential
    // Shrink until the float bracket is comfortably representable.
    const IsolatingInterval narrow = narrow_interval(full, iv, (iv.hi - iv.lo) / 64);
    RootRecord rec = refine_in_bracket(eval, BigFloat(narrow.lo, p), BigFloat(narrow.hi, p), digits);
    // Certify the float result against the exact polynomial.
    const mpq_class v = rec.value.to_rational();
    const mpq_class r = rec.radius.to_rational();
    if (r > 0 && sign_at(full, v - r) * sign_at(full, v + r) < 0) {
      rec.sign_change = true;
    } else {
      // Float evaluation lost the bracket; fall back to exact bisection.
      const IsolatingInterval exact = narrow_interval(full, narrow, 2 * decimal_tolerance(digits));
      rec.value = BigFloat(mpq_class((exact.lo + exact.hi) / 2), p);
      rec.radius = BigFloat(mpq_class((exact.hi - exact.lo) / 2), p);
      rec.sign_change = true;
    }
    out.push_back(std::move(rec));
  }
  return out;
}

PadeApproximant pade_approximant(const CoefficientTable& table, int n, int d, const BigFloat& eps, int digits) {
  if (n < 1) throw InvalidArgument("pade_approximant: N must be >= 1");
  if (d < 0) throw InvalidArgument("pade_approximant: d must be >= 0");
  const int m = n + d;
  if (m + n + 1 >= table.size()) throw InsufficientCoefficients(m + n + 1, table.size());

  const Precision p = Precision::digits(digits + hankel_guard_digits(n + 1));
  const mpq_class q = eps.to_rational();
  std::vector<BigFloat> f;
  for (int j = 0; j <= m + n + 1; ++j) f.emplace_back(table[j](q), p);

  // Denominator system: sum_{k=1..N} b_k f_{r-k} = -f_r for r = M+1 .. M+N.
  const auto N = static_cast<size_t>(n);
  const auto system_at = [&](const std::vector<BigFloat>& fv) {
    Matrix a(N, std::vector<BigFloat>(N, BigFloat(p)));
    for (size_t i = 0; i < N; ++i)
      for (size_t k = 1; k <= N; ++k) a[i][k - 1] = fv[static_cast<size_t>(m) + 1 + i - k];
    return a;
  };
  std::vector<BigFloat> b(N, BigFloat(p));
  for (size_t i = 0; i < N; ++i) b[i] = -f[static_cast<size_t>(m) + 1 + i];
  const BigFloat det = float_solve(system_at(f), b);

  // Singularity: Newton distance from eps to the nearest root of det.
  bool singular = det.is_zero();
  if (!singular) {
    const BigFloat h = pow10(-(digits / 2), p) * max(BigFloat(1L, p), abs(eps));
    const auto det_at = [&](const BigFloat& x) {
      const mpq_class qx = x.to_rational();
      std::vector<BigFloat> fv;
      for (int j = 0; j <= m + n; ++j) fv.emplace_back(table[j](qx), p);
      Matrix a = system_at(fv);
      return float_determinant(a);
    };
    const BigFloat e = eps.with_precision(p);
    const BigFloat deriv = (det_at(e + h) - det_at(e - h)) / (h * 2L);
    singular = !deriv.is_zero() && abs(det / deriv) < pow10(-(digits / 2), p);
  }
  if (singular) {
    throw SingularSystem("Padé denominator system is singular at eps = " + eps.to_string(30) +
                         " (eps is at a root of H_" + std::to_string(n) + "^" + std::to_string(d) + ")");
  }

  PadeApproximant out{.numerator = {}, .denominator = {}, .defect = BigFloat(p)};
  out.denominator.emplace_back(1L, p);
  for (auto& v : b) out.denominator.push_back(std::move(v));
  for (int j = 0; j <= m; ++j) {
    BigFloat a(p);
    for (int k = 0; k <= std::min(j, n); ++k) a += out.denominator[static_cast<size_t>(k)] * f[static_cast<size_t>(j - k)];
    out.numerator.push_back(std::move(a));
  }
  for (int k = 0; k <= n; ++k) out.defect += out.denominator[static_cast<size_t>(k)] * f[static_cast<size_t>(m + n + 1 - k)];
  return out;
}

}  // namespace rpm
