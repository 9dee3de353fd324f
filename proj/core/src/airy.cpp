#include "rpm/airy.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <utility>

#include "rpm/errors.hpp"

namespace rpm {
namespace {

constexpr int kGuardDigits = 10;

struct GammaCache {
  Precision precision = Precision::bits(2);
  BigFloat one_third;
  BigFloat two_thirds;
};

const GammaCache& gamma_cache(Precision p) {
  thread_local GammaCache cache;
  if (cache.precision < p) {
    const Precision q = Precision::bits(p.bits() + 64);
    cache.one_third = gamma(BigFloat(1L, q) / 3L);
    cache.two_thirds = gamma(BigFloat(2L, q) / 3L);
    cache.precision = q;
  }
  return cache;
}

/// Bits lost to cancellation in the Maclaurin series: log2 of the largest
/// term, bounded by (2/3)|z|^(3/2) / ln 2.
mpfr_prec_t cancellation_bits(double az) { return static_cast<mpfr_prec_t>(std::ceil(0.9617966939 * az * std::sqrt(az))); }

BigFloat cube_root_of(const mpq_class& lambda, Precision p) { return cbrt(BigFloat(lambda, p)); }

/// Value and eps-derivative of a quantization function at one point.
struct ValueSlope {
  BigFloat value;
  BigFloat slope;
};

using QuantFn = std::function<ValueSlope(const BigFloat&)>;

/// Safeguarded Newton on a sign-change bracket; absolute tolerance
/// 10^-digits * max(1, |x|).
BigFloat refine_bracket(const QuantFn& fn, BigFloat lo, BigFloat hi, int digits) {
  const Precision p = lo.precision();
  const BigFloat one(1L, p);
  const int s_lo = fn(lo).value.sign();
  if (s_lo == 0) return lo;
  BigFloat x = (lo + hi) / 2L;
  for (int iter = 0; iter < 500; ++iter) {
    const BigFloat tol = pow10(-digits, p) * max(one, abs(x));
    if (hi - lo <= tol) break;
    const ValueSlope vs = fn(x);
    if (vs.value.is_zero()) return x;
    if (vs.value.sign() == s_lo) {
      lo = x;
    } else {
      hi = x;
    }
    if (!vs.slope.is_zero()) {
      BigFloat step = vs.value / vs.slope;
      BigFloat next = x - step;
      if (next > lo && next < hi) {
        x = std::move(next);
        if (abs(step) < tol / 4L) return x;
        continue;
      }
    }
    x = (lo + hi) / 2L;
  }
  return (lo + hi) / 2L;
}

void check_range(const BigFloat& z) {
  if (abs(z) > BigFloat(kAiryRangeLimit, z.precision())) {
    throw RangeExceeded("Airy argument " + z.to_string(12) + " outside certified range |z| <= " +
                        std::to_string(kAiryRangeLimit));
  }
}

struct BoundedArgs {
  BigFloat t;  // lambda^(1/3)
  BigFloat s;  // lambda^(-2/3)
};

BoundedArgs bounded_args(const mpq_class& lambda, Precision p) {
  BigFloat t = cube_root_of(lambda, p);
  BigFloat s = BigFloat(1L, p) / (t * t);
  return {std::move(t), std::move(s)};
}

ValueSlope bounded_airy(const BigFloat& eps, const mpq_class& lambda, int digits) {
  const Precision p = Precision::digits(digits + kGuardDigits);
  const auto [t, s] = bounded_args(lambda, p);
  const BigFloat z0 = -(eps.with_precision(p) * s);
  const BigFloat z1 = t + z0;
  check_range(z0);
  check_range(z1);
  const AiryValues a0 = airy(z0, digits + kGuardDigits);
  const AiryValues a1 = airy(z1, digits + kGuardDigits);
  BigFloat value = a0.bi * a1.ai - a0.ai * a1.bi;
  BigFloat slope = -(s * (a0.bi_prime * a1.ai + a0.bi * a1.ai_prime - a0.ai_prime * a1.bi - a0.ai * a1.bi_prime));
  return {std::move(value), std::move(slope)};
}

ValueSlope bounded_series(const BigFloat& eps, const mpq_class& lambda, int digits) {
  const double size = std::abs(eps.to_double()) + std::abs(lambda.get_d());
  const auto extra = static_cast<mpfr_prec_t>(std::ceil(1.4426950409 * std::sqrt(size))) + 32;
  const Precision p = Precision::bits(Precision::digits(digits + kGuardDigits).bits() + extra);
  const BigFloat e = eps.with_precision(p);
  const BigFloat lam(lambda, p);
  // c_{k+2} = (lambda c_{k-1} - e c_k) / ((k+1)(k+2)), c_0 = 0, c_1 = 1.
  BigFloat cm1(p), c0(p), c1(1L, p);
  BigFloat dm1(p), d0(p), d1(p);
  BigFloat sum = c1;
  BigFloat dsum(p);
  const BigFloat threshold = pow10(-(digits + kGuardDigits + 5), p);
  const long k_min = static_cast<long>(2.0 * std::sqrt(size)) + 4;
  for (long k = 0;; ++k) {
    // Shift: (c_{k-1}, c_k, c_{k+1}) -> (c_k, c_{k+1}, c_{k+2}).
    const long denom = (k + 1) * (k + 2);
    BigFloat c2 = (lam * cm1 - e * c0) / denom;
    BigFloat d2 = (lam * dm1 - c0 - e * d0) / denom;
    sum += c2;
    dsum += d2;
    cm1 = std::move(c0);
    c0 = std::move(c1);
    c1 = std::move(c2);
    dm1 = std::move(d0);
    d0 = std::move(d1);
    d1 = std::move(d2);
    if (k > k_min && abs(cm1) < threshold && abs(c0) < threshold && abs(c1) < threshold && abs(dm1) < threshold &&
        abs(d0) < threshold && abs(d1) < threshold) {
      break;
    }
  }
  const Precision out = Precision::digits(digits + kGuardDigits);
  const BigFloat scale = -(cube_root_of(lambda, p) / pi(p));
  return {(scale * sum).with_precision(out), (scale * dsum).with_precision(out)};
}

bool bounded_in_airy_range(const BigFloat& eps, const mpq_class& lambda) {
  const Precision p = Precision::bits(64);
  const auto [t, s] = bounded_args(lambda, p);
  const BigFloat z0 = -(eps.with_precision(p) * s);
  const BigFloat z1 = t + z0;
  const BigFloat lim(kAiryRangeLimit, p);
  return abs(z0) <= lim && abs(z1) <= lim;
}

ValueSlope bounded_value_slope(const BigFloat& eps, const mpq_class& lambda, int digits, ResidualRoute route) {
  if (lambda == 0) {
    throw DegenerateField("bounded quantization through Airy functions is degenerate at lambda = 0; "
                          "use the closed form (n+1)^2 pi^2");
  }
  if (route == ResidualRoute::Auto) {
    route = bounded_in_airy_range(eps, lambda) ? ResidualRoute::Airy : ResidualRoute::Series;
  }
  return route == ResidualRoute::Airy ? bounded_airy(eps, lambda, digits) : bounded_series(eps, lambda, digits);
}

/// Quarter-wavelength scale of the box spectrum near eps (WKB density of states).
double bounded_grid_step(double eps, double lambda) {
  const double a = std::max(eps, 0.0);
  const double b = std::max(eps - lambda, 0.0);
  double integral;  // int_0^1 dx / sqrt(max(eps - lambda x, 0))
  if (std::abs(lambda) < 1e-300) {
    integral = a > 0 ? 1 / std::sqrt(a) : 0;
  } else {
    integral = 2 * (std::sqrt(a) - std::sqrt(b)) / lambda;
  }
  if (!(integral > 0)) return 0.5;
  return std::clamp(M_PI / (4 * integral), 1e-3, 50.0);
}

double half_line_grid_step(double a) { return std::clamp(M_PI / (8 * std::sqrt(std::max(a, 1.0))), 1e-3, 0.5); }

/// Asymptotic location of the n-th zero of Ai(-a).
double airy_zero_seed(int n) {
  const double t = 3 * M_PI * (4 * n + 3) / 8;
  return std::pow(t, 2.0 / 3.0) * (1 + 5 / (48 * t * t) - 5 / (36 * t * t * t * t));
}

QuantFn half_line_fn(int digits) {
  return [digits](const BigFloat& a) {
    check_range(a);
    const AiryValues v = airy(-a, digits + kGuardDigits);
    return ValueSlope{v.ai, -v.ai_prime};
  };
}

}  // namespace

std::string to_string(Model m) { return m == Model::Bounded ? "bounded" : "unbounded"; }

BigFloat gamma_one_third(Precision p) { return gamma_cache(p).one_third.with_precision(p); }
BigFloat gamma_two_thirds(Precision p) { return gamma_cache(p).two_thirds.with_precision(p); }

AiryValues airy(const BigFloat& z_in, int digits) {
  check_range(z_in);
  const double az = std::abs(z_in.to_double());
  const bool positive = z_in.sign() > 0;
  const mpfr_prec_t target = Precision::digits(digits).bits() + 16;
  const mpfr_prec_t lost = cancellation_bits(az);
  const Precision p = Precision::bits(target + (positive ? 2 * lost : lost) + 64);

  const BigFloat z = z_in.with_precision(p);
  const BigFloat z2 = z * z;
  const BigFloat z3 = z2 * z;

  // f = sum 3^k (1/3)_k z^{3k} / (3k)!,  g = sum 3^k (2/3)_k z^{3k+1} / (3k+1)!
  BigFloat t(1L, p), u = z;
  BigFloat f = t, g = u;
  BigFloat fp(p), gp(1L, p);
  const BigFloat threshold = BigFloat(1L, p) / exp(BigFloat(static_cast<long>(target + (positive ? lost : 0) + 16), p) *
                                                   BigFloat("0.69314718055994530941723212145817656807", p));
  for (long k = 1;; ++k) {
    const BigFloat dt = t * z2 / (3 * k - 1);  // term of f'
    const BigFloat du = u * z2 / (3 * k);      // term of g'
    fp += dt;
    gp += du;
    t *= z3;
    t /= (3 * k - 1) * (3 * k);
    u *= z3;
    u /= (3 * k) * (3 * k + 1);
    f += t;
    g += u;
    const bool shrinking = 9.0 * k * k > 4.0 * az * az * az;
    if (shrinking && abs(t) < threshold && abs(u) < threshold && abs(dt) < threshold && abs(du) < threshold) break;
    if (z.is_zero()) break;
  }

  const GammaCache& gc = gamma_cache(p);
  const BigFloat three(3L, p);
  const BigFloat c1 = pow(three, BigFloat(-2L, p) / 3L) / gc.two_thirds.with_precision(p);  // Ai(0)
  const BigFloat c2 = pow(three, BigFloat(-1L, p) / 3L) / gc.one_third.with_precision(p);   // -Ai'(0)
  const BigFloat root3 = sqrt(three);
  const Precision out = Precision::digits(digits);
  return AiryValues{
      .ai = (c1 * f - c2 * g).with_precision(out),
      .ai_prime = (c1 * fp - c2 * gp).with_precision(out),
      .bi = (root3 * (c1 * f + c2 * g)).with_precision(out),
      .bi_prime = (root3 * (c1 * fp + c2 * gp)).with_precision(out),
  };
}

BigFloat airy_ai(const BigFloat& z, int digits) { return airy(z, digits).ai; }
BigFloat airy_bi(const BigFloat& z, int digits) { return airy(z, digits).bi; }

BigFloat bounded_residual(const BigFloat& eps, const mpq_class& lambda, int digits, ResidualRoute route) {
  return bounded_value_slope(eps, lambda, digits, route).value.with_precision(Precision::digits(digits));
}

BigFloat unbounded_residual(const BigFloat& eps, const mpq_class& lambda, int digits) {
  if (lambda <= 0) throw InvalidArgument("half-line model needs lambda > 0");
  const Precision p = Precision::digits(digits + kGuardDigits);
  const BigFloat t = cube_root_of(lambda, p);
  return airy_ai(-(eps.with_precision(p) / (t * t)), digits);
}

std::vector<OracleEigenvalue> closed_form_box_eigenvalues(int count, int digits) {
  const Precision p = Precision::digits(digits);
  const BigFloat pi2 = pi(p) * pi(p);
  std::vector<OracleEigenvalue> out;
  for (int n = 0; n < count; ++n) {
    out.push_back({n, pi2 * static_cast<long>((n + 1) * (n + 1)), Model::Bounded, BigFloat(p)});
  }
  return out;
}

std::vector<OracleEigenvalue> oracle_eigenvalues(Model model, const mpq_class& lambda, int count, int digits) {
  if (count < 1) throw InvalidArgument("oracle_eigenvalues: count must be >= 1");
  const Precision p = Precision::digits(digits + kGuardDigits);
  std::vector<OracleEigenvalue> out;

  if (model == Model::Bounded) {
    if (lambda == 0) {
      throw DegenerateField("bounded model at lambda = 0: eigenvalues are (n+1)^2 pi^2 (closed form)");
    }
    const double lam = lambda.get_d();
    const double limit = kAiryRangeLimit * std::max(1.0, std::pow(std::abs(lam), 2.0 / 3.0));
    const QuantFn fn = [&](const BigFloat& e) { return bounded_value_slope(e, lambda, digits, ResidualRoute::Auto); };
    double x = std::min(0.0, lam);
    BigFloat prev_x(x, p);
    ValueSlope prev = fn(prev_x);
    while (static_cast<int>(out.size()) < count) {
      x += bounded_grid_step(x, lam);
      if (x > limit) {
        throw RangeExceeded("bounded eigenvalue search passed eps = " + std::to_string(limit) + " after " +
                            std::to_string(out.size()) + " roots");
      }
      BigFloat bx(x, p);
      ValueSlope cur = fn(bx);
      if (cur.value.sign() != prev.value.sign()) {
        BigFloat root = refine_bracket(fn, prev_x, bx, digits);
        BigFloat res = fn(root).value;
        out.push_back({static_cast<int>(out.size()), root.with_precision(Precision::digits(digits)), model,
                       std::move(res)});
      }
      prev_x = std::move(bx);
      prev = std::move(cur);
    }
    return out;
  }

  if (lambda <= 0) throw InvalidArgument("half-line model needs lambda > 0");
  const BigFloat t = cube_root_of(lambda, p);
  const BigFloat scale = t * t;  // eps = lambda^(2/3) a
  const QuantFn fn = half_line_fn(digits);
  double a = 0;
  BigFloat prev_a(a, p);
  ValueSlope prev = fn(prev_a);
  while (static_cast<int>(out.size()) < count) {
    a += half_line_grid_step(a);
    if (a > kAiryRangeLimit) {
      throw RangeExceeded("half-line eigenvalue search left the Airy range after " + std::to_string(out.size()) +
                          " roots");
    }
    BigFloat ba(a, p);
    ValueSlope cur = fn(ba);
    if (cur.value.sign() != prev.value.sign()) {
      BigFloat root = refine_bracket(fn, prev_a, ba, digits + 2);
      BigFloat res = fn(root).value;
      out.push_back({static_cast<int>(out.size()), (root * scale).with_precision(Precision::digits(digits)), model,
                     std::move(res)});
    }
    prev_a = std::move(ba);
    prev = std::move(cur);
  }
  return out;
}

OracleEigenvalue unbounded_eigenvalue(int n, const mpq_class& lambda, int digits) {
  if (n < 0) throw InvalidArgument("eigenvalue index must be >= 0");
  if (lambda <= 0) throw InvalidArgument("half-line model needs lambda > 0");
  const Precision p = Precision::digits(digits + kGuardDigits);
  const double seed = airy_zero_seed(n);
  if (seed > kAiryRangeLimit - 1) throw OracleRange("half-line eigenvalue " + std::to_string(n) + " beyond Airy range");
  const double half_gap = 0.25 * M_PI / std::sqrt(seed);
  const QuantFn fn = half_line_fn(digits);
  BigFloat lo(seed - half_gap, p);
  BigFloat hi(seed + half_gap, p);
  if (fn(lo).value.sign() == fn(hi).value.sign()) {
    throw NoConvergence("no sign change around asymptotic Airy zero seed", lo.to_string(20), hi.to_string(20));
  }
  BigFloat root = refine_bracket(fn, std::move(lo), std::move(hi), digits + 2);
  BigFloat res = fn(root).value;
  const BigFloat t = cube_root_of(lambda, p);
  return {n, (root * t * t).with_precision(Precision::digits(digits)), Model::Unbounded, std::move(res)};
}

BigFloat exact_eigenfunction(const BigFloat& eps, const mpq_class& lambda, const BigFloat& x, int digits) {
  if (lambda == 0) throw DegenerateField("eigenfunction in Airy form is degenerate at lambda = 0; use sin(sqrt(eps) x)");
  if (x.sign() < 0) throw InvalidArgument("exact_eigenfunction: x must be >= 0");
  const Precision p = Precision::digits(digits + kGuardDigits);
  const auto [t, s] = bounded_args(lambda, p);
  const BigFloat z0 = -(eps.with_precision(p) * s);
  const BigFloat zx = t * x.with_precision(p) + z0;
  const AiryValues a0 = airy(z0, digits + kGuardDigits);
  const AiryValues ax = airy(zx, digits + kGuardDigits);
  return (a0.bi * ax.ai - a0.ai * ax.bi).with_precision(Precision::digits(digits));
}

DimensionlessScales physical_to_dimensionless(const PhysicalParams& p) {
  if (!(p.m > 0) || !(p.e > 0) || !(p.length > 0) || !(p.hbar > 0)) {
    throw InvalidArgument("physical parameters m, e, L, hbar must be strictly positive");
  }
  if (!(p.field >= 0)) throw InvalidArgument("field strength F must be >= 0");
  const double h2 = p.hbar * p.hbar;
  return {2 * p.m * p.length * p.length * p.length * p.field * p.e / h2, 2 * p.m * p.length * p.length / h2};
}

SpectrumOracle::SpectrumOracle(mpq_class lambda, int digits) : lambda_(std::move(lambda)), digits_(digits) {}

void SpectrumOracle::extend_bounded(int count) {
  if (static_cast<int>(bounded_.size()) >= count) return;
  bounded_ = lambda_ == 0 ? closed_form_box_eigenvalues(count, digits_)
                          : oracle_eigenvalues(Model::Bounded, lambda_, count, digits_);
}

std::vector<OracleEigenvalue> SpectrumOracle::bounded_up_to(const BigFloat& eps_max) {
  while (bounded_.empty() || bounded_.back().eps <= eps_max) extend_bounded(static_cast<int>(bounded_.size()) + 1);
  std::vector<OracleEigenvalue> out;
  for (const auto& ev : bounded_)
    if (ev.eps <= eps_max) out.push_back(ev);
  return out;
}

OracleEigenvalue SpectrumOracle::eigenvalue(Model model, int n) {
  if (model == Model::Unbounded) {
    auto it = unbounded_.find(n);
    if (it == unbounded_.end()) it = unbounded_.emplace(n, unbounded_eigenvalue(n, lambda_, digits_)).first;
    return it->second;
  }
  extend_bounded(n + 1);
  return bounded_[static_cast<size_t>(n)];
}

std::optional<OracleEigenvalue> SpectrumOracle::nearest(Model model, const BigFloat& v) {
  if (model == Model::Unbounded) {
    if (lambda_ <= 0) return std::nullopt;
    const double scale = std::pow(lambda_.get_d(), 2.0 / 3.0);
    const double a = std::max(v.to_double() / scale, 0.0);
    if (a > kAiryRangeLimit - 2) throw OracleRange("half-line eigenvalue near " + v.to_string(12) + " beyond Airy range");
    // Invert the leading asymptotic a ~ (3 pi (4n+3) / 8)^(2/3).
    const int guess = std::max(0, static_cast<int>(std::lround((8 * std::pow(a, 1.5) / (3 * M_PI) - 3) / 4)));
    std::optional<OracleEigenvalue> best;
    for (int n = std::max(0, guess - 1); n <= guess + 1; ++n) {
      OracleEigenvalue cand = eigenvalue(Model::Unbounded, n);
      if (!best || abs(cand.eps - v) < abs(best->eps - v)) best = std::move(cand);
    }
    return best;
  }
  // Bounded: make sure the eigenvalue just above v is known.
  while (bounded_.empty() || bounded_.back().eps <= v) {
    try {
      extend_bounded(static_cast<int>(bounded_.size()) + 1);
    } catch (const RangeExceeded& e) {
      if (bounded_.empty()) throw OracleRange(e.what());
      break;
    }
  }
  const OracleEigenvalue* best = nullptr;
  for (const auto& ev : bounded_) {
    if (!best || abs(ev.eps - v) < abs(best->eps - v)) best = &ev;
  }
  return *best;
}

}  // namespace rpm
