#include "rpm/real_roots.hpp"

#include <algorithm>
#include <cstdint>

#include "rpm/errors.hpp"

namespace rpm {
namespace {

using IntPoly = std::vector<mpz_class>;  // lowest degree first

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void make_primitive(IntPoly& p) {
  trim(p);
  if (p.empty()) return;
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  if (p.back() < 0) g = -g;
  if (g != 1) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

/// Divides out the largest power of two common to all coefficients. Cheap
/// content removal for the dyadic subdivision.
void strip_twos(IntPoly& p) {
  mp_bitcnt_t shift = ~mp_bitcnt_t{0};
  for (const auto& c : p) {
    if (c == 0) continue;
    shift = std::min(shift, mpz_scan1(c.get_mpz_t(), 0));
    if (shift == 0) return;
  }
  if (shift == ~mp_bitcnt_t{0} || shift == 0) return;
  for (auto& c : p) mpz_fdiv_q_2exp(c.get_mpz_t(), c.get_mpz_t(), shift);
}

IntPoly to_integer(const RationalPoly& p) {
  const mpz_class l = p.denominator_lcm();
  IntPoly r;
  r.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) r.push_back(c.get_num() * (l / c.get_den()));
  make_primitive(r);
  return r;
}

// ---- modular square-freeness test ---------------------------------------

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

using ModPoly = std::vector<u64>;

void trim(ModPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

ModPoly mod_gcd(ModPoly a, ModPoly b, u64 m) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    const u64 inv = powmod(b.back(), m - 2, m);
    while (a.size() >= b.size()) {
      const u64 factor = mulmod(a.back(), inv, m);
      const size_t shift = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i) {
        a[i + shift] = (a[i + shift] + m - mulmod(factor, b[i], m)) % m;
      }
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a;
}

/// true: certainly square-free; false: inconclusive for this prime.
bool squarefree_mod(const IntPoly& p, u64 prime) {
  const mpz_class m(static_cast<unsigned long>(prime));
  ModPoly a(p.size());
  for (size_t i = 0; i < p.size(); ++i) {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), p[i].get_mpz_t(), m.get_mpz_t());
    a[i] = r.get_ui();
  }
  if (a.back() == 0) return false;
  ModPoly da;
  for (size_t i = 1; i < a.size(); ++i) da.push_back(mulmod(a[i], i % prime, prime));
  trim(da);
  if (da.size() + 1 != a.size()) return false;
  return mod_gcd(a, da, prime).size() == 1;
}

// ---- exact gcd fallback ---------------------------------------------------

IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  const mpz_class& lb = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    const mpz_class la = a.back();
    const size_t shift = a.size() - b.size();
    for (auto& c : a) c *= lb;
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= la * b[i];
    trim(a);
  }
  return a;
}

IntPoly exact_gcd(IntPoly a, IntPoly b) {
  make_primitive(a);
  make_primitive(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    IntPoly r = pseudo_remainder(a, b);
    make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  make_primitive(a);
  return a;
}

IntPoly exact_quotient(const IntPoly& a, const IntPoly& b) {
  std::vector<mpq_class> rem(a.begin(), a.end());
  std::vector<mpq_class> quo(a.size() - b.size() + 1);
  const mpq_class lb(b.back());
  for (size_t k = quo.size(); k-- > 0;) {
    const mpq_class factor = rem[k + b.size() - 1] / lb;
    quo[k] = factor;
    for (size_t i = 0; i < b.size(); ++i) rem[k + i] -= factor * b[i];
  }
  return to_integer(RationalPoly(std::move(quo)));
}

// ---- Descartes subdivision -------------------------------------------------

/// p(t) -> p(t + 1), in place.
void taylor_shift_one(IntPoly& a) {
  const size_t n = a.size();
  if (n < 2) return;
  for (size_t i = 0; i + 1 < n; ++i) {
    for (size_t j = n - 2; j + 1 > i; --j) a[j] += a[j + 1];
  }
}

/// Sign variations of (1+t)^n p(1/(1+t)): an upper bound on (and equal in
/// parity to) the number of roots of p in (0, 1).
int descartes_bound(const IntPoly& p) {
  IntPoly r(p.rbegin(), p.rend());
  taylor_shift_one(r);
  int variations = 0;
  int last = 0;
  for (const auto& c : r) {
    const int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) {
      ++variations;
      if (variations > 1) return variations;
    }
    last = s;
  }
  return variations;
}

/// 2^n p(t/2).
IntPoly halve(const IntPoly& p) {
  IntPoly r(p);
  const size_t n = p.size() - 1;
  for (size_t i = 0; i < n; ++i) mpz_mul_2exp(r[i].get_mpz_t(), r[i].get_mpz_t(), n - i);
  return r;
}

/// Divides p by (t - 1), p(1) must be zero.
IntPoly deflate_at_one(const IntPoly& p) {
  IntPoly q(p.size() - 1);
  mpz_class carry = 0;
  for (size_t k = p.size() - 1; k >= 1; --k) {
    carry += p[k];
    q[k - 1] = carry;
  }
  return q;
}

mpz_class value_at_one(const IntPoly& p) {
  mpz_class s = 0;
  for (const auto& c : p) s += c;
  return s;
}

/// Divides p by t (p(0) == 0).
void deflate_at_zero(IntPoly& p) { p.erase(p.begin()); }

/// q(t) = p(lo + w t) as a primitive integer polynomial.
IntPoly map_to_unit(const IntPoly& p, const mpq_class& lo, const mpq_class& w) {
  // Horner with rational polys.
  std::vector<mpq_class> acc{mpq_class(p.back())};
  for (size_t i = p.size() - 1; i-- > 0;) {
    std::vector<mpq_class> next(acc.size() + 1);
    for (size_t k = 0; k < acc.size(); ++k) {
      next[k] += acc[k] * lo;
      next[k + 1] += acc[k] * w;
    }
    next[0] += p[i];
    acc = std::move(next);
  }
  return to_integer(RationalPoly(std::move(acc)));
}

struct Node {
  IntPoly poly;  // root structure of p on [lo, hi] mapped to t in [0, 1]
  mpq_class lo;
  mpq_class hi;
  int depth;
};

constexpr int kMaxDepth = 20000;

}  // namespace

std::vector<mpz_class> squarefree_integer_part(const RationalPoly& p) {
  IntPoly a = to_integer(p);
  if (a.size() <= 2) return a;
  static constexpr u64 kPrimes[] = {1000000007ULL, 998244353ULL, 1000000009ULL, 2305843009213693951ULL};
  for (u64 prime : kPrimes) {
    if (squarefree_mod(a, prime)) return a;
  }
  IntPoly da;
  for (size_t i = 1; i < a.size(); ++i) da.push_back(a[i] * static_cast<unsigned long>(i));
  const IntPoly g = exact_gcd(a, da);
  if (g.size() <= 1) return a;
  return exact_quotient(a, g);
}

int sign_at(const std::vector<mpz_class>& p, const mpq_class& x) {
  if (p.empty()) return 0;
  const mpz_class& a = x.get_num();
  const mpz_class& b = x.get_den();
  mpz_class acc = p.back();
  mpz_class bpow = 1;
  for (size_t i = p.size() - 1; i-- > 0;) {
    bpow *= b;
    acc = acc * a + p[i] * bpow;
  }
  return sgn(acc);
}

IsolatingInterval narrow_interval(const std::vector<mpz_class>& p, IsolatingInterval iv, const mpq_class& width) {
  if (iv.exact) return iv;
  int slo = sign_at(p, iv.lo);
  while (iv.hi - iv.lo > width) {
    mpq_class mid = (iv.lo + iv.hi) / 2;
    const int sm = sign_at(p, mid);
    if (sm == 0) return {mid, mid, true};
    if (sm == slo) {
      iv.lo = std::move(mid);
    } else {
      iv.hi = std::move(mid);
    }
  }
  return iv;
}

std::vector<IsolatingInterval> isolate_real_roots(const RationalPoly& p, const mpq_class& lo, const mpq_class& hi) {
  if (p.is_zero()) throw InvalidArgument("isolate_real_roots: zero polynomial has no isolated roots");
  if (!(lo < hi)) throw InvalidArgument("isolate_real_roots: empty interval");
  const IntPoly base = squarefree_integer_part(p);
  std::vector<IsolatingInterval> out;
  if (base.size() <= 1) return out;

  if (sign_at(base, lo) == 0) out.push_back({lo, lo, true});
  if (sign_at(base, hi) == 0) out.push_back({hi, hi, true});

  IntPoly unit = map_to_unit(base, lo, hi - lo);
  // Endpoint roots are already recorded; remove t = 0 and t = 1 factors.
  while (unit.size() > 1 && unit.front() == 0) deflate_at_zero(unit);
  while (unit.size() > 1 && value_at_one(unit) == 0) unit = deflate_at_one(unit);

  std::vector<Node> stack;
  stack.push_back({std::move(unit), lo, hi, 0});
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    if (node.poly.size() <= 1) continue;
    const int v = descartes_bound(node.poly);
    if (v == 0) continue;
    if (v == 1) {
      out.push_back({node.lo, node.hi, false});
      continue;
    }
    if (node.depth >= kMaxDepth) {
      throw NoConvergence("root isolation exceeded subdivision depth", node.lo.get_str(), node.hi.get_str());
    }
    const mpq_class mid = (node.lo + node.hi) / 2;
    IntPoly left = halve(node.poly);
    if (value_at_one(left) == 0) {
      out.push_back({mid, mid, true});
      left = deflate_at_one(left);
    }
    IntPoly right = left;
    taylor_shift_one(right);
    strip_twos(left);
    strip_twos(right);
    stack.push_back({std::move(right), mid, node.hi, node.depth + 1});
    stack.push_back({std::move(left), node.lo, mid, node.depth + 1});
  }
  std::sort(out.begin(), out.end(), [](const IsolatingInterval& a, const IsolatingInterval& b) { return a.lo < b.lo; });
  return out;
}

}  // namespace rpm
