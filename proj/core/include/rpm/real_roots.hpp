#pragma once

#include <gmpxx.h>

#include <vector>

#include "rpm/rational_poly.hpp"

namespace rpm {

/// Interval holding exactly one real root of a polynomial. When `exact` is
/// set the root is the rational lo == hi; otherwise the root lies strictly
/// inside (lo, hi) and the polynomial has opposite signs at the ends.
struct IsolatingInterval {
  mpq_class lo;
  mpq_class hi;
  bool exact = false;
};

/// Square-free part of p, made primitive with positive leading coefficient.
/// Uses a modular square-freeness test and only falls back to an exact
/// polynomial gcd when that test is inconclusive.
std::vector<mpz_class> squarefree_integer_part(const RationalPoly& p);

/// Isolates every distinct real root of p in the closed interval [lo, hi]
/// using Descartes' rule of signs with interval bisection. Output is sorted
/// ascending. Throws InvalidArgument for the zero polynomial or lo >= hi.
std::vector<IsolatingInterval> isolate_real_roots(const RationalPoly& p, const mpq_class& lo, const mpq_class& hi);

/// Sign (-1, 0, +1) of an integer polynomial at a rational point.
int sign_at(const std::vector<mpz_class>& p, const mpq_class& x);

/// Shrinks an isolating interval by exact bisection until hi - lo <= width.
IsolatingInterval narrow_interval(const std::vector<mpz_class>& p, IsolatingInterval iv, const mpq_class& width);

}  // namespace rpm
