#pragma once

#include <gmpxx.h>

#include <vector>

#include "rpm/bigfloat.hpp"
#include "rpm/rational_poly.hpp"
#include "rpm/riccati.hpp"

namespace rpm {

/// Identity of a Hankel determinant H_D^d: a D x D matrix with entry (i, j)
/// equal to f_{i+j+d+1}. D = N + 1 for an [M/N] approximant with M = N + d.
struct HankelSpec {
  int dimension = 2;  ///< D
  int offset = 0;     ///< d

  /// Largest coefficient index the determinant reads.
  int max_index() const { return 2 * dimension + offset - 1; }
  int entry_index(int i, int j) const { return i + j + offset + 1; }

  friend bool operator==(const HankelSpec&, const HankelSpec&) = default;
};

/// Default working precision for dimension D: 30 + 3D decimal digits.
constexpr int default_digits(int dimension) { return 30 + 3 * dimension; }

/// A real root of H_D^d(eps) with a certified enclosure.
struct RootRecord {
  BigFloat value;
  /// Half-width of an interval around `value` on which the determinant changes sign.
  BigFloat radius;
  HankelSpec spec;
  bool sign_change = false;
};

/// Precomputed evaluator for one (table, spec) pair. Entries are evaluated
/// exactly at the binary rational value of eps and rounded once to the
/// working precision before pivoted elimination.
class HankelEvaluator {
 public:
  /// Throws InsufficientCoefficients when the table is too short and
  /// InvalidArgument for D < 1 or d < 0.
  HankelEvaluator(const CoefficientTable& table, HankelSpec spec);

  const HankelSpec& spec() const { return spec_; }

  /// Determinant at eps, computed with `digits` decimal digits plus guard digits.
  BigFloat operator()(const BigFloat& eps, int digits) const;
  /// Exact determinant at a rational point by fraction-free elimination.
  mpq_class exact(const mpq_class& eps) const;
  /// Entry values f_{d+1} .. f_{2D+d-1} at eps, exactly.
  std::vector<mpq_class> exact_entries(const mpq_class& eps) const;

  /// Upper bound on the eps-degree of the determinant.
  int degree_bound() const;

 private:
  HankelSpec spec_;
  std::vector<RationalPoly> entries_;        // f_{d+1} .. f_{2D+d-1}
  std::vector<ScaledIntegerPoly> scaled_;    // same, integer form
};

/// Guard digits added on top of the requested precision for dimension D.
int hankel_guard_digits(int dimension);

BigFloat hankel_eval(const CoefficientTable& table, HankelSpec spec, const BigFloat& eps, int digits);
mpq_class hankel_eval_exact(const CoefficientTable& table, HankelSpec spec, const mpq_class& eps);

/// Determinant of an integer matrix by Bareiss fraction-free elimination.
mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> m);

/// H_D^d as an exact polynomial in eps, recovered by interpolating exact
/// determinant values at integer nodes and checked at one extra node.
RationalPoly hankel_polynomial(const CoefficientTable& table, HankelSpec spec);

/// Grid scan: every sign change of the determinant between consecutive grid
/// points (grid >= 2 points spanning [lo, hi]) is refined to `digits`.
/// Roots closer together than the grid step can be missed.
std::vector<RootRecord> scan_roots(const CoefficientTable& table, HankelSpec spec, const BigFloat& lo, const BigFloat& hi,
                                   int grid, int digits);

/// Complete search: isolates every odd-multiplicity real root in [lo, hi]
/// exactly (from hankel_polynomial), then refines each one to `digits`.
std::vector<RootRecord> isolate_roots(const CoefficientTable& table, HankelSpec spec, const mpq_class& lo,
                                      const mpq_class& hi, int digits);

/// Newton iteration from `seed` with a central-difference derivative (step
/// 10^(-digits/2)); falls back to bracketing plus bisection. Throws
/// NoConvergence when no sign change can be found near the seed.
RootRecord refine_root(const CoefficientTable& table, HankelSpec spec, const BigFloat& seed, int digits);

/// Safeguarded Newton inside a sign-change bracket [lo, hi].
RootRecord refine_in_bracket(const HankelEvaluator& eval, const BigFloat& lo, const BigFloat& hi, int digits);

/// [M/N] Padé approximant of the f series at eps, M = N + d, b_0 = 1.
struct PadeApproximant {
  std::vector<BigFloat> numerator;    ///< a_0 .. a_M
  std::vector<BigFloat> denominator;  ///< b_0 .. b_N
  /// Mismatch of the approximant's series at order M + N + 1. It vanishes
  /// exactly when eps is a root of H_{N+1}^d.
  BigFloat defect;
};

/// Solves the N x N denominator system on coefficients M+1 .. M+N and forms
/// the numerator by convolution; the approximant reproduces f_0 .. f_{M+N}.
/// Throws SingularSystem when eps lies within 10^(-digits/2) of a root of
/// the system determinant H_N^d (estimated by a Newton step), and
/// InsufficientCoefficients when the table lacks f_{M+N+1}.
PadeApproximant pade_approximant(const CoefficientTable& table, int n, int d, const BigFloat& eps, int digits);

}  // namespace rpm
