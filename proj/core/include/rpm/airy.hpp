#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rpm/bigfloat.hpp"

namespace rpm {

/// Largest |z| accepted by the Airy series evaluator.
inline constexpr long kAiryRangeLimit = 200;

struct AiryValues {
  BigFloat ai;
  BigFloat ai_prime;
  BigFloat bi;
  BigFloat bi_prime;
};

/// Gamma(1/3) and Gamma(2/3) at precision p.
BigFloat gamma_one_third(Precision p);
BigFloat gamma_two_thirds(Precision p);

/// Ai, Ai', Bi, Bi' at z from the two Maclaurin fundamental solutions of
/// w'' = z w. Working precision grows with |z| to absorb the cancellation
/// between terms. Throws RangeExceeded for |z| > kAiryRangeLimit.
AiryValues airy(const BigFloat& z, int digits);
BigFloat airy_ai(const BigFloat& z, int digits);
BigFloat airy_bi(const BigFloat& z, int digits);

enum class Model { Bounded, Unbounded };
std::string to_string(Model m);

/// How bounded_residual is evaluated.
enum class ResidualRoute {
  Auto,    ///< Airy form while all arguments are in range, else Series
  Airy,    ///< Bi(-e s) Ai(t - e s) - Ai(-e s) Bi(t - e s), t = lambda^(1/3), s = t^-2
  Series,  ///< -(t / pi) Y(1) with Y'' + (e - lambda x) Y = 0, Y(0) = 0, Y'(0) = 1
};

/// Box quantization function. Its zeros in eps are the eigenvalues with
/// Y(0) = Y(1) = 0. At lambda = 1 the Airy route is literally
/// Bi(-e) Ai(1 - e) - Ai(-e) Bi(1 - e). Throws DegenerateField for lambda = 0.
BigFloat bounded_residual(const BigFloat& eps, const mpq_class& lambda, int digits,
                          ResidualRoute route = ResidualRoute::Auto);

/// Half-line quantization function Ai(-eps lambda^(-2/3)); needs lambda > 0.
BigFloat unbounded_residual(const BigFloat& eps, const mpq_class& lambda, int digits);

struct OracleEigenvalue {
  int n = 0;
  BigFloat eps;
  Model model = Model::Bounded;
  /// Quantization function evaluated at eps.
  BigFloat residual;
};

/// First `count` eigenvalues of the model, ascending, each refined to
/// `digits`. Bounded with lambda = 0 throws DegenerateField (the closed form
/// applies); Unbounded needs lambda > 0. Throws RangeExceeded when the
/// search leaves the Airy range before `count` roots are found.
std::vector<OracleEigenvalue> oracle_eigenvalues(Model model, const mpq_class& lambda, int count, int digits);

/// (n+1)^2 pi^2 for n = 0..count-1: the zero-field box.
std::vector<OracleEigenvalue> closed_form_box_eigenvalues(int count, int digits);

/// n-th half-line eigenvalue from an asymptotic seed and safeguarded Newton.
OracleEigenvalue unbounded_eigenvalue(int n, const mpq_class& lambda, int digits);

/// Bi(-e s) Ai(t x - e s) - Ai(-e s) Bi(t x - e s), normalisation N = 1.
BigFloat exact_eigenfunction(const BigFloat& eps, const mpq_class& lambda, const BigFloat& x, int digits);

/// Electron of mass m and charge e in a box of length L under field F.
struct PhysicalParams {
  double m = 1;
  double e = 1;
  double field = 1;
  double length = 1;
  double hbar = 1;
};

struct DimensionlessScales {
  double lambda;     ///< 2 m L^3 F e / hbar^2
  double eps_scale;  ///< 2 m L^2 / hbar^2, so eps = eps_scale * E
};

/// Throws InvalidArgument unless m, e, L, hbar > 0 and F >= 0.
DimensionlessScales physical_to_dimensionless(const PhysicalParams& p);

/// Lazily-populated spectra for one field strength, used to label root
/// sequences. Bounded eigenvalues are enumerated in order; half-line ones
/// are located by index.
class SpectrumOracle {
 public:
  SpectrumOracle(mpq_class lambda, int digits);

  const mpq_class& lambda() const { return lambda_; }
  int digits() const { return digits_; }

  /// Eigenvalue of the model closest to v, or nullopt when the model has
  /// no spectrum (half-line with lambda <= 0). Throws OracleRange when v is
  /// beyond the Airy range.
  std::optional<OracleEigenvalue> nearest(Model model, const BigFloat& v);

  /// Bounded eigenvalues with eps <= eps_max.
  std::vector<OracleEigenvalue> bounded_up_to(const BigFloat& eps_max);
  /// Eigenvalue n of the model.
  OracleEigenvalue eigenvalue(Model model, int n);

 private:
  void extend_bounded(int count);

  mpq_class lambda_;
  int digits_;
  std::vector<OracleEigenvalue> bounded_;
  std::map<int, OracleEigenvalue> unbounded_;
};

}  // namespace rpm
