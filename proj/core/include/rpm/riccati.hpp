#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "rpm/rational_poly.hpp"

namespace rpm {

enum class WeightKind {
  BoxWalls,  ///< g(x) = x(1 - x): walls at x = 0 and x = 1
  HalfLine,  ///< g(x) = x: wall at x = 0 only
};

/// The weight g(x) whose zeros become poles of the Riccati equation and
/// thereby impose Dirichlet conditions at those points.
struct WeightSpec {
  WeightKind kind = WeightKind::BoxWalls;

  static WeightSpec box_walls() { return {WeightKind::BoxWalls}; }
  static WeightSpec half_line() { return {WeightKind::HalfLine}; }
  /// Accepts "box-walls" or "half-line".
  static WeightSpec parse(std::string_view name);

  /// g as a polynomial in x.
  RationalPoly g() const;
  /// Locations of the (simple) zeros of g, ascending.
  std::vector<mpq_class> zeros() const;
  std::string name() const;

  friend bool operator==(const WeightSpec&, const WeightSpec&) = default;
};

/// Q(x) = eps - lambda * x with eps symbolic.
struct LinearPotential {
  mpq_class lambda = 1;
  friend bool operator==(const LinearPotential&, const LinearPotential&) = default;
};

/// Polynomial-in-x coefficients of the Riccati equation for f = g'/g - Y'/Y:
///
///   derivative(x) f' + linear(x) f + quadratic(x) f^2 + potential(x) Q + constant(x) = 0
///
/// obtained by multiplying f' + 2(g'/g) f - f^2 - Q - g''/g = 0 through by g.
struct RiccatiOde {
  RationalPoly derivative;
  RationalPoly linear;
  RationalPoly quadratic;
  RationalPoly potential;
  RationalPoly constant;
};

RiccatiOde riccati_ode(const WeightSpec& weight);
/// Descriptor for an arbitrary polynomial weight. g must vanish simply at
/// the origin; throws InvalidArgument otherwise.
RiccatiOde riccati_ode(const RationalPoly& g);

/// Taylor coefficients f_0..f_{n_max} of f(x) about x = 0, each an exact
/// polynomial in eps.
class CoefficientTable {
 public:
  CoefficientTable(WeightSpec weight, LinearPotential potential, std::vector<RationalPoly> coeffs)
      : weight_(weight), potential_(std::move(potential)), coeffs_(std::move(coeffs)) {}

  const WeightSpec& weight() const { return weight_; }
  const LinearPotential& potential() const { return potential_; }
  const std::vector<RationalPoly>& coeffs() const { return coeffs_; }
  const RationalPoly& operator[](int j) const { return coeffs_.at(static_cast<size_t>(j)); }
  /// Number of coefficients held (n_max + 1).
  int size() const { return static_cast<int>(coeffs_.size()); }
  int n_max() const { return size() - 1; }

  friend bool operator==(const CoefficientTable&, const CoefficientTable&) = default;

 private:
  WeightSpec weight_;
  LinearPotential potential_;
  std::vector<RationalPoly> coeffs_;
};

/// Computes f_0..f_{n_max} by equating each power of x in the Riccati
/// equation to zero. Throws InvalidArgument when n_max < 1.
CoefficientTable coefficients(const WeightSpec& weight, const LinearPotential& potential, int n_max);

/// Same recurrence driven by an explicit descriptor (any weight with a
/// simple zero at the origin).
std::vector<RationalPoly> riccati_coefficients(const RiccatiOde& ode, const LinearPotential& potential, int n_max);

/// n_max needed to build H_D^d: indices f_{d+1} .. f_{2D+d-1}.
constexpr int required_n_max(int dimension, int offset) { return 2 * dimension + offset - 1; }

}  // namespace rpm
