#include "rpm/riccati.hpp"

#include "rpm/errors.hpp"

namespace rpm {

WeightSpec WeightSpec::parse(std::string_view name) {
  if (name == "box-walls") return box_walls();
  if (name == "half-line") return half_line();
  throw InvalidArgument("unknown weight '" + std::string(name) + "' (expected box-walls or half-line)");
}

RationalPoly WeightSpec::g() const {
  switch (kind) {
    case WeightKind::BoxWalls:
      return RationalPoly{0, 1, -1};
    case WeightKind::HalfLine:
      return RationalPoly{0, 1};
  }
  return {};
}

std::vector<mpq_class> WeightSpec::zeros() const {
  if (kind == WeightKind::BoxWalls) return {0, 1};
  return {0};
}

std::string WeightSpec::name() const { return kind == WeightKind::BoxWalls ? "box-walls" : "half-line"; }

RiccatiOde riccati_ode(const RationalPoly& g) {
  if (g.coeff(0) != 0 || g.coeff(1) == 0) {
    throw InvalidArgument("weight must have a simple zero at the origin, got g = " + g.to_string("x"));
  }
  const RationalPoly dg = g.derivative();
  return RiccatiOde{
      .derivative = g,
      .linear = dg * mpq_class(2),
      .quadratic = -g,
      .potential = -g,
      .constant = -g.derivative().derivative(),
  };
}

RiccatiOde riccati_ode(const WeightSpec& weight) { return riccati_ode(weight.g()); }

std::vector<RationalPoly> riccati_coefficients(const RiccatiOde& ode, const LinearPotential& potential, int n_max) {
  if (n_max < 1) throw InvalidArgument("n_max must be >= 1, got " + std::to_string(n_max));

  const auto& A = ode.derivative;
  const auto& B = ode.linear;
  const auto& C = ode.quadratic;
  const auto& P = ode.potential;
  const auto& E = ode.constant;
  if (A.coeff(0) != 0 || C.coeff(0) != 0) throw InvalidArgument("Riccati descriptor is singular at the origin");

  // Q(x) = eps - lambda x, coefficients as polynomials in eps.
  const RationalPoly q0{0, 1};
  const RationalPoly q1{mpq_class(-potential.lambda)};

  std::vector<RationalPoly> f;
  std::vector<RationalPoly> square;  // square[m] = sum_i f_i f_{m-i}
  f.reserve(static_cast<size_t>(n_max) + 1);

  for (int j = 0; j <= n_max; ++j) {
    RationalPoly rest;
    // A(x) f'(x): x^j picks A_k (j-k+1) f_{j-k+1}; k = 1 is the unknown.
    for (int k = 2; k <= A.degree(); ++k) {
      const int idx = j - k + 1;
      if (idx < 0) break;
      rest += f[static_cast<size_t>(idx)] * mpq_class(A.coeff(k) * idx);
    }
    for (int k = 1; k <= B.degree() && j - k >= 0; ++k) rest += f[static_cast<size_t>(j - k)] * B.coeff(k);
    for (int k = 1; k <= C.degree() && j - k >= 0; ++k) rest += square[static_cast<size_t>(j - k)] * C.coeff(k);
    // P(x) Q(x) at x^j = P_j q0 + P_{j-1} q1.
    if (const mpq_class pj = P.coeff(j); pj != 0) rest += q0 * pj;
    if (const mpq_class pj1 = P.coeff(j - 1); pj1 != 0) rest += q1 * pj1;
    if (const mpq_class ej = E.coeff(j); ej != 0) rest += RationalPoly{ej};

    const mpq_class pivot = A.coeff(1) * j + B.coeff(0);
    if (pivot == 0) throw InvalidArgument("Riccati recurrence pivot vanishes at j = " + std::to_string(j));
    f.push_back(rest * mpq_class(mpq_class(-1) / pivot));

    RationalPoly s;
    for (int i = 0; i <= j; ++i) s += f[static_cast<size_t>(i)] * f[static_cast<size_t>(j - i)];
    square.push_back(std::move(s));
  }
  return f;
}

CoefficientTable coefficients(const WeightSpec& weight, const LinearPotential& potential, int n_max) {
  return CoefficientTable(weight, potential, riccati_coefficients(riccati_ode(weight), potential, n_max));
}

}  // namespace rpm
