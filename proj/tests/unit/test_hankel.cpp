#include <doctest.h>

#include <cmath>

#include "rpm/errors.hpp"
#include "rpm/hankel.hpp"
#include "support/oracles.hpp"

using namespace rpm;
using namespace rpm::testing;

namespace {

CoefficientTable box(const mpq_class& lambda, int dimension, int offset = 0) {
  return coefficients(WeightSpec::box_walls(), {lambda}, required_n_max(dimension, offset) + 1);
}

bool any_near(const std::vector<RootRecord>& roots, double target, double tol) {
  for (const auto& r : roots)
    if (std::abs(r.value.to_double() - target) < tol) return true;
  return false;
}

}  // namespace

TEST_SUITE("hankel") {
  TEST_CASE("matrix index layout") {
    const HankelSpec s{3, 2};
    CHECK(s.max_index() == 7);
    CHECK(s.entry_index(0, 0) == 3);
    CHECK(s.entry_index(2, 2) == 7);
    CHECK(default_digits(16) == 78);
  }

  TEST_CASE("D = 1 is f_1 itself") {
    const CoefficientTable t = box(1, 1);
    const Precision p = Precision::digits(40);
    const BigFloat e("4.75", p);
    CHECK(abs(hankel_eval(t, {1, 0}, e, 30) - t[1](e)) < pow10(-30, p));
    CHECK(hankel_eval_exact(t, {1, 0}, mpq_class(19, 4)) == t[1](mpq_class(19, 4)));
  }

  TEST_CASE("D = 2 is f1 f3 - f2^2 and changes sign between 8 and 10") {
    const CoefficientTable t = box(1, 2);
    for (const mpq_class e : {mpq_class(8), mpq_class(10), mpq_class(-3, 7)}) {
      CHECK(hankel_eval_exact(t, {2, 0}, e) == t[1](e) * t[3](e) - t[2](e) * t[2](e));
    }
    const Precision p = Precision::digits(40);
    const int s8 = hankel_eval(t, {2, 0}, BigFloat(8L, p), 30).sign();
    const int s10 = hankel_eval(t, {2, 0}, BigFloat(10L, p), 30).sign();
    CHECK(s8 * s10 < 0);
  }

  TEST_CASE("exact elimination equals cofactor expansion for D <= 4") {
    const auto points = random_rationals(20, 20240611u);
    for (const auto kind : {WeightKind::BoxWalls, WeightKind::HalfLine}) {
      for (int offset : {0, 1}) {
        const CoefficientTable t = coefficients(WeightSpec{kind}, {mpq_class(3, 2)}, required_n_max(4, offset));
        for (int dim = 1; dim <= 4; ++dim) {
          const HankelEvaluator ev(t, {dim, offset});
          for (const auto& e : points) CHECK(ev.exact(e) == hankel_by_cofactors(t, {dim, offset}, e));
        }
      }
    }
    const CoefficientTable t = box(1, 3);
    CHECK(hankel_eval_exact(t, {3, 0}, 0) == hankel_by_cofactors(t, {3, 0}, 0));
  }

  TEST_CASE("float evaluation tracks the exact value") {
    const CoefficientTable t = box(1, 10);
    const HankelEvaluator ev(t, {10, 0});
    const Precision p = Precision::digits(80);
    for (const char* s : {"3.25", "10.375", "57.5", "-4.125"}) {
      const BigFloat e(s, p);
      const BigFloat exact(ev.exact(e.to_rational()), p);
      const BigFloat approx = ev(e, 60);
      CHECK(abs(approx - exact) <= abs(exact) * pow10(-55, p));
    }
  }

  TEST_CASE("insufficient coefficients names the missing index") {
    const CoefficientTable t = coefficients(WeightSpec::box_walls(), {1}, 5);
    try {
      (void)HankelEvaluator(t, {4, 0});
      FAIL("expected InsufficientCoefficients");
    } catch (const InsufficientCoefficients& e) {
      CHECK(e.missing_index() == 7);
    }
    CHECK_THROWS_AS(HankelEvaluator(t, {0, 0}), InvalidArgument);
    CHECK_THROWS_AS(HankelEvaluator(t, {2, -1}), InvalidArgument);
  }

  TEST_CASE("interpolated polynomial matches exact values") {
    const CoefficientTable t = box(1, 6);
    const RationalPoly poly = hankel_polynomial(t, {6, 0});
    for (const auto& e : random_rationals(5, 7u)) CHECK(poly(e) == hankel_eval_exact(t, {6, 0}, e));
  }

  TEST_CASE("scan: D = 5 carries roots near 10.3679 and 35") {
    const CoefficientTable t = box(1, 5);
    const Precision p = Precision::digits(50);
    const auto roots = scan_roots(t, {5, 0}, BigFloat(0L, p), BigFloat(50L, p), 400, 40);
    CHECK(any_near(roots, 10.3679, 1e-4));
    CHECK(any_near(roots, 35.5, 1.0));
    for (size_t i = 1; i < roots.size(); ++i) CHECK(roots[i - 1].value < roots[i].value);
  }

  TEST_CASE("scan misses a close pair that isolation resolves") {
    const CoefficientTable t = box(1, 6);
    const Precision p = Precision::digits(50);
    const auto scanned = scan_roots(t, {6, 0}, BigFloat(0L, p), BigFloat(50L, p), 400, 40);
    CHECK(any_near(scanned, 10.3684769, 1e-6));
    CHECK(any_near(scanned, 39.342345, 1e-5));
    CHECK(!any_near(scanned, 2.33808, 1e-5));
    const auto isolated = isolate_roots(t, {6, 0}, 0, 50, 40);
    CHECK(any_near(isolated, 2.3380806, 1e-6));
    CHECK(any_near(isolated, 2.3658832, 1e-6));
    CHECK(isolated.size() == scanned.size() + 2);
  }

  TEST_CASE("zero field approaches pi^2 and 4 pi^2") {
    const CoefficientTable t = box(0, 12);
    const auto roots = isolate_roots(t, {12, 0}, 0, 50, 60);
    CHECK(any_near(roots, M_PI * M_PI, 1e-9));
    CHECK(any_near(roots, 4 * M_PI * M_PI, 1e-5));
  }

  TEST_CASE("an exact root on an interval end does not hide its neighbours") {
    // lambda = 0, D = 2: eps (eps^2 - 3 eps - 45) / 135
    const auto roots = isolate_roots(box(0, 2), {2, 0}, -100, 100, 40);
    REQUIRE(roots.size() == 3);
    const Precision p = roots[0].value.precision();
    const BigFloat s = sqrt(BigFloat(189L, p));
    CHECK(abs(roots[0].value - (BigFloat(3L, p) - s) / BigFloat(2L, p)) < pow10(-39, p));
    CHECK(roots[1].value.is_zero());
    CHECK(abs(roots[2].value - (BigFloat(3L, p) + s) / BigFloat(2L, p)) < pow10(-39, p));
  }

  TEST_CASE("scan argument checks") {
    const CoefficientTable t = box(1, 2);
    const Precision p = Precision::digits(40);
    CHECK_THROWS_AS(scan_roots(t, {2, 0}, BigFloat(5L, p), BigFloat(1L, p), 10, 30), InvalidArgument);
    CHECK_THROWS_AS(scan_roots(t, {2, 0}, BigFloat(0L, p), BigFloat(1L, p), 1, 30), InvalidArgument);
    CHECK(scan_roots(t, {2, 0}, BigFloat(0L, p), BigFloat(1L, p), 10, 30).empty());
  }

  TEST_CASE("refine D = 16 near 10.37 to 20 digits") {
    const CoefficientTable t = box(1, 16);
    const Precision p = Precision::digits(100);
    const RootRecord r = refine_root(t, {16, 0}, BigFloat("10.37", p), default_digits(16));
    CHECK(r.sign_change);
    CHECK(r.radius <= pow10(-default_digits(16), p));
    CHECK(r.value.to_string(20) == "10.368507161836337127");
  }

  TEST_CASE("refine signals a missing root") {
    const CoefficientTable t = box(1, 2);
    const Precision p = Precision::digits(40);
    CHECK_THROWS_AS(refine_root(t, {2, 0}, BigFloat("0.5", p), 30), NoConvergence);
  }

  TEST_CASE("isolation separates the two D = 16 roots near 10.3685") {
    const CoefficientTable t = box(1, 16);
    const auto roots = isolate_roots(t, {16, 0}, mpq_class(103, 10), mpq_class(104, 10), default_digits(16));
    REQUIRE(roots.size() == 2);
    const Precision p = roots[0].value.precision();
    const BigFloat gap = roots[1].value - roots[0].value;
    CHECK(gap > BigFloat(0L, p));
    CHECK(gap < pow10(-18, p));
    for (const auto& r : roots) {
      CHECK(r.sign_change);
      CHECK(r.value.to_string(20) == "10.368507161836337127");
    }
  }

  TEST_CASE("isolation and scan agree on well-separated roots") {
    const CoefficientTable t = box(1, 6);
    const Precision p = Precision::digits(60);
    const auto a = isolate_roots(t, {6, 0}, 0, 50, 40);
    const auto b = scan_roots(t, {6, 0}, BigFloat(0L, p), BigFloat(50L, p), 2000, 40);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(abs(a[i].value - b[i].value) < pow10(-38, p));
  }

  TEST_CASE("precision monotonicity") {
    const CoefficientTable t = box(1, 8);
    const auto lo = isolate_roots(t, {8, 0}, 10, 11, 40);
    const auto hi = isolate_roots(t, {8, 0}, 10, 11, 70);
    REQUIRE(lo.size() == hi.size());
    for (size_t i = 0; i < lo.size(); ++i) CHECK(abs(hi[i].value - lo[i].value) <= lo[i].radius);
  }

  TEST_CASE("scaling every coefficient leaves the roots in place") {
    const CoefficientTable t = box(1, 5);
    std::vector<RationalPoly> scaled;
    const mpq_class c(-3, 7);
    for (const auto& f : t.coeffs()) scaled.push_back(f * c);
    const CoefficientTable u(t.weight(), t.potential(), scaled);
    const mpq_class c5 = c * c * c * c * c;
    for (const auto& e : random_rationals(6, 99u)) CHECK(hankel_eval_exact(u, {5, 0}, e) == c5 * hankel_eval_exact(t, {5, 0}, e));
    const auto ra = isolate_roots(t, {5, 0}, 0, 60, 40);
    const auto rb = isolate_roots(u, {5, 0}, 0, 60, 40);
    REQUIRE(ra.size() == rb.size());
    for (size_t i = 0; i < ra.size(); ++i) CHECK(abs(ra[i].value - rb[i].value) <= ra[i].radius + rb[i].radius);
  }

  TEST_CASE("Pade N = 1 closed form") {
    const CoefficientTable t = box(1, 3);
    const Precision p = Precision::digits(60);
    const BigFloat e("3.5", p);
    const PadeApproximant pa = pade_approximant(t, 1, 0, e, 40);
    const mpq_class q = e.to_rational();
    const BigFloat f0(t[0](q), p), f1(t[1](q), p), f2(t[2](q), p);
    const BigFloat b1 = -(f2 / f1);
    CHECK(abs(pa.denominator[1] - b1) < pow10(-40, p));
    CHECK(abs(pa.numerator[0] - f0) < pow10(-40, p));
    CHECK(abs(pa.numerator[1] - (f1 + f0 * b1)) < pow10(-40, p));
  }

  TEST_CASE("Pade back-substitution residual") {
    const int digits = 40;
    const CoefficientTable t = box(1, 6);
    const Precision p = Precision::digits(60);
    for (const char* s : {"1.5", "17.25", "60.5"}) {
      const BigFloat e(s, p);
      const PadeApproximant pa = pade_approximant(t, 2, 0, e, digits);
      CHECK(pade_backsub_residual(pa, t, e) < pow10(-digits + 5, p));
    }
  }

  TEST_CASE("Pade at Hankel roots") {
    const int digits = 40;
    const CoefficientTable t = box(1, 6);
    // Defect vanishes at a root of H_{N+1}.
    const auto r3 = isolate_roots(t, {3, 0}, 0, 50, 60);
    REQUIRE(!r3.empty());
    for (const auto& r : r3) {
      const PadeApproximant pa = pade_approximant(t, 2, 0, r.value, digits);
      CHECK(abs(pa.defect) < pow10(-digits + 10, r.value.precision()));
    }
    // The N x N system itself is singular at a root of H_N.
    const auto r2 = isolate_roots(t, {2, 0}, 0, 50, 60);
    REQUIRE(!r2.empty());
    CHECK_THROWS_AS(pade_approximant(t, 2, 0, r2[0].value, digits), SingularSystem);
    CHECK_THROWS_AS(pade_approximant(t, 9, 0, r2[0].value, digits), InsufficientCoefficients);
  }
}
