#include <doctest.h>

#include "rpm/errors.hpp"
#include "rpm/real_roots.hpp"

using namespace rpm;

namespace {

RationalPoly from_roots(const std::vector<mpq_class>& roots) {
  RationalPoly p{1};
  for (const auto& r : roots) p = p * RationalPoly{mpq_class(-r), 1};
  return p;
}

bool brackets(const IsolatingInterval& iv, const mpq_class& x) { return iv.lo <= x && x <= iv.hi; }

}  // namespace

TEST_SUITE("real_roots") {
  TEST_CASE("three simple roots") {
    const auto ivs = isolate_real_roots(from_roots({mpq_class(1, 3), mpq_class(5, 2), 7}), 0, 10);
    REQUIRE(ivs.size() == 3);
    CHECK(brackets(ivs[0], mpq_class(1, 3)));
    CHECK(brackets(ivs[1], mpq_class(5, 2)));
    CHECK(brackets(ivs[2], 7));
  }

  TEST_CASE("repeated roots are counted once") {
    const RationalPoly p = from_roots({1, 1, 1, 2, 4, 4});
    const auto ivs = isolate_real_roots(p, -5, 5);
    REQUIRE(ivs.size() == 3);
    CHECK(brackets(ivs[0], 1));
    CHECK(brackets(ivs[1], 2));
    CHECK(brackets(ivs[2], 4));
    const auto sf = squarefree_integer_part(p);
    CHECK(sf.size() == 4);  // cubic
  }

  TEST_CASE("roots outside the window are ignored, endpoints are reported") {
    const auto ivs = isolate_real_roots(from_roots({-3, 0, 2, 9}), 0, 2);
    REQUIRE(ivs.size() == 2);
    CHECK(ivs[0].exact);
    CHECK(ivs[0].lo == 0);
    CHECK(ivs[1].exact);
    CHECK(ivs[1].lo == 2);
  }

  TEST_CASE("irrational roots and narrowing") {
    const RationalPoly p{-2, 0, 1};  // e^2 - 2
    const auto ivs = isolate_real_roots(p, 0, 2);
    REQUIRE(ivs.size() == 1);
    const auto ip = squarefree_integer_part(p);
    const IsolatingInterval n = narrow_interval(ip, ivs[0], mpq_class(1, 1000000000));
    CHECK(n.hi - n.lo <= mpq_class(1, 1000000000));
    CHECK(n.lo * n.lo < 2);
    CHECK(n.hi * n.hi > 2);
  }

  TEST_CASE("roots 1e-20 apart are separated") {
    mpz_class big;
    mpz_ui_pow_ui(big.get_mpz_t(), 10, 20);
    const mpq_class a(3, 2);
    const mpq_class b = a + mpq_class(mpz_class(1), big);
    const auto ivs = isolate_real_roots(from_roots({a, b, 2}), 0, 3);
    REQUIRE(ivs.size() == 3);
    CHECK(brackets(ivs[0], a));
    CHECK(brackets(ivs[1], b));
    CHECK(!brackets(ivs[0], b));
  }

  TEST_CASE("no real roots") { CHECK(isolate_real_roots(RationalPoly{1, 0, 1}, -10, 10).empty()); }

  TEST_CASE("argument checks") {
    CHECK_THROWS_AS(isolate_real_roots(RationalPoly{}, 0, 1), InvalidArgument);
    CHECK_THROWS_AS(isolate_real_roots(RationalPoly{1, 1}, 1, 0), InvalidArgument);
  }

  TEST_CASE("sign_at") {
    const std::vector<mpz_class> p = {-2, 0, 1};
    CHECK(sign_at(p, mpq_class(1)) == -1);
    CHECK(sign_at(p, mpq_class(3, 2)) == 1);
    CHECK(sign_at({-4, 0, 1}, mpq_class(2)) == 0);
  }
}
