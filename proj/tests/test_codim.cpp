#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hofa/codim.hpp"
#include "hofa/combinatorics.hpp"

using namespace hofa;

TEST_CASE("elementary symmetric values of (1..k)") {
  const auto e3 = elementary_symmetric(3);
  CHECK(e3 == std::vector<BigInt>{1, 6, 11, 6});
  const auto e4 = elementary_symmetric(4);
  CHECK(e4 == std::vector<BigInt>{1, 10, 35, 50, 24});
  // e_k(1..k) = k!
  for (int k = 1; k <= 8; ++k) {
    CHECK(elementary_symmetric(k).back() == factorial_big(k));
  }
}

TEST_CASE("h_poly displayed cubic for k=3") {
  for (int m = 1; m <= 12; ++m) {
    const Poly h = h_poly(3, m);
    REQUIRE(h.degree() == 3);
    CHECK(h.coeff(3) == Rational(1));
    CHECK(h.coeff(2) == Rational(6));
    CHECK(h.coeff(1) == Rational(-(6 * m + 7)));
    CHECK(h.coeff(0) == Rational(3 * m * (m - 5)));
  }
  CHECK(h_poly(3, 1).eval(Rational(3)) == Rational(30));
}

TEST_CASE("linear coefficient u(k,m) is negative") {
  for (int k = 2; k <= 8; ++k) {
    for (int m = 1; m <= 50; ++m) {
      CHECK(u_coeff(k, m) < 0);
      CHECK(h_poly(k, m).coeff(1) == Rational(u_coeff(k, m)));
      CHECK(h_poly(k, m).coeff(0) == Rational(v_coeff(k, m)));
    }
  }
}

TEST_CASE("nm_identity examples and sweep") {
  CHECK(nm_identity(3, 3, 1));
  CHECK(nm_identity(3, 5, 1));
  for (int k = 2; k <= 6; ++k) {
    for (int p = 1; p <= 25; ++p) {
      for (int m = 1; m <= 25; ++m) {
        CHECK(nm_identity(k, p, m));
      }
    }
  }
}

TEST_CASE("positive_roots basics") {
  const Poly f({Rational(-2), Rational(0), Rational(1)});  // p^2 - 2
  const auto roots = positive_roots(f);
  REQUIRE(roots.size() == 1);
  CHECK(roots[0].lo * roots[0].lo < Rational(2));
  CHECK(roots[0].hi * roots[0].hi >= Rational(2));
  CHECK(roots[0].hi - roots[0].lo <= Rational(1, 1 << 20));

  CHECK(positive_roots(h_poly(3, 1)).size() == 1);
  CHECK(positive_roots(h_poly(3, 9)).empty());
  CHECK_THROWS_AS(positive_roots(Poly{}), std::domain_error);
}

TEST_CASE("regime examples for k=3") {
  CHECK(regime(3, 5).regime == RootRegime::OneRoot);
  const auto r7 = regime(3, 7);
  CHECK((r7.regime == RootRegime::NoRoot || r7.regime == RootRegime::TwoRoots));
  const auto r20 = regime(3, 20);
  CHECK(r20.regime == RootRegime::NoRoot);
  CHECK(r20.p0 == 1);
  for (int p = 1; p <= 50; ++p) CHECK(h_poly(3, 20).eval(Rational(p)) > 0);
  CHECK_THROWS_AS(regime(2, 1), std::invalid_argument);
}

TEST_CASE("p0 is the exact positivity threshold") {
  for (int k = 3; k <= 5; ++k) {
    for (int m = 1; m <= 12; ++m) {
      const auto rep = regime(k, m);
      const Poly h = h_poly(k, m);
      CHECK(h.eval(Rational(rep.p0)) > 0);
      if (rep.p0 > 1) CHECK(h.eval(Rational(rep.p0 - 1)) <= 0);
      // beyond the threshold h stays positive (spot check)
      for (long long p = rep.p0; p <= rep.p0 + 30; ++p) CHECK(h.eval(Rational(p)) > 0);
    }
  }
}

TEST_CASE("Descartes regime split by m") {
  for (int k = 3; k <= 6; ++k) {
    for (int m = 1; m <= 60; ++m) {
      const auto n = positive_roots(h_poly(k, m)).size();
      if (m <= 2 * k - 1) {
        CHECK(n == 1);
      } else {
        CHECK((n == 0 || n == 2));
      }
    }
  }
}

TEST_CASE("p >= m+2 sufficiency of positivity") {
  for (int k = 3; k <= 6; ++k) {
    for (int m = 1; m <= 40; ++m) {
      CHECK(h_poly(k, m).eval(Rational(m + 2)) > 0);
    }
  }
}

TEST_CASE("polya_certificate behavior") {
  CHECK_FALSE(polya_certificate(3, 5).has_value());  // h has a positive root

  // certificate <=> no positive roots, over a k=3 band
  for (int m = 1; m <= 40; ++m) {
    const auto cert = polya_certificate(3, m).has_value();
    const bool no_roots = positive_roots(h_poly(3, m)).empty();
    CHECK(cert == no_roots);
    if (cert) {
      const auto c = *polya_certificate(3, m);
      const Poly prod = h_poly(3, m) * c.multiplier;
      for (const auto& coeff : prod.coeffs()) CHECK(coeff >= 0);
    }
  }

  // k=6 admits the paper's degree-1 multiplier for large m
  bool found_linear = false;
  for (int m = 11; m <= 200 && !found_linear; ++m) {
    const auto cert = polya_certificate(6, m);
    if (cert && cert->degree == 1) {
      found_linear = true;
      const Poly prod = h_poly(6, m) * cert->multiplier;
      for (const auto& coeff : prod.coeffs()) CHECK(coeff >= 0);
    }
  }
  CHECK(found_linear);
}

TEST_CASE("hk_poly matches u^2 - v e_{k-2} and its sign") {
  for (int k = 3; k <= 6; ++k) {
    const Poly H = hk_poly(k);
    const auto e = elementary_symmetric(k);
    const BigInt ek2 = e[static_cast<std::size_t>(k - 2)];
    for (int m = 1; m <= 60; ++m) {
      const BigInt u = u_coeff(k, m);
      const BigInt v = v_coeff(k, m);
      CHECK(H.eval(Rational(m)) == Rational(u * u - v * ek2));
      CHECK((H.eval(Rational(m)) <= 0) == (u * u <= v * ek2));
    }
  }

  // Degree-1 feasibility requires e_{k-2} > 2 k!: false for k in {3,4,5},
  // first true at k=6, where hk_poly has negative leading coefficient.
  for (int k = 3; k <= 5; ++k) {
    CHECK(hk_poly(k).coeff(2) > 0);
    for (int m = 1; m <= 500; ++m) CHECK(hk_poly(k).eval(Rational(m)) > 0);
  }
  CHECK(hk_poly(6).coeff(2) < 0);
  bool some_negative = false;
  for (int m = 1; m <= 200; ++m) {
    if (hk_poly(6).eval(Rational(m)) <= 0) some_negative = true;
  }
  CHECK(some_negative);
}
