#include "oracles.hpp"

#include "fusion/combinatorics.hpp"
#include "fusion/error.hpp"
#include "fusion/polynomial.hpp"

#include <doctest.h>

#include <set>

using namespace fusion;

TEST_CASE("binomial and Pochhammer") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(-1, 0) == 0);
  CHECK(binomial(60, 30) == 118264581564861424ULL);
  CHECK(binomial(200, 100) == UINT64_MAX);
  CHECK(monomial_count(3, 4) == 15);
  CHECK(pochhammer(0.5, 0) == 1.0);
  CHECK(pochhammer(0.5, 2) == doctest::Approx(0.75));
  CHECK(pochhammer(1.0, 4) == doctest::Approx(24.0));
}

TEST_CASE("monomial enumeration") {
  for (int d = 1; d <= 5; ++d) {
    for (int deg = 0; deg <= 6; ++deg) {
      const auto ms = enumerate_monomials(d, deg);
      CHECK(ms.size() == monomial_count(d, deg));
      std::set<Exponent> unique(ms.begin(), ms.end());
      CHECK(unique.size() == ms.size());
      for (std::size_t i = 1; i < ms.size(); ++i) CHECK(ms[i] < ms[i - 1]);
    }
  }
}

TEST_CASE("quadratic forms and powers evaluate like their definitions") {
  Rng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const int d = 1 + trial % 5;
    const Matrix a = oracle::gaussian(d, d, rng);
    const Matrix q = a + a.transpose();
    const HomogeneousPoly f = HomogeneousPoly::quadratic_form(q);
    const int p = 1 + trial % 4;
    const HomogeneousPoly fp = f.pow(p);
    CHECK(fp.degree() == 2 * p);
    for (int s = 0; s < 5; ++s) {
      const Vector x = oracle::gaussian(d, 1, rng).col(0);
      const double qx = x.dot(q * x);
      CHECK(f.evaluate(x) == doctest::Approx(qx).epsilon(1e-10));
      CHECK(fp.evaluate(x) == doctest::Approx(std::pow(qx, p)).epsilon(1e-9));
    }
  }
}

TEST_CASE("sphere power coefficients are multinomial") {
  const HomogeneousPoly s = HomogeneousPoly::sphere_power(2, 2);
  CHECK(s.coeff({4, 0}) == doctest::Approx(1.0));
  CHECK(s.coeff({2, 2}) == doctest::Approx(2.0));
  CHECK(s.coeff({0, 4}) == doctest::Approx(1.0));
  CHECK(s.coeff({3, 1}) == 0.0);
  CHECK(s.coeffs().size() == 3);
}

TEST_CASE("arithmetic and shape checks") {
  HomogeneousPoly a(2, 2);
  a.add_term({2, 0}, 1.0);
  HomogeneousPoly b(2, 2);
  b.add_term({2, 0}, 1.0);
  a -= b;
  CHECK(a.coeffs().empty());
  CHECK(a.max_abs_coeff() == 0.0);
  CHECK_THROWS_AS(a.add_term({1, 0}, 1.0), Error);
  CHECK_THROWS_AS(a.add_term({1, 1, 0}, 1.0), Error);
  HomogeneousPoly c(2, 4);
  CHECK_THROWS_AS(a += c, Error);
  b *= 3.0;
  CHECK(b.coeff({2, 0}) == 3.0);
}
