#include <cmath>
#include <numbers>

#include "doctest.h"
#include "dpplab/error.hpp"
#include "dpplab/series.hpp"
#include "oracles.hpp"

using namespace dpplab::series;

TEST_CASE("bernoulli numbers match Akiyama-Tanigawa") {
  const auto expected = oracle::bernoulli_akiyama_tanigawa(40);
  for (unsigned n = 0; n <= 40; ++n) CHECK(bernoulli(n) == expected[n]);
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(12) == Rational(-691, 2730));
  CHECK(bernoulli(7) == 0);
}

TEST_CASE("bernoulli beyond the precomputed range") {
  const auto expected = oracle::bernoulli_akiyama_tanigawa(100);
  CHECK(bernoulli(100) == expected[100]);
  CHECK(bernoulli(99) == 0);
}

TEST_CASE("coefficients equal series division") {
  const auto csc = oracle::csc_by_division(25);
  const auto cot = oracle::cot_by_division(25);
  const auto tan = oracle::tan_by_division(25);
  for (unsigned k = 0; k <= 25; ++k) {
    CAPTURE(k);
    CHECK(csc_coeff(k) == csc[k]);
    CHECK(cot_coeff(k) == cot[k]);
    CHECK(tan_coeff(k) == tan[k]);
  }
}

TEST_CASE("first coefficients by hand") {
  CHECK(csc_coeff(0) == Rational(1, 6));
  CHECK(csc_coeff(1) == Rational(7, 360));
  CHECK(cot_coeff(0) == Rational(-1, 12));
  CHECK(tan_coeff(0) == 1);
  CHECK(tan_coeff(1) == Rational(1, 3));
  CHECK(tan_coeff(2) == Rational(2, 15));
}

TEST_CASE("csc coefficients approach 2/pi^{2k+2}") {
  for (unsigned k : {10u, 20u, 30u}) {
    const double expected = 2.0 * std::pow(std::numbers::pi, -2.0 * k - 2);
    CHECK(to_double(csc_coeff(k)) == doctest::Approx(expected).epsilon(1e-6));
  }
}

TEST_CASE("coefficient sums reproduce the functions") {
  const double x = 0.7;
  double csc_sum = 0.0, tan_sum = 0.0;
  for (unsigned k = 0; k <= 40; ++k) {
    csc_sum += to_double(csc_coeff(k)) * std::pow(x, 2 * k + 1);
    tan_sum += to_double(tan_coeff(k)) * std::pow(x, 2 * k + 1);
  }
  CHECK(csc_sum == doctest::Approx(1.0 / std::sin(x) - 1.0 / x).epsilon(1e-14));
  CHECK(tan_sum == doctest::Approx(std::tan(x)).epsilon(1e-14));

  const int n = 3;
  const double u = 1.1;
  double cot_sum = 0.0;
  for (unsigned k = 0; k <= 40; ++k) cot_sum += to_double(cot_coeff(k)) * std::pow(u, 2 * k + 1) / std::pow(n, 2 * k + 2);
  CHECK(cot_sum == doctest::Approx(1.0 / std::tan(u / (2 * n)) / (2 * n) - 1.0 / u).epsilon(1e-14));
}

TEST_CASE("zeta at even arguments") {
  CHECK(zeta_even(1) == doctest::Approx(std::numbers::pi * std::numbers::pi / 6).epsilon(1e-15));
  CHECK(zeta_even(2) == doctest::Approx(oracle::zeta_direct(4)).epsilon(1e-13));
  CHECK(zeta_even(30) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(zeta_even(0), dpplab::DomainError);
}

TEST_CASE("growth ratio tends to 4 sqrt(pi) from above") {
  const double limit = 4.0 * std::sqrt(std::numbers::pi);
  CHECK(bernoulli_growth_ratio(50) == doctest::Approx(limit).epsilon(0.02));
  double prev = bernoulli_growth_ratio(10);
  for (unsigned n = 11; n <= 60; ++n) {
    const double r = bernoulli_growth_ratio(n);
    CHECK(r < prev);
    CHECK(r > limit);
    prev = r;
  }
}

TEST_CASE("coefficient table") {
  CoeffTable table(CoeffKind::csc, 5);
  CHECK(table.size() == CoeffTable::kPrecomputed + 1);
  CHECK(table[2].exact == Rational(31, 15120));
  CHECK(table.at(50).exact == csc_coeff(50));
  CHECK(table.size() == 51);
  CHECK(table[50].value == to_double(csc_coeff(50)));
  CHECK(parse_coeff_kind("tan") == CoeffKind::tan);
  CHECK_THROWS(parse_coeff_kind("sec"));
}
