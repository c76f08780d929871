#include <random>
#include <vector>

#include "doctest.h"
#include "dpplab/simd.hpp"

using namespace dpplab::simd;

namespace {

std::vector<double> random_vector(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

void check_against_reference(Backend b) {
  REQUIRE(set_backend(b));
  for (std::size_t n : {0u, 1u, 3u, 4u, 7u, 16u, 33u, 1001u}) {
    CAPTURE(n);
    const auto a = random_vector(n, 1);
    const auto c = random_vector(n, 2);
    CHECK(sum_squares(a) == doctest::Approx(ref::sum_squares(a)).epsilon(1e-14));
    CHECK(abs_sum(a) == doctest::Approx(ref::abs_sum(a)).epsilon(1e-14));
    CHECK(abs_diff_sum(a, c) == doctest::Approx(ref::abs_diff_sum(a, c)).epsilon(1e-14));

    if (n == 0) continue;  // bernoulli_step needs a nonempty input
    std::vector<double> out(n + 1), out_ref(n + 1);
    bernoulli_step(a, out, 0.3);
    ref::bernoulli_step(a, out_ref, 0.3);
    for (std::size_t i = 0; i <= n; ++i) CHECK(out[i] == doctest::Approx(out_ref[i]).epsilon(1e-15));
  }
  for (std::size_t rows : {1u, 2u, 5u, 8u, 13u}) {
    CAPTURE(rows);
    auto m = random_vector(rows * rows, 3);
    auto m_ref = m;
    const auto d = random_vector(rows, 4);
    scale_symmetric(m, d);
    ref::scale_symmetric(m_ref, d);
    for (std::size_t i = 0; i < m.size(); ++i) CHECK(m[i] == doctest::Approx(m_ref[i]).epsilon(1e-15));
  }
}

}  // namespace

TEST_CASE("scalar backend is always available") {
  CHECK(backend_available(Backend::Scalar));
  check_against_reference(Backend::Scalar);
}

TEST_CASE("vector backends agree with the scalar reference") {
  const Backend original = active_backend();
  for (Backend b : {Backend::Avx2, Backend::Neon}) {
    if (!backend_available(b)) {
      CHECK_FALSE(set_backend(b));
      continue;
    }
    CAPTURE(to_string(b));
    check_against_reference(b);
  }
  set_backend(original);
}

TEST_CASE("reference kernels on small inputs") {
  const std::vector<double> a{1.0, -2.0, 3.0};
  const std::vector<double> b{0.5, 0.5, 0.5};
  CHECK(ref::sum_squares(a) == 14.0);
  CHECK(ref::abs_sum(a) == 6.0);
  CHECK(ref::abs_diff_sum(a, b) == 0.5 + 2.5 + 2.5);
  std::vector<double> out(4);
  ref::bernoulli_step(b, out, 0.25);
  CHECK(out[0] == 0.375);
  CHECK(out[1] == 0.5);
  CHECK(out[3] == 0.125);
}
