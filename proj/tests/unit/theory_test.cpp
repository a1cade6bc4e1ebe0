#include <doctest.h>

#include <cmath>

#include "awcd/rng.hpp"
#include "awcd/theory.hpp"

using namespace awcd;

TEST_CASE("Rational normalizes and prints") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -6) == Rational(-1, 6));
  CHECK(Rational(0, 5).to_string() == "0");
  CHECK(Rational(-2, 3).to_string() == "-2/3");
  CHECK(Rational(4, 2).to_string() == "2");
  CHECK(Rational(-1, 12).to_double() == doctest::Approx(-1.0 / 12.0));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("ak_bk base case and one recursion step") {
  {
    const auto [a, b] = ak_bk(0.3, 0.1, 4, 1);
    CHECK(a == 0.3);
    CHECK(b == 0.1);
  }
  {
    const auto [a, b] = ak_bk(0.5, 0.25, 2, 2);
    CHECK(a == doctest::Approx(0.3125).epsilon(1e-15));
    CHECK(b == doctest::Approx(0.25).epsilon(1e-15));
  }
  CHECK_THROWS_AS(ak_bk(0.5, 0.25, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(ak_bk(0.5, 0.25, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(ak_bk(1.5, 0.25, 2, 1), std::invalid_argument);
}

TEST_CASE("a_k - b_k equals (theta - rho)^k") {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 400; ++trial) {
    double theta = rng.next_unit();
    double rho = rng.next_unit();
    if (rho > theta) std::swap(theta, rho);
    const unsigned K = 2 + static_cast<unsigned>(rng.next_below(5));
    for (unsigned k = 1; k <= 10; ++k) {
      const auto [a, b] = ak_bk(theta, rho, K, k);
      const double expected = std::pow(theta - rho, static_cast<double>(k));
      const double scale = std::max({1.0, std::abs(a), std::abs(b)});
      CHECK(std::abs((a - b) - expected) <= 1e-12 * scale);
    }
  }
}

TEST_CASE("a_k and b_k stay inside the coarse bound [0, K^(k-1)]") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const double theta = rng.next_unit();
    const double rho = rng.next_unit();
    const unsigned K = 2 + static_cast<unsigned>(rng.next_below(5));
    for (unsigned k = 1; k <= 8; ++k) {
      const auto [a, b] = ak_bk(theta, rho, K, k);
      const double bound = std::pow(static_cast<double>(K), static_cast<double>(k - 1));
      CHECK(a >= 0.0);
      CHECK(b >= 0.0);
      CHECK(a <= bound * (1.0 + 1e-12));
      CHECK(b <= bound * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("expected_counts_k1 worked values") {
  {
    const auto [a, c, d] = expected_counts_k1(0.5, 0.0, 2, 10);
    CHECK(a == doctest::Approx(0.125 * 100.0).epsilon(1e-15));
    CHECK(c == 0.0);
    CHECK(d == doctest::Approx(0.25 * 100.0).epsilon(1e-15));
  }
  CHECK_THROWS_AS(expected_counts_k1(0.5, 0.1, 1, 10), std::invalid_argument);
  CHECK_THROWS_AS(expected_counts_k1(0.5, 0.1, 2, 0), std::invalid_argument);
}

TEST_CASE("rho = theta makes a and c exactly equal") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const double theta = rng.next_unit();
    const unsigned K = 2 + static_cast<unsigned>(rng.next_below(5));
    const unsigned n = 1 + static_cast<unsigned>(rng.next_below(3000));
    const auto [a, c, d] = expected_counts_k1(theta, theta, K, n);
    CHECK(a == c);
  }
}

TEST_CASE("consistency polygons match the exact vertex lists") {
  using P = std::pair<Rational, Rational>;

  const PolygonSpec deb1 = consistency_polygon(VariantTag::debiased, 1);
  CHECK(deb1.vertices == std::vector<P>{{{0, 1}, {0, 1}},
                                        {{0, 1}, {-1, 6}},
                                        {{-1, 2}, {-1, 12}},
                                        {{-2, 3}, {0, 1}}});

  const PolygonSpec cir1 = consistency_polygon(VariantTag::circle, 1);
  CHECK(cir1.vertices == std::vector<P>{{{0, 1}, {0, 1}},
                                        {{0, 1}, {-1, 6}},
                                        {{-1, 3}, {-1, 9}},
                                        {{-1, 2}, {0, 1}}});

  const PolygonSpec cir2 = consistency_polygon(VariantTag::circle, 2);
  CHECK(cir2.vertices == std::vector<P>{{{-1, 2}, {0, 1}},
                                        {{-3, 5}, {-1, 25}},
                                        {{-2, 3}, {0, 1}}});

  const PolygonSpec deb2 = consistency_polygon(VariantTag::debiased, 2);
  CHECK(deb2.vertices == std::vector<P>{{{-1, 2}, {0, 1}},
                                        {{-3, 5}, {-1, 25}},
                                        {{-2, 3}, {-1, 30}},
                                        {{-5, 7}, {0, 1}}});

  const PolygonSpec plus2 = consistency_polygon(VariantTag::plus, 2);
  CHECK(plus2.vertices == std::vector<P>{{{-1, 2}, {0, 1}},
                                         {{-3, 5}, {-1, 25}},
                                         {{-3, 4}, {-1, 40}},
                                         {{-4, 5}, {0, 1}}});

  CHECK(deb1.vertices.size() >= 3);
  CHECK_THROWS_AS(consistency_polygon(VariantTag::plus, 1), std::invalid_argument);
  CHECK_THROWS_AS(consistency_polygon(VariantTag::circle, 0), std::invalid_argument);
}
