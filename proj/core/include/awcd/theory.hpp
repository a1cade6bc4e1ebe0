#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "awcd/detect.hpp"

namespace awcd {

// Exact fraction, normalized (gcd-reduced, positive denominator).
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d);

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const;  // "num/den", or "num" when den == 1

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
};

struct TheoryParams {
  double theta = 0.0;
  double rho = 0.0;
  unsigned K = 2;
  unsigned n = 1;
};

// Strong-consistency region of one algorithm variant in the plane
// x = log_n(theta), y = log_n((theta - rho) / theta).
struct PolygonSpec {
  VariantTag variant = VariantTag::debiased;
  unsigned k = 1;
  std::vector<std::pair<Rational, Rational>> vertices;
};

// Recursion a_1 = theta, b_1 = rho,
//   a_k = theta a_{k-1} + (K-1) rho b_{k-1},
//   b_k = rho a_{k-1} + theta b_{k-1} + (K-2) rho b_{k-1};
// a_k (resp. b_k) scales the expected size of the exact-k neighborhood
// intersected with the own (resp. a foreign) block. a_k - b_k equals
// (theta - rho)^k.
std::pair<double, double> ak_bk(double theta, double rho, unsigned K, unsigned k);

struct ExpectedCounts {
  double a = 0.0;  // mean debiased S_ij, same community (k = 1)
  double c = 0.0;  // mean debiased S_ij, different communities
  double d = 0.0;  // mean N_ij
};

//   a = n^2 [theta^3 + 3(K-1) theta rho^2 + (K-1)(K-2) rho^3]
//   c = n^2 [3 theta^2 rho + 3(K-2) theta rho^2 + ((K-1)(K-2)+1) rho^3]
//   d = n^2 [theta^2 + 2(K-1) theta rho + (K-1)^2 rho^2]
ExpectedCounts expected_counts_k1(double theta, double rho, unsigned K, unsigned n);

// Exact polygon vertices per variant and radius. Supported: circle and
// debiased for k >= 1, plus for k >= 2; anything else throws
// std::invalid_argument.
PolygonSpec consistency_polygon(VariantTag variant, unsigned k);

}  // namespace awcd
