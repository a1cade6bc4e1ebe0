#include "awcd/theory.hpp"

#include <numeric>
#include <stdexcept>

namespace awcd {

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

std::string Rational::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

std::pair<double, double> ak_bk(double theta, double rho, unsigned K, unsigned k) {
  if (K < 2) throw std::invalid_argument("K must be >= 2");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (!(theta >= 0.0 && theta <= 1.0) || !(rho >= 0.0 && rho <= 1.0))
    throw std::invalid_argument("probabilities must lie in [0,1]");

  double a = theta;
  double b = rho;
  for (unsigned step = 2; step <= k; ++step) {
    const double na = theta * a + (K - 1) * rho * b;
    const double nb = rho * a + theta * b + (K - 2) * rho * b;
    a = na;
    b = nb;
  }
  return {a, b};
}

ExpectedCounts expected_counts_k1(double theta, double rho, unsigned K, unsigned n) {
  if (K < 2) throw std::invalid_argument("K must be >= 2");
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (!(theta >= 0.0 && theta <= 1.0) || !(rho >= 0.0 && rho <= 1.0))
    throw std::invalid_argument("probabilities must lie in [0,1]");

  const double n2 = static_cast<double>(n) * static_cast<double>(n);
  const double km1 = static_cast<double>(K) - 1.0;
  const double km2 = static_cast<double>(K) - 2.0;

  ExpectedCounts out;
  out.a = n2 * (theta * (theta * theta) + 3.0 * km1 * theta * (rho * rho) +
                km1 * km2 * rho * (rho * rho));
  // a - c = n^2 (theta - rho)^3, so rho = theta forces c = a exactly.
  const double diff = theta - rho;
  out.c = out.a - n2 * (diff * diff * diff);
  out.d = n2 * (theta * theta + 2.0 * km1 * theta * rho + km1 * km1 * (rho * rho));
  return out;
}

PolygonSpec consistency_polygon(VariantTag variant, unsigned k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (variant == VariantTag::plus && k < 2)
    throw std::invalid_argument("plus variant polygon requires k >= 2");

  PolygonSpec spec;
  spec.variant = variant;
  spec.k = k;
  auto add = [&spec](Rational x, Rational y) {
    spec.vertices.emplace_back(x, y);
  };

  if (k == 1) {
    add({0, 1}, {0, 1});
    add({0, 1}, {-1, 6});
    if (variant == VariantTag::debiased) {
      add({-1, 2}, {-1, 12});
      add({-2, 3}, {0, 1});
    } else {  // circle
      add({-1, 3}, {-1, 9});
      add({-1, 2}, {0, 1});
    }
    return spec;
  }

  const std::int64_t kk = k;
  add({-(kk - 1), kk}, {0, 1});
  add({-(2 * kk - 1), 2 * kk + 1}, {-1, (2 * kk + 1) * (2 * kk + 1)});
  switch (variant) {
    case VariantTag::debiased:
      add({-kk, kk + 1}, {-1, (4 * kk + 2) * (kk + 1)});
      add({-(2 * kk + 1), 2 * kk + 3}, {0, 1});
      break;
    case VariantTag::plus:
      add({-(2 * kk - 1), 2 * kk}, {-1, 2 * kk * (4 * kk + 2)});
      add({-2 * kk, 2 * kk + 1}, {0, 1});
      break;
    case VariantTag::circle:
      add({-kk, kk + 1}, {0, 1});
      break;
  }
  return spec;
}

}  // namespace awcd
