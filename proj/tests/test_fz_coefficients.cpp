#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "gybe/errors.hpp"
#include "gybe/fz_coefficients.hpp"
#include "oracles.hpp"

using namespace gybe;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double max_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double worst = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) worst = std::max(worst, std::abs(a[j] - b[j]));
  return worst;
}

// Parameters in [-4, 4] at least 0.05 away from -1, 0, 1.
std::vector<double> regular_samples(unsigned seed, int count) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-4.0, 4.0);
  std::vector<double> out;
  while (static_cast<int>(out.size()) < count) {
    const double a = dist(rng);
    if (std::abs(a) > 0.05 && std::abs(a - 1) > 0.05 && std::abs(a + 1) > 0.05) out.push_back(a);
  }
  return out;
}

}  // namespace

TEST_CASE("x_additive") {
  for (int m = 2; m <= 6; ++m) CHECK(x_additive(ModulusConfig(m), 0, Complex(0.7, 0.2)) == Complex(1.0, 0.0));
  CHECK(std::abs(x_additive(ModulusConfig(2), 1, oracle::kPi) - Complex(1.0, 0.0)) < 1e-15);

  for (int m = 2; m <= 7; ++m) {
    const ModulusConfig cfg(m);
    for (int j = 0; j < m; ++j) {
      const Complex alpha(0.9 - 0.3 * j, 0.25);
      CHECK(std::abs(x_additive(cfg, j, alpha) - oracle::x_add(m, j, alpha)) < 1e-12);
    }
  }
}

TEST_CASE("x_additive at alpha = m i log(1/a) equals x_multiplicative") {
  const ModulusConfig cfg(3);
  for (int j = 0; j < 3; ++j) {
    CHECK(std::abs(x_additive(cfg, j, alpha_from_a(cfg, 2.0)) - x_multiplicative(cfg, j, 2.0)) < 1e-10);
  }
}

TEST_CASE("x_additive reports a vanishing denominator") {
  // sin((2 pi - alpha) / 4) vanishes at alpha = 2 pi.
  CHECK_THROWS_AS(x_additive(ModulusConfig(2), 1, 2.0 * oracle::kPi), SingularDenominator);
}

TEST_CASE("x_multiplicative") {
  CHECK(x_multiplicative(ModulusConfig(4), 0, 3.3) == Complex(1.0, 0.0));
  for (double a : {2.0, -3.0, 0.25, -0.5}) {
    const Complex expected = Complex(0.0, -1.0) * (a - 1) / (1 + a);
    CHECK(std::abs(x_multiplicative(ModulusConfig(2), 1, a) - expected) < 1e-14);
  }
  CHECK(std::abs(x_multiplicative(ModulusConfig(3), 1, 1.0)) < 1e-15);
  CHECK_THROWS_AS(x_multiplicative(ModulusConfig(2), 1, -1.0), SingularDenominator);
  // Beyond j = m/2 the pole at -1 cancels against a zero of the numerator.
  const Complex past = x_multiplicative(ModulusConfig(4), 3, -1.0);
  CHECK(std::isfinite(past.real()));
  CHECK(std::abs(past - x_multiplicative(ModulusConfig(4), 3, -1.0 - 1e-7)) < 1e-5);
}

TEST_CASE("x_multiplicative agrees with the literal product") {
  for (int m = 2; m <= 7; ++m) {
    const ModulusConfig cfg(m);
    for (double a : regular_samples(static_cast<unsigned>(m), 10)) {
      for (int j = 0; j < m; ++j) {
        const Complex lit = oracle::x_mult(m, j, a);
        CHECK(std::abs(x_multiplicative(cfg, j, a) - lit) <= 1e-10 * std::max(1.0, std::abs(lit)));
      }
    }
  }
}

TEST_CASE("normalization_factor") {
  CHECK(normalization_factor(ModulusConfig(2), 0.0) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
  CHECK(normalization_factor(ModulusConfig(3), 0.0) == doctest::Approx(std::sqrt(1.0 / 3.0)).epsilon(1e-14));
  CHECK(normalization_factor(ModulusConfig(2), 3.0) == doctest::Approx(std::sqrt(0.8)).epsilon(1e-14));
  for (int m = 2; m <= 9; ++m) {
    for (double a : regular_samples(100u + m, 10)) {
      CHECK(normalization_factor(ModulusConfig(m), a) == doctest::Approx(oracle::normalization(m, a)).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(normalization_factor(ModulusConfig(3), 1.0), DomainError);
  CHECK_THROWS_AS(normalization_factor(ModulusConfig(3), -1.0), DomainError);
  CHECK_THROWS_AS(normalization_factor(ModulusConfig(3), kInf), DomainError);
}

TEST_CASE("x_tilde special values") {
  for (int m = 2; m <= 7; ++m) {
    const ModulusConfig cfg(m);
    const SpectralCoefficients one = x_tilde(cfg, 1.0);
    CHECK(one.kind == LimitKind::a_eq_1);
    for (int j = 0; j < m; ++j) CHECK(std::abs(one.values[j] - Complex(j == 0 ? 1.0 : 0.0, 0.0)) < 1e-12);

    const SpectralCoefficients zero = x_tilde(cfg, 0.0);
    const SpectralCoefficients inf = x_tilde(cfg, kInf);
    const SpectralCoefficients minf = x_tilde(cfg, -kInf);
    CHECK(inf.kind == LimitKind::a_to_infinity);
    for (int j = 0; j < m; ++j) {
      const double s = 1.0 / std::sqrt(static_cast<double>(m));
      CHECK(std::abs(zero.values[j] - s * std::pow(oracle::Q(m), m * j - j * j)) < 1e-12);
      CHECK(std::abs(inf.values[j] - s * std::pow(oracle::Q(m), m * j + j * j)) < 1e-12);
      CHECK(std::abs(minf.values[j] - inf.values[j]) < 1e-15);
      // Q^{mj - j^2} = q^{j^2}: R~(0) is the Gaussian operator.
      CHECK(std::abs(zero.values[j] - s * std::pow(oracle::q(m), j * j)) < 1e-12);
    }
  }
}

TEST_CASE("x_tilde at a = -1 for even m is i(-1)^{m/2} at j = m/2") {
  for (int m : {2, 4, 6}) {
    const SpectralCoefficients c = x_tilde(ModulusConfig(m), -1.0);
    CHECK(c.kind == LimitKind::a_eq_minus1);
    for (int j = 0; j < m; ++j) {
      const Complex expected = j == m / 2 ? Complex(0.0, (m / 2) % 2 == 0 ? 1.0 : -1.0) : Complex(0.0, 0.0);
      CHECK(std::abs(c.values[j] - expected) < 1e-15);
    }
    // The closed form is the limit from below.
    CHECK(max_distance(x_tilde(ModulusConfig(m), -1.0 - 1e-6).values, c.values) < 1e-5);
  }
}

TEST_CASE("x_tilde at a = -1 for odd m is continuous") {
  for (int m : {3, 5, 7}) {
    const ModulusConfig cfg(m);
    const SpectralCoefficients c = x_tilde(cfg, -1.0);
    CHECK(max_distance(x_tilde(cfg, -1.0 - 1e-7).values, c.values) < 1e-5);
    CHECK(max_distance(x_tilde(cfg, -1.0 + 1e-7).values, c.values) < 1e-5);
  }
}

TEST_CASE("x_tilde matches the qubit closed form") {
  const ModulusConfig cfg(2);
  for (double a : regular_samples(5, 20)) {
    if (a < -1.0) continue;
    const double d = std::sqrt(2 * a * a + 2);
    const SpectralCoefficients c = x_tilde(cfg, a);
    CHECK(std::abs(c.values[0] - Complex((a + 1) / d, 0.0)) < 1e-12);
    CHECK(std::abs(c.values[1] - Complex(0.0, (1 - a) / d)) < 1e-12);
  }
}

TEST_CASE("x_tilde agrees with the literal normalized product") {
  for (int m = 2; m <= 7; ++m) {
    for (double a : regular_samples(200u + m, 10)) {
      CHECK(max_distance(x_tilde(ModulusConfig(m), a).values, oracle::x_tilde(m, a)) < 1e-10);
    }
  }
}

TEST_CASE("x_tilde is a unit vector with vanishing cyclic autocorrelation") {
  std::vector<double> grid = regular_samples(9, 20);
  for (double a : {1e-12, 1.0 + 1e-10, -1.0 + 1e-9, 1e12, -1e12, 0.0, 1.0, -1.0, kInf}) grid.push_back(a);
  for (int m = 2; m <= 8; ++m) {
    for (double a : grid) {
      const auto v = x_tilde(ModulusConfig(m), a).values;
      for (int j = 0; j < m; ++j) {
        Complex s(0.0, 0.0);
        for (int n = 0; n < m; ++n) s += v[(n + j) % m] * std::conj(v[n]);
        CHECK(std::abs(s - Complex(j == 0 ? 1.0 : 0.0, 0.0)) < 1e-9);
      }
    }
  }
}

TEST_CASE("classify_parameter uses the guard band") {
  const ModulusConfig cfg(4);
  CHECK(classify_parameter(cfg, 1.0 + 1e-10) == LimitKind::a_eq_1);
  CHECK(classify_parameter(cfg, -1.0 - 1e-10) == LimitKind::a_eq_minus1);
  CHECK(classify_parameter(cfg, 1e-10) == LimitKind::a_eq_0);
  CHECK(classify_parameter(cfg, 2e10) == LimitKind::a_to_infinity);
  CHECK(classify_parameter(cfg, 0.5) == LimitKind::regular);
  CHECK(classify_parameter(ModulusConfig(3), -1.0) == LimitKind::a_eq_minus1);
  CHECK(to_string(LimitKind::a_eq_minus1) == "limit_a_eq_minus1");
}

TEST_CASE("unitarity sums") {
  const ModulusConfig cfg3(3);
  CHECK(verify_unitarity_sum(cfg3, 2.0, 1) <= 1e-10);
  CHECK(verify_unitarity_sum(cfg3, 2.0, 0) <= 1e-10);
  CHECK(verify_unitarity_sum(ModulusConfig(2), 5.0, 1) <= 1e-10);
  for (int m = 2; m <= 9; ++m) {
    for (double a : regular_samples(300u + m, 10)) {
      for (int j = 0; j < m; ++j) CHECK(verify_unitarity_sum(ModulusConfig(m), a, j) <= 1e-10);
    }
  }
}

TEST_CASE("coefficient form of the additive YBE") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  for (int m = 2; m <= 7; ++m) {
    const ModulusConfig cfg(m);
    for (int s = 0; s < 5; ++s) {
      const double al = dist(rng);
      const double alp = dist(rng);
      for (int n1 = 0; n1 < m; ++n1)
        for (int n2 = 0; n2 < m; ++n2) CHECK(verify_star_triangle_coefficients(cfg, n1, n2, al, alp) <= 1e-9);
    }
  }
}
