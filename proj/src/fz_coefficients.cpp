#include "gybe/fz_coefficients.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace gybe {
namespace {

void require_index(const ModulusConfig& cfg, int j, const char* what) {
  if (j < 0 || j >= cfg.m()) {
    throw DomainError(std::string(what) + ": index " + std::to_string(j) + " outside [0, " +
                      std::to_string(cfg.m()) + ")");
  }
}

// sum_{k<count} x^k, evaluated by Horner.
double geometric_sum(double x, int count) {
  double s = 0.0;
  for (int k = 0; k < count; ++k) s = s * x + 1.0;
  return s;
}

// Positive root of the normalization radicand in a form free of removable 0/0:
//   m odd:  (1 + a + ... + a^{m-1}) / (m (1 - a + ... + a^{m-1}))
//   m even: (a+1)^2 (1 + a^2 + ... + a^{m-2}) / (m (a^m + 1))
// Valid for every finite real a except a = 1 is fine too (gives 1).
double stable_normalization(int m, double a) {
  if (m % 2 == 1) {
    return std::sqrt(geometric_sum(a, m) / (m * geometric_sum(-a, m)));
  }
  const double even = geometric_sum(a * a, m / 2);
  return std::abs(a + 1.0) * std::sqrt(even / (m * (std::pow(a, m) + 1.0)));
}

// One factor Q (a r^k - 1) / (r^{k+1} - a), r = Q^2, of X_j(a).
Complex multiplicative_factor(const ModulusConfig& cfg, int k, double a) {
  const Complex num = a * cfg.Q_pow(2LL * k) - 1.0;
  const Complex den = cfg.Q_pow(2LL * (k + 1)) - a;
  if (std::abs(den) < kSingularThreshold) {
    throw SingularDenominator("X_" + std::to_string(k + 1) + "(a): vanishing factor at a = " +
                              std::to_string(a));
  }
  return cfg.Q() * num / den;
}

}  // namespace

std::string_view to_string(LimitKind kind) {
  switch (kind) {
    case LimitKind::regular: return "regular";
    case LimitKind::a_eq_1: return "limit_a_eq_1";
    case LimitKind::a_eq_minus1: return "limit_a_eq_minus1";
    case LimitKind::a_eq_0: return "limit_a_eq_0";
    case LimitKind::a_to_infinity: return "limit_a_to_infinity";
  }
  return "unknown";
}

Complex x_additive(const ModulusConfig& cfg, int j, Complex alpha) {
  require_index(cfg, j, "x_additive");
  const double two_m = 2.0 * cfg.m();
  Complex prod = 1.0;
  for (int k = 0; k < j; ++k) {
    const Complex num = std::sin((2.0 * k * std::numbers::pi + alpha) / two_m);
    const Complex den = std::sin((2.0 * (k + 1) * std::numbers::pi - alpha) / two_m);
    if (std::abs(den) < kSingularThreshold) {
      throw SingularDenominator("x_" + std::to_string(j) + "(alpha): sin((2(k+1)pi - alpha)/2m) = 0 at k = " +
                                std::to_string(k));
    }
    prod *= num / den;
  }
  return prod;
}

std::vector<Complex> x_additive_all(const ModulusConfig& cfg, Complex alpha) {
  std::vector<Complex> out(static_cast<std::size_t>(cfg.m()));
  for (int j = 0; j < cfg.m(); ++j) out[static_cast<std::size_t>(j)] = x_additive(cfg, j, alpha);
  return out;
}

Complex x_multiplicative(const ModulusConfig& cfg, int j, double a) {
  require_index(cfg, j, "x_multiplicative");
  const int m = cfg.m();
  const int half = m / 2;
  Complex prod = 1.0;
  for (int k = 0; k < j; ++k) {
    // For m even the factor k = m/2 - 1 has denominator -(1 + a) and the factor
    // k = m/2 has numerator -(1 + a) Q; past j = m/2 they cancel identically.
    if (m % 2 == 0 && k == half - 1 && j > half) {
      const Complex num = a * cfg.Q_pow(2LL * k) - 1.0;
      const Complex den = cfg.Q_pow(2LL * (k + 2)) - a;
      if (std::abs(den) < kSingularThreshold) {
        throw SingularDenominator("X_j(a): vanishing factor at a = " + std::to_string(a));
      }
      prod *= cfg.Q() * cfg.Q() * num / den;
      ++k;
      continue;
    }
    prod *= multiplicative_factor(cfg, k, a);
  }
  return prod;
}

Complex alpha_from_a(const ModulusConfig& cfg, double a) {
  return Complex(0.0, static_cast<double>(cfg.m())) * std::log(Complex(1.0 / a, 0.0));
}

double normalization_factor(const ModulusConfig& cfg, double a) {
  if (!std::isfinite(a)) throw DomainError("normalization_factor: a must be finite");
  if (std::abs(a - 1.0) < kSpecialPointGuard || std::abs(a + 1.0) < kSpecialPointGuard) {
    throw DomainError("normalization_factor: undefined at a = +-1; use x_tilde for the limit");
  }
  return stable_normalization(cfg.m(), a);
}

LimitKind classify_parameter(const ModulusConfig& /*cfg*/, double a) {
  if (std::isnan(a)) throw DomainError("spectral parameter is NaN");
  if (std::isinf(a) || std::abs(1.0 / a) < kSpecialPointGuard) return LimitKind::a_to_infinity;
  if (std::abs(a) < kSpecialPointGuard) return LimitKind::a_eq_0;
  if (std::abs(a - 1.0) < kSpecialPointGuard) return LimitKind::a_eq_1;
  if (std::abs(a + 1.0) < kSpecialPointGuard) return LimitKind::a_eq_minus1;
  return LimitKind::regular;
}

SpectralCoefficients x_tilde(const ModulusConfig& cfg, double a) {
  const int m = cfg.m();
  SpectralCoefficients out;
  out.m = m;
  out.a = a;
  out.kind = classify_parameter(cfg, a);
  out.values.assign(static_cast<std::size_t>(m), Complex(0.0, 0.0));
  const double inv_sqrt_m = 1.0 / std::sqrt(static_cast<double>(m));
  const auto mm = static_cast<long long>(m);

  switch (out.kind) {
    case LimitKind::a_eq_1:
      out.values[0] = 1.0;
      return out;
    case LimitKind::a_eq_0:
      for (long long j = 0; j < m; ++j) out.values[j] = inv_sqrt_m * cfg.Q_pow(mm * j - j * j);
      return out;
    case LimitKind::a_to_infinity:
      for (long long j = 0; j < m; ++j) out.values[j] = inv_sqrt_m * cfg.Q_pow(mm * j + j * j);
      return out;
    case LimitKind::a_eq_minus1:
      if (m % 2 == 0) {
        // i (-1)^{m/2} at j = m/2: the one-sided limit from a < -1.
        out.values[static_cast<std::size_t>(m / 2)] =
            Complex(0.0, (m / 2) % 2 == 0 ? 1.0 : -1.0);
        return out;
      }
      // m odd: no pole, and the factored radicand is regular at -1.
      a = -1.0;
      break;
    case LimitKind::regular:
      break;
  }
  const double norm = stable_normalization(m, a);
  for (int j = 0; j < m; ++j) out.values[static_cast<std::size_t>(j)] = norm * x_multiplicative(cfg, j, a);
  return out;
}

double verify_unitarity_sum(const ModulusConfig& cfg, double a, int j) {
  require_index(cfg, j, "verify_unitarity_sum");
  if (!std::isfinite(a) || a == 0.0) throw DomainError("verify_unitarity_sum: a must be finite and nonzero");
  if (a == 1.0 || a == -1.0) throw DomainError("verify_unitarity_sum: a must avoid +-1");
  const int m = cfg.m();
  Complex sum = 0.0;
  for (int n = 0; n < m; ++n) {
    sum += x_multiplicative(cfg, n, a) * x_multiplicative(cfg, cfg.reduce(n + j), 1.0 / a);
  }
  const double am = std::pow(a, m);
  const double target = j == 0 ? m * (a - 1.0) * (am + 1.0) / ((a + 1.0) * (am - 1.0)) : 0.0;
  return std::abs(sum - target);
}

double verify_star_triangle_scalar(const ModulusConfig& cfg, int n1, int n2, int n3, Complex alpha,
                                   Complex alpha_prime) {
  const int m = cfg.m();
  const auto x = [&](long long j, Complex arg) { return x_additive(cfg, cfg.reduce(j), arg); };
  const Complex sum_alpha = alpha + alpha_prime;
  Complex lhs = 0.0;
  Complex rhs = 0.0;
  for (long long l = 0; l < m; ++l) {
    lhs += x(n1 - l, alpha) * x(n2, sum_alpha) * x(n3 - l, alpha_prime) * cfg.q2_pow(-n3 * l);
    rhs += x(l, alpha_prime) * x(n1 - n3, sum_alpha) * x(l - n2, alpha) *
           cfg.q2_pow(-l * (n1 - n3) - static_cast<long long>(n1) * n3);
  }
  return std::abs(lhs - rhs);
}

double verify_star_triangle_coefficients(const ModulusConfig& cfg, int n1, int n2, Complex alpha,
                                         Complex alpha_prime) {
  const int m = cfg.m();
  const auto x = [&](long long j, Complex arg) { return x_additive(cfg, cfg.reduce(j), arg); };
  const Complex sum_alpha = alpha + alpha_prime;
  Complex lhs = 0.0;
  Complex rhs = 0.0;
  for (long long l = 0; l < m; ++l) {
    lhs += x(n1 - l, alpha) * x(n2, sum_alpha) * x(l, alpha_prime) * cfg.q2_pow(-n2 * l);
    rhs += x(l, alpha_prime) * x(n1, sum_alpha) * x(n2 - l, alpha) * cfg.q2_pow(-n1 * l);
  }
  return std::abs(lhs - rhs);
}

}  // namespace gybe
