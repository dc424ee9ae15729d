#pragma once

// Fateev-Zamolodchikov spectral coefficients.
//
//   additive:       x_j(alpha) = prod_{k<j} sin((2k pi + alpha)/2m) / sin((2(k+1) pi - alpha)/2m)
//   multiplicative: X_j(a)     = x_j(m i log(1/a))
//                              = prod_{k<j} (a Q^k - Q^{-k}) / (Q^{k+1} - a Q^{-k-1})
//   normalized:     X~_j(a)    = sqrt((a+1)(a^m-1) / (m(a-1)(a^m+1))) X_j(a)
//
// Sum_j X~_j(a) u^j is unitary for every real a whenever u is unitary with
// u^m = 1. The parameter a may also be +-infinity.

#include <string_view>
#include <vector>

#include "gybe/matrix_core.hpp"
#include "gybe/modulus.hpp"

namespace gybe {

/// Distance below which a parameter is routed to a closed form.
inline constexpr double kSpecialPointGuard = 1e-9;
/// Sine/linear denominators smaller than this are treated as zero.
inline constexpr double kSingularThreshold = 1e-14;

enum class LimitKind { regular, a_eq_1, a_eq_minus1, a_eq_0, a_to_infinity };

std::string_view to_string(LimitKind kind);

struct SpectralCoefficients {
  int m = 0;
  double a = 0.0;
  std::vector<Complex> values;
  LimitKind kind = LimitKind::regular;
};

Complex x_additive(const ModulusConfig& cfg, int j, Complex alpha);
std::vector<Complex> x_additive_all(const ModulusConfig& cfg, Complex alpha);

Complex x_multiplicative(const ModulusConfig& cfg, int j, double a);

/// alpha = m i log(1/a) on the principal branch of log.
Complex alpha_from_a(const ModulusConfig& cfg, double a);

/// Positive root of (a+1)(a^m-1) / (m(a-1)(a^m+1)); DomainError at a = +-1
/// and for non-finite a.
double normalization_factor(const ModulusConfig& cfg, double a);

LimitKind classify_parameter(const ModulusConfig& cfg, double a);

/// All m normalized coefficients. Never throws for real or infinite a.
SpectralCoefficients x_tilde(const ModulusConfig& cfg, double a);

/// |sum_n X_n(a) X_{n+j}(1/a) - target|, target 0 for j > 0 and
/// m(a-1)(a^m+1)/((a+1)(a^m-1)) for j = 0.
double verify_unitarity_sum(const ModulusConfig& cfg, double a, int j);

/// |LHS - RHS| of the three-index scalar identity in its stated form
///   sum_l x_{n1-l}(al) x_{n2}(al+al') x_{n3-l}(al') q2^{-n3 l}
///     = sum_l x_l(al') x_{n1-n3}(al+al') x_{l-n2}(al) q2^{-l(n1-n3) - n1 n3},
/// subscripts reduced mod m.
double verify_star_triangle_scalar(const ModulusConfig& cfg, int n1, int n2, int n3, Complex alpha,
                                   Complex alpha_prime);

/// |LHS - RHS| of the coefficient of u1^{n1} u2^{n2} in
/// R1(al) R2(al+al') R1(al') = R2(al') R1(al+al') R2(al), for u1 u2 = q2 u2 u1:
///   sum_l x_{n1-l}(al) x_{n2}(al+al') x_l(al') q2^{-n2 l}
///     = sum_l x_l(al') x_{n1}(al+al') x_{n2-l}(al) q2^{-n1 l}.
double verify_star_triangle_coefficients(const ModulusConfig& cfg, int n1, int n2, Complex alpha,
                                         Complex alpha_prime);

}  // namespace gybe
