#include "gybe/modulus.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace gybe {

Complex unit_phase(long long numerator, long long denominator) {
  if (denominator <= 0) throw DomainError("unit_phase: denominator must be positive");
  const long long period = 2 * denominator;
  long long n = numerator % period;
  if (n < 0) n += period;
  // Quarter turns are exact so that factors like Q^{m} - a reduce to -1 - a.
  if ((2 * n) % denominator == 0) {
    switch ((2 * n) / denominator) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      case 3: return {0.0, -1.0};
      default: break;
    }
  }
  const double theta = std::numbers::pi * static_cast<double>(n) / static_cast<double>(denominator);
  return {std::cos(theta), std::sin(theta)};
}

ModulusConfig::ModulusConfig(int m) : m_(m) {
  if (m < 2) throw DomainError("ModulusConfig: m must be >= 2, got " + std::to_string(m));
}

}  // namespace gybe
