#pragma once

#include "gybe/matrix_core.hpp"

namespace gybe {

/// exp(i pi numerator / denominator); quarter turns (1, i, -1, -i) are exact.
Complex unit_phase(long long numerator, long long denominator);

/// Root-of-unity conventions for level count m:
///   Q  = exp(i pi / m)            (the multiplicative spectral variable)
///   q  = exp(i pi (m-1) / m)      (= -exp(-i pi / m), the braid root)
///   q2 = q^2                      (primitive m-th root of unity)
class ModulusConfig {
 public:
  explicit ModulusConfig(int m);

  int m() const { return m_; }
  Complex Q() const { return Q_pow(1); }
  Complex q() const { return q_pow(1); }
  Complex q2() const { return q_pow(2); }

  Complex Q_pow(long long k) const { return unit_phase(k, m_); }
  Complex q_pow(long long k) const { return unit_phase(static_cast<long long>(m_ - 1) * k, m_); }
  /// q^{twice / 2}; lets half-integral exponents use the literal branch
  /// exp(i pi (m-1) twice / (2m)).
  Complex q_pow_half(long long twice) const {
    return unit_phase(static_cast<long long>(m_ - 1) * twice, 2LL * m_);
  }
  Complex q2_pow(long long k) const { return q_pow(2 * k); }

  /// j reduced into [0, m).
  int reduce(long long j) const {
    const long long r = j % m_;
    return static_cast<int>(r < 0 ? r + m_ : r);
  }

 private:
  int m_;
};

}  // namespace gybe
