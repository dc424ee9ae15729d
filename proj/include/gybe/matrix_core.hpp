#pragma once

// Dense complex linear algebra shared by every module.
//
// Basis convention: |i_1 i_2 ... i_d> over (C^m)^{(x)d} maps to the integer
// sum_k i_k m^{d-k}, i.e. the leftmost tensor factor is most significant.
// kron(A, B) therefore sends |i>(x)|j> to row i * B.rows() + j.

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <cstddef>
#include <string>

#include "gybe/errors.hpp"

namespace gybe {

template <typename Real>
using CMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using CVector = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

using Complex = std::complex<double>;
using ComplexMatrix = CMatrix<double>;
using ComplexVector = CVector<double>;

inline constexpr std::size_t kDefaultDimensionCap = std::size_t{1} << 14;

/// Largest matrix dimension any construction may produce. Initialised from
/// the GYBE_DIM_CAP environment variable when set, else kDefaultDimensionCap.
std::size_t dimension_cap();
void set_dimension_cap(std::size_t cap);

inline void require_within_cap(std::size_t dim, const char* what) {
  if (dim > dimension_cap()) {
    throw DimensionCapExceeded(std::string(what) + ": dimension " + std::to_string(dim) +
                               " exceeds cap " + std::to_string(dimension_cap()));
  }
}

/// Integer power with overflow saturation; used for m^k dimension arithmetic.
inline std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > static_cast<std::size_t>(-1) / base) return static_cast<std::size_t>(-1);
    r *= base;
  }
  return r;
}

template <typename Real = double>
CMatrix<Real> identity(std::size_t dim) {
  require_within_cap(dim, "identity");
  return CMatrix<Real>::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
}

template <typename DA, typename DB>
void require_same_square(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b,
                         const char* what) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw DimensionMismatch(std::string(what) + ": " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                            std::to_string(b.cols()));
  }
}

/// Checked square product.
template <typename DA, typename DB>
auto matmul(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  require_same_square(a, b, "matmul");
  using Scalar = typename DA::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out = a * b;
  return out;
}

template <typename DA, typename DB>
auto kron(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  using Scalar = typename DA::Scalar;
  const Eigen::Index ar = a.rows(), ac = a.cols(), br = b.rows(), bc = b.cols();
  require_within_cap(static_cast<std::size_t>(ar * br), "kron");
  require_within_cap(static_cast<std::size_t>(ac * bc), "kron");
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(ar * br, ac * bc);
  for (Eigen::Index j = 0; j < ac; ++j) {
    for (Eigen::Index i = 0; i < ar; ++i) {
      out.block(i * br, j * bc, br, bc) = a(i, j) * b;
    }
  }
  return out;
}

/// Id_pad^{(x)left} (x) m (x) Id_pad^{(x)right}.
template <typename D>
auto embed(const Eigen::MatrixBase<D>& m, std::size_t left_factors, std::size_t right_factors,
           std::size_t pad_dim) {
  using Scalar = typename D::Scalar;
  using Dense = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  if (pad_dim < 1) throw DimensionMismatch("embed: pad_dim must be >= 1");
  if (m.rows() != m.cols()) throw DimensionMismatch("embed: matrix is not square");
  const std::size_t cap = dimension_cap();
  const std::size_t left = ipow(pad_dim, left_factors);
  const std::size_t right = ipow(pad_dim, right_factors);
  const auto inner = static_cast<std::size_t>(m.rows());
  if (left > cap || right > cap || left * inner > cap || left * inner * right > cap) {
    throw DimensionCapExceeded("embed: result dimension exceeds cap " + std::to_string(cap));
  }
  if (left == 1 && right == 1) return Dense(m);
  const Dense mid = right == 1 ? Dense(m) : kron(m, Dense::Identity(right, right));
  if (left == 1) return mid;
  return Dense(kron(Dense::Identity(left, left), mid));
}

/// ||a - b||_F.
template <typename DA, typename DB>
double frobenius_distance(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("frobenius_distance: shape mismatch");
  }
  return static_cast<double>((a - b).norm());
}

/// ||a - b||_F / max(1, ||a||_F): the residual metric used by every verifier.
template <typename DA, typename DB>
double relative_residual(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  const double scale = std::max(1.0, static_cast<double>(a.norm()));
  return frobenius_distance(a, b) / scale;
}

struct UnitaryCheck {
  bool unitary = false;
  double residual = 0.0;
  explicit operator bool() const { return unitary; }
};

/// ||a a^dagger - Id||_F, compared against tol.
template <typename D>
UnitaryCheck is_unitary(const Eigen::MatrixBase<D>& a, double tol) {
  if (a.rows() != a.cols()) throw DimensionMismatch("is_unitary: matrix is not square");
  using Scalar = typename D::Scalar;
  using Dense = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Dense gram = a * a.adjoint();
  const double r = static_cast<double>((gram - Dense::Identity(a.rows(), a.cols())).norm());
  return {r <= tol, r};
}

/// Integer power by repeated squaring.
template <typename D>
auto matrix_power(const Eigen::MatrixBase<D>& a, unsigned exponent) {
  using Scalar = typename D::Scalar;
  using Dense = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Dense result = Dense::Identity(a.rows(), a.cols());
  Dense base = a;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

/// A vector over (C^m)^{(x)arity}. Constructed normalised unless told otherwise.
struct StateVector {
  int m = 2;
  int arity = 1;
  ComplexVector amps;

  StateVector() = default;
  StateVector(int levels, int factors, ComplexVector amplitudes, bool normalize = true);

  /// |index> in the product basis.
  static StateVector basis(int levels, int factors, std::size_t index);
  /// |k>^{(x)factors}.
  static StateVector repeated(int levels, int factors, int k);

  std::size_t dim() const { return static_cast<std::size_t>(amps.size()); }
  double norm() const { return amps.norm(); }
};

}  // namespace gybe
