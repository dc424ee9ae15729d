#include "gybe/monomial.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace gybe {

MonomialMatrix MonomialMatrix::identity(Eigen::Index dim) {
  MonomialMatrix out;
  out.target.resize(static_cast<std::size_t>(dim));
  for (Eigen::Index c = 0; c < dim; ++c) out.target[static_cast<std::size_t>(c)] = c;
  out.phase.assign(static_cast<std::size_t>(dim), Complex(1.0, 0.0));
  return out;
}

MonomialMatrix MonomialMatrix::from_dense(const ComplexMatrix& a, double tol) {
  if (a.rows() != a.cols()) throw DimensionMismatch("MonomialMatrix::from_dense: matrix is not square");
  const Eigen::Index dim = a.cols();
  MonomialMatrix out;
  out.target.assign(static_cast<std::size_t>(dim), -1);
  out.phase.assign(static_cast<std::size_t>(dim), Complex(0.0, 0.0));
  std::vector<char> hit(static_cast<std::size_t>(dim), 0);
  for (Eigen::Index c = 0; c < dim; ++c) {
    for (Eigen::Index r = 0; r < dim; ++r) {
      if (std::abs(a(r, c)) <= tol) continue;
      if (out.target[static_cast<std::size_t>(c)] >= 0) {
        throw DomainError("MonomialMatrix::from_dense: column " + std::to_string(c) + " has several entries");
      }
      out.target[static_cast<std::size_t>(c)] = r;
      out.phase[static_cast<std::size_t>(c)] = a(r, c);
    }
    const Eigen::Index r = out.target[static_cast<std::size_t>(c)];
    if (r < 0) throw DomainError("MonomialMatrix::from_dense: column " + std::to_string(c) + " is zero");
    if (hit[static_cast<std::size_t>(r)]) throw DomainError("MonomialMatrix::from_dense: targets are not a permutation");
    hit[static_cast<std::size_t>(r)] = 1;
  }
  return out;
}

ComplexMatrix MonomialMatrix::dense() const {
  ComplexMatrix out = ComplexMatrix::Zero(dim(), dim());
  for (Eigen::Index c = 0; c < dim(); ++c) out(target[static_cast<std::size_t>(c)], c) = phase[static_cast<std::size_t>(c)];
  return out;
}

MonomialMatrix compose(const MonomialMatrix& a, const MonomialMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("compose: dimensions differ");
  MonomialMatrix out;
  out.target.resize(b.target.size());
  out.phase.resize(b.phase.size());
  for (std::size_t c = 0; c < b.target.size(); ++c) {
    const auto mid = static_cast<std::size_t>(b.target[c]);
    out.target[c] = a.target[mid];
    out.phase[c] = a.phase[mid] * b.phase[c];
  }
  return out;
}

MonomialMatrix scaled(const MonomialMatrix& a, Complex s) {
  MonomialMatrix out = a;
  for (Complex& p : out.phase) p *= s;
  return out;
}

double frobenius_norm(const MonomialMatrix& a) {
  double sum = 0.0;
  for (const Complex& p : a.phase) sum += std::norm(p);
  return std::sqrt(sum);
}

double frobenius_distance(const MonomialMatrix& a, const MonomialMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("frobenius_distance: dimensions differ");
  double sum = 0.0;
  for (std::size_t c = 0; c < a.target.size(); ++c) {
    if (a.target[c] == b.target[c]) {
      sum += std::norm(a.phase[c] - b.phase[c]);
    } else {
      sum += std::norm(a.phase[c]) + std::norm(b.phase[c]);
    }
  }
  return std::sqrt(sum);
}

double relative_residual(const MonomialMatrix& a, const MonomialMatrix& b) {
  return frobenius_distance(a, b) / std::max(1.0, frobenius_norm(a));
}

void accumulate_product(ComplexMatrix& out, Complex s, const MonomialMatrix& a, const ComplexMatrix& b) {
  if (b.rows() != a.dim() || out.rows() != a.dim() || out.cols() != b.cols()) {
    throw DimensionMismatch("accumulate_product: dimensions differ");
  }
  const std::size_t n = a.phase.size();
  std::vector<double> wr(n);
  std::vector<double> wi(n);
  for (std::size_t c = 0; c < n; ++c) {
    const Complex w = s * a.phase[c];
    wr[c] = w.real();
    wi[c] = w.imag();
  }
  // Explicit real arithmetic: avoids the library call behind complex *.
  for (Eigen::Index k = 0; k < b.cols(); ++k) {
    const double* src = reinterpret_cast<const double*>(b.col(k).data());
    double* dst = reinterpret_cast<double*>(out.col(k).data());
    for (std::size_t c = 0; c < n; ++c) {
      const double xr = src[2 * c];
      const double xi = src[2 * c + 1];
      const auto r = static_cast<std::size_t>(a.target[c]);
      dst[2 * r] += wr[c] * xr - wi[c] * xi;
      dst[2 * r + 1] += wr[c] * xi + wi[c] * xr;
    }
  }
}

double unitarity_residual(const MonomialMatrix& a) {
  // A A^dagger is diagonal with |phase[c]|^2 at row target[c].
  double sum = 0.0;
  for (const Complex& p : a.phase) {
    const double d = std::norm(p) - 1.0;
    sum += d * d;
  }
  return std::sqrt(sum);
}

}  // namespace gybe
