#pragma once

// Matrices with exactly one nonzero entry per column: column c maps to row
// target[c] with weight phase[c]. Generators T_i and all their powers have
// this form, so a product T_i^j B costs O(dim^2) instead of O(dim^3).

#include <vector>

#include "gybe/matrix_core.hpp"

namespace gybe {

struct MonomialMatrix {
  std::vector<Eigen::Index> target;
  std::vector<Complex> phase;

  Eigen::Index dim() const { return static_cast<Eigen::Index>(target.size()); }

  static MonomialMatrix identity(Eigen::Index dim);

  /// DomainError unless every column holds exactly one entry above `tol`
  /// and the column targets form a permutation.
  static MonomialMatrix from_dense(const ComplexMatrix& a, double tol = 1e-12);

  ComplexMatrix dense() const;
};

/// a * b.
MonomialMatrix compose(const MonomialMatrix& a, const MonomialMatrix& b);

MonomialMatrix scaled(const MonomialMatrix& a, Complex s);

double frobenius_norm(const MonomialMatrix& a);
double frobenius_distance(const MonomialMatrix& a, const MonomialMatrix& b);

/// ||a - b||_F / max(1, ||a||_F), the convention of relative_residual.
double relative_residual(const MonomialMatrix& a, const MonomialMatrix& b);

/// ||a a^dagger - Id||_F, the residual of is_unitary.
double unitarity_residual(const MonomialMatrix& a);

/// out += s * (a * b), b dense.
void accumulate_product(ComplexMatrix& out, Complex s, const MonomialMatrix& a, const ComplexMatrix& b);

}  // namespace gybe
