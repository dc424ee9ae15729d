#pragma once

// Entangled states produced from the measurement basis.
//
// The Gaussian site operator S = (1/sqrt m) sum_j q^{j^2} M^j maps |k>^{(x)N}
// onto the diagonal states |j>^{(x)N}, each with modulus 1/sqrt m. For m odd
// the amplitudes are quoted as (1/sqrt m) q^{c_j(k,m,N)} with
//   c_j(k,m,N) = (k-j)^2 + [m-1 + (j-k)(j+k+1)] (N-2) / 2.

#include <iosfwd>
#include <vector>

#include "gybe/gybe_solutions.hpp"

namespace gybe {

/// Off-diagonal weight above which apply_to_product_state rejects an operator.
inline constexpr double kDiagonalSupportTolerance = 1e-8;

struct GhzLikeState {
  int m = 0;
  int N = 0;
  std::vector<Complex> amplitudes;  // coefficient of |j>^{(x)N}
  StateVector full_vector;
};

/// Index of |j>^{(x)N} in the product basis.
std::size_t diagonal_index(int m, int N, int j);

GhzLikeState apply_to_product_state(const ComplexMatrix& s, int m, int N, int k);

/// 2 c_j(k,m,N), exact in integer arithmetic.
long long state_exponent_twice(int k, int m, int N, int j);

/// (1/sqrt m) q^{c_j(k,m,N)} for j = 0..m-1. UnsupportedParity for even m.
std::vector<Complex> analytic_amplitudes(const ModulusConfig& cfg, int k, int N);

/// Exponent of the amplitudes of the phased site operator: c_j plus the
/// contribution t (m-1)(N-2)/2 of the site phase raised to t = (k-j) mod m.
/// Returned doubled, as an integer.
long long phased_exponent_twice(int k, int m, int N, int j);

/// Multiplies v by the unit phase making its first entry with modulus above
/// 1e-12 real positive.
std::vector<Complex> fix_global_phase(std::vector<Complex> v);

/// Max componentwise distance between the Gaussian image of |k>^{(x)N} and
/// analytic_amplitudes, after fixing the global phase of both.
double verify_state_formula(const ParamOperatorFamily& fam, int k);

/// Same comparison against q^{phased_exponent/2} / sqrt m.
double verify_state_formula_phased(const ParamOperatorFamily& fam, int k);

/// Single-qudit reduced density matrix of a pure state.
ComplexMatrix reduced_density_matrix(const StateVector& state, int site);

/// ||rho_site - Id/m||_F.
double reduced_density_check(const StateVector& state, int site);
double reduced_density_check(const GhzLikeState& state, int site);

struct Trajectory {
  std::vector<double> a_grid;
  std::vector<StateVector> states;  // R~_i(a) phi0 for each grid point
};

Trajectory evolve(const ParamOperatorFamily& fam, int i, const StateVector& phi0, std::span<const double> a_grid);

/// Header "a, basis_index, re, im", then one row per (grid point, amplitude
/// with modulus above 1e-12).
void write_trajectory_csv(std::ostream& os, const Trajectory& trajectory);

}  // namespace gybe
