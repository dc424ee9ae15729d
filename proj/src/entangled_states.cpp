#include "gybe/entangled_states.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <string>

namespace gybe {

std::size_t diagonal_index(int m, int N, int j) {
  std::size_t index = 0;
  for (int f = 0; f < N; ++f) index = index * static_cast<std::size_t>(m) + static_cast<std::size_t>(j);
  return index;
}

GhzLikeState apply_to_product_state(const ComplexMatrix& s, int m, int N, int k) {
  const std::size_t dim = ipow(static_cast<std::size_t>(m), static_cast<std::size_t>(N));
  if (s.rows() != s.cols() || static_cast<std::size_t>(s.rows()) != dim) {
    throw DimensionMismatch("apply_to_product_state: operator must have dimension m^N = " + std::to_string(dim));
  }
  if (k < 0 || k >= m) throw DomainError("apply_to_product_state: k outside [0, m)");

  const ComplexVector image = s.col(static_cast<Eigen::Index>(diagonal_index(m, N, k)));
  GhzLikeState out;
  out.m = m;
  out.N = N;
  out.amplitudes.resize(static_cast<std::size_t>(m));
  double diagonal_weight = 0.0;
  for (int j = 0; j < m; ++j) {
    const Complex amp = image(static_cast<Eigen::Index>(diagonal_index(m, N, j)));
    out.amplitudes[static_cast<std::size_t>(j)] = amp;
    diagonal_weight += std::norm(amp);
  }
  const double off_diagonal = std::sqrt(std::max(0.0, image.squaredNorm() - diagonal_weight));
  if (off_diagonal > kDiagonalSupportTolerance) {
    throw NotDiagonalSupport("image of |k>^N has off-diagonal weight " + std::to_string(off_diagonal));
  }
  out.full_vector = StateVector(m, N, image, false);
  return out;
}

long long state_exponent_twice(int k, int m, int N, int j) {
  const long long d = k - j;
  return 2 * d * d + (static_cast<long long>(m) - 1 + static_cast<long long>(j - k) * (j + k + 1)) * (N - 2);
}

long long phased_exponent_twice(int k, int m, int N, int j) {
  const long long t = ((k - j) % m + m) % m;
  return state_exponent_twice(k, m, N, j) + t * (m - 1) * (N - 2);
}

std::vector<Complex> analytic_amplitudes(const ModulusConfig& cfg, int k, int N) {
  const int m = cfg.m();
  if (m % 2 == 0) throw UnsupportedParity("analytic_amplitudes: the closed form is stated for odd m only");
  if (k < 0 || k >= m) throw DomainError("analytic_amplitudes: k outside [0, m)");
  const double scale = 1.0 / std::sqrt(static_cast<double>(m));
  std::vector<Complex> out(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) out[static_cast<std::size_t>(j)] = scale * cfg.q_pow_half(state_exponent_twice(k, m, N, j));
  return out;
}

std::vector<Complex> fix_global_phase(std::vector<Complex> v) {
  for (const Complex& c : v) {
    if (std::abs(c) > 1e-12) {
      const Complex phase = std::conj(c) / std::abs(c);
      for (Complex& x : v) x *= phase;
      break;
    }
  }
  return v;
}

namespace {

double max_distance_up_to_phase(std::vector<Complex> a, std::vector<Complex> b) {
  a = fix_global_phase(std::move(a));
  b = fix_global_phase(std::move(b));
  double worst = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) worst = std::max(worst, std::abs(a[j] - b[j]));
  return worst;
}

std::vector<Complex> gaussian_image(const ParamOperatorFamily& fam, int k) {
  const int N = fam.system().N();
  return apply_to_product_state(gaussian_site_operator(fam.cfg(), N), fam.cfg().m(), N, k).amplitudes;
}

}  // namespace

double verify_state_formula(const ParamOperatorFamily& fam, int k) {
  return max_distance_up_to_phase(gaussian_image(fam, k), analytic_amplitudes(fam.cfg(), k, fam.system().N()));
}

double verify_state_formula_phased(const ParamOperatorFamily& fam, int k) {
  const ModulusConfig& cfg = fam.cfg();
  const int m = cfg.m();
  const int N = fam.system().N();
  if (m % 2 == 0) throw UnsupportedParity("verify_state_formula_phased: odd m only");
  std::vector<Complex> expected(static_cast<std::size_t>(m));
  const double scale = 1.0 / std::sqrt(static_cast<double>(m));
  for (int j = 0; j < m; ++j) expected[static_cast<std::size_t>(j)] = scale * cfg.q_pow_half(phased_exponent_twice(k, m, N, j));
  return max_distance_up_to_phase(gaussian_image(fam, k), std::move(expected));
}

ComplexMatrix reduced_density_matrix(const StateVector& state, int site) {
  if (site < 0 || site >= state.arity) throw DomainError("reduced_density_matrix: site out of range");
  const auto m = static_cast<Eigen::Index>(state.m);
  const auto left = static_cast<Eigen::Index>(ipow(static_cast<std::size_t>(state.m), static_cast<std::size_t>(site)));
  const auto right =
      static_cast<Eigen::Index>(ipow(static_cast<std::size_t>(state.m), static_cast<std::size_t>(state.arity - site - 1)));
  ComplexMatrix rho = ComplexMatrix::Zero(m, m);
  for (Eigen::Index l = 0; l < left; ++l) {
    // Rows: the site index; columns: the right environment.
    const auto block = state.amps.segment(l * m * right, m * right).reshaped(right, m).transpose();
    rho.noalias() += block * block.adjoint();
  }
  return rho;
}

double reduced_density_check(const StateVector& state, int site) {
  const ComplexMatrix rho = reduced_density_matrix(state, site);
  const ComplexMatrix mixed = identity(static_cast<std::size_t>(state.m)) / static_cast<double>(state.m);
  return frobenius_distance(rho, mixed);
}

double reduced_density_check(const GhzLikeState& state, int site) {
  if (site < 0 || site >= state.N) throw DomainError("reduced_density_check: site out of range");
  return reduced_density_check(state.full_vector, site);
}

Trajectory evolve(const ParamOperatorFamily& fam, int i, const StateVector& phi0, std::span<const double> a_grid) {
  if (phi0.dim() != fam.dim()) {
    throw DimensionMismatch("evolve: initial state dimension " + std::to_string(phi0.dim()) +
                            " does not match operator dimension " + std::to_string(fam.dim()));
  }
  Trajectory t;
  t.a_grid.assign(a_grid.begin(), a_grid.end());
  t.states.reserve(a_grid.size());
  for (double a : a_grid) {
    t.states.emplace_back(phi0.m, phi0.arity, ComplexVector(r_tilde(fam, i, a) * phi0.amps), false);
  }
  return t;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& trajectory) {
  const auto flags = os.flags();
  const auto prec = os.precision();
  os << "a, basis_index, re, im\n" << std::setprecision(17);
  for (std::size_t g = 0; g < trajectory.states.size(); ++g) {
    const ComplexVector& v = trajectory.states[g].amps;
    for (Eigen::Index idx = 0; idx < v.size(); ++idx) {
      if (std::abs(v(idx)) <= 1e-12) continue;
      os << trajectory.a_grid[g] << ',' << idx << ',' << v(idx).real() << ',' << v(idx).imag() << '\n';
    }
  }
  os.flags(flags);
  os.precision(prec);
}

}  // namespace gybe
