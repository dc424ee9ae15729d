#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>
#include <string>

#include "gybe/entangled_states.hpp"
#include "gybe/errors.hpp"
#include "oracles.hpp"

using namespace gybe;

namespace {

ParamOperatorFamily family(int m, int N, int z, int n) { return ParamOperatorFamily(build_site_system(ModulusConfig(m), N, z, n)); }

}  // namespace

TEST_CASE("Gaussian image of |k>^N is GHZ-like") {
  for (int m = 2; m <= 5; ++m) {
    for (int N = 2; N <= 4; ++N) {
      if (ipow(m, N) > 1024) continue;
      const ComplexMatrix s = gaussian_site_operator(ModulusConfig(m), N);
      for (int k = 0; k < m; ++k) {
        const GhzLikeState st = apply_to_product_state(s, m, N, k);
        CHECK(st.full_vector.norm() == doctest::Approx(1.0).epsilon(1e-10));
        double diagonal = 0.0;
        for (int j = 0; j < m; ++j) {
          CHECK(std::abs(std::abs(st.amplitudes[j]) - 1.0 / std::sqrt(static_cast<double>(m))) < 1e-10);
          diagonal += std::norm(st.amplitudes[j]);
        }
        CHECK(std::abs(diagonal - 1.0) < 1e-10);
        for (int site = 0; site < N; ++site) CHECK(reduced_density_check(st, site) <= 1e-10);
      }
    }
  }
}

TEST_CASE("qubit Bell state") {
  const GhzLikeState st = apply_to_product_state(gaussian_site_operator(ModulusConfig(2), 2), 2, 2, 0);
  CHECK(std::abs(std::abs(st.amplitudes[0]) - std::sqrt(0.5)) < 1e-12);
  CHECK(std::abs(std::abs(st.amplitudes[1]) - std::sqrt(0.5)) < 1e-12);
  CHECK(std::abs(st.full_vector.amps(1)) < 1e-12);
  CHECK(std::abs(st.full_vector.amps(2)) < 1e-12);
}

TEST_CASE("apply_to_product_state rejects non-diagonal images") {
  const ComplexMatrix s = gaussian_site_operator(ModulusConfig(2), 2);
  const ComplexMatrix bad = kron(s, identity(2));
  CHECK_THROWS_AS(apply_to_product_state(bad, 2, 3, 0), NotDiagonalSupport);
  CHECK_THROWS_AS(apply_to_product_state(s, 2, 3, 0), DimensionMismatch);
  CHECK_THROWS_AS(apply_to_product_state(s, 2, 2, 2), DomainError);
}

TEST_CASE("state exponent against the integer oracle") {
  for (int m : {3, 5, 7}) {
    for (int N = 2; N <= 5; ++N) {
      for (int k = 0; k < m; ++k) {
        for (int j = 0; j < m; ++j) {
          const long long twice = state_exponent_twice(k, m, N, j);
          CHECK(twice % 2 == 0);
          CHECK(twice / 2 == oracle::c_exponent(k, m, N, j));
        }
      }
    }
  }
  CHECK(state_exponent_twice(0, 3, 3, 0) / 2 == 1);
  CHECK(state_exponent_twice(0, 3, 3, 1) / 2 == 3);
  CHECK(state_exponent_twice(0, 3, 3, 2) / 2 == 8);
  for (int k = 0; k < 5; ++k) {
    CHECK(state_exponent_twice(k, 5, 2, 3) / 2 == (k - 3) * (k - 3));
    CHECK(state_exponent_twice(k, 5, 4, k) == 4 * 2);
  }
}

TEST_CASE("analytic amplitudes are odd-m only") {
  CHECK_THROWS_AS(analytic_amplitudes(ModulusConfig(4), 0, 2), UnsupportedParity);
  const auto amps = analytic_amplitudes(ModulusConfig(3), 0, 3);
  const Complex q = oracle::q(3);
  CHECK(std::abs(amps[0] - q / std::sqrt(3.0)) < 1e-12);
  CHECK(std::abs(amps[1] - Complex(1.0, 0.0) / std::sqrt(3.0)) < 1e-12);
  CHECK(std::abs(amps[2] - q * q / std::sqrt(3.0)) < 1e-12);
}

TEST_CASE("state formula for two-factor sites") {
  CHECK(verify_state_formula(family(3, 2, 1, 2), 0) <= 1e-10);
  CHECK(verify_state_formula(family(5, 2, 1, 2), 2) <= 1e-10);
  for (int m : {3, 5, 7})
    for (int k = 0; k < m; ++k) CHECK(verify_state_formula(family(m, 2, 1, 2), k) <= 1e-10);
}

TEST_CASE("state formula including the site phase") {
  for (int m : {3, 5}) {
    for (int N = 2; N <= 4; ++N) {
      if (ipow(m, N) > 700) continue;
      const ParamOperatorFamily fam = family(m, N, N - 1, 2);
      for (int k = 0; k < m; ++k) CHECK(verify_state_formula_phased(fam, k) <= 1e-10);
    }
  }
}

TEST_CASE("phase-free site operator reproduces c_j for every N") {
  for (int m : {3, 5}) {
    for (int N = 2; N <= 4; ++N) {
      if (ipow(m, N) > 700) continue;
      const ComplexMatrix u = oracle::site_operator(m, N, false);
      ComplexMatrix s = ComplexMatrix::Zero(u.rows(), u.cols());
      ComplexMatrix p = ComplexMatrix::Identity(u.rows(), u.cols());
      for (int j = 0; j < m; ++j) {
        s += std::pow(oracle::q(m), j * j) / std::sqrt(static_cast<double>(m)) * p;
        p = p * u;
      }
      for (int k = 0; k < m; ++k) {
        const auto got = fix_global_phase(apply_to_product_state(s, m, N, k).amplitudes);
        const auto want = fix_global_phase(analytic_amplitudes(ModulusConfig(m), k, N));
        for (int j = 0; j < m; ++j) CHECK(std::abs(got[j] - want[j]) < 1e-10);
      }
    }
  }
}

TEST_CASE("reduced density matrices") {
  ComplexVector prod = ComplexVector::Zero(4);
  prod(0) = 1.0;
  CHECK(reduced_density_check(StateVector(2, 2, prod), 0) == doctest::Approx(std::sqrt(0.5)));

  ComplexVector bell = ComplexVector::Zero(4);
  bell(0) = 1.0;
  bell(3) = 1.0;
  CHECK(reduced_density_check(StateVector(2, 2, bell), 0) < 1e-15);

  std::mt19937_64 rng(5);
  std::normal_distribution<double> g;
  ComplexVector v(27);
  for (auto& x : v) x = Complex(g(rng), g(rng));
  const StateVector s(3, 3, v);
  for (int site = 0; site < 3; ++site) {
    CHECK(frobenius_distance(reduced_density_matrix(s, site), oracle::partial_trace(s.amps, 3, 3, site)) < 1e-13);
  }
  CHECK_THROWS_AS(reduced_density_matrix(s, 3), DomainError);
}

TEST_CASE("evolution along the parameter") {
  const ParamOperatorFamily fam = family(3, 2, 1, 3);
  const StateVector phi0 = StateVector::repeated(3, fam.system().total_arity(), 1);

  const double one[] = {1.0};
  const Trajectory t1 = evolve(fam, 1, phi0, one);
  CHECK((t1.states[0].amps - phi0.amps).norm() == 0.0);

  const double zero[] = {0.0};
  const Trajectory t0 = evolve(fam, 1, phi0, zero);
  const GhzLikeState ghz = apply_to_product_state(gaussian_site_operator(fam.cfg(), 2), 3, 2, 1);
  for (int j = 0; j < 3; ++j) {
    // |j j 1>: Gaussian image on the first two factors, third untouched.
    const Eigen::Index idx = static_cast<Eigen::Index>(diagonal_index(3, 2, j)) * 3 + 1;
    CHECK(std::abs(t0.states[0].amps(idx) - ghz.amplitudes[j]) < 1e-12);
  }

  std::vector<double> grid;
  for (int g = 0; g <= 20; ++g) grid.push_back(-5.0 + 0.5 * g);
  for (const StateVector& s : evolve(fam, 2, phi0, grid).states) CHECK(s.norm() == doctest::Approx(1.0).epsilon(1e-10));

  CHECK_THROWS_AS(evolve(fam, 1, StateVector::repeated(3, 2, 0), one), DimensionMismatch);
}

TEST_CASE("trajectory csv") {
  const ParamOperatorFamily fam = family(2, 2, 1, 2);
  const double grid[] = {1.0, 0.0};
  std::ostringstream os;
  write_trajectory_csv(os, evolve(fam, 1, StateVector::repeated(2, 2, 0), grid));
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  CHECK(line == "a, basis_index, re, im");
  int rows = 0;
  while (std::getline(is, line)) ++rows;
  CHECK(rows == 3);
}
