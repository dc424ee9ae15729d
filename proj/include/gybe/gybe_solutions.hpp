#pragma once

// Parameter-dependent operators built on a SiteSystem,
//
//   R~_i(a)   = sum_j X~_j(a) T_i^j          (unitary for real a)
//   R_i(alpha) = sum_j x_j(alpha) T_i^j       (additive, un-normalized)
//   S_i       = (1/sqrt m) sum_j q^{j^2} T_i^j  (= R~_i(0))
//
// and residual checks for the Yang-Baxter family of identities they satisfy.

#include <span>
#include <vector>

#include "gybe/fz_coefficients.hpp"
#include "gybe/torus_rep.hpp"

namespace gybe {

/// A SiteSystem together with the monomial powers T_i^j, 0 <= j < m.
/// Products with a family member are formed from that expansion and cost
/// O(m dim^2) per dense right-hand side.
class ParamOperatorFamily {
 public:
  explicit ParamOperatorFamily(SiteSystem sys);

  const SiteSystem& system() const { return sys_; }
  const ModulusConfig& cfg() const { return sys_.cfg(); }
  int generator_count() const { return sys_.generator_count(); }
  std::size_t dim() const { return sys_.dim(); }

  /// T_i^j, 0 <= j < m.
  const MonomialMatrix& power(int i, int j) const;

  /// sum_j coeffs[j] T_i^j; coeffs.size() must equal m.
  ComplexMatrix combine(int i, std::span<const Complex> coeffs) const;

  /// (sum_j coeffs[j] T_i^j) * rhs.
  ComplexMatrix apply(int i, std::span<const Complex> coeffs, const ComplexMatrix& rhs) const;

  ComplexMatrix operator()(int i, double a) const;

 private:
  SiteSystem sys_;
  std::vector<std::vector<MonomialMatrix>> powers_;  // powers_[i-1][j] = T_i^j
};

ComplexMatrix r_tilde(const ParamOperatorFamily& fam, int i, double a);
ComplexMatrix r_additive(const ParamOperatorFamily& fam, int i, Complex alpha);
ComplexMatrix gaussian_s(const ParamOperatorFamily& fam, int i);

/// X~(a), x(alpha) and the Gaussian coefficients, as fed to combine / apply.
std::vector<Complex> gaussian_coefficients(const ModulusConfig& cfg);

/// (1/sqrt m) sum_j q^{j^2} M^j on (C^m)^{(x)N}: the Gaussian operator of a
/// single site, without identity padding.
ComplexMatrix gaussian_site_operator(const ModulusConfig& cfg, int N);

/// R_i(a) R_{i+1}(ab) R_i(b) vs R_{i+1}(b) R_i(ab) R_{i+1}(a), normalized coefficients.
double check_mult_ybe(const ParamOperatorFamily& fam, int i, double a, double b);

/// R_i(al) R_{i+1}(al+al') R_i(al') vs R_{i+1}(al') R_i(al+al') R_{i+1}(al).
double check_additive_ybe(const ParamOperatorFamily& fam, int i, Complex alpha, Complex alpha_prime);

/// R~_i(a) R~_j(b) vs R~_j(b) R~_i(a), |i - j| >= 2.
double check_far_commutativity(const ParamOperatorFamily& fam, int i, int j, double a, double b);

struct GybeResidual {
  double ybe = 0.0;  // triple-product relation on m^{N+z}
  double far = 0.0;  // far commutativity with two padding blocks, on m^{N+2z}
};

/// Generalized YBE for an arbitrary operator r on (C^m)^{(x)N} with
/// Id_{m^z} padding.
GybeResidual check_gybe(const ModulusConfig& cfg, int N, int z, const ComplexMatrix& r);

struct SpecialPointResidual {
  double a = 0.0;
  double braid = 0.0;
};

struct BraidReport {
  double braid = 0.0;  // max_i |S_i S_{i+1} S_i - S_{i+1} S_i S_{i+1}|
  double far = 0.0;    // max_{|i-j|>=2} |S_i S_j - S_j S_i|
  std::vector<SpecialPointResidual> special_points;  // R~(a), a in {0, 1, +inf}
  SpecialPointResidual generic;                      // R~ at a non-special a
};

/// Braid relations of the Gaussian generators, plus the braid residual of
/// R~(a) at the special points and at one generic point (first adjacent pair).
BraidReport check_braid_relations(const ParamOperatorFamily& fam, double generic_a = 0.37);

struct UnitaryFamilyReport {
  double max_residual = 0.0;
  double worst_a = 0.0;
  int worst_generator = 0;
};

/// ||R~_i(a) R~_i(a)^dagger - Id||_F.
double unitarity_residual(const ParamOperatorFamily& fam, int i, double a);

UnitaryFamilyReport check_unitary_family(const ParamOperatorFamily& fam, std::span<const double> a_grid);

}  // namespace gybe
