#pragma once

// Generalized Pauli operators and the embedded quantum-torus generators
//
//   T_i = Id_{m^z}^{(x)(i-1)} (x) M (x) Id_{m^z}^{(x)(n-i-1)},   i = 1 .. n-1,
//   M   = q^{(m-1)(N-2)/2} sigma_x (x) sigma_y^{(x)(N-1)},
//
// acting on (C^m)^{(x)(N + z(n-2))}. Adjacent generators overlap on N - z
// qudits. For N/2 <= z <= N-1 they satisfy
//   (E1) T_i^m = Id,  (E2) T_i T_j = T_j T_i for |i-j| >= 2,
//   (E3) T_i T_{i+1} = q^2 T_{i+1} T_i.

#include <cstddef>
#include <string>
#include <vector>

#include "gybe/matrix_core.hpp"
#include "gybe/modulus.hpp"
#include "gybe/monomial.hpp"

namespace gybe {

struct PauliPair {
  ComplexMatrix sigma_x;  // |i> -> q^i |i-1>
  ComplexMatrix sigma_y;  // |i> -> q^{-i} |i-1>
};

PauliPair build_paulis(const ModulusConfig& cfg);

/// q^{(m-1)(N-2)/2} on the literal branch exp(i pi (m-1)^2 (N-2) / (2m)).
Complex site_phase(const ModulusConfig& cfg, int N);

ComplexMatrix build_site_operator(const ModulusConfig& cfg, int N);

enum class WindowPolicy { enforce, bypass };

/// Throws WindowViolation unless N/2 <= z <= N-1. The message names the
/// inequality that fails.
void check_window(int N, int z);

class SiteSystem {
 public:
  SiteSystem(ModulusConfig cfg, int N, int z, int n, std::vector<ComplexMatrix> generators);

  const ModulusConfig& cfg() const { return cfg_; }
  int N() const { return N_; }
  int z() const { return z_; }
  int n() const { return n_; }
  int generator_count() const { return n_ - 1; }
  int total_arity() const { return N_ + z_ * (n_ - 2); }
  std::size_t dim() const { return static_cast<std::size_t>(generators_.front().rows()); }

  /// T_i for 1 <= i <= n-1.
  const ComplexMatrix& generator(int i) const;
  const std::vector<ComplexMatrix>& generators() const { return generators_; }

  /// T_i in monomial form; every generator is a phase times a permutation.
  const MonomialMatrix& monomial(int i) const;

 private:
  ModulusConfig cfg_;
  int N_;
  int z_;
  int n_;
  std::vector<ComplexMatrix> generators_;
  std::vector<MonomialMatrix> monomials_;
};

SiteSystem build_site_system(const ModulusConfig& cfg, int N, int z, int n,
                             WindowPolicy policy = WindowPolicy::enforce);

/// Maximum relative residual of each relation family; a family with no
/// applicable index pair reports 0.
struct TorusReport {
  double e1 = 0.0;
  double e2 = 0.0;
  double e3 = 0.0;
  int e2_pairs = 0;
  int e3_pairs = 0;
};

TorusReport verify_torus_relations(const SiteSystem& sys);

}  // namespace gybe
