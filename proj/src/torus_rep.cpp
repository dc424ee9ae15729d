#include "gybe/torus_rep.hpp"

#include <algorithm>
#include <vector>
#include <utility>

namespace gybe {

PauliPair build_paulis(const ModulusConfig& cfg) {
  const int m = cfg.m();
  PauliPair p{ComplexMatrix::Zero(m, m), ComplexMatrix::Zero(m, m)};
  for (int i = 0; i < m; ++i) {
    const int target = cfg.reduce(i - 1);
    p.sigma_x(target, i) = cfg.q_pow(i);
    p.sigma_y(target, i) = cfg.q_pow(-i);
  }
  return p;
}

Complex site_phase(const ModulusConfig& cfg, int N) {
  return cfg.q_pow_half(static_cast<long long>(cfg.m() - 1) * (N - 2));
}

ComplexMatrix build_site_operator(const ModulusConfig& cfg, int N) {
  if (N < 2) throw DomainError("build_site_operator: N must be >= 2");
  require_within_cap(ipow(static_cast<std::size_t>(cfg.m()), static_cast<std::size_t>(N)),
                     "build_site_operator");
  const PauliPair p = build_paulis(cfg);
  ComplexMatrix op = p.sigma_x;
  for (int f = 1; f < N; ++f) op = kron(op, p.sigma_y);
  return site_phase(cfg, N) * op;
}

void check_window(int N, int z) {
  if (2 * z < N) {
    throw WindowViolation("z = " + std::to_string(z) + " < N/2 = " + std::to_string(N) +
                          "/2 violates 2z >= N (far commutativity)");
  }
  if (z > N - 1) {
    throw WindowViolation("z = " + std::to_string(z) + " > N-1 = " + std::to_string(N - 1) +
                          " violates z <= N-1 (adjacent q^2-commutation)");
  }
}

SiteSystem::SiteSystem(ModulusConfig cfg, int N, int z, int n, std::vector<ComplexMatrix> generators)
    : cfg_(cfg), N_(N), z_(z), n_(n), generators_(std::move(generators)) {
  if (generators_.size() != static_cast<std::size_t>(n - 1) || generators_.empty()) {
    throw DimensionMismatch("SiteSystem: expected n-1 generators");
  }
  monomials_.reserve(generators_.size());
  for (const ComplexMatrix& g : generators_) monomials_.push_back(MonomialMatrix::from_dense(g));
}

const MonomialMatrix& SiteSystem::monomial(int i) const {
  generator(i);
  return monomials_[static_cast<std::size_t>(i - 1)];
}

const ComplexMatrix& SiteSystem::generator(int i) const {
  if (i < 1 || i > generator_count()) {
    throw DomainError("generator index " + std::to_string(i) + " outside [1, " +
                      std::to_string(generator_count()) + "]");
  }
  return generators_[static_cast<std::size_t>(i - 1)];
}

SiteSystem build_site_system(const ModulusConfig& cfg, int N, int z, int n, WindowPolicy policy) {
  if (N < 2) throw DomainError("N must be >= 2");
  if (z < 1) throw DomainError("z must be >= 1");
  if (n < 2) throw DomainError("n must be >= 2");
  if (policy == WindowPolicy::enforce) check_window(N, z);

  const auto m = static_cast<std::size_t>(cfg.m());
  const std::size_t arity = static_cast<std::size_t>(N) + static_cast<std::size_t>(z) * static_cast<std::size_t>(n - 2);
  require_within_cap(ipow(m, arity), "build_site_system");

  const ComplexMatrix site = build_site_operator(cfg, N);
  const std::size_t pad = ipow(m, static_cast<std::size_t>(z));
  std::vector<ComplexMatrix> gens;
  gens.reserve(static_cast<std::size_t>(n - 1));
  for (int i = 1; i <= n - 1; ++i) {
    gens.push_back(embed(site, static_cast<std::size_t>(i - 1), static_cast<std::size_t>(n - i - 1), pad));
  }
  return {cfg, N, z, n, std::move(gens)};
}

TorusReport verify_torus_relations(const SiteSystem& sys) {
  TorusReport r;
  const int count = sys.generator_count();
  const Complex q2 = sys.cfg().q2();
  const MonomialMatrix id = MonomialMatrix::identity(static_cast<Eigen::Index>(sys.dim()));

  for (int i = 1; i <= count; ++i) {
    MonomialMatrix power = sys.monomial(i);
    for (int k = 1; k < sys.cfg().m(); ++k) power = compose(power, sys.monomial(i));
    r.e1 = std::max(r.e1, relative_residual(power, id));
  }
  for (int i = 1; i <= count; ++i) {
    for (int j = i + 1; j <= count; ++j) {
      const MonomialMatrix ab = compose(sys.monomial(i), sys.monomial(j));
      const MonomialMatrix ba = compose(sys.monomial(j), sys.monomial(i));
      if (j == i + 1) {
        r.e3 = std::max(r.e3, relative_residual(ab, scaled(ba, q2)));
        ++r.e3_pairs;
      } else {
        r.e2 = std::max(r.e2, relative_residual(ab, ba));
        ++r.e2_pairs;
      }
    }
  }
  return r;
}

}  // namespace gybe
