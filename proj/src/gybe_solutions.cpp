#include "gybe/gybe_solutions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace gybe {
namespace {

double parameter_product(double a, double b) {
  if ((std::isinf(a) && b == 0.0) || (std::isinf(b) && a == 0.0)) {
    throw DomainError("check_mult_ybe: product of 0 and infinity is undefined");
  }
  return a * b;
}

void require_adjacent(const ParamOperatorFamily& fam, int i, const char* what) {
  if (i < 1 || i + 1 > fam.generator_count()) {
    throw DomainError(std::string(what) + ": need 1 <= i and i+1 <= n-1, got i = " + std::to_string(i));
  }
}

double braid_residual(const ComplexMatrix& x, const ComplexMatrix& y) {
  const ComplexMatrix xy = x * y;
  const ComplexMatrix yx = y * x;
  return relative_residual(ComplexMatrix(xy * x), ComplexMatrix(yx * y));
}

// Coefficient vectors c, d of two family members: residual of
// A_i B_{i+1} A_i vs B_{i+1} A_i B_{i+1} with A = sum c_j T^j, B = sum d_j T^j.
double family_braid_residual(const ParamOperatorFamily& fam, int i, std::span<const Complex> c,
                             std::span<const Complex> d) {
  const ComplexMatrix lhs = fam.apply(i, c, fam.apply(i + 1, d, fam.combine(i, c)));
  const ComplexMatrix rhs = fam.apply(i + 1, d, fam.apply(i, c, fam.combine(i + 1, d)));
  return relative_residual(lhs, rhs);
}

}  // namespace

ParamOperatorFamily::ParamOperatorFamily(SiteSystem sys) : sys_(std::move(sys)) {
  const int m = sys_.cfg().m();
  powers_.resize(static_cast<std::size_t>(sys_.generator_count()));
  for (int i = 1; i <= sys_.generator_count(); ++i) {
    auto& row = powers_[static_cast<std::size_t>(i - 1)];
    row.push_back(MonomialMatrix::identity(static_cast<Eigen::Index>(sys_.dim())));
    for (int j = 1; j < m; ++j) row.push_back(compose(sys_.monomial(i), row.back()));
  }
}

const MonomialMatrix& ParamOperatorFamily::power(int i, int j) const {
  sys_.generator(i);  // validates i
  if (j < 0 || j >= cfg().m()) throw DomainError("power: exponent outside [0, m)");
  return powers_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
}

ComplexMatrix ParamOperatorFamily::combine(int i, std::span<const Complex> coeffs) const {
  const int m = cfg().m();
  if (coeffs.size() != static_cast<std::size_t>(m)) throw DimensionMismatch("combine: expected m coefficients");
  const auto d = static_cast<Eigen::Index>(dim());
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (int j = 0; j < m; ++j) {
    const Complex c = coeffs[static_cast<std::size_t>(j)];
    if (c == Complex(0.0, 0.0)) continue;
    const MonomialMatrix& p = power(i, j);
    for (Eigen::Index col = 0; col < d; ++col) {
      out(p.target[static_cast<std::size_t>(col)], col) += c * p.phase[static_cast<std::size_t>(col)];
    }
  }
  return out;
}

ComplexMatrix ParamOperatorFamily::apply(int i, std::span<const Complex> coeffs, const ComplexMatrix& rhs) const {
  const int m = cfg().m();
  if (coeffs.size() != static_cast<std::size_t>(m)) throw DimensionMismatch("apply: expected m coefficients");
  if (static_cast<std::size_t>(rhs.rows()) != dim()) throw DimensionMismatch("apply: right-hand side has wrong row count");
  ComplexMatrix out = ComplexMatrix::Zero(rhs.rows(), rhs.cols());
  for (int j = 0; j < m; ++j) {
    const Complex c = coeffs[static_cast<std::size_t>(j)];
    if (c != Complex(0.0, 0.0)) accumulate_product(out, c, power(i, j), rhs);
  }
  return out;
}

ComplexMatrix ParamOperatorFamily::operator()(int i, double a) const { return r_tilde(*this, i, a); }

ComplexMatrix r_tilde(const ParamOperatorFamily& fam, int i, double a) {
  const SpectralCoefficients c = x_tilde(fam.cfg(), a);
  return fam.combine(i, c.values);
}

ComplexMatrix r_additive(const ParamOperatorFamily& fam, int i, Complex alpha) {
  const std::vector<Complex> c = x_additive_all(fam.cfg(), alpha);
  return fam.combine(i, c);
}

std::vector<Complex> gaussian_coefficients(const ModulusConfig& cfg) {
  const int m = cfg.m();
  const double scale = 1.0 / std::sqrt(static_cast<double>(m));
  std::vector<Complex> c(static_cast<std::size_t>(m));
  for (long long j = 0; j < m; ++j) c[static_cast<std::size_t>(j)] = scale * cfg.q_pow(j * j);
  return c;
}

ComplexMatrix gaussian_s(const ParamOperatorFamily& fam, int i) { return fam.combine(i, gaussian_coefficients(fam.cfg())); }

ComplexMatrix gaussian_site_operator(const ModulusConfig& cfg, int N) {
  const ComplexMatrix site = build_site_operator(cfg, N);
  const int m = cfg.m();
  const double scale = 1.0 / std::sqrt(static_cast<double>(m));
  ComplexMatrix out = ComplexMatrix::Zero(site.rows(), site.cols());
  ComplexMatrix power = ComplexMatrix::Identity(site.rows(), site.cols());
  for (long long j = 0; j < m; ++j) {
    out += (scale * cfg.q_pow(j * j)) * power;
    if (j + 1 < m) power = power * site;
  }
  return out;
}

double check_mult_ybe(const ParamOperatorFamily& fam, int i, double a, double b) {
  require_adjacent(fam, i, "check_mult_ybe");
  const ModulusConfig& cfg = fam.cfg();
  const double ab = parameter_product(a, b);
  const auto xa = x_tilde(cfg, a).values;
  const auto xb = x_tilde(cfg, b).values;
  const auto xab = x_tilde(cfg, ab).values;
  const ComplexMatrix lhs = fam.apply(i, xa, fam.apply(i + 1, xab, fam.combine(i, xb)));
  const ComplexMatrix rhs = fam.apply(i + 1, xb, fam.apply(i, xab, fam.combine(i + 1, xa)));
  return relative_residual(lhs, rhs);
}

double check_additive_ybe(const ParamOperatorFamily& fam, int i, Complex alpha, Complex alpha_prime) {
  require_adjacent(fam, i, "check_additive_ybe");
  const ModulusConfig& cfg = fam.cfg();
  const auto xa = x_additive_all(cfg, alpha);
  const auto xp = x_additive_all(cfg, alpha_prime);
  const auto xs = x_additive_all(cfg, alpha + alpha_prime);
  const ComplexMatrix lhs = fam.apply(i, xa, fam.apply(i + 1, xs, fam.combine(i, xp)));
  const ComplexMatrix rhs = fam.apply(i + 1, xp, fam.apply(i, xs, fam.combine(i + 1, xa)));
  return relative_residual(lhs, rhs);
}

double check_far_commutativity(const ParamOperatorFamily& fam, int i, int j, double a, double b) {
  if (std::abs(i - j) < 2) throw DomainError("check_far_commutativity: need |i - j| >= 2");
  const auto xa = x_tilde(fam.cfg(), a).values;
  const auto xb = x_tilde(fam.cfg(), b).values;
  return relative_residual(fam.apply(i, xa, fam.combine(j, xb)), fam.apply(j, xb, fam.combine(i, xa)));
}

GybeResidual check_gybe(const ModulusConfig& cfg, int N, int z, const ComplexMatrix& r) {
  const auto m = static_cast<std::size_t>(cfg.m());
  const std::size_t site_dim = ipow(m, static_cast<std::size_t>(N));
  if (r.rows() != r.cols() || static_cast<std::size_t>(r.rows()) != site_dim) {
    throw DimensionMismatch("check_gybe: operator must have dimension m^N = " + std::to_string(site_dim));
  }
  if (z < 1) throw DomainError("check_gybe: z must be >= 1");
  const std::size_t pad = ipow(m, static_cast<std::size_t>(z));

  GybeResidual out;
  const ComplexMatrix left = embed(r, 0, 1, pad);   // R (x) Id
  const ComplexMatrix right = embed(r, 1, 0, pad);  // Id (x) R
  out.ybe = braid_residual(left, right);

  const ComplexMatrix far_left = embed(r, 0, 2, pad);
  const ComplexMatrix far_right = embed(r, 2, 0, pad);
  out.far = relative_residual(ComplexMatrix(far_left * far_right), ComplexMatrix(far_right * far_left));
  return out;
}

BraidReport check_braid_relations(const ParamOperatorFamily& fam, double generic_a) {
  const int count = fam.generator_count();
  if (count < 2) throw DomainError("check_braid_relations: need n >= 3");
  const ModulusConfig& cfg = fam.cfg();
  const auto g = gaussian_coefficients(cfg);

  BraidReport report;
  for (int i = 1; i + 1 <= count; ++i) report.braid = std::max(report.braid, family_braid_residual(fam, i, g, g));
  for (int i = 1; i <= count; ++i) {
    for (int j = i + 2; j <= count; ++j) {
      report.far = std::max(report.far, relative_residual(fam.apply(i, g, fam.combine(j, g)), fam.apply(j, g, fam.combine(i, g))));
    }
  }
  for (double a : {0.0, 1.0, std::numeric_limits<double>::infinity()}) {
    const auto x = x_tilde(cfg, a).values;
    report.special_points.push_back({a, family_braid_residual(fam, 1, x, x)});
  }
  const auto x = x_tilde(cfg, generic_a).values;
  report.generic = {generic_a, family_braid_residual(fam, 1, x, x)};
  return report;
}

double unitarity_residual(const ParamOperatorFamily& fam, int i, double a) {
  const auto x = x_tilde(fam.cfg(), a).values;
  ComplexMatrix prod = fam.apply(i, x, ComplexMatrix(fam.combine(i, x).adjoint()));
  prod.diagonal().array() -= Complex(1.0, 0.0);
  return prod.norm();
}

UnitaryFamilyReport check_unitary_family(const ParamOperatorFamily& fam, std::span<const double> a_grid) {
  UnitaryFamilyReport report;
  for (int i = 1; i <= fam.generator_count(); ++i) {
    for (double a : a_grid) {
      const double residual = unitarity_residual(fam, i, a);
      if (residual >= report.max_residual) {
        report.max_residual = residual;
        report.worst_a = a;
        report.worst_generator = i;
      }
    }
  }
  return report;
}

}  // namespace gybe
