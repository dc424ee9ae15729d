#include <atomic>
#include <cstdlib>
#include <string>

#include "gybe/matrix_core.hpp"

namespace gybe {
namespace {

std::size_t cap_from_environment() {
  if (const char* env = std::getenv("GYBE_DIM_CAP")) {
    try {
      const auto v = std::stoull(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return kDefaultDimensionCap;
}

std::atomic<std::size_t>& cap_storage() {
  static std::atomic<std::size_t> cap{cap_from_environment()};
  return cap;
}

}  // namespace

std::size_t dimension_cap() { return cap_storage().load(std::memory_order_relaxed); }

void set_dimension_cap(std::size_t cap) {
  cap_storage().store(cap == 0 ? kDefaultDimensionCap : cap, std::memory_order_relaxed);
}

StateVector::StateVector(int levels, int factors, ComplexVector amplitudes, bool normalize)
    : m(levels), arity(factors), amps(std::move(amplitudes)) {
  if (levels < 1 || factors < 0) throw DimensionMismatch("StateVector: bad shape");
  const std::size_t expected = ipow(static_cast<std::size_t>(levels), static_cast<std::size_t>(factors));
  if (static_cast<std::size_t>(amps.size()) != expected) {
    throw DimensionMismatch("StateVector: expected " + std::to_string(expected) +
                            " amplitudes, got " + std::to_string(amps.size()));
  }
  if (!amps.allFinite()) throw DomainError("StateVector: non-finite amplitude");
  if (normalize) {
    const double n = amps.norm();
    if (n == 0.0) throw DomainError("StateVector: zero vector cannot be normalised");
    amps /= n;
  }
}

StateVector StateVector::basis(int levels, int factors, std::size_t index) {
  const std::size_t dim = ipow(static_cast<std::size_t>(levels), static_cast<std::size_t>(factors));
  if (index >= dim) throw DimensionMismatch("StateVector::basis: index out of range");
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return {levels, factors, std::move(v), false};
}

StateVector StateVector::repeated(int levels, int factors, int k) {
  if (k < 0 || k >= levels) throw DimensionMismatch("StateVector::repeated: k out of range");
  std::size_t index = 0;
  for (int f = 0; f < factors; ++f) index = index * static_cast<std::size_t>(levels) + static_cast<std::size_t>(k);
  return basis(levels, factors, index);
}

}  // namespace gybe
