#pragma once

#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>

namespace qwalk {

using cplx = std::complex<double>;
using index_t = std::int64_t;

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Dense matrix construction refuses orders above this bound.
inline constexpr index_t dense_order_cap = 4096;

/// Default absolute tolerance for grouping equal eigenvalues.
inline constexpr double default_collision_tol = 1e-9;

/// Thrown when a request exceeds a hard size bound (e.g. dense matrices).
struct resource_limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Worker-thread count for parallel loops: QWALK_THREADS if set and > 0,
/// otherwise the OpenMP default.  Returns 1 when built without OpenMP.
int effective_threads();

}  // namespace qwalk
