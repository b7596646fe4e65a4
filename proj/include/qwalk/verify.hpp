#pragma once

#include <string>
#include <vector>

#include "qwalk/common.hpp"

namespace qwalk {

/// One numerically evaluated identity on one graph.
struct CheckResult {
  std::string family;   ///< "cycles", "complete" or "hypercubes"
  std::string graph;    ///< e.g. "C_12", "K_7", "Q_4"
  std::string check;    ///< identity name, e.g. "half_spectrum_form"
  double max_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct SuiteResult {
  std::vector<CheckResult> checks;

  index_t passed_count() const;
  index_t failed_count() const;
  bool all_passed() const { return failed_count() == 0; }
  void append(SuiteResult other);
};

/// Deterministic sample times: `count` points in (0, t_hi], reproducible for
/// a given seed and independent of platform RNG state.
std::vector<double> sample_times(unsigned seed, index_t count, double t_hi);

/// Cycle-family identities, for every n in [min_n, max_n] (n >= 2):
///   unitarity                 sum_j |<j|psi(t)>|^2 = 1
///   average_collision_formula transform-based average distribution equals
///                             the per-collision-class accumulation, with
///                             matching collision pair counts
///   divisor_coarse_graining   residue-class sums of C_n amplitudes mod m
///                             reproduce the C_m walk, for every divisor
///                             2 <= m < n
/// and additionally for even n:
///   half_spectrum_form        engine amplitudes match the half-spectrum
///                             cosine form
///   quarter_spectrum_form     ... and the quarter-spectrum form with its
///                             zero-eigenvalue middle term when 4 | n
///   parity_marginals          (even, odd) vertex-parity amplitude sums equal
///                             (cos 2t, -i sin 2t)
///   parity_realness           the even-parity sum is purely real and the
///                             odd-parity sum purely imaginary
///   vertex_pair_folding       <j|psi_2n(t)> + <n-j|psi_2n(t)> on C_2n equals
///                             <j|psi_n(t)> on C_n
SuiteResult verify_cycles(index_t min_n, index_t max_n);

/// Complete-graph identities (unitarity, average_collision_formula) for every
/// n in [min_n, max_n] (n >= 2).
SuiteResult verify_complete(index_t min_n, index_t max_n);

/// Hypercube identities for every dimension d in [min_d, max_d] (d >= 1):
/// unitarity, average_collision_formula, and
///   binomial_levels           amplitudes depend only on Hamming weight w and
///                             equal cos(t)^(d-w) * (-i sin t)^w
SuiteResult verify_hypercubes(index_t min_d, index_t max_d);

/// All families at their default desk-scale ranges: cycles 2..32,
/// complete 2..24, hypercubes 1..8.
SuiteResult verify_all();

}  // namespace qwalk
