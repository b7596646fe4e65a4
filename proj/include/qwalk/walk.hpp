#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "qwalk/fft.hpp"
#include "qwalk/graphs.hpp"

namespace qwalk {

/// State of the walk at time t, started from vertex 0: amps[j] = <j|psi(t)>.
struct AmplitudeVector {
  double t = 0.0;
  std::vector<cplx> amps;
};

struct Distribution {
  std::vector<double> probs;
};

/// Spectral propagator for a fixed graph.  Construction computes the spectrum
/// and transform plan once; amplitudes(t) then costs O(n log n).  The walk is
/// generated by the adjacency matrix itself (no degree normalization):
///
///   <j|psi(t)> = (1/n) sum_a exp(-i*lambda_a*t) chi_a(j)
///
/// Phase arguments are reduced mod 2*pi per eigenvalue, keeping amplitudes
/// accurate to ~1e-8 out to t ~ 1e6.
class Engine {
 public:
  explicit Engine(const CirculantSpec& spec,
                  double collision_tol = default_collision_tol);
  explicit Engine(const GroupCirculantSpec& spec,
                  double collision_tol = default_collision_tol);

  index_t order() const { return plan_.size(); }
  const std::vector<index_t>& factors() const { return plan_.factors(); }
  const Spectrum& spectrum() const { return spectrum_; }

  AmplitudeVector amplitudes(double t) const;
  Distribution distribution(double t) const;

  /// Scratch-reusing form for hot loops; out must hold order() entries.
  struct Scratch {
    fft::Scratch fft;
    std::vector<cplx> freq;
  };
  Scratch make_scratch() const;
  void amplitudes_into(double t, cplx* out, Scratch& scratch) const;
  void probabilities_into(double t, double* out, Scratch& scratch) const;

 private:
  void init();

  Spectrum spectrum_;
  fft::Plan plan_;
};

/// One-shot evolution: U(t)|0> for the walk on the given graph.
AmplitudeVector evolve(const CirculantSpec& spec, double t);
AmplitudeVector evolve(const GroupCirculantSpec& spec, double t);

Distribution instantaneous_distribution(const CirculantSpec& spec, double t);
Distribution instantaneous_distribution(const GroupCirculantSpec& spec, double t);

/// Deterministic batched evolution: entry i is evolve(spec, ts[i]).  Results
/// are independent of thread count and evaluation order.
std::vector<AmplitudeVector> evolve_batch(const CirculantSpec& spec,
                                          const std::vector<double>& ts);
std::vector<AmplitudeVector> evolve_batch(const GroupCirculantSpec& spec,
                                          const std::vector<double>& ts);

/// Walk amplitude <j|psi_n(t)> on the even cycle C_n, evaluated from the
/// half-spectrum cosine form (the k and n-k eigenvalue terms combined):
///
///   (1/n) { e^{-2it} + (-1)^j e^{2it}
///           + 2 sum_{0<k<n/2} e^{-i lambda_k t} cos(2 pi j k / n) }
cplx amplitude_half_spectrum(index_t n, index_t j, double t);

/// Same amplitude from the quarter-spectrum form: terms k and n/2 - k are
/// merged into eps_{j,k}(t) = e^{-i lambda_k t} + (-1)^j e^{+i lambda_k t},
/// plus the zero-eigenvalue middle term (2/n) cos(pi j / 2) when 4 | n.
cplx amplitude_even_cycle(index_t n, index_t j, double t);

/// (sum of even-vertex amplitudes, sum of odd-vertex amplitudes) on even C_n;
/// equal to (cos 2t, -i sin 2t) for every even n.
std::pair<cplx, cplx> parity_sums(index_t n, double t);

/// Residue-class sums of C_n amplitudes: entry a is
/// sum_{j = a mod m} <j|psi_n(t)>, which reproduces the C_m walk.  Requires
/// m | n and m >= 2.
std::vector<cplx> coarse_grain(index_t n, index_t m, double t);

/// <j|psi_2n(t)> + <n-j|psi_2n(t)> on C_2n (even n, 0 <= j < n); equals the
/// C_n amplitude <j|psi_n(t)>.
cplx fold_pair(index_t n, index_t j, double t);

namespace reference {

/// Direct O(n^2) spectral sum, kept as the serial reference implementation
/// for the transform-based engine.
std::vector<cplx> amplitudes_direct(const std::vector<index_t>& factors,
                                    const std::vector<double>& eigenvalues,
                                    double t);

}  // namespace reference

}  // namespace qwalk
