#pragma once

#include <vector>

#include "qwalk/walk.hpp"

namespace qwalk {

/// Total variation distance in the unhalved convention: sum_j |p_j - q_j|.
/// (The halved convention is this value / 2; conversion is left to callers.)
double tv_distance(const std::vector<double>& p, const std::vector<double>& q);

/// TV distance from the uniform distribution on probs.size() points.
double tv_to_uniform(const std::vector<double>& probs);

/// Limiting time-averaged distribution of the walk from vertex 0.
struct AverageDistribution {
  Distribution dist;
  /// Ordered pairs (j, k), j != k, of colliding eigenvalue indices.
  index_t collision_pair_count = 0;
};

/// lim_{T->inf} (1/T) int_0^T p_t dt, evaluated exactly from the eigenvalue
/// collision structure:
///
///   Pbar(l) = (1/n^2) sum_c |sum_{a in c} chi_a(l)|^2
///
/// over collision classes c.  Cost is one character transform of the class
/// difference histogram, O(n log n + sum_c |c|^2).
AverageDistribution average_distribution(
    const CirculantSpec& spec, double collision_tol = default_collision_tol);
AverageDistribution average_distribution(
    const GroupCirculantSpec& spec, double collision_tol = default_collision_tol);

/// Finite-horizon oracle for the same quantity: trapezoidal quadrature of
/// (1/T) int_0^T p_t dt with `steps` panels.  Converges at rate O(1/T).
Distribution average_distribution_integrated(const CirculantSpec& spec,
                                             double T, index_t steps);
Distribution average_distribution_integrated(const GroupCirculantSpec& spec,
                                             double T, index_t steps);

/// Character (Fourier) coefficients Phat(a) = sum_l P(l) chi_a(l) of a
/// distribution on the group with the given factors.
std::vector<cplx> fourier_coefficients(const std::vector<double>& probs,
                                       const std::vector<index_t>& factors);

/// Diaconis-Shahshahani upper-bound functional:
///   (1/4) sum_{a != 0} |Phat(a)|^2.
double ds_bound(const std::vector<double>& probs,
                const std::vector<index_t>& factors);

/// True when the average distribution is pointwise within tol of uniform.
bool is_average_uniform(const CirculantSpec& spec, double tol = 1e-9);
bool is_average_uniform(const GroupCirculantSpec& spec, double tol = 1e-9);

struct MixingSearchResult {
  double t_star = 0.0;
  double tv_star = 0.0;
  index_t grid_points = 0;
  int refinement_iterations = 0;
};

/// Minimum of t -> TV(p_t, uniform) over [0, t_max]: scans an inclusive
/// uniform grid of `grid` points, then golden-section refines around the best
/// grid point.  Deterministic for fixed inputs regardless of thread count;
/// among values tying within 1e-15 the smallest t wins.
MixingSearchResult search_min_tv(const CirculantSpec& spec, double t_max,
                                 index_t grid, int refine_iters = 40);
MixingSearchResult search_min_tv(const GroupCirculantSpec& spec, double t_max,
                                 index_t grid, int refine_iters = 40);

/// TV-to-uniform evaluated on the full time grid (the batched kernel behind
/// search_min_tv); entry i is at t = t_max * i / (grid - 1).
std::vector<double> tv_grid(const Engine& engine, double t_max, index_t grid);

namespace reference {

/// Per-class character accumulation, O(sum_c |c| * n): the serial reference
/// for average_distribution.
AverageDistribution average_by_classes(const std::vector<index_t>& factors,
                                       const Spectrum& spectrum);

}  // namespace reference

}  // namespace qwalk
