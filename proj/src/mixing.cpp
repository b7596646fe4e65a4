#include "qwalk/mixing.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qwalk {

namespace {

constexpr double tie_tol = 1e-15;

void check_probs_size(std::size_t got, index_t want, const char* who) {
  if (static_cast<index_t>(got) != want)
    throw std::invalid_argument(std::string(who) +
                                ": distribution length does not match order");
}

// Pbar(l) = (1/n^2) * sum_d M(d) chi_d(l), where M is the histogram of
// index differences a - b over ordered pairs of colliding eigenvalues
// (including the diagonal, which contributes M(0) = n).  One character
// transform turns the histogram into the average distribution.
AverageDistribution average_impl(const std::vector<index_t>& factors,
                                 const Spectrum& s) {
  const index_t n = group_order(factors);
  AverageDistribution out;
  out.collision_pair_count = s.collision_pair_count();

  // All eigenvalues simple: the limit is exactly uniform.
  if (out.collision_pair_count == 0) {
    out.dist.probs.assign(static_cast<std::size_t>(n),
                          1.0 / static_cast<double>(n));
    return out;
  }

  std::vector<cplx> hist(static_cast<std::size_t>(n), cplx{0.0, 0.0});
  hist[0] = static_cast<double>(n);
  std::vector<index_t> diff(factors.size());
  for (const auto& c : s.collision_classes) {
    if (c.size() < 2) continue;
    for (index_t a : c) {
      const auto at = rank_tuple(factors, a);
      for (index_t b : c) {
        if (a == b) continue;
        const auto bt = rank_tuple(factors, b);
        for (std::size_t m = 0; m < factors.size(); ++m)
          diff[m] = (at[m] - bt[m] + factors[m]) % factors[m];
        hist[static_cast<std::size_t>(tuple_rank(factors, diff))] += 1.0;
      }
    }
  }

  fft::Plan plan(factors);
  auto scratch = plan.make_scratch();
  plan.execute(hist.data(), scratch);

  const double inv_n2 = 1.0 / (static_cast<double>(n) * static_cast<double>(n));
  out.dist.probs.resize(static_cast<std::size_t>(n));
  bool clamped = false;
  for (index_t l = 0; l < n; ++l) {
    double p = hist[static_cast<std::size_t>(l)].real() * inv_n2;
    if (p < 0.0) {
      if (p < -1e-12)
        throw std::runtime_error(
            "average_distribution: negative probability beyond rounding");
      p = 0.0;
      clamped = true;
    }
    out.dist.probs[static_cast<std::size_t>(l)] = p;
  }
  if (clamped) {
    double total = 0.0;
    for (double p : out.dist.probs) total += p;
    for (double& p : out.dist.probs) p /= total;
  }
  return out;
}

Distribution integrated_impl(const Engine& engine, double T, index_t steps) {
  if (!std::isfinite(T) || T <= 0.0)
    throw std::invalid_argument(
        "average_distribution_integrated: T must be positive and finite");
  if (steps < 2)
    throw std::invalid_argument(
        "average_distribution_integrated: need at least 2 panels");

  const index_t n = engine.order();
  const index_t points = steps + 1;
  constexpr index_t chunk_len = 4096;
  const index_t chunks = (points + chunk_len - 1) / chunk_len;

  // Trapezoid rule, accumulated per chunk and combined in chunk order so the
  // result is independent of the number of worker threads.
  std::vector<std::vector<double>> partial(
      static_cast<std::size_t>(chunks),
      std::vector<double>(static_cast<std::size_t>(n), 0.0));
#ifdef _OPENMP
#pragma omp parallel num_threads(effective_threads())
#endif
  {
    auto scratch = engine.make_scratch();
    std::vector<double> probs(static_cast<std::size_t>(n));
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
    for (index_t c = 0; c < chunks; ++c) {
      auto& acc = partial[static_cast<std::size_t>(c)];
      const index_t lo = c * chunk_len;
      const index_t hi = std::min(lo + chunk_len, points);
      for (index_t i = lo; i < hi; ++i) {
        const double t =
            T * static_cast<double>(i) / static_cast<double>(steps);
        engine.probabilities_into(t, probs.data(), scratch);
        const double w = (i == 0 || i == steps) ? 0.5 : 1.0;
        for (index_t j = 0; j < n; ++j)
          acc[static_cast<std::size_t>(j)] +=
              w * probs[static_cast<std::size_t>(j)];
      }
    }
  }

  Distribution out;
  out.probs.assign(static_cast<std::size_t>(n), 0.0);
  for (index_t c = 0; c < chunks; ++c)
    for (index_t j = 0; j < n; ++j)
      out.probs[static_cast<std::size_t>(j)] +=
          partial[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)];
  for (double& p : out.probs) p /= static_cast<double>(steps);
  return out;
}

struct BestPoint {
  double t = 0.0;
  double tv = 0.0;
  bool set = false;

  // Smaller TV wins; values tying within tie_tol go to the smaller t.
  void consider(double t_new, double tv_new) {
    if (!set) {
      t = t_new;
      tv = tv_new;
      set = true;
      return;
    }
    if (tv_new < tv - tie_tol) {
      t = t_new;
      tv = tv_new;
    } else if (tv_new - tv <= tie_tol && t_new < t) {
      t = t_new;
      tv = std::min(tv, tv_new);
    }
  }
};

MixingSearchResult search_impl(const Engine& engine, double t_max,
                               index_t grid, int refine_iters) {
  if (!std::isfinite(t_max) || t_max <= 0.0)
    throw std::invalid_argument("search_min_tv: t_max must be positive");
  if (grid < 2) throw std::invalid_argument("search_min_tv: grid must be >= 2");
  if (refine_iters < 0)
    throw std::invalid_argument("search_min_tv: negative refinement count");

  const auto tvs = tv_grid(engine, t_max, grid);

  BestPoint best;
  for (index_t i = 0; i < grid; ++i) {
    const double t =
        t_max * static_cast<double>(i) / static_cast<double>(grid - 1);
    best.consider(t, tvs[static_cast<std::size_t>(i)]);
  }

  index_t best_i = 0;
  for (index_t i = 1; i < grid; ++i)
    if (tvs[static_cast<std::size_t>(i)] <
        tvs[static_cast<std::size_t>(best_i)] - tie_tol)
      best_i = i;

  auto scratch = engine.make_scratch();
  std::vector<double> probs(static_cast<std::size_t>(engine.order()));
  const double uniform = 1.0 / static_cast<double>(engine.order());
  auto eval = [&](double t) {
    engine.probabilities_into(t, probs.data(), scratch);
    double tv = 0.0;
    for (double p : probs) tv += std::abs(p - uniform);
    return tv;
  };

  const double spacing = t_max / static_cast<double>(grid - 1);
  double a = std::max(0.0, static_cast<double>(best_i - 1) * spacing);
  double b = std::min(t_max, static_cast<double>(best_i + 1) * spacing);

  constexpr double invphi = 0.61803398874989484820;
  double x1 = b - (b - a) * invphi;
  double x2 = a + (b - a) * invphi;
  double f1 = eval(x1), f2 = eval(x2);
  best.consider(x1, f1);
  best.consider(x2, f2);
  for (int it = 0; it < refine_iters; ++it) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - (b - a) * invphi;
      f1 = eval(x1);
      best.consider(x1, f1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + (b - a) * invphi;
      f2 = eval(x2);
      best.consider(x2, f2);
    }
  }

  MixingSearchResult res;
  res.t_star = best.t;
  res.tv_star = best.tv;
  res.grid_points = grid;
  res.refinement_iterations = refine_iters;
  return res;
}

}  // namespace

double tv_distance(const std::vector<double>& p, const std::vector<double>& q) {
  if (p.size() != q.size())
    throw std::invalid_argument("tv_distance: length mismatch");
  double tv = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) tv += std::abs(p[i] - q[i]);
  return tv;
}

double tv_to_uniform(const std::vector<double>& probs) {
  const double u = 1.0 / static_cast<double>(probs.size());
  double tv = 0.0;
  for (double p : probs) tv += std::abs(p - u);
  return tv;
}

AverageDistribution average_distribution(const CirculantSpec& spec,
                                         double collision_tol) {
  return average_impl({spec.n}, eigenvalues_circulant(spec, collision_tol));
}

AverageDistribution average_distribution(const GroupCirculantSpec& spec,
                                         double collision_tol) {
  return average_impl(spec.factors, eigenvalues_group(spec, collision_tol));
}

Distribution average_distribution_integrated(const CirculantSpec& spec,
                                             double T, index_t steps) {
  return integrated_impl(Engine(spec), T, steps);
}

Distribution average_distribution_integrated(const GroupCirculantSpec& spec,
                                             double T, index_t steps) {
  return integrated_impl(Engine(spec), T, steps);
}

std::vector<cplx> fourier_coefficients(const std::vector<double>& probs,
                                       const std::vector<index_t>& factors) {
  const index_t n = group_order(factors);
  check_probs_size(probs.size(), n, "fourier_coefficients");
  std::vector<cplx> data(probs.begin(), probs.end());
  fft::Plan plan(factors);
  auto scratch = plan.make_scratch();
  plan.execute(data.data(), scratch);
  return data;
}

double ds_bound(const std::vector<double>& probs,
                const std::vector<index_t>& factors) {
  const auto coeffs = fourier_coefficients(probs, factors);
  double sum = 0.0;
  for (std::size_t a = 1; a < coeffs.size(); ++a) sum += std::norm(coeffs[a]);
  return 0.25 * sum;
}

namespace {

bool uniform_within(const AverageDistribution& avg, double tol) {
  const double u = 1.0 / static_cast<double>(avg.dist.probs.size());
  for (double p : avg.dist.probs)
    if (std::abs(p - u) > tol) return false;
  return true;
}

}  // namespace

bool is_average_uniform(const CirculantSpec& spec, double tol) {
  return uniform_within(average_distribution(spec), tol);
}

bool is_average_uniform(const GroupCirculantSpec& spec, double tol) {
  return uniform_within(average_distribution(spec), tol);
}

MixingSearchResult search_min_tv(const CirculantSpec& spec, double t_max,
                                 index_t grid, int refine_iters) {
  return search_impl(Engine(spec), t_max, grid, refine_iters);
}

MixingSearchResult search_min_tv(const GroupCirculantSpec& spec, double t_max,
                                 index_t grid, int refine_iters) {
  return search_impl(Engine(spec), t_max, grid, refine_iters);
}

std::vector<double> tv_grid(const Engine& engine, double t_max, index_t grid) {
  if (!std::isfinite(t_max) || t_max <= 0.0)
    throw std::invalid_argument("tv_grid: t_max must be positive");
  if (grid < 2) throw std::invalid_argument("tv_grid: grid must be >= 2");

  const index_t n = engine.order();
  const double uniform = 1.0 / static_cast<double>(n);
  std::vector<double> tvs(static_cast<std::size_t>(grid));
#ifdef _OPENMP
#pragma omp parallel num_threads(effective_threads())
#endif
  {
    auto scratch = engine.make_scratch();
    std::vector<double> probs(static_cast<std::size_t>(n));
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
    for (index_t i = 0; i < grid; ++i) {
      const double t =
          t_max * static_cast<double>(i) / static_cast<double>(grid - 1);
      engine.probabilities_into(t, probs.data(), scratch);
      double tv = 0.0;
      for (double p : probs) tv += std::abs(p - uniform);
      tvs[static_cast<std::size_t>(i)] = tv;
    }
  }
  return tvs;
}

namespace reference {

AverageDistribution average_by_classes(const std::vector<index_t>& factors,
                                       const Spectrum& spectrum) {
  const index_t n = group_order(factors);
  AverageDistribution out;
  out.collision_pair_count = spectrum.collision_pair_count();
  out.dist.probs.assign(static_cast<std::size_t>(n), 0.0);
  const double inv_n2 = 1.0 / (static_cast<double>(n) * static_cast<double>(n));
  for (index_t l = 0; l < n; ++l) {
    const auto lt = rank_tuple(factors, l);
    double total = 0.0;
    for (const auto& c : spectrum.collision_classes) {
      cplx s{0.0, 0.0};
      for (index_t a : c) s += character(factors, rank_tuple(factors, a), lt);
      total += std::norm(s);
    }
    out.dist.probs[static_cast<std::size_t>(l)] = total * inv_n2;
  }
  return out;
}

}  // namespace reference

}  // namespace qwalk
