#include "qwalk/verify.hpp"

#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

#include "qwalk/mixing.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

namespace {

constexpr unsigned kSuiteSeed = 20240901u;
constexpr index_t kSampleCount = 8;
constexpr double kSampleHorizon = 20.0;

void check_range(index_t lo, index_t hi, index_t floor, const char* what) {
  if (lo < floor)
    throw std::invalid_argument(std::string("verify: minimum ") + what +
                                " is " + std::to_string(floor));
  if (hi < lo)
    throw std::invalid_argument("verify: empty range");
}

void add_check(SuiteResult& out, std::string family, std::string graph,
               std::string check, double max_error, double tolerance) {
  out.checks.push_back(CheckResult{std::move(family), std::move(graph),
                                   std::move(check), max_error, tolerance,
                                   max_error <= tolerance});
}

double unitarity_error(const Engine& engine, const std::vector<double>& times) {
  double err = 0.0;
  for (double t : times) {
    const auto state = engine.amplitudes(t);
    double total = 0.0;
    for (const cplx& a : state.amps) total += std::norm(a);
    err = std::max(err, std::abs(total - 1.0));
  }
  return err;
}

template <typename SpecT>
double average_formula_error(const SpecT& spec, const Engine& engine) {
  const auto fast = average_distribution(spec);
  const auto ref =
      reference::average_by_classes(engine.factors(), engine.spectrum());
  double err = static_cast<double>(
      std::abs(fast.collision_pair_count - ref.collision_pair_count));
  for (std::size_t l = 0; l < fast.dist.probs.size(); ++l)
    err = std::max(err, std::abs(fast.dist.probs[l] - ref.dist.probs[l]));
  return err;
}

}  // namespace

index_t SuiteResult::passed_count() const {
  index_t count = 0;
  for (const auto& c : checks)
    if (c.passed) ++count;
  return count;
}

index_t SuiteResult::failed_count() const {
  return static_cast<index_t>(checks.size()) - passed_count();
}

void SuiteResult::append(SuiteResult other) {
  checks.insert(checks.end(), std::make_move_iterator(other.checks.begin()),
                std::make_move_iterator(other.checks.end()));
}

std::vector<double> sample_times(unsigned seed, index_t count, double t_hi) {
  if (count < 1 || t_hi <= 0.0)
    throw std::invalid_argument("sample_times: need count >= 1 and t_hi > 0");
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(t_hi * 1e-3, t_hi);
  std::vector<double> times(static_cast<std::size_t>(count));
  for (auto& t : times) t = dist(rng);
  return times;
}

SuiteResult verify_cycles(index_t min_n, index_t max_n) {
  check_range(min_n, max_n, 2, "cycle order");
  const auto times = sample_times(kSuiteSeed, kSampleCount, kSampleHorizon);
  SuiteResult out;
  for (index_t n = min_n; n <= max_n; ++n) {
    const auto spec = make_cycle(n);
    const Engine engine(spec);
    const std::string graph = "C_" + std::to_string(n);

    add_check(out, "cycles", graph, "unitarity",
              unitarity_error(engine, times), 1e-10);
    add_check(out, "cycles", graph, "average_collision_formula",
              average_formula_error(spec, engine), 1e-12);

    double coarse_err = 0.0;
    bool has_divisor = false;
    for (index_t m = 2; m < n; ++m) {
      if (n % m != 0) continue;
      has_divisor = true;
      const Engine small(make_cycle(m));
      for (double t : times) {
        const auto sums = coarse_grain(n, m, t);
        const auto want = small.amplitudes(t);
        for (index_t a = 0; a < m; ++a)
          coarse_err = std::max(
              coarse_err, std::abs(sums[static_cast<std::size_t>(a)] -
                                   want.amps[static_cast<std::size_t>(a)]));
      }
    }
    if (has_divisor)
      add_check(out, "cycles", graph, "divisor_coarse_graining", coarse_err,
                1e-10);

    if (n % 2 != 0) continue;

    double half_err = 0.0, quarter_err = 0.0, fold_err = 0.0;
    double parity_err = 0.0, realness_err = 0.0;
    for (double t : times) {
      const auto state = engine.amplitudes(t);
      for (index_t j = 0; j < n; ++j) {
        const cplx got = state.amps[static_cast<std::size_t>(j)];
        half_err =
            std::max(half_err, std::abs(got - amplitude_half_spectrum(n, j, t)));
        quarter_err =
            std::max(quarter_err, std::abs(got - amplitude_even_cycle(n, j, t)));
        fold_err = std::max(fold_err, std::abs(fold_pair(n, j, t) - got));
      }
      const auto [even_sum, odd_sum] = parity_sums(n, t);
      parity_err = std::max(parity_err,
                            std::abs(even_sum - cplx{std::cos(2.0 * t), 0.0}));
      parity_err = std::max(parity_err,
                            std::abs(odd_sum - cplx{0.0, -std::sin(2.0 * t)}));
      realness_err = std::max(realness_err, std::abs(even_sum.imag()));
      realness_err = std::max(realness_err, std::abs(odd_sum.real()));
    }
    add_check(out, "cycles", graph, "half_spectrum_form", half_err, 1e-10);
    add_check(out, "cycles", graph, "quarter_spectrum_form", quarter_err, 1e-10);
    add_check(out, "cycles", graph, "parity_marginals", parity_err, 1e-10);
    add_check(out, "cycles", graph, "parity_realness", realness_err, 1e-10);
    add_check(out, "cycles", graph, "vertex_pair_folding", fold_err, 1e-10);
  }
  return out;
}

SuiteResult verify_complete(index_t min_n, index_t max_n) {
  check_range(min_n, max_n, 2, "complete-graph order");
  const auto times = sample_times(kSuiteSeed, kSampleCount, kSampleHorizon);
  SuiteResult out;
  for (index_t n = min_n; n <= max_n; ++n) {
    const auto spec = make_complete(n);
    const Engine engine(spec);
    const std::string graph = "K_" + std::to_string(n);
    add_check(out, "complete", graph, "unitarity",
              unitarity_error(engine, times), 1e-10);
    add_check(out, "complete", graph, "average_collision_formula",
              average_formula_error(spec, engine), 1e-12);
  }
  return out;
}

SuiteResult verify_hypercubes(index_t min_d, index_t max_d) {
  check_range(min_d, max_d, 1, "hypercube dimension");
  const auto times = sample_times(kSuiteSeed, kSampleCount, kSampleHorizon);
  SuiteResult out;
  for (index_t d = min_d; d <= max_d; ++d) {
    const auto spec = make_hypercube(d);
    const Engine engine(spec);
    const std::string graph = "Q_" + std::to_string(d);
    add_check(out, "hypercubes", graph, "unitarity",
              unitarity_error(engine, times), 1e-10);
    add_check(out, "hypercubes", graph, "average_collision_formula",
              average_formula_error(spec, engine), 1e-12);

    const index_t order = index_t{1} << d;
    double level_err = 0.0;
    for (double t : times) {
      const auto state = engine.amplitudes(t);
      std::vector<cplx> level(static_cast<std::size_t>(d + 1));
      const cplx c{std::cos(t), 0.0};
      const cplx s{0.0, -std::sin(t)};
      cplx acc{1.0, 0.0};
      for (index_t w = 0; w <= d; ++w) {
        cplx value = acc;
        for (index_t m = w; m < d; ++m) value *= c;
        level[static_cast<std::size_t>(w)] = value;
        acc *= s;
      }
      for (index_t j = 0; j < order; ++j) {
        const int w = std::popcount(static_cast<std::uint64_t>(j));
        level_err = std::max(
            level_err, std::abs(state.amps[static_cast<std::size_t>(j)] -
                                level[static_cast<std::size_t>(w)]));
      }
    }
    add_check(out, "hypercubes", graph, "binomial_levels", level_err, 1e-10);
  }
  return out;
}

SuiteResult verify_all() {
  SuiteResult out = verify_cycles(2, 32);
  out.append(verify_complete(2, 24));
  out.append(verify_hypercubes(1, 8));
  return out;
}

}  // namespace qwalk
