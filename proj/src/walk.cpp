#include "qwalk/walk.hpp"

#include <cmath>

namespace qwalk {

namespace {

void check_time(double t) {
  if (!std::isfinite(t))
    throw std::invalid_argument("walk: time must be finite");
}

void check_even_cycle(index_t n, index_t j) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("walk: n must be a positive even integer");
  if (j < 0 || j >= n)
    throw std::invalid_argument("walk: vertex index out of range");
}

// e^{-i*lambda*t} with the phase reduced mod 2*pi before evaluation.
cplx phase_factor(double lambda, double t) {
  const double theta = std::fmod(lambda * t, two_pi);
  return {std::cos(theta), -std::sin(theta)};
}

// cos(pi*j/2), exact at the lattice points.
double cos_quarter(index_t j) {
  switch (j & 3) {
    case 0: return 1.0;
    case 2: return -1.0;
    default: return 0.0;
  }
}

}  // namespace

Engine::Engine(const CirculantSpec& spec, double collision_tol)
    : spectrum_(eigenvalues_circulant(spec, collision_tol)),
      plan_({spec.n}) {}

Engine::Engine(const GroupCirculantSpec& spec, double collision_tol)
    : spectrum_(eigenvalues_group(spec, collision_tol)),
      plan_(spec.factors) {}

Engine::Scratch Engine::make_scratch() const {
  Scratch s;
  s.fft = plan_.make_scratch();
  s.freq.resize(static_cast<std::size_t>(order()));
  return s;
}

void Engine::amplitudes_into(double t, cplx* out, Scratch& scratch) const {
  check_time(t);
  const index_t n = order();
  const double inv_n = 1.0 / static_cast<double>(n);
  for (index_t a = 0; a < n; ++a)
    out[a] = phase_factor(spectrum_.eigenvalues[static_cast<std::size_t>(a)], t) *
             inv_n;
  plan_.execute(out, scratch.fft);
}

void Engine::probabilities_into(double t, double* out, Scratch& scratch) const {
  amplitudes_into(t, scratch.freq.data(), scratch);
  const index_t n = order();
  for (index_t j = 0; j < n; ++j)
    out[j] = std::norm(scratch.freq[static_cast<std::size_t>(j)]);
}

AmplitudeVector Engine::amplitudes(double t) const {
  AmplitudeVector out;
  out.t = t;
  out.amps.resize(static_cast<std::size_t>(order()));
  auto scratch = make_scratch();
  amplitudes_into(t, out.amps.data(), scratch);
  return out;
}

Distribution Engine::distribution(double t) const {
  Distribution d;
  d.probs.resize(static_cast<std::size_t>(order()));
  auto scratch = make_scratch();
  probabilities_into(t, d.probs.data(), scratch);
  return d;
}

AmplitudeVector evolve(const CirculantSpec& spec, double t) {
  return Engine(spec).amplitudes(t);
}

AmplitudeVector evolve(const GroupCirculantSpec& spec, double t) {
  return Engine(spec).amplitudes(t);
}

Distribution instantaneous_distribution(const CirculantSpec& spec, double t) {
  return Engine(spec).distribution(t);
}

Distribution instantaneous_distribution(const GroupCirculantSpec& spec,
                                        double t) {
  return Engine(spec).distribution(t);
}

namespace {

std::vector<AmplitudeVector> batch_impl(const Engine& engine,
                                        const std::vector<double>& ts) {
  for (double t : ts) check_time(t);
  const index_t n = engine.order();
  std::vector<AmplitudeVector> out(ts.size());
  const auto count = static_cast<index_t>(ts.size());
#ifdef _OPENMP
#pragma omp parallel num_threads(effective_threads())
#endif
  {
    auto scratch = engine.make_scratch();
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
    for (index_t i = 0; i < count; ++i) {
      auto& row = out[static_cast<std::size_t>(i)];
      row.t = ts[static_cast<std::size_t>(i)];
      row.amps.resize(static_cast<std::size_t>(n));
      engine.amplitudes_into(row.t, row.amps.data(), scratch);
    }
  }
  return out;
}

}  // namespace

std::vector<AmplitudeVector> evolve_batch(const CirculantSpec& spec,
                                          const std::vector<double>& ts) {
  return batch_impl(Engine(spec), ts);
}

std::vector<AmplitudeVector> evolve_batch(const GroupCirculantSpec& spec,
                                          const std::vector<double>& ts) {
  return batch_impl(Engine(spec), ts);
}

cplx amplitude_half_spectrum(index_t n, index_t j, double t) {
  check_even_cycle(n, j);
  check_time(t);
  const double sign = (j % 2 == 0) ? 1.0 : -1.0;
  cplx acc = phase_factor(2.0, t) + sign * phase_factor(-2.0, t);
  for (index_t k = 1; 2 * k < n; ++k) {
    const double lambda =
        2.0 * std::cos(two_pi * static_cast<double>(k) / static_cast<double>(n));
    const index_t m = (j * k) % n;
    acc += 2.0 * phase_factor(lambda, t) *
           std::cos(two_pi * static_cast<double>(m) / static_cast<double>(n));
  }
  return acc / static_cast<double>(n);
}

cplx amplitude_even_cycle(index_t n, index_t j, double t) {
  check_even_cycle(n, j);
  check_time(t);
  const double sign = (j % 2 == 0) ? 1.0 : -1.0;
  auto eps = [&](double lambda) {
    return phase_factor(lambda, t) + sign * std::conj(phase_factor(lambda, t));
  };
  cplx acc = eps(2.0);
  for (index_t k = 1; 4 * k < n; ++k) {
    const double lambda =
        2.0 * std::cos(two_pi * static_cast<double>(k) / static_cast<double>(n));
    const index_t m = (j * k) % n;
    acc += 2.0 * eps(lambda) *
           std::cos(two_pi * static_cast<double>(m) / static_cast<double>(n));
  }
  if (n % 4 == 0) acc += 2.0 * cos_quarter(j);
  return acc / static_cast<double>(n);
}

std::pair<cplx, cplx> parity_sums(index_t n, double t) {
  check_even_cycle(n, 0);
  const auto state = evolve(make_cycle(n), t);
  cplx even{0.0, 0.0}, odd{0.0, 0.0};
  for (index_t j = 0; j < n; ++j) {
    if (j % 2 == 0)
      even += state.amps[static_cast<std::size_t>(j)];
    else
      odd += state.amps[static_cast<std::size_t>(j)];
  }
  return {even, odd};
}

std::vector<cplx> coarse_grain(index_t n, index_t m, double t) {
  if (n < 2)
    throw std::invalid_argument("coarse_grain: n must be >= 2");
  if (m < 2 || n % m != 0)
    throw std::invalid_argument(
        "coarse_grain: m must be a divisor of n with m >= 2");
  const auto state = evolve(make_cycle(n), t);
  std::vector<cplx> out(static_cast<std::size_t>(m), cplx{0.0, 0.0});
  for (index_t j = 0; j < n; ++j)
    out[static_cast<std::size_t>(j % m)] += state.amps[static_cast<std::size_t>(j)];
  return out;
}

cplx fold_pair(index_t n, index_t j, double t) {
  check_even_cycle(n, j);
  const auto state = evolve(make_cycle(2 * n), t);
  const index_t partner = (n - j) % (2 * n);
  return state.amps[static_cast<std::size_t>(j)] +
         state.amps[static_cast<std::size_t>(partner)];
}

namespace reference {

std::vector<cplx> amplitudes_direct(const std::vector<index_t>& factors,
                                    const std::vector<double>& eigenvalues,
                                    double t) {
  const index_t n = group_order(factors);
  const double inv_n = 1.0 / static_cast<double>(n);
  std::vector<cplx> freq(static_cast<std::size_t>(n));
  for (index_t a = 0; a < n; ++a)
    freq[static_cast<std::size_t>(a)] =
        phase_factor(eigenvalues[static_cast<std::size_t>(a)], t) * inv_n;

  std::vector<cplx> out(static_cast<std::size_t>(n), cplx{0.0, 0.0});
  for (index_t j = 0; j < n; ++j) {
    const auto jt = rank_tuple(factors, j);
    cplx acc{0.0, 0.0};
    for (index_t a = 0; a < n; ++a)
      acc += freq[static_cast<std::size_t>(a)] *
             character(factors, rank_tuple(factors, a), jt);
    out[static_cast<std::size_t>(j)] = acc;
  }
  return out;
}

}  // namespace reference

}  // namespace qwalk
