// Benchmarks the transform-based kernels against their serial reference
// implementations: amplitude synthesis (direct O(n^2) spectral sum vs FFT),
// the time-averaged distribution (per-collision-class accumulation vs the
// difference-histogram transform), and the TV time grid (serial loop vs the
// batched parallel kernel).

#include <chrono>
#include <cstdio>
#include <vector>

#include "qwalk/mixing.hpp"
#include "qwalk/walk.hpp"

using namespace qwalk;

namespace {

template <typename F>
double seconds(F&& body) {
  const auto start = std::chrono::steady_clock::now();
  body();
  const std::chrono::duration<double> dt =
      std::chrono::steady_clock::now() - start;
  return dt.count();
}

volatile double sink = 0.0;  // keeps results observable

void bench_amplitudes() {
  std::printf("amplitude synthesis at t = 1.0 (one evaluation)\n");
  std::printf("%10s %14s %14s %10s\n", "n", "direct [s]", "transform [s]",
              "speedup");
  for (index_t n : {1024, 4096, 8192}) {
    const Engine engine(make_cycle(n));
    auto scratch = engine.make_scratch();
    std::vector<cplx> out(static_cast<std::size_t>(n));
    const double direct = seconds([&] {
      const auto amps =
          reference::amplitudes_direct(engine.factors(), engine.spectrum().eigenvalues, 1.0);
      sink = amps.back().real();
    });
    const double fast = seconds([&] {
      engine.amplitudes_into(1.0, out.data(), scratch);
      sink = out.back().real();
    });
    std::printf("%10lld %14.6f %14.6f %9.1fx\n", static_cast<long long>(n),
                direct, fast, direct / fast);
  }
}

void bench_average() {
  std::printf("\ntime-averaged distribution of C_n\n");
  std::printf("%10s %14s %14s %10s\n", "n", "per-class [s]", "histogram [s]",
              "speedup");
  for (index_t n : {4096, 16384, 65536}) {
    const auto spec = make_cycle(n);
    const Engine engine(spec);
    const double fast = seconds([&] {
      const auto avg = average_distribution(spec);
      sink = avg.dist.probs.back();
    });
    if (n <= 16384) {
      const double ref = seconds([&] {
        const auto avg =
            reference::average_by_classes(engine.factors(), engine.spectrum());
        sink = avg.dist.probs.back();
      });
      std::printf("%10lld %14.6f %14.6f %9.1fx\n", static_cast<long long>(n),
                  ref, fast, ref / fast);
    } else {
      std::printf("%10lld %14s %14.6f %10s\n", static_cast<long long>(n),
                  "(skipped)", fast, "-");
    }
  }
}

void bench_tv_grid() {
  std::printf("\nTV-to-uniform grid on C_1001 (threads: %d)\n",
              effective_threads());
  std::printf("%10s %14s %14s %10s\n", "points", "serial [s]", "batched [s]",
              "speedup");
  const Engine engine(make_cycle(1001));
  for (index_t points : {2001, 10001}) {
    const double serial = seconds([&] {
      auto scratch = engine.make_scratch();
      std::vector<double> probs(static_cast<std::size_t>(engine.order()));
      double worst = 1e300;
      for (index_t i = 0; i < points; ++i) {
        const double t =
            8.0 * static_cast<double>(i) / static_cast<double>(points - 1);
        engine.probabilities_into(t, probs.data(), scratch);
        worst = std::min(worst, tv_to_uniform(probs));
      }
      sink = worst;
    });
    const double batched = seconds([&] {
      const auto tvs = tv_grid(engine, 8.0, points);
      sink = tvs.back();
    });
    std::printf("%10lld %14.6f %14.6f %9.1fx\n", static_cast<long long>(points),
                serial, batched, serial / batched);
  }
}

}  // namespace

int main() {
  bench_amplitudes();
  bench_average();
  bench_tv_grid();
  return 0;
}
