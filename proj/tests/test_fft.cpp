#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qwalk/fft.hpp"
#include "qwalk/graphs.hpp"

using namespace qwalk;

namespace {

std::vector<cplx> random_vector(std::mt19937& rng, index_t n) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<cplx> v(static_cast<std::size_t>(n));
  for (auto& z : v) z = {dist(rng), dist(rng)};
  return v;
}

double max_err(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

void check_shape(const std::vector<index_t>& factors, std::mt19937& rng,
                 double tol = 1e-10) {
  fft::Plan plan(factors);
  auto scratch = plan.make_scratch();
  auto data = random_vector(rng, plan.size());
  const auto want = fft::reference_transform(factors, data);
  plan.execute(data.data(), scratch);
  CHECK(max_err(data, want) < tol);
}

}  // namespace

TEST_CASE("single-axis transforms match the direct sum") {
  std::mt19937 rng(42);
  for (index_t n = 1; n <= 64; ++n) check_shape({n}, rng);
  for (index_t n : {101, 127, 128, 255, 256, 257, 500, 512}) check_shape({n}, rng);
}

TEST_CASE("multi-axis transforms match the direct sum") {
  std::mt19937 rng(43);
  check_shape({2, 2}, rng);
  check_shape({2, 2, 2}, rng);
  check_shape({2, 4}, rng);
  check_shape({3, 4}, rng);
  check_shape({3, 5, 7}, rng);
  check_shape({6, 6}, rng);
  check_shape({1, 8}, rng);
  check_shape({8, 1}, rng);
  check_shape({2, 2, 2, 2, 2, 2}, rng);
}

TEST_CASE("delta input synthesizes a pure character") {
  const std::vector<index_t> factors{5, 3};
  fft::Plan plan(factors);
  auto scratch = plan.make_scratch();
  const index_t a = tuple_rank(factors, {2, 1});
  std::vector<cplx> data(15, cplx{0.0, 0.0});
  data[static_cast<std::size_t>(a)] = 1.0;
  plan.execute(data.data(), scratch);
  const auto at = rank_tuple(factors, a);
  for (index_t x = 0; x < 15; ++x) {
    const auto want = character(factors, at, rank_tuple(factors, x));
    CHECK(std::abs(data[static_cast<std::size_t>(x)] - want) < 1e-12);
  }
}

TEST_CASE("transform is deterministic between runs") {
  std::mt19937 rng(44);
  const auto input = random_vector(rng, 500);
  fft::Plan plan({500});
  auto s1 = plan.make_scratch();
  auto a = input;
  plan.execute(a.data(), s1);
  fft::Plan plan2({500});
  auto s2 = plan2.make_scratch();
  auto b = input;
  plan2.execute(b.data(), s2);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}
