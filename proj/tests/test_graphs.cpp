#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <set>

#include "qwalk/graphs.hpp"

#ifdef QWALK_HAVE_EIGEN
#include <Eigen/Dense>
#endif

using namespace qwalk;

namespace {

// Random inverse-closed circulant on Z_n, optionally with mirrored weights.
CirculantSpec random_circulant(std::mt19937& rng, index_t n, bool weighted) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_real_distribution<double> wdist(0.5, 2.5);
  std::set<index_t> offsets;
  std::vector<double> weight_of(static_cast<std::size_t>(n), 0.0);
  for (index_t d = 1; 2 * d <= n; ++d) {
    if (coin(rng) < 0.4) {
      const double w = weighted ? wdist(rng) : 1.0;
      offsets.insert(d);
      offsets.insert((n - d) % n);
      weight_of[static_cast<std::size_t>(d)] = w;
      weight_of[static_cast<std::size_t>((n - d) % n)] = w;
    }
  }
  if (offsets.empty()) {
    offsets.insert(1);
    offsets.insert(n - 1);
    weight_of[1] = weight_of[static_cast<std::size_t>(n - 1)] = 1.0;
  }
  offsets.erase(0);
  std::vector<index_t> conn(offsets.begin(), offsets.end());
  std::vector<double> weights;
  for (index_t d : conn) weights.push_back(weight_of[static_cast<std::size_t>(d)]);
  return make_circulant(n, conn, weights);
}

}  // namespace

TEST_CASE("cycle and complete constructors") {
  const auto c5 = make_cycle(5);
  CHECK(c5.n == 5);
  CHECK(c5.conn == std::vector<index_t>{1, 4});
  CHECK(c5.weights == std::vector<double>{1.0, 1.0});

  // C_2 is the doubled edge: connection {1} with weight 2.
  const auto c2 = make_cycle(2);
  CHECK(c2.conn == std::vector<index_t>{1});
  CHECK(c2.weights == std::vector<double>{2.0});

  const auto k4 = make_complete(4);
  CHECK(k4.conn == std::vector<index_t>{1, 2, 3});

  CHECK_THROWS_AS(make_cycle(1), std::invalid_argument);
  CHECK_THROWS_AS(make_complete(1), std::invalid_argument);
}

TEST_CASE("circulant validation") {
  CHECK_NOTHROW(make_circulant(8, {1, 7}));
  CHECK_NOTHROW(make_circulant(8, {4}));  // self-inverse offset
  CHECK_THROWS_WITH_AS(make_circulant(8, {0, 1, 7}),
                       doctest::Contains("self-loop"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(make_circulant(8, {1}), doctest::Contains("inverse"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(make_circulant(8, {1, 8}), doctest::Contains("8"),
                       std::invalid_argument);
  CHECK_THROWS_AS(make_circulant(8, {1, 7}, {1.0, 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(make_circulant(8, {1, 7}, {-1.0, -1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_circulant(1, {1}), std::invalid_argument);
}

TEST_CASE("hypercube and group constructors") {
  const auto q3 = make_hypercube(3);
  CHECK(q3.factors == std::vector<index_t>{2, 2, 2});
  CHECK(q3.conn.size() == 3);
  CHECK(q3.order() == 8);
  CHECK_THROWS_AS(make_hypercube(0), std::invalid_argument);

  CHECK_NOTHROW(make_group_circulant({2, 4}, {{1, 0}, {0, 1}, {0, 3}}));
  CHECK_THROWS_WITH_AS(
      make_group_circulant({2, 4}, {{1, 0}, {0, 1}}),
      doctest::Contains("(0,3)"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(make_group_circulant({2, 4}, {{0, 0}}),
                       doctest::Contains("self-loop"), std::invalid_argument);
  CHECK_THROWS_AS(make_group_circulant({1}, {{0}}), std::invalid_argument);
  CHECK_THROWS_AS(make_group_circulant({2, 4}, {{1, 4}}),
                  std::invalid_argument);
}

TEST_CASE("mixed-radix ranking, last factor fastest") {
  const std::vector<index_t> factors{2, 4};
  CHECK(tuple_rank(factors, {0, 0}) == 0);
  CHECK(tuple_rank(factors, {0, 3}) == 3);
  CHECK(tuple_rank(factors, {1, 0}) == 4);
  CHECK(tuple_rank(factors, {1, 2}) == 6);
  for (index_t r = 0; r < 8; ++r)
    CHECK(tuple_rank(factors, rank_tuple(factors, r)) == r);
  CHECK(negate_rank(factors, tuple_rank(factors, {1, 3})) ==
        tuple_rank(factors, {1, 1}));
}

TEST_CASE("characters at frozen points") {
  CHECK(character({2, 2}, {1, 1}, {1, 0}).real() == doctest::Approx(-1.0));
  CHECK(character({2, 2}, {1, 1}, {1, 0}).imag() == doctest::Approx(0.0));
  CHECK(character({4}, {1}, {1}).imag() == doctest::Approx(1.0));
  CHECK(character({4}, {1}, {1}).real() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(character({4}, {0}, {3}) == cplx{1.0, 0.0});
  CHECK_THROWS_AS(character({2, 2}, {1}, {1, 0}), std::invalid_argument);
}

TEST_CASE("cycle spectra match the cosine closed form") {
  for (index_t n = 2; n <= 512; ++n) {
    const auto s = eigenvalues_circulant(make_cycle(n));
    for (index_t k = 0; k < n; ++k) {
      const double expect =
          2.0 * std::cos(two_pi * static_cast<double>(k) / static_cast<double>(n));
      CHECK(std::abs(s.eigenvalues[static_cast<std::size_t>(k)] - expect) <
            1e-12);
    }
  }
}

TEST_CASE("frozen small spectra") {
  const auto c4 = eigenvalues_circulant(make_cycle(4));
  CHECK(c4.eigenvalues[0] == doctest::Approx(2.0));
  CHECK(std::abs(c4.eigenvalues[1]) < 1e-12);
  CHECK(c4.eigenvalues[2] == doctest::Approx(-2.0));
  CHECK(std::abs(c4.eigenvalues[3]) < 1e-12);
  REQUIRE(c4.distinct_count() == 3);
  CHECK(c4.collision_classes[0] == std::vector<index_t>{2});
  CHECK(c4.collision_classes[1] == std::vector<index_t>{1, 3});
  CHECK(c4.collision_classes[2] == std::vector<index_t>{0});
  CHECK(c4.collision_pair_count() == 2);

  const auto c8 = eigenvalues_circulant(make_cycle(8));
  CHECK(c8.eigenvalues[1] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(std::abs(c8.eigenvalues[2]) < 1e-12);
  CHECK(c8.eigenvalues[4] == doctest::Approx(-2.0));

  const auto k4 = eigenvalues_circulant(make_complete(4));
  CHECK(k4.eigenvalues[0] == doctest::Approx(3.0));
  for (index_t j = 1; j < 4; ++j)
    CHECK(k4.eigenvalues[static_cast<std::size_t>(j)] ==
          doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(k4.distinct_count() == 2);
  CHECK(k4.collision_pair_count() == 6);

  const auto c2 = eigenvalues_circulant(make_cycle(2));
  CHECK(c2.eigenvalues == std::vector<double>{2.0, -2.0});
  CHECK(c2.distinct_count() == 2);
}

TEST_CASE("cycle collision classes have the reflection structure") {
  for (index_t n : {3, 4, 5, 8, 12, 101, 256, 511, 512}) {
    const auto s = eigenvalues_circulant(make_cycle(n));
    std::set<std::vector<index_t>> got(s.collision_classes.begin(),
                                       s.collision_classes.end());
    std::set<std::vector<index_t>> want;
    want.insert({0});
    if (n % 2 == 0) want.insert({n / 2});
    for (index_t k = 1; 2 * k < n; ++k) want.insert({k, n - k});
    CHECK(got == want);

    // Classes are separated by more than the clustering tolerance.
    std::vector<double> sorted_vals;
    for (const auto& c : s.collision_classes)
      sorted_vals.push_back(s.eigenvalues[static_cast<std::size_t>(c[0])]);
    for (std::size_t i = 1; i < sorted_vals.size(); ++i)
      CHECK(sorted_vals[i] - sorted_vals[i - 1] > s.collision_tol);
  }
}

TEST_CASE("group spectra: hypercube levels") {
  for (index_t d = 1; d <= 10; ++d) {
    const auto s = eigenvalues_group(make_hypercube(d));
    CHECK(s.distinct_count() == d + 1);
    const index_t n = index_t{1} << d;
    for (index_t a = 0; a < n; ++a) {
      const int w = std::popcount(static_cast<unsigned long long>(a));
      CHECK(std::abs(s.eigenvalues[static_cast<std::size_t>(a)] -
                     static_cast<double>(d - 2 * w)) < 1e-12);
    }
    for (const auto& c : s.collision_classes) {
      const int w = std::popcount(static_cast<unsigned long long>(c[0]));
      index_t binom = 1;
      for (int i = 0; i < w; ++i) binom = binom * (d - i) / (i + 1);
      CHECK(static_cast<index_t>(c.size()) == binom);
    }
  }
}

TEST_CASE("group spectrum with a single factor matches the circulant path") {
  const auto spec = make_circulant(12, {1, 5, 7, 11});
  const auto a = eigenvalues_circulant(spec);
  const auto g = eigenvalues_group(
      make_group_circulant({12}, {{1}, {5}, {7}, {11}}));
  for (index_t j = 0; j < 12; ++j)
    CHECK(std::abs(a.eigenvalues[static_cast<std::size_t>(j)] -
                   g.eigenvalues[static_cast<std::size_t>(j)]) < 1e-12);
}

TEST_CASE("eigenvalue negation symmetry") {
  std::mt19937 rng(12345);
  for (int rep = 0; rep < 40; ++rep) {
    const index_t n = 2 + static_cast<index_t>(rng() % 63);
    const auto spec = random_circulant(rng, n, rep % 2 == 0);
    const auto s = eigenvalues_circulant(spec);
    for (index_t a = 0; a < n; ++a) {
      const index_t b = (n - a) % n;
      CHECK(std::abs(s.eigenvalues[static_cast<std::size_t>(a)] -
                     s.eigenvalues[static_cast<std::size_t>(b)]) < 1e-12);
    }
  }
  const auto q4 = eigenvalues_group(make_hypercube(4));
  const auto g = make_group_circulant({3, 4}, {{1, 2}, {2, 2}, {0, 1}, {0, 3}});
  const auto sg = eigenvalues_group(g);
  for (index_t a = 0; a < 12; ++a)
    CHECK(std::abs(sg.eigenvalues[static_cast<std::size_t>(a)] -
                   sg.eigenvalues[static_cast<std::size_t>(negate_rank(
                       {3, 4}, a))]) < 1e-12);
  for (index_t a = 0; a < 16; ++a)
    CHECK(std::abs(q4.eigenvalues[static_cast<std::size_t>(a)] -
                   q4.eigenvalues[static_cast<std::size_t>(negate_rank(
                       {2, 2, 2, 2}, a))]) < 1e-12);
}

#ifdef QWALK_HAVE_EIGEN
TEST_CASE("spectra agree with a dense eigensolver oracle") {
  std::mt19937 rng(777);
  auto check_spec = [](const std::vector<std::vector<double>>& A,
                       std::vector<double> lam) {
    const auto n = static_cast<Eigen::Index>(A.size());
    Eigen::MatrixXd M(n, n);
    for (Eigen::Index r = 0; r < n; ++r)
      for (Eigen::Index c = 0; c < n; ++c)
        M(r, c) = A[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(M);
    REQUIRE(solver.info() == Eigen::Success);
    std::sort(lam.begin(), lam.end());
    for (Eigen::Index i = 0; i < n; ++i)
      CHECK(std::abs(lam[static_cast<std::size_t>(i)] -
                     solver.eigenvalues()(i)) < 1e-9);
  };

  for (int rep = 0; rep < 25; ++rep) {
    const index_t n = 2 + static_cast<index_t>(rng() % 63);
    const auto spec = random_circulant(rng, n, rep % 3 == 0);
    check_spec(adjacency_matrix(spec), eigenvalues_circulant(spec).eigenvalues);
  }
  for (index_t d = 1; d <= 6; ++d) {
    const auto spec = make_hypercube(d);
    check_spec(adjacency_matrix(spec), eigenvalues_group(spec).eigenvalues);
  }
  const auto g = make_group_circulant({2, 4}, {{1, 0}, {0, 1}, {0, 3}});
  check_spec(adjacency_matrix(g), eigenvalues_group(g).eigenvalues);
}
#endif

TEST_CASE("adjacency matrices") {
  const auto c2 = adjacency_matrix(make_cycle(2));
  CHECK(c2 == std::vector<std::vector<double>>{{0, 2}, {2, 0}});

  const auto c4 = adjacency_matrix(make_cycle(4));
  CHECK(c4 == std::vector<std::vector<double>>{
                  {0, 1, 0, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 1, 0}});

  // Q_2 is the 4-cycle 0-1-3-2-0 under mixed-radix vertex order.
  const auto q2 = adjacency_matrix(make_hypercube(2));
  CHECK(q2 == std::vector<std::vector<double>>{
                  {0, 1, 1, 0}, {1, 0, 0, 1}, {1, 0, 0, 1}, {0, 1, 1, 0}});

  // Row 0 is the weighted indicator of the connection set.
  const auto spec = make_circulant(9, {2, 7}, {1.5, 1.5});
  const auto A = adjacency_matrix(spec);
  for (index_t k = 0; k < 9; ++k) {
    const bool in_conn = (k == 2 || k == 7);
    CHECK(A[0][static_cast<std::size_t>(k)] == (in_conn ? 1.5 : 0.0));
  }

  CHECK_THROWS_AS(adjacency_matrix(make_cycle(5000)), resource_limit_error);
}

TEST_CASE("hadamard matrices") {
  CHECK_THROWS_AS(hadamard_matrix(3), std::invalid_argument);
  CHECK_THROWS_AS(hadamard_matrix(0), std::invalid_argument);
  CHECK_THROWS_AS(hadamard_matrix(8192), resource_limit_error);

  const auto h1 = hadamard_matrix(1);
  CHECK(h1.at(0, 0) == 1);

  const auto h4 = hadamard_matrix(4);
  const int want[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1},
                          {1, -1, -1, 1}};
  for (index_t r = 0; r < 4; ++r)
    for (index_t c = 0; c < 4; ++c) CHECK(h4.at(r, c) == want[r][c]);

  for (index_t order : {2, 4, 8, 16, 32, 64}) {
    const auto H = hadamard_matrix(order);
    for (index_t r = 0; r < order; ++r) {
      CHECK(H.at(0, r) == 1);
      for (index_t c = 0; c < order; ++c) {
        index_t dot = 0;
        for (index_t k = 0; k < order; ++k) dot += H.at(r, k) * H.at(c, k);
        CHECK(dot == (r == c ? order : 0));
      }
    }
  }

  // Rows are exactly the characters of (Z_2)^k in rank order.
  index_t d = 4;
  const auto H = hadamard_matrix(index_t{1} << d);
  const std::vector<index_t> factors(static_cast<std::size_t>(d), 2);
  for (index_t a = 0; a < H.order; ++a)
    for (index_t x = 0; x < H.order; ++x) {
      const auto chi = character(factors, rank_tuple(factors, a),
                                 rank_tuple(factors, x));
      CHECK(std::abs(chi.real() - H.at(a, x)) < 1e-12);
    }
}

TEST_CASE("repeated eigenvalue witness") {
  const auto w5 = repeated_eigenvalue_witness(make_cycle(5));
  REQUIRE(w5.has_value());
  CHECK(*w5 == std::pair<index_t, index_t>{1, 4});

  const auto w4 = repeated_eigenvalue_witness(make_cycle(4));
  REQUIRE(w4.has_value());
  CHECK(*w4 == std::pair<index_t, index_t>{1, 3});

  const auto wq3 = repeated_eigenvalue_witness(make_hypercube(3));
  REQUIRE(wq3.has_value());
  CHECK(*wq3 == std::pair<index_t, index_t>{1, 2});

  CHECK_FALSE(repeated_eigenvalue_witness(make_cycle(2)).has_value());
}
