#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <utility>
#include <vector>

#include "qwalk/numtheory.hpp"

using namespace qwalk;

namespace {

using Pairs = std::vector<std::pair<index_t, index_t>>;

// Independent oracle: exhaustive scan of the full (k, l) grid.
Pairs brute_certificate(index_t n) {
  Pairs out;
  for (index_t k = 0; 2 * k <= n; ++k)
    for (index_t l = 0; 2 * l <= n; ++l) {
      const index_t a = n - 4 * k;
      const index_t b = n - 4 * l;
      if (a * a + b * b == 4 * n) out.emplace_back(k, l);
    }
  return out;
}

}  // namespace

TEST_CASE("two-adic splits") {
  auto check = [](index_t n, int u, index_t q) {
    const auto s = two_adic_split(n);
    CHECK(s.u == u);
    CHECK(s.q == q);
  };
  check(1, 0, 1);
  check(2, 1, 1);
  check(3, 0, 3);
  check(12, 2, 3);
  check(45, 0, 45);
  check(96, 5, 3);
  check(1024, 10, 1);
  CHECK_THROWS_AS(two_adic_split(0), std::invalid_argument);
  CHECK_THROWS_AS(two_adic_split(-6), std::invalid_argument);
}

TEST_CASE("frozen Diophantine certificates") {
  CHECK(diophantine_certificate(2) ==
        Pairs{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(diophantine_certificate(4) == Pairs{{0, 1}, {1, 0}, {1, 2}, {2, 1}});
  CHECK(diophantine_certificate(8) == Pairs{{1, 1}, {1, 3}, {3, 1}, {3, 3}});
  CHECK(diophantine_certificate(10) ==
        Pairs{{1, 2}, {1, 3}, {2, 1}, {2, 4}, {3, 1}, {3, 4}, {4, 2}, {4, 3}});
  CHECK(diophantine_certificate(12).empty());
  CHECK(diophantine_certificate(42).empty());
  CHECK_THROWS_AS(diophantine_certificate(7), std::invalid_argument);
  CHECK_THROWS_AS(diophantine_certificate(0), std::invalid_argument);
}

TEST_CASE("window scan matches the exhaustive grid oracle up to n = 300") {
  for (index_t n = 2; n <= 300; n += 2) {
    const auto got = diophantine_certificate(n);
    const auto want = brute_certificate(n);
    CHECK(got == want);
  }
}

TEST_CASE("certificate solutions satisfy the equation and its bounds") {
  for (index_t n : {2, 4, 8, 10, 16, 20, 26, 100, 1000, 5000}) {
    for (const auto& [k, l] : diophantine_certificate(n)) {
      CHECK(k >= 0);
      CHECK(l >= 0);
      CHECK(2 * k <= n);
      CHECK(2 * l <= n);
      const index_t a = n - 4 * k;
      const index_t b = n - 4 * l;
      CHECK(a * a + b * b == 4 * n);
    }
  }
}

TEST_CASE("classification table") {
  auto verdict_of = [](index_t n) { return classify_cycle(n).verdict; };

  CHECK(verdict_of(2) == MixingClass::KnownUniform_C2);

  // Powers of two from 8 up: proven non-mixing regardless of the (possibly
  // nonempty) certificate.
  for (index_t n : {8, 16, 32, 64, 256})
    CHECK(verdict_of(n) == MixingClass::ProvenNotIUM_PowerOfTwo);
  CHECK_FALSE(diophantine_certificate(16).empty());

  // Even with odd part 3 (mod 4).
  for (index_t n : {6, 12, 24, 28, 96, 44})
    CHECK(verdict_of(n) == MixingClass::ProvenNotIUM_QThreeMod4);

  // Even, odd part 1 (mod 4), but the certificate is empty: 42 = 2*3*7 and
  // 66 = 2*3*11 are not sums of two squares.
  for (index_t n : {42, 66})
    CHECK(verdict_of(n) == MixingClass::ProvenNotIUM_DiophantineEmpty);

  // No criterion applies.
  for (index_t n : {3, 4, 5, 9, 10, 25, 45})
    CHECK(verdict_of(n) == MixingClass::Open);

  CHECK_THROWS_AS(classify_cycle(1), std::invalid_argument);
  CHECK_THROWS_AS(classify_cycle(0), std::invalid_argument);
}

TEST_CASE("verdict carries the split and the certificate only for even n") {
  const auto v12 = classify_cycle(12);
  CHECK(v12.n == 12);
  CHECK(v12.u == 2);
  CHECK(v12.q == 3);
  REQUIRE(v12.certificate.has_value());
  CHECK(v12.certificate->empty());

  const auto v10 = classify_cycle(10);
  REQUIRE(v10.certificate.has_value());
  CHECK(v10.certificate->size() == 8);

  const auto v45 = classify_cycle(45);
  CHECK(v45.u == 0);
  CHECK(v45.q == 45);
  CHECK_FALSE(v45.certificate.has_value());
}

TEST_CASE("verdict names") {
  CHECK(to_string(MixingClass::KnownUniform_C2) == "KnownUniform_C2");
  CHECK(to_string(MixingClass::ProvenNotIUM_PowerOfTwo) ==
        "ProvenNotIUM_PowerOfTwo");
  CHECK(to_string(MixingClass::ProvenNotIUM_QThreeMod4) ==
        "ProvenNotIUM_QThreeMod4");
  CHECK(to_string(MixingClass::ProvenNotIUM_DiophantineEmpty) ==
        "ProvenNotIUM_DiophantineEmpty");
  CHECK(to_string(MixingClass::Open) == "Open");
}
