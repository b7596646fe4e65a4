#include "qwalk/numtheory.hpp"

#include <cmath>
#include <limits>

namespace qwalk {

namespace {

index_t isqrt(index_t x) {
  if (x < 0) throw std::invalid_argument("isqrt: negative argument");
  auto r = static_cast<index_t>(std::llround(std::sqrt(static_cast<double>(x))));
  while (r > 0 && r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

}  // namespace

TwoAdicSplit two_adic_split(index_t n) {
  if (n < 1) throw std::invalid_argument("two_adic_split: n must be >= 1");
  TwoAdicSplit s;
  while (n % 2 == 0) {
    n /= 2;
    ++s.u;
  }
  s.q = n;
  return s;
}

std::vector<std::pair<index_t, index_t>> diophantine_certificate(index_t n) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument(
        "diophantine_certificate: n must be a positive even integer");
  if (n > std::numeric_limits<index_t>::max() / 4)
    throw std::invalid_argument("diophantine_certificate: n too large");

  // Solutions of a^2 + b^2 = 4n with a = n - 4k, b = n - 4l.  Both residues
  // are bounded by 2*sqrt(n), so scan the a-window; a descending makes k
  // ascend, giving lexicographic output directly.
  std::vector<std::pair<index_t, index_t>> out;
  const index_t bound = isqrt(4 * n);
  const index_t half = n / 2;
  index_t a = bound - ((bound - n) % 4 + 4) % 4;  // largest a <= bound, a = n mod 4
  for (; a >= -bound; a -= 4) {
    const index_t rem = 4 * n - a * a;
    const index_t b = isqrt(rem);
    if (b * b != rem) continue;
    const index_t k = (n - a) / 4;
    if (k < 0 || k > half) continue;
    for (const index_t bb : {b, -b}) {
      if ((n - bb) % 4 != 0) continue;
      const index_t l = (n - bb) / 4;
      if (l < 0 || l > half) continue;
      out.emplace_back(k, l);
      if (bb == 0) break;  // +0 and -0 are the same solution
    }
  }
  return out;
}

std::string to_string(MixingClass c) {
  switch (c) {
    case MixingClass::KnownUniform_C2: return "KnownUniform_C2";
    case MixingClass::ProvenNotIUM_PowerOfTwo: return "ProvenNotIUM_PowerOfTwo";
    case MixingClass::ProvenNotIUM_QThreeMod4: return "ProvenNotIUM_QThreeMod4";
    case MixingClass::ProvenNotIUM_DiophantineEmpty:
      return "ProvenNotIUM_DiophantineEmpty";
    case MixingClass::Open: return "Open";
  }
  return "Open";
}

MixingVerdict classify_cycle(index_t n) {
  if (n < 2) throw std::invalid_argument("classify_cycle: n must be >= 2");
  MixingVerdict v;
  v.n = n;
  const auto split = two_adic_split(n);
  v.u = split.u;
  v.q = split.q;
  if (n % 2 == 0) v.certificate = diophantine_certificate(n);

  if (n == 2)
    v.verdict = MixingClass::KnownUniform_C2;
  else if (split.u >= 3 && split.q == 1)
    v.verdict = MixingClass::ProvenNotIUM_PowerOfTwo;
  else if (split.u >= 1 && split.q % 4 == 3)
    v.verdict = MixingClass::ProvenNotIUM_QThreeMod4;
  else if (n % 2 == 0 && v.certificate->empty())
    v.verdict = MixingClass::ProvenNotIUM_DiophantineEmpty;
  else
    v.verdict = MixingClass::Open;
  return v;
}

}  // namespace qwalk
