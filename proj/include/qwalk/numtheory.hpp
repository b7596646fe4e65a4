#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qwalk/common.hpp"

namespace qwalk {

/// n = 2^u * q with q odd.
struct TwoAdicSplit {
  int u = 0;
  index_t q = 1;
};

TwoAdicSplit two_adic_split(index_t n);  // requires n >= 1

/// All integer solutions (k, l) with 0 <= k, l <= n/2 of
///
///   (n - 4k)^2 + (n - 4l)^2 = 4n
///
/// for even n, in ascending lexicographic order.  Exact integer arithmetic
/// throughout; an empty list certifies that the cycle C_n does not mix to
/// uniform at any instant, independently of the other classification rules.
std::vector<std::pair<index_t, index_t>> diophantine_certificate(index_t n);

enum class MixingClass {
  KnownUniform_C2,             ///< n = 2: the one uniform-mixing cycle
  ProvenNotIUM_PowerOfTwo,     ///< n = 2^u, u >= 3
  ProvenNotIUM_QThreeMod4,     ///< n = 2^u * q, u >= 1, q = 3 (mod 4)
  ProvenNotIUM_DiophantineEmpty,  ///< even n whose certificate is empty
  Open,                        ///< no verdict from the implemented criteria
};

std::string to_string(MixingClass c);

struct MixingVerdict {
  index_t n = 0;
  int u = 0;
  index_t q = 1;
  MixingClass verdict = MixingClass::Open;
  /// Present iff n is even (the certificate is computed for every even n).
  std::optional<std::vector<std::pair<index_t, index_t>>> certificate;
};

/// Decision procedure for instantaneous uniform mixing of C_n.  Cases are
/// tried in order: n = 2; power-of-two (u >= 3, q = 1); q = 3 (mod 4) with
/// u >= 1; even n with an empty Diophantine certificate; otherwise Open.
/// Requires n >= 2.
MixingVerdict classify_cycle(index_t n);

}  // namespace qwalk
