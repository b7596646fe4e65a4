#pragma once

#include <vector>

#include "qwalk/common.hpp"

namespace qwalk::fft {

// Character-synthesis transform over a mixed-radix index space:
//
//   out[j] = sum_k in[k] * exp(+2*pi*i * sum_m j_m k_m / n_m)
//
// i.e. an unnormalized inverse DFT along every axis of an array with shape
// `factors` (last axis fastest).  Power-of-two axes use an iterative radix-2
// kernel; everything else goes through Bluestein's chirp-z reduction to a
// padded radix-2 convolution, so arbitrary axis lengths cost O(n log n).

struct Scratch {
  std::vector<cplx> line;  // one axis-line of the array
  std::vector<cplx> a;     // Bluestein convolution buffer
};

class Plan {
 public:
  explicit Plan(std::vector<index_t> factors);

  index_t size() const { return size_; }
  const std::vector<index_t>& factors() const { return factors_; }

  /// In-place transform of a size() array.  Scratch may be shared between
  /// calls on the same thread but not across threads.
  void execute(cplx* data, Scratch& scratch) const;

  Scratch make_scratch() const;

 private:
  struct Radix2 {
    index_t m = 0;
    std::vector<index_t> bitrev;
    std::vector<cplx> tw;  // tw[j] = exp(+2*pi*i*j/m), j < m/2

    void init(index_t m_);
    // sign +1: kernel exp(+2*pi*i*jk/m); sign -1: conjugated kernel
    void run(cplx* x, int sign) const;
  };

  struct Axis {
    index_t n = 0;
    bool pow2 = false;
    Radix2 fft;               // size n when pow2, else size m >= 2n-1
    std::vector<cplx> chirp;  // exp(+i*pi*k^2/n), k < n
    std::vector<cplx> bhat;   // forward FFT of the wrapped chirp filter
  };

  static void run_axis(const Axis& ax, cplx* x, Scratch& s);

  std::vector<index_t> factors_;
  std::vector<Axis> axes_;       // one per distinct factor value
  std::vector<int> axis_of_;     // factor position -> axes_ entry
  index_t size_ = 1;
};

/// Reference O(n^2) evaluation of the same transform, for tests.
std::vector<cplx> reference_transform(const std::vector<index_t>& factors,
                                      const std::vector<cplx>& in);

}  // namespace qwalk::fft
