#include "qwalk/fft.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "qwalk/graphs.hpp"

namespace qwalk::fft {

namespace {

bool is_pow2(index_t n) { return n >= 1 && (n & (n - 1)) == 0; }

index_t next_pow2(index_t n) {
  index_t m = 1;
  while (m < n) m <<= 1;
  return m;
}

// exp(+i*pi*k^2/n) with the exponent reduced exactly: k^2 mod 2n.
cplx chirp_unit(index_t k, index_t n) {
  const index_t r = (k * k) % (2 * n);
  const double theta =
      pi * static_cast<double>(r) / static_cast<double>(n);
  return {std::cos(theta), std::sin(theta)};
}

}  // namespace

void Plan::Radix2::init(index_t m_) {
  m = m_;
  index_t logm = 0;
  while ((index_t{1} << logm) < m) ++logm;
  bitrev.assign(static_cast<std::size_t>(m), 0);
  for (index_t i = 0; i < m; ++i) {
    index_t r = 0;
    for (index_t b = 0; b < logm; ++b)
      r |= ((i >> b) & 1) << (logm - 1 - b);
    bitrev[static_cast<std::size_t>(i)] = r;
  }
  tw.resize(static_cast<std::size_t>(m / 2));
  for (index_t j = 0; j < m / 2; ++j) {
    const double theta = two_pi * static_cast<double>(j) / static_cast<double>(m);
    tw[static_cast<std::size_t>(j)] = {std::cos(theta), std::sin(theta)};
  }
}

void Plan::Radix2::run(cplx* x, int sign) const {
  for (index_t i = 0; i < m; ++i) {
    const index_t r = bitrev[static_cast<std::size_t>(i)];
    if (r > i) std::swap(x[i], x[r]);
  }
  for (index_t len = 2; len <= m; len <<= 1) {
    const index_t half = len >> 1;
    const index_t step = m / len;
    for (index_t base = 0; base < m; base += len) {
      for (index_t j = 0; j < half; ++j) {
        cplx w = tw[static_cast<std::size_t>(j * step)];
        if (sign < 0) w = std::conj(w);
        const cplx u = x[base + j];
        const cplx v = x[base + j + half] * w;
        x[base + j] = u + v;
        x[base + j + half] = u - v;
      }
    }
  }
}

Plan::Plan(std::vector<index_t> factors) : factors_(std::move(factors)) {
  axis_of_.assign(factors_.size(), -1);
  for (std::size_t p = 0; p < factors_.size(); ++p) {
    const index_t n = factors_[p];
    if (n < 1) throw std::invalid_argument("fft::Plan: factor must be >= 1");
    size_ *= n;
    for (std::size_t q = 0; q < axes_.size(); ++q)
      if (axes_[q].n == n) axis_of_[p] = static_cast<int>(q);
    if (axis_of_[p] >= 0 || n == 1) continue;

    Axis ax;
    ax.n = n;
    ax.pow2 = is_pow2(n);
    if (ax.pow2) {
      ax.fft.init(n);
    } else {
      const index_t m = next_pow2(2 * n - 1);
      ax.fft.init(m);
      ax.chirp.resize(static_cast<std::size_t>(n));
      for (index_t k = 0; k < n; ++k)
        ax.chirp[static_cast<std::size_t>(k)] = chirp_unit(k, n);
      std::vector<cplx> b(static_cast<std::size_t>(m), cplx{0.0, 0.0});
      b[0] = std::conj(ax.chirp[0]);
      for (index_t r = 1; r < n; ++r) {
        const cplx v = std::conj(ax.chirp[static_cast<std::size_t>(r)]);
        b[static_cast<std::size_t>(r)] = v;
        b[static_cast<std::size_t>(m - r)] = v;
      }
      ax.fft.run(b.data(), -1);
      ax.bhat = std::move(b);
    }
    axis_of_[p] = static_cast<int>(axes_.size());
    axes_.push_back(std::move(ax));
  }
}

Scratch Plan::make_scratch() const {
  Scratch s;
  index_t max_n = 1, max_m = 0;
  for (const auto& ax : axes_) {
    max_n = std::max(max_n, ax.n);
    if (!ax.pow2) max_m = std::max(max_m, ax.fft.m);
  }
  s.line.resize(static_cast<std::size_t>(max_n));
  s.a.resize(static_cast<std::size_t>(max_m));
  return s;
}

void Plan::run_axis(const Axis& ax, cplx* x, Scratch& s) {
  if (ax.pow2) {
    ax.fft.run(x, +1);
    return;
  }
  const index_t n = ax.n, m = ax.fft.m;
  cplx* a = s.a.data();
  for (index_t k = 0; k < n; ++k) a[k] = x[k] * ax.chirp[static_cast<std::size_t>(k)];
  std::fill(a + n, a + m, cplx{0.0, 0.0});
  ax.fft.run(a, -1);
  for (index_t j = 0; j < m; ++j) a[j] *= ax.bhat[static_cast<std::size_t>(j)];
  ax.fft.run(a, +1);
  const double scale = 1.0 / static_cast<double>(m);
  for (index_t j = 0; j < n; ++j)
    x[j] = a[j] * ax.chirp[static_cast<std::size_t>(j)] * scale;
}

void Plan::execute(cplx* data, Scratch& scratch) const {
  index_t stride = size_;
  for (std::size_t p = 0; p < factors_.size(); ++p) {
    const index_t n = factors_[p];
    stride /= n;
    if (n == 1) continue;
    const Axis& ax = axes_[static_cast<std::size_t>(axis_of_[p])];
    const index_t block = n * stride;
    for (index_t outer = 0; outer < size_; outer += block) {
      for (index_t inner = 0; inner < stride; ++inner) {
        cplx* base = data + outer + inner;
        if (stride == 1) {
          run_axis(ax, base, scratch);
          continue;
        }
        cplx* line = scratch.line.data();
        for (index_t k = 0; k < n; ++k) line[k] = base[k * stride];
        run_axis(ax, line, scratch);
        for (index_t k = 0; k < n; ++k) base[k * stride] = line[k];
      }
    }
  }
}

std::vector<cplx> reference_transform(const std::vector<index_t>& factors,
                                      const std::vector<cplx>& in) {
  const index_t n = group_order(factors);
  std::vector<cplx> out(static_cast<std::size_t>(n), cplx{0.0, 0.0});
  for (index_t j = 0; j < n; ++j) {
    const auto jt = rank_tuple(factors, j);
    cplx acc{0.0, 0.0};
    for (index_t k = 0; k < n; ++k)
      acc += in[static_cast<std::size_t>(k)] *
             character(factors, jt, rank_tuple(factors, k));
    out[static_cast<std::size_t>(j)] = acc;
  }
  return out;
}

}  // namespace qwalk::fft
