// Compiled on aarch64 only. Float kernels reuse the scalar loops.
#include <arm_neon.h>

#include "lrc/kernels.hpp"

namespace lrc::simd {
namespace {

void add_u64(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_u64(dst + i, vaddq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
  for (; i < n; ++i) dst[i] += src[i];
}

void pull_u64(const std::uint32_t* rp, const std::uint32_t* col, const std::uint64_t* src,
              std::uint64_t* dst, std::size_t rows, std::size_t w) {
  for (std::size_t i = 0; i < rows; ++i) {
    std::uint64_t* d = dst + i * w;
    for (std::size_t t = 0; t < w; ++t) d[t] = 0;
    for (std::uint32_t k = rp[i]; k < rp[i + 1]; ++k) add_u64(d, src + std::size_t(col[k]) * w, w);
  }
}

std::uint64_t carry_u32(std::uint64_t* lo, std::uint64_t* hi, std::size_t n) {
  const uint64x2_t mask = vdupq_n_u64(0xffffffffu);
  uint64x2_t any = vdupq_n_u64(0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    uint64x2_t l = vld1q_u64(lo + i);
    uint64x2_t c = vshrq_n_u64(l, 32);
    vst1q_u64(hi + i, vaddq_u64(vld1q_u64(hi + i), c));
    vst1q_u64(lo + i, vandq_u64(l, mask));
    any = vorrq_u64(any, c);
  }
  std::uint64_t r = vgetq_lane_u64(any, 0) | vgetq_lane_u64(any, 1);
  for (; i < n; ++i) {
    std::uint64_t c = lo[i] >> 32;
    hi[i] += c;
    lo[i] &= 0xffffffffu;
    r |= c;
  }
  return r;
}

}  // namespace

const Kernels* neon_kernels() {
  const Kernels& s = scalar_kernels();
  static const Kernels k{Isa::neon,   "neon",      add_u64,      pull_u64, carry_u32, s.dot_f64,
                         s.axpy_f64, s.scale_f64, s.max_abs_diff_f64, s.pull_f64};
  return &k;
}

}  // namespace lrc::simd
