// Built with -mavx2 on x86-64 only; dispatch checks the CPU before use.
#include <immintrin.h>

#include <cmath>

#include "lrc/kernels.hpp"

namespace lrc::simd {
namespace {

void add_u64(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_add_epi64(a, b));
  }
  for (; i < n; ++i) dst[i] += src[i];
}

std::uint64_t hsum(__m256i v) {
  __m128i s = _mm_add_epi64(_mm256_castsi256_si128(v), _mm256_extracti128_si256(v, 1));
  return std::uint64_t(_mm_cvtsi128_si64(s)) + std::uint64_t(_mm_extract_epi64(s, 1));
}

void pull_u64(const std::uint32_t* rp, const std::uint32_t* col, const std::uint64_t* src,
              std::uint64_t* dst, std::size_t rows, std::size_t w) {
  auto base = reinterpret_cast<const long long*>(src);
  if (w == 1) {
    for (std::size_t i = 0; i < rows; ++i) {
      std::uint32_t k = rp[i], e = rp[i + 1];
      __m256i acc = _mm256_setzero_si256();
      for (; k + 4 <= e; k += 4) {
        __m128i idx = _mm_loadu_si128(reinterpret_cast<const __m128i*>(col + k));
        acc = _mm256_add_epi64(acc, _mm256_i32gather_epi64(base, idx, 8));
      }
      std::uint64_t s = hsum(acc);
      for (; k < e; ++k) s += src[col[k]];
      dst[i] = s;
    }
    return;
  }
  for (std::size_t i = 0; i < rows; ++i) {
    std::uint64_t* d = dst + i * w;
    std::size_t t = 0;
    for (; t + 4 <= w; t += 4) _mm256_storeu_si256(reinterpret_cast<__m256i*>(d + t), _mm256_setzero_si256());
    for (; t < w; ++t) d[t] = 0;
    for (std::uint32_t k = rp[i]; k < rp[i + 1]; ++k) add_u64(d, src + std::size_t(col[k]) * w, w);
  }
}

std::uint64_t carry_u32(std::uint64_t* lo, std::uint64_t* hi, std::size_t n) {
  const __m256i mask = _mm256_set1_epi64x(0xffffffffLL);
  __m256i any = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i l = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(lo + i));
    __m256i h = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(hi + i));
    __m256i c = _mm256_srli_epi64(l, 32);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(hi + i), _mm256_add_epi64(h, c));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(lo + i), _mm256_and_si256(l, mask));
    any = _mm256_or_si256(any, c);
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), any);
  std::uint64_t r = lanes[0] | lanes[1] | lanes[2] | lanes[3];
  for (; i < n; ++i) {
    std::uint64_t c = lo[i] >> 32;
    hi[i] += c;
    lo[i] &= 0xffffffffu;
    r |= c;
  }
  return r;
}

double hsum_pd(__m256d v) {
  __m128d s = _mm_add_pd(_mm256_castpd256_pd128(v), _mm256_extractf128_pd(v, 1));
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

double dot_f64(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  double s = hsum_pd(acc);
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

void axpy_f64(double a, const double* x, double* y, std::size_t n) {
  __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(y + i, _mm256_add_pd(_mm256_loadu_pd(y + i), _mm256_mul_pd(va, _mm256_loadu_pd(x + i))));
  for (; i < n; ++i) y[i] += a * x[i];
}

void scale_f64(double a, double* x, std::size_t n) {
  __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) _mm256_storeu_pd(x + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
  for (; i < n; ++i) x[i] *= a;
}

double max_abs_diff_f64(const double* a, const double* b, std::size_t n) {
  const __m256d sign = _mm256_set1_pd(-0.0);
  __m256d m = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    m = _mm256_max_pd(m, _mm256_andnot_pd(sign, _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i))));
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, m);
  double r = std::fmax(std::fmax(lanes[0], lanes[1]), std::fmax(lanes[2], lanes[3]));
  for (; i < n; ++i) r = std::fmax(r, std::fabs(a[i] - b[i]));
  return r;
}

void pull_f64(const std::uint32_t* rp, const std::uint32_t* col, const double* src, double* dst,
              std::size_t rows) {
  for (std::size_t i = 0; i < rows; ++i) {
    std::uint32_t k = rp[i], e = rp[i + 1];
    __m256d acc = _mm256_setzero_pd();
    for (; k + 4 <= e; k += 4) {
      __m128i idx = _mm_loadu_si128(reinterpret_cast<const __m128i*>(col + k));
      acc = _mm256_add_pd(acc, _mm256_i32gather_pd(src, idx, 8));
    }
    double s = hsum_pd(acc);
    for (; k < e; ++k) s += src[col[k]];
    dst[i] = s;
  }
}

}  // namespace

const Kernels* avx2_kernels() {
  static const Kernels k{Isa::avx2, "avx2",    add_u64,          pull_u64, carry_u32, dot_f64,
                         axpy_f64,  scale_f64, max_abs_diff_f64, pull_f64};
  static const bool ok = __builtin_cpu_supports("avx2");
  return ok ? &k : nullptr;
}

}  // namespace lrc::simd
