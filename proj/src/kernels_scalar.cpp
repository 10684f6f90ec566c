#include <cmath>

#include "lrc/kernels.hpp"

namespace lrc::simd {
namespace {

void add_u64(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] += src[i];
}

void pull_u64(const std::uint32_t* rp, const std::uint32_t* col, const std::uint64_t* src,
              std::uint64_t* dst, std::size_t rows, std::size_t w) {
  for (std::size_t i = 0; i < rows; ++i) {
    std::uint64_t* d = dst + i * w;
    for (std::size_t t = 0; t < w; ++t) d[t] = 0;
    for (std::uint32_t k = rp[i]; k < rp[i + 1]; ++k) {
      const std::uint64_t* s = src + std::size_t(col[k]) * w;
      for (std::size_t t = 0; t < w; ++t) d[t] += s[t];
    }
  }
}

std::uint64_t carry_u32(std::uint64_t* lo, std::uint64_t* hi, std::size_t n) {
  std::uint64_t any = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t c = lo[i] >> 32;
    hi[i] += c;
    lo[i] &= 0xffffffffu;
    any |= c;
  }
  return any;
}

double dot_f64(const double* a, const double* b, std::size_t n) {
  double s = 0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

void axpy_f64(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scale_f64(double a, double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

double max_abs_diff_f64(const double* a, const double* b, std::size_t n) {
  double m = 0;
  for (std::size_t i = 0; i < n; ++i) m = std::fmax(m, std::fabs(a[i] - b[i]));
  return m;
}

void pull_f64(const std::uint32_t* rp, const std::uint32_t* col, const double* src, double* dst,
              std::size_t rows) {
  for (std::size_t i = 0; i < rows; ++i) {
    double s = 0;
    for (std::uint32_t k = rp[i]; k < rp[i + 1]; ++k) s += src[col[k]];
    dst[i] = s;
  }
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels k{Isa::scalar, "scalar",  add_u64,          pull_u64, carry_u32, dot_f64,
                         axpy_f64,    scale_f64, max_abs_diff_f64, pull_f64};
  return k;
}

}  // namespace lrc::simd
