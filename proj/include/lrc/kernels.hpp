#pragma once

#include <cstddef>
#include <cstdint>

// Inner loops of the transfer-matrix iteration. Counts live in "limb planes":
// plane j holds 32-bit digit j of every entry, one digit per uint64 lane, so a
// plane can absorb the sum of up to 2^31 digits before a carry pass.
namespace lrc::simd {

enum class Isa { scalar, avx2, neon };

struct Kernels {
  Isa isa;
  const char* name;
  // dst[i] += src[i]
  void (*add_u64)(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
  // Row i of dst (width w) = sum of rows col[rp[i]..rp[i+1]) of src.
  void (*pull_u64)(const std::uint32_t* rp, const std::uint32_t* col, const std::uint64_t* src,
                   std::uint64_t* dst, std::size_t rows, std::size_t w);
  // hi[i] += lo[i] >> 32; lo[i] &= 0xffffffff. Returns the OR of all carries.
  std::uint64_t (*carry_u32)(std::uint64_t* lo, std::uint64_t* hi, std::size_t n);
  double (*dot_f64)(const double* a, const double* b, std::size_t n);
  // y += a * x
  void (*axpy_f64)(double a, const double* x, double* y, std::size_t n);
  void (*scale_f64)(double a, double* x, std::size_t n);
  double (*max_abs_diff_f64)(const double* a, const double* b, std::size_t n);
  void (*pull_f64)(const std::uint32_t* rp, const std::uint32_t* col, const double* src, double* dst,
                   std::size_t rows);
};

const Kernels& scalar_kernels();
// nullptr when the variant is not compiled in or the CPU lacks it.
const Kernels* avx2_kernels();
const Kernels* neon_kernels();

// Best available variant unless overridden by select() or LRC_ISA=scalar.
const Kernels& active();
void select(Isa isa);

}  // namespace lrc::simd
