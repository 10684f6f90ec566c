#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "lrc/kernels.hpp"

namespace lrc::simd {

#if !(defined(__x86_64__) || defined(_M_X64))
const Kernels* avx2_kernels() { return nullptr; }
#endif
#if !defined(__aarch64__)
const Kernels* neon_kernels() { return nullptr; }
#endif

namespace {

const Kernels* best() {
  const char* env = std::getenv("LRC_ISA");
  if (env && std::strcmp(env, "scalar") == 0) return &scalar_kernels();
  if (auto* k = avx2_kernels()) return k;
  if (auto* k = neon_kernels()) return k;
  return &scalar_kernels();
}

std::atomic<const Kernels*> current{nullptr};

}  // namespace

const Kernels& active() {
  const Kernels* k = current.load(std::memory_order_acquire);
  if (!k) {
    k = best();
    current.store(k, std::memory_order_release);
  }
  return *k;
}

void select(Isa isa) {
  const Kernels* k = nullptr;
  switch (isa) {
    case Isa::scalar: k = &scalar_kernels(); break;
    case Isa::avx2: k = avx2_kernels(); break;
    case Isa::neon: k = neon_kernels(); break;
  }
  if (!k) throw std::runtime_error("requested kernel variant is not available");
  current.store(k, std::memory_order_release);
}

}  // namespace lrc::simd
