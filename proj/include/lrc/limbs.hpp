#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "lrc/derived.hpp"
#include "lrc/kernels.hpp"

namespace lrc {

// Vector of nonnegative big integers stored as 32-bit digit planes.
class LimbVec {
 public:
  explicit LimbVec(std::size_t n = 0) : n_(n), planes_(1, std::vector<std::uint64_t>(n, 0)) {}

  std::size_t size() const { return n_; }
  std::size_t limbs() const { return planes_.size(); }
  std::vector<std::uint64_t>& plane(std::size_t j) { return planes_[j]; }
  const std::vector<std::uint64_t>& plane(std::size_t j) const { return planes_[j]; }

  void clear();
  void set(std::size_t i, std::uint32_t v) { planes_[0][i] = v; }
  void add_small(std::size_t i, std::uint32_t v) { planes_[0][i] += v; }
  bool zero(std::size_t i) const;

  // this = rows of src pulled through g (row width w); then normalized.
  void pull(const LimbVec& src, const Csr& g, std::size_t w, const simd::Kernels& k = simd::active());
  void normalize(const simd::Kernels& k = simd::active());

  mpz_class get(std::size_t i) const;
  // Sum of entries at the listed indices.
  mpz_class sum(const std::vector<std::size_t>& idx) const;

 private:
  std::size_t n_;
  std::vector<std::vector<std::uint64_t>> planes_;
};

mpz_class from_planes(const std::vector<std::uint64_t>& digits);

}  // namespace lrc
