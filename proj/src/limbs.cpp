#include "lrc/limbs.hpp"

namespace lrc {

void LimbVec::clear() {
  planes_.resize(1);
  std::fill(planes_[0].begin(), planes_[0].end(), 0);
}

bool LimbVec::zero(std::size_t i) const {
  for (auto& p : planes_)
    if (p[i]) return false;
  return true;
}

void LimbVec::pull(const LimbVec& src, const Csr& g, std::size_t w, const simd::Kernels& k) {
  if (src.n_ != g.rows() * w) throw std::logic_error("pull: size mismatch");
  n_ = src.n_;
  planes_.resize(src.limbs());
  for (std::size_t j = 0; j < src.limbs(); ++j) {
    planes_[j].resize(n_);
    k.pull_u64(g.rp.data(), g.col.data(), src.planes_[j].data(), planes_[j].data(), g.rows(), w);
  }
  normalize(k);
}

void LimbVec::normalize(const simd::Kernels& k) {
  for (std::size_t j = 0; j < planes_.size(); ++j) {
    if (j + 1 == planes_.size()) {
      std::vector<std::uint64_t> top(n_, 0);
      if (k.carry_u32(planes_[j].data(), top.data(), n_)) planes_.push_back(std::move(top));
    } else {
      k.carry_u32(planes_[j].data(), planes_[j + 1].data(), n_);
    }
  }
  while (planes_.size() > 1) {
    bool nz = false;
    for (auto v : planes_.back())
      if (v) {
        nz = true;
        break;
      }
    if (nz) break;
    planes_.pop_back();
  }
}

mpz_class from_planes(const std::vector<std::uint64_t>& digits) {
  // Digits may exceed 32 bits (unnormalized sums); fold them with shifts.
  mpz_class r = 0, t;
  for (std::size_t j = digits.size(); j-- > 0;) {
    r <<= 32;
    mpz_import(t.get_mpz_t(), 1, 1, sizeof(std::uint64_t), 0, 0, &digits[j]);
    r += t;
  }
  return r;
}

mpz_class LimbVec::get(std::size_t i) const {
  std::vector<std::uint32_t> d(planes_.size());
  for (std::size_t j = 0; j < planes_.size(); ++j) d[j] = std::uint32_t(planes_[j][i]);
  mpz_class r;
  mpz_import(r.get_mpz_t(), d.size(), -1, sizeof(std::uint32_t), 0, 0, d.data());
  return r;
}

mpz_class LimbVec::sum(const std::vector<std::size_t>& idx) const {
  std::vector<std::uint64_t> acc(planes_.size(), 0);
  for (std::size_t j = 0; j < planes_.size(); ++j)
    for (auto i : idx) acc[j] += planes_[j][i];
  return from_planes(acc);
}

}  // namespace lrc
