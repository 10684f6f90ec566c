#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <vector>

#include "lrc/pattern.hpp"
#include "lrc/transfer.hpp"

namespace lrc {

// Seeded 64-bit generator. Stream s of seed x is mt19937_64 seeded with
// seed_seq{lo(x), hi(x), lo(s), hi(s)}, so streams never share a state.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);
  std::uint64_t next() { return eng_(); }
  // Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n);
  mpz_class below(const mpz_class& n);
  Rng split(std::uint64_t stream) const { return Rng(seed_, stream); }
  std::mt19937_64& engine() { return eng_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 eng_;
};

// Backward continuation counts for exact uniform walks of length m ending in
// the finish set of total a.
class SamplerPlan {
 public:
  SamplerPlan(const DerivedDigraph& Dx, std::size_t m, Elem a);
  const mpz_class& total() const { return total_; }
  // continuation(t, x): walks of t steps from x into the finish set.
  const mpz_class& continuation(std::size_t t, std::size_t x) const { return cont_[t][x]; }
  std::vector<Elem> draw(Rng& rng) const;

 private:
  const DerivedDigraph& Dx_;
  std::size_t m_;
  Elem a_;
  mpz_class total_;
  std::vector<std::vector<mpz_class>> cont_;
  std::vector<std::size_t> start_;
  std::vector<std::vector<Elem>> short_words_;
};

std::vector<std::vector<Elem>> sample_uniform(const DerivedDigraph& Dx, std::size_t m, Elem a,
                                              std::uint64_t seed, std::size_t count);

struct McmcState {
  std::vector<long> parts;
  long n = 0;
  Pattern tau;
  std::uint64_t steps = 0;
  Rng rng{0};
};

// One proposal (j, k) applied to x; returns x itself if rejected.
std::vector<long> mcmc_transition(const std::vector<long>& x, std::size_t j, std::size_t k,
                                  const Pattern& tau);
McmcState mcmc_init(long n, std::size_t m, const Pattern& tau, std::uint64_t seed);
void mcmc_step(McmcState& s);
inline std::uint64_t default_burn_in(std::size_t m) { return 100ull * m * m; }

}  // namespace lrc
