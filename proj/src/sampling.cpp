#include "lrc/sampling.hpp"

#include <algorithm>

namespace lrc {

Rng::Rng(std::uint64_t seed, std::uint64_t stream) : seed_(seed) {
  std::seed_seq seq{std::uint32_t(seed), std::uint32_t(seed >> 32), std::uint32_t(stream),
                    std::uint32_t(stream >> 32)};
  eng_.seed(seq);
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("below(0)");
  // Rejection on the top multiple of n keeps the result exactly uniform.
  std::uint64_t lim = ~0ull - (~0ull % n);
  std::uint64_t x;
  do x = eng_();
  while (x >= lim);
  return x % n;
}

mpz_class Rng::below(const mpz_class& n) {
  if (n <= 0) throw std::invalid_argument("below(<=0)");
  std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  std::size_t words = (bits + 63) / 64;
  std::vector<std::uint64_t> buf(words);
  mpz_class x;
  do {
    for (auto& w : buf) w = eng_();
    if (bits % 64) buf.back() &= (1ull << (bits % 64)) - 1;
    mpz_import(x.get_mpz_t(), words, -1, sizeof(std::uint64_t), 0, 0, buf.data());
  } while (x >= n);
  return x;
}

SamplerPlan::SamplerPlan(const DerivedDigraph& Dx, std::size_t m, Elem a) : Dx_(Dx), m_(m), a_(a) {
  const auto& D = Dx.base();
  const auto& G = Dx.group();
  const std::size_t s = D.sigma();
  if (m < s) {
    // Short words: every word of length m is legal.
    std::vector<Elem> w(m, 0);
    while (true) {
      if (lrc::total(G, w) == a) short_words_.push_back(w);
      std::size_t i = m;
      while (i > 0 && w[i - 1] + 1 == G.order()) w[--i] = 0;
      if (i == 0) break;
      ++w[i - 1];
    }
    total_ = short_words_.size();
    if (total_ == 0) throw EmptyFamily("no legal compositions for this (m, total)");
    return;
  }
  const std::size_t T = m - s;
  Csr outc;
  outc.rp = Dx.out().rp;
  outc.col = Dx.out().col;
  LimbVec cur(Dx.size()), nxt(Dx.size());
  for (auto x : Dx.finish_set(a)) cur.set(x, 1);
  cont_.resize(T + 1);
  for (std::size_t t = 0;; ++t) {
    cont_[t].resize(Dx.size());
    for (std::size_t x = 0; x < Dx.size(); ++x) cont_[t][x] = cur.get(x);
    if (t == T) break;
    nxt.pull(cur, outc, 1);
    std::swap(cur, nxt);
  }
  start_ = Dx.start_set();
  total_ = 0;
  for (auto x : start_) total_ += cont_[T][x];
  if (total_ == 0) throw EmptyFamily("no legal compositions for this (m, total)");
}

std::vector<Elem> SamplerPlan::draw(Rng& rng) const {
  if (!short_words_.empty()) return short_words_[rng.below(std::uint64_t(short_words_.size()))];
  const auto& D = Dx_.base();
  const std::size_t T = m_ - D.sigma();
  mpz_class r = rng.below(total_);
  std::size_t x = start_.front();
  for (auto c : start_) {
    if (r < cont_[T][c]) {
      x = c;
      break;
    }
    r -= cont_[T][c];
  }
  std::vector<Elem> w = D.tuple(Dx_.vertex_of(x));
  for (std::size_t t = T; t > 0; --t) {
    mpz_class rr = rng.below(cont_[t][x]);
    const auto& o = Dx_.out();
    std::size_t pick = o.col[o.rp[x]];
    for (auto j = o.rp[x]; j < o.rp[x + 1]; ++j) {
      const auto& c = cont_[t - 1][o.col[j]];
      if (rr < c) {
        pick = o.col[j];
        break;
      }
      rr -= c;
    }
    x = pick;
    w.push_back(D.last(Dx_.vertex_of(x)));
  }
  return w;
}

std::vector<std::vector<Elem>> sample_uniform(const DerivedDigraph& Dx, std::size_t m, Elem a,
                                              std::uint64_t seed, std::size_t count) {
  SamplerPlan plan(Dx, m, a);
  Rng rng(seed);
  std::vector<std::vector<Elem>> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(plan.draw(rng));
  return out;
}

namespace {

// Does the window of tau's length starting at i match tau as a subword?
bool window_hits(const std::vector<long>& x, std::size_t i, const Pattern& tau) {
  const std::size_t L = tau.size();
  if (i + L > x.size()) return false;
  for (std::size_t a = 0; a < L; ++a)
    for (std::size_t b = a + 1; b < L; ++b) {
      int pw = (x[i + a] > x[i + b]) - (x[i + a] < x[i + b]);
      int pt = (tau.value[a] > tau.value[b]) - (tau.value[a] < tau.value[b]);
      if (pw != pt) return false;
    }
  return true;
}

bool clean_near(const std::vector<long>& x, std::size_t p, const Pattern& tau) {
  const std::size_t L = tau.size();
  std::size_t lo = p + 1 >= L ? p + 1 - L : 0;
  for (std::size_t i = lo; i <= p; ++i)
    if (window_hits(x, i, tau)) return false;
  return true;
}

}  // namespace

std::vector<long> mcmc_transition(const std::vector<long>& x, std::size_t j, std::size_t k,
                                  const Pattern& tau) {
  if (j == k || x[j] == 1) return x;
  std::vector<long> y = x;
  --y[j];
  ++y[k];
  // x avoids tau, so only windows through j or k can hit.
  if (clean_near(y, j, tau) && clean_near(y, k, tau)) return y;
  return x;
}

McmcState mcmc_init(long n, std::size_t m, const Pattern& tau, std::uint64_t seed) {
  if (m == 0 || n < long(m)) throw SpecError("mcmc needs n >= m >= 1");
  if (!tau.is_subword() || tau.size() < 3) throw SpecError("mcmc pattern must be a subword pattern of length >= 3");
  for (std::size_t a = 0; a < tau.size(); ++a)
    for (std::size_t b = 0; b < a; ++b)
      if (tau.value[a] == tau.value[b]) throw SpecError("mcmc pattern letters must be distinct");
  McmcState s;
  s.n = n;
  s.tau = tau;
  s.rng = Rng(seed);
  long q = n / long(m), r = n % long(m);
  for (std::size_t i = 0; i < m; ++i) s.parts.push_back(long(i) < r ? q + 1 : q);
  if (!avoids(s.parts, tau)) {
    std::sort(s.parts.begin(), s.parts.end(), std::greater<long>());
    if (!avoids(s.parts, tau)) throw SpecError("no two-size starting composition avoids the pattern");
  }
  return s;
}

void mcmc_step(McmcState& s) {
  const std::size_t m = s.parts.size();
  std::size_t j = std::size_t(s.rng.below(m)), k = std::size_t(s.rng.below(m));
  s.parts = mcmc_transition(s.parts, j, k, s.tau);
  ++s.steps;
}

}  // namespace lrc
