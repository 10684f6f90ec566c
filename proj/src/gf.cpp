#include "lrc/gf.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>

#include "lrc/group.hpp"

namespace lrc {

namespace {

using S = TruncatedSeries;

S mono(const S& like, int i, int j, long c = 1) { return S::mono(like.n_max(), like.m_max(), i, j, c); }
S one(int N, int M) { return S::one(N, M); }

// 1 / (1 - c z^i u^j)
S geometric(int N, int M, int i, int j) { return (one(N, M) - S::mono(N, M, i, j)).inverse(); }

}  // namespace

mpz_class binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

S gf_pair_112_123(int N, int M) {
  S p = geometric(N, M, 1, 1);
  S inner = one(N, M);  // prod_{j<i} (1 + u z^j)
  for (int i = 2; i <= N; ++i) {
    inner = inner * (one(N, M) + S::mono(N, M, i - 1, 1));
    p = p * (one(N, M) - (inner.shifted(i, 1))).inverse();
  }
  return p;
}

std::vector<mpz_class> pair_212_212p_row(int k, int M) {
  if (k < 0 || M < 0) throw SpecError("k and m must be nonnegative");
  std::vector<mpz_class> p(M + 1, 0), q(M + 1);
  p[0] = 1;
  for (int level = 1; level <= k; ++level) {
    // sum_{b=1}^m (m-b+1) p(m-b) = sum_{j<m} (j+1) p(j)
    mpz_class acc = 0;
    for (int m = 0; m <= M; ++m) {
      q[m] = p[m] + acc;
      acc += p[m] * (m + 1);
    }
    p.swap(q);
  }
  return p;
}

mpz_class count_pair_212_212p(int k, int m) { return pair_212_212p_row(k, m)[m]; }

namespace {

// P_A and P_A(i|.) over subsets of [N], bit i-1 standing for part i.
class Pair112121 {
 public:
  Pair112121(int N, int M) : N_(N), M_(M) {}

  const S& whole(std::uint32_t A) {
    auto it = whole_.find(A);
    if (it != whole_.end()) return it->second;
    S r = one(N_, M_);
    for (int i = 1; i <= N_; ++i)
      if (A >> (i - 1) & 1) r += starting(A, i);
    return whole_.emplace(A, std::move(r)).first->second;
  }

  const S& starting(std::uint32_t A, int i) {
    auto key = std::make_pair(A, i);
    auto it = start_.find(key);
    if (it != start_.end()) return it->second;
    S below = one(N_, M_);  // 1 + sum_{j<i} P_A(j)
    for (int j = 1; j < i; ++j)
      if (A >> (j - 1) & 1) below += starting(A, j);
    const std::uint32_t le = A & ((i >= 32) ? ~0u : ((1u << i) - 1));
    S r(N_, M_);
    if (le == A) {
      // i = max(A): M(A,i) = A, so P_A(i) appears on both sides;
      // P_A(i) = (z^i u + z^{2i} u^2)(1 + sum_{j<i} P_A(j)) / (1 - z^{2i} u^2).
      r = (below.shifted(i, 1) + below.shifted(2 * i, 2)) * geometric(N_, M_, 2 * i, 2);
    } else {
      r = below.shifted(i, 1) + whole(le).shifted(2 * i, 2);
      const std::uint32_t without = A & ~(1u << (i - 1));
      S above(N_, M_);
      for (int j = i + 1; j <= N_; ++j)
        if (A >> (j - 1) & 1) above += starting(without, j);
      r += above.shifted(i, 1);
    }
    return start_.emplace(key, std::move(r)).first->second;
  }

 private:
  int N_, M_;
  std::map<std::uint32_t, S> whole_;
  std::map<std::pair<std::uint32_t, int>, S> start_;
};

}  // namespace

S gf_pair_112_121(const std::vector<int>& A, int N, int M) {
  std::uint32_t mask = 0;
  for (int a : A) {
    if (a <= 0) throw SpecError("parts must be positive");
    if (a <= N) {
      if (a > 24) throw CapError("part set too large for the subset recursion");
      mask |= 1u << (a - 1);
    }
  }
  if (A.empty()) throw SpecError("part set must be nonempty");
  Pair112121 rec(N, M);
  return rec.whole(mask);
}

std::vector<mpz_class> pair_123_321_row(int k, int M) {
  if (k < 1) throw SpecError("k must be >= 1");
  const S f = mono(S(M, 0), 1, 0) * geometric(M, 0, 1, 0);  // z/(1-z)
  S p = geometric(M, 0, 1, 0);
  for (int j = 2; j <= k; ++j) {
    const long c = j - 1;
    S g = one(M, 0) + f * mpz_class(c) + f * f * mpz_class(c * (c - 1) / 2);
    S h = f * mpz_class(c);
    p += g * g * f * (one(M, 0) - h * f).inverse();
  }
  std::vector<mpz_class> row(M + 1);
  for (int m = 0; m <= M; ++m) row[m] = p.at(m);
  return row;
}

mpz_class count_pair_123_321(int k, int m) { return pair_123_321_row(k, m)[m]; }

namespace {

// Ways to place b copies of k among m letters for the POP 2^p-1'..1^(q)-2^r.
mpz_class pop_placements(int p, int q, int r, int m, int b) {
  if (b < p + r || b > m - q) return binomial(m, b);
  const int Mk = b - (p - 1) - (r - 1);
  mpz_class s = 0;
  for (int t = Mk; t <= Mk + q - 1; ++t) s += binomial(t - 2, Mk - 2) * binomial(m - t + 1, p + r - 1);
  return s;
}

void check_pop(int p, int q, int r, int k) {
  if (p < 1 || q < 1 || r < 1) throw SpecError("p, q, r must be >= 1");
  if (k < 1) throw SpecError("k must be >= 1");
}

}  // namespace

std::vector<std::vector<mpz_class>> pop_general_table(int p, int q, int r, int k, int N, int M) {
  check_pop(p, q, r, k);
  std::vector<std::vector<mpz_class>> h(N + 1, std::vector<mpz_class>(M + 1, 0)), g = h;
  for (int n = 0; n <= std::min(N, M); ++n) h[n][n] = 1;
  std::vector<std::vector<mpz_class>> coef(M + 1);
  for (int m = 0; m <= M; ++m)
    for (int b = 0; b <= m; ++b) coef[m].push_back(pop_placements(p, q, r, m, b));
  for (int level = 2; level <= k; ++level) {
    for (int n = 0; n <= N; ++n)
      for (int m = 0; m <= M; ++m) {
        mpz_class s = 0;
        for (int b = 0; b <= m && n - b * level >= 0; ++b) s += coef[m][b] * h[n - b * level][m - b];
        g[n][m] = s;
      }
    h.swap(g);
  }
  return h;
}

mpz_class count_pop_general(int p, int q, int r, int k, int n, int m) {
  if (n < 0 || m < 0) return 0;
  return pop_general_table(p, q, r, k, n, m)[n][m];
}

mpz_class count_pop_general_words(int p, int q, int r, int k, int m) {
  check_pop(p, q, r, k);
  if (m < 0) return 0;
  std::vector<mpz_class> h(m + 1, 1), g(m + 1);
  for (int level = 2; level <= k; ++level) {
    for (int j = 0; j <= m; ++j) {
      mpz_class s = 0;
      for (int b = 0; b <= j; ++b) s += pop_placements(p, q, r, j, b) * h[j - b];
      g[j] = s;
    }
    h.swap(g);
  }
  return h[m];
}

std::vector<mpz_class> pop_2112_words_row(int k, int M) {
  if (k < 1) throw SpecError("k must be >= 1");
  const S inv1 = geometric(M, 0, 1, 0);
  const S zz = mono(inv1, 2, 0) * inv1 * inv1;  // z^2/(1-z)^2
  S h = inv1;
  for (int level = 2; level <= k; ++level) h = h * inv1 + zz * h.dz();
  std::vector<mpz_class> row(M + 1);
  for (int m = 0; m <= M; ++m) row[m] = h.at(m);
  return row;
}

mpz_class count_pop_2112_words(int k, int m) { return pop_2112_words_row(k, m)[m]; }

std::vector<std::vector<mpz_class>> pop_p0_table(int q, int r, int k, int N, int M) {
  if (q < 1 || r < 1) throw SpecError("q, r must be >= 1");
  if (k < 1) throw SpecError("k must be >= 1");
  using Table = std::vector<std::vector<mpz_class>>;
  Table h(N + 1, std::vector<mpz_class>(M + 1, 0));
  for (int n = 0; n <= std::min(N, M); ++n) h[n][n] = 1;
  auto at = [&](const Table& t, int n, int m) -> mpz_class {
    return (n < 0 || m < 0) ? mpz_class(0) : t[n][m];
  };
  for (int level = 2; level <= k; ++level) {
    // nc[n][m]: m-compositions of n over [level]
    Table nc(N + 1, std::vector<mpz_class>(M + 1, 0));
    nc[0][0] = 1;
    for (int m = 1; m <= M; ++m)
      for (int n = 0; n <= N; ++n)
        for (int part = 1; part <= level && part <= n; ++part) nc[n][m] += nc[n - part][m - 1];
    Table g(N + 1, std::vector<mpz_class>(M + 1, 0));
    for (int m = 0; m <= M; ++m)
      for (int n = 0; n <= N; ++n) {
        if (m < q + r) {
          g[n][m] = nc[n][m];
          continue;
        }
        mpz_class s = 0;
        for (int j = 1; j <= q; ++j) {
          mpz_class t = binomial(q, j) * at(g, n - j * level, m - j);
          if (j % 2) s += t; else s -= t;
        }
        for (int b = 0; b <= r - 1; ++b) s += binomial(m - q, b) * at(h, n - b * level, m - b);
        g[n][m] = s;
      }
    h.swap(g);
  }
  return h;
}

mpz_class count_pop_p0(int q, int r, int k, int n, int m) {
  if (n < 0 || m < 0) return 0;
  return pop_p0_table(q, r, k, n, m)[n][m];
}

std::vector<std::vector<mpz_class>> zk_avoiding_121_table(int k, int M) {
  if (k < 2) throw SpecError("k must be >= 2");
  if (M < 0) throw SpecError("m must be nonnegative");
  const int N = k * M;
  // suffix[d] = prod_{b=d}^k (1 - x^b y)^2
  std::vector<S> suffix(k + 2, one(N, M));
  for (int d = k; d >= 1; --d) {
    S f = one(N, M) - S::mono(N, M, d, 1);
    suffix[d] = suffix[d + 1] * f * f;
  }
  S p = suffix[1].inverse();
  for (int d = 1; d <= k; ++d) p -= suffix[d].inverse().shifted(d, 1);
  std::vector<std::vector<mpz_class>> t(k, std::vector<mpz_class>(M + 1, 0));
  for (int n = 0; n <= N; ++n)
    for (int m = 0; m <= M; ++m) t[n % k][m] += p.at(n, m);
  return t;
}

mpz_class count_zk_avoiding_121(int k, int a, int m) {
  if (a < 0 || a >= k) throw SpecError("residue out of range");
  return zk_avoiding_121_table(k, m)[a][m];
}

S gf_cyclic_122(int k, int N, int M) {
  if (k < 1) throw SpecError("k must be >= 1");
  k = std::min(k, std::max(N, 1));  // parts above N are invisible
  S c = mono(S(N, M), 1, 1) * geometric(N, M, 1, 1);
  for (int level = 2; level <= k; ++level) {
    // P_{level-1}: nonempty 122-avoiding compositions over [level-1]
    S sum(N, M);
    for (int j = 1; j <= level - 1; ++j) {
      S prod = one(N, M);
      for (int i = j + 1; i <= level - 1; ++i) prod = prod * (one(N, M) - S::mono(N, M, 2 * i, 2));
      sum += prod.shifted(j, 1);
    }
    const S p = (one(N, M) - sum).inverse() - one(N, M);
    c += S::mono(N, M, level, 1) * geometric(N, M, level, 1);
    c += (one(N, M) - p.shifted(level, 1)).inverse().shifted(level, 1) * p.u_du_plus_1();
  }
  return c;
}

S gf_no_321_no_initial_descent(int k, int N, int M) {
  if (k < 1) throw SpecError("k must be >= 1");
  k = std::min(k, std::max(N, 1));
  S q = geometric(N, M, 1, 1);
  for (int level = 2; level <= k; ++level) {
    const S g = geometric(N, M, level, 1);
    const S a = g.shifted(level, 1);
    const S b = g.shifted(2 * level, 2);
    q = S::mono(N, M, level, 1) + q * (one(N, M) + b) * (one(N, M) - (q - one(N, M)) * a).inverse();
  }
  return q;
}

S gf_cyclic_321(int k, int N, int M) {
  if (k < 1) throw SpecError("k must be >= 1");
  k = std::min(k, std::max(N, 1));
  S c = mono(S(N, M), 1, 1) * geometric(N, M, 1, 1);
  S prev = geometric(N, M, 1, 1);  // Q_{level-1}
  for (int level = 2; level <= k; ++level) {
    const S g = geometric(N, M, level, 1);
    const S b = g.shifted(2 * level, 2);
    const S a = g.shifted(level, 1);
    const S cur = S::mono(N, M, level, 1) + prev * (one(N, M) + b) * (one(N, M) - (prev - one(N, M)) * a).inverse();
    // W: compositions sigma' with k sigma' k avoiding 321 and no descent at the k's
    const S w = (cur - S::mono(N, M, level, 1)) * (one(N, M) + b).inverse() * g;
    const S tail = prev.u_du_plus_1();
    c += (w * tail).shifted(2 * level, 2) + tail.shifted(level, 1);
    prev = cur;
  }
  return c;
}

}  // namespace lrc
