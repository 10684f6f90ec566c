#include "lrc/cyclic.hpp"

#include <algorithm>

namespace lrc {

bool cyclic_legal(const DeBruijnSubgraph& D, const std::vector<Elem>& x) {
  const std::size_t m = x.size(), s = D.sigma(), k = D.group().order();
  if (m == 0) return true;
  std::vector<long> win(m);
  for (std::size_t i = 0; i < m; ++i) {
    DeBruijnSubgraph::Code c = 0;
    for (std::size_t j = 0; j < s; ++j) c = c * k + x[(i + j) % m];
    win[i] = D.index_of(c);
    if (win[i] < 0) return false;
  }
  if (D.explicit_arcs())
    for (std::size_t i = 0; i < m; ++i)
      if (!D.has_arc(std::size_t(win[i]), std::size_t(win[(i + 1) % m]))) return false;
  return true;
}

namespace {

// Every word of G^m, visited in lexicographic order.
template <class F>
void for_each_word(std::size_t k, std::size_t m, F f) {
  std::vector<Elem> w(m, 0);
  while (true) {
    f(w);
    std::size_t i = m;
    while (i > 0 && w[i - 1] + 1 == k) w[--i] = 0;
    if (i == 0) return;
    ++w[i - 1];
  }
}

// result[total][r]: for each start vertex v, walk m-1 steps from (v, sum v) and
// close through an in-neighbour of v. With marks, r counts marked windows.
std::vector<std::vector<mpz_class>> cyclic_core(const DerivedDigraph& Dx, std::size_t m,
                                                const std::vector<char>* mark, std::size_t R) {
  const auto& D = Dx.base();
  const auto& G = Dx.group();
  const std::size_t k = G.order(), nv = D.size();
  std::vector<std::vector<mpz_class>> res(k, std::vector<mpz_class>(R, 0));
  std::vector<Elem> pre(nv);  // fold of the first sigma-1 letters
  for (std::size_t v = 0; v < nv; ++v) {
    auto t = D.tuple(v);
    t.pop_back();
    pre[v] = total(G, t);
  }
  const std::size_t batch = std::max<std::size_t>(1, std::min<std::size_t>(nv, 64));
  for (std::size_t v0 = 0; v0 < nv; v0 += batch) {
    const std::size_t B = std::min(batch, nv - v0), W = B * R;
    LimbVec cur(Dx.size() * W), nxt(Dx.size() * W);
    for (std::size_t b = 0; b < B; ++b) {
      std::size_t v = v0 + b, r = mark ? std::size_t((*mark)[v]) : 0;
      if (r < R) cur.set(Dx.id(v, D.vsum(v)) * W + b * R + r, 1);
    }
    for (std::size_t step = 0; step + 1 < m; ++step) {
      nxt.pull(cur, Dx.in(), W);
      if (mark)
        for (std::size_t x = 0; x < Dx.size(); ++x) {
          if (!(*mark)[Dx.vertex_of(x)]) continue;
          for (std::size_t j = 0; j < nxt.limbs(); ++j)
            for (std::size_t b = 0; b < B; ++b) {
              auto* row = nxt.plane(j).data() + x * W + b * R;
              for (std::size_t r = R; r-- > 1;) row[r] = row[r - 1];
              row[0] = 0;
            }
        }
      std::swap(cur, nxt);
    }
    std::vector<std::size_t> idx;
    for (Elem a = 0; a < k; ++a)
      for (std::size_t r = 0; r < R; ++r) {
        idx.clear();
        for (std::size_t b = 0; b < B; ++b) {
          std::size_t v = v0 + b;
          Elem t = G.op(a, pre[v]);
          for (auto j = D.in_rp()[v]; j < D.in_rp()[v + 1]; ++j)
            idx.push_back(Dx.id(D.in_col()[j], t) * W + b * R + r);
        }
        res[a][r] += cur.sum(idx);
      }
  }
  return res;
}

}  // namespace

std::vector<mpz_class> count_cyclic_all(const DerivedDigraph& Dx, std::size_t m) {
  const auto& D = Dx.base();
  const auto& G = Dx.group();
  std::vector<mpz_class> out(G.order(), 0);
  if (m == 0) throw SpecError("cyclic counts need m >= 1");
  if (m < D.sigma()) {
    for_each_word(G.order(), m, [&](const std::vector<Elem>& w) {
      if (cyclic_legal(D, w)) ++out[total(G, w)];
    });
    return out;
  }
  auto t = cyclic_core(Dx, m, nullptr, 1);
  for (Elem a = 0; a < G.order(); ++a) out[a] = t[a][0];
  return out;
}

mpz_class count_cyclic(const DerivedDigraph& Dx, std::size_t m, Elem a) {
  return count_cyclic_all(Dx, m).at(a);
}

std::vector<std::vector<mpz_class>> cyclic_occurrence_table(const DerivedDigraph& Dx,
                                                            const std::vector<std::vector<Elem>>& U,
                                                            std::size_t m) {
  const auto& D = Dx.base();
  const auto& G = Dx.group();
  if (m == 0) throw SpecError("cyclic counts need m >= 1");
  auto mark = mark_tuples(D, U);
  if (m >= D.sigma()) return cyclic_core(Dx, m, &mark, m + 1);
  std::vector<std::vector<mpz_class>> res(G.order(), std::vector<mpz_class>(m + 1, 0));
  const std::size_t s = D.sigma(), k = G.order();
  for_each_word(k, m, [&](const std::vector<Elem>& w) {
    if (!cyclic_legal(D, w)) return;
    std::size_t r = 0;
    for (std::size_t i = 0; i < m; ++i) {
      DeBruijnSubgraph::Code c = 0;
      for (std::size_t j = 0; j < s; ++j) c = c * k + w[(i + j) % m];
      r += std::size_t(mark[std::size_t(D.index_of(c))]);
    }
    ++res[total(G, w)][r];
  });
  return res;
}

Moments occurrence_moments_cyclic(const DerivedDigraph& Dx, const std::vector<std::vector<Elem>>& U,
                                  std::size_t m, Elem a) {
  if (U.empty()) return {0, 0};
  return moments_of(cyclic_occurrence_table(Dx, U, m).at(a));
}

bool MoebiusCache::leq(PosetPoint lo, PosetPoint hi) const {
  return lo.d != 0 && hi.d % lo.d == 0 && g_.power(lo.b, hi.d / lo.d) == hi.b;
}

std::vector<PosetPoint> MoebiusCache::down_set(PosetPoint hi) const {
  std::vector<PosetPoint> out;
  for (std::uint64_t d = 1; d <= hi.d; ++d) {
    if (hi.d % d) continue;
    for (Elem b = 0; b < g_.order(); ++b)
      if (g_.power(b, hi.d / d) == hi.b) out.push_back({d, b});
  }
  return out;
}

long MoebiusCache::mu(PosetPoint lo, PosetPoint hi) {
  if (!leq(lo, hi)) throw SpecError("moebius_P: points are not comparable");
  if (lo == hi) return 1;
  {
    std::lock_guard<std::mutex> g(mu_lock_);
    auto it = memo_.find({lo, hi});
    if (it != memo_.end()) return it->second;
  }
  // mu(lo, hi) = -sum over lo <= r < hi of mu(lo, r).
  long s = 0;
  for (std::uint64_t e = lo.d; e < hi.d || e == hi.d; e += lo.d) {
    if (hi.d % e) continue;
    PosetPoint r{e, g_.power(lo.b, e / lo.d)};
    if (r == hi || !leq(r, hi)) continue;
    s += mu(lo, r);
  }
  std::lock_guard<std::mutex> g(mu_lock_);
  memo_.emplace(std::make_pair(lo, hi), -s);
  return -s;
}

std::size_t MoebiusCache::cached() const {
  std::lock_guard<std::mutex> g(mu_lock_);
  return memo_.size();
}

long moebius_P(const FiniteGroup& g, PosetPoint lo, PosetPoint hi) {
  MoebiusCache c(g);
  return c.mu(lo, hi);
}

namespace {

void require_abelian(const FiniteGroup& g) {
  if (!g.abelian()) throw SpecError("circular and palindromic counts need an abelian group");
}

}  // namespace

std::vector<mpz_class> count_aperiodic_all(const DerivedDigraph& Dx, std::size_t m) {
  const auto& G = Dx.group();
  require_abelian(G);
  MoebiusCache mc(G);
  std::map<std::uint64_t, std::vector<mpz_class>> cyc;
  std::vector<mpz_class> out(G.order(), 0);
  for (Elem a = 0; a < G.order(); ++a)
    for (auto p : mc.down_set({m, a})) {
      auto it = cyc.find(p.d);
      if (it == cyc.end()) it = cyc.emplace(p.d, count_cyclic_all(Dx, p.d)).first;
      out[a] += it->second[p.b] * mc.mu(p, {m, a});
    }
  return out;
}

std::vector<mpz_class> count_circular_all(const DerivedDigraph& Dx, std::size_t m) {
  const auto& G = Dx.group();
  require_abelian(G);
  MoebiusCache mc(G);
  std::map<std::uint64_t, std::vector<mpz_class>> aper;
  std::vector<mpz_class> out(G.order(), 0);
  for (Elem a = 0; a < G.order(); ++a)
    for (auto p : mc.down_set({m, a})) {
      auto it = aper.find(p.d);
      if (it == aper.end()) it = aper.emplace(p.d, count_aperiodic_all(Dx, p.d)).first;
      const mpz_class& c = it->second[p.b];
      if (c % p.d != 0) throw std::logic_error("aperiodic count not divisible by its length");
      out[a] += c / p.d;
    }
  return out;
}

mpz_class count_aperiodic_cyclic(const DerivedDigraph& Dx, std::size_t m, Elem a) {
  return count_aperiodic_all(Dx, m).at(a);
}

mpz_class count_circular(const DerivedDigraph& Dx, std::size_t m, Elem a) {
  return count_circular_all(Dx, m).at(a);
}

void check_reversal_closed(const DeBruijnSubgraph& D) {
  const auto& G = D.group();
  for (std::size_t v = 0; v < D.size(); ++v) {
    auto t = D.tuple(v);
    std::reverse(t.begin(), t.end());
    long r = D.index_of(D.encode(t));
    if (r < 0) {
      std::reverse(t.begin(), t.end());
      throw SpecError("restriction is not closed under reversal; witness " + tuple_string(G, t));
    }
    if (bool(D.start()[v]) != bool(D.finish()[std::size_t(r)]))
      throw SpecError("start and finish sets are not reverses of each other; witness " +
                      tuple_string(G, D.tuple(v)));
    for (auto j = D.out_rp()[v]; j < D.out_rp()[v + 1]; ++j) {
      std::size_t w = D.out_col()[j];
      auto tw = D.tuple(w);
      std::reverse(tw.begin(), tw.end());
      std::size_t rw = std::size_t(D.index_of(D.encode(tw)));
      if (!D.has_arc(rw, std::size_t(r))) {
        auto word = D.tuple(v);
        word.push_back(D.last(w));
        throw SpecError("restriction is not closed under reversal; witness " + tuple_string(G, word));
      }
    }
  }
}

std::vector<mpz_class> count_palindromic_all(const DerivedDigraph& Dx, std::size_t m) {
  const auto& D = Dx.base();
  const auto& G = Dx.group();
  require_abelian(G);
  const std::size_t s = D.sigma(), k = G.order();
  check_reversal_closed(D);
  if (m < 2 * s) {
    // too short to split into two walks; enumerate the first half directly
    const std::size_t h = (m + 1) / 2;
    const std::size_t n = checked_tuple_count(k, h, std::size_t(1) << 26);
    std::vector<mpz_class> out(k, 0);
    std::vector<Elem> half(h, 0);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t x = i;
      for (std::size_t j = 0; j < h; ++j, x /= k) half[j] = Elem(x % k);
      auto w = half;
      w.insert(w.end(), half.rbegin() + std::ptrdiff_t(m % 2), half.rend());
      if (D.legal(w)) out[total(G, w)] += 1;
    }
    return out;
  }
  const std::size_t h = m / 2;
  auto vec = path_vector(Dx, Dx.start_set(), h - s);
  std::vector<mpz_class> out(k, 0);
  for (std::size_t v = 0; v < D.size(); ++v) {
    auto t = D.tuple(v);
    auto rt = t;
    std::reverse(rt.begin(), rt.end());
    for (Elem c = 0; c < k; ++c) {
      if (m % 2 == 0 && c > 0) break;
      auto w = t;
      if (m % 2) w.push_back(c);
      w.insert(w.end(), rt.begin(), rt.end());
      if (!D.legal(w)) continue;
      for (Elem b = 0; b < k; ++b) {
        Elem a = G.op(G.op(b, b), m % 2 ? c : G.identity());
        out[a] += vec.get(Dx.id(v, b));
      }
    }
  }
  return out;
}

std::vector<mpz_class> count_undirected_all(const DerivedDigraph& Dx, std::size_t m) {
  auto pal = count_palindromic_all(Dx, m);
  auto dir = count_table(Dx, m, m).counts[0];
  std::vector<mpz_class> out(pal.size());
  for (std::size_t a = 0; a < pal.size(); ++a) {
    mpz_class s = dir[a] + pal[a];
    if (s % 2 != 0) throw std::logic_error("directed + palindromic count is odd");
    out[a] = s / 2;
  }
  return out;
}

mpz_class count_palindromic_paths(const DerivedDigraph& Dx, std::size_t m, Elem a) {
  return count_palindromic_all(Dx, m).at(a);
}

mpz_class count_undirected_paths(const DerivedDigraph& Dx, std::size_t m, Elem a) {
  return count_undirected_all(Dx, m).at(a);
}

mpz_class stirling2(std::size_t n, std::size_t k) {
  std::vector<mpz_class> row(k + 1, 0);
  row[0] = 1;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = std::min(i, k); j >= 1; --j) {
      row[j] = row[j] * j + row[j - 1];
      if (j == 1) row[0] = 0;
    }
  if (n == 0) return k == 0 ? 1 : 0;
  return row[k];
}

mpz_class count_gapfree_words(std::size_t k, std::size_t m) {
  mpz_class s = 0, fact = 1;
  for (std::size_t j = 1; j <= k; ++j) {
    fact *= j;
    s += mpz_class(k - j + 1) * fact * stirling2(m, j);
  }
  return s;
}

}  // namespace lrc
