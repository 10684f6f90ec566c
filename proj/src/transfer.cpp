#include "lrc/transfer.hpp"

#include <cmath>
#include <limits>

namespace lrc {

std::vector<mpz_class> count_short_all(const DeBruijnSubgraph& D, std::size_t m) {
  const auto& G = D.group();
  std::vector<mpz_class> out(G.order(), 0);
  if (m >= D.sigma()) throw SpecError("count_short needs m < span; use count_paths");
  // Totals of all words of length m, built one letter at a time.
  std::vector<mpz_class> cur(G.order(), 0);
  cur[G.identity()] = 1;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<mpz_class> nx(G.order(), 0);
    for (Elem a = 0; a < G.order(); ++a)
      if (cur[a] != 0)
        for (Elem x = 0; x < G.order(); ++x) nx[G.op(a, x)] += cur[a];
    cur.swap(nx);
  }
  return cur;
}

mpz_class count_short(const DeBruijnSubgraph& D, std::size_t m, Elem s) {
  return count_short_all(D, m).at(s);
}

CountTable count_table(const DerivedDigraph& Dx, std::size_t m_lo, std::size_t m_hi) {
  if (m_lo > m_hi) throw SpecError("empty m range");
  const auto& D = Dx.base();
  const auto& G = Dx.group();
  const std::size_t sigma = D.sigma();
  CountTable t;
  t.m_lo = m_lo;
  t.m_hi = m_hi;
  t.counts.resize(m_hi - m_lo + 1);
  for (std::size_t m = m_lo; m <= m_hi && m < sigma; ++m) t.counts[m - m_lo] = count_short_all(D, m);
  if (m_hi < sigma) return t;
  std::vector<std::vector<std::size_t>> fin(G.order());
  for (Elem a = 0; a < G.order(); ++a) fin[a] = Dx.finish_set(a);
  LimbVec cur(Dx.size()), nxt(Dx.size());
  for (auto x : Dx.start_set()) cur.set(x, 1);
  for (std::size_t m = sigma;; ++m) {
    if (m >= m_lo) {
      auto& row = t.counts[m - m_lo];
      row.resize(G.order());
      for (Elem a = 0; a < G.order(); ++a) row[a] = cur.sum(fin[a]);
    }
    if (m == m_hi) break;
    nxt.pull(cur, Dx.in(), 1);
    std::swap(cur, nxt);
  }
  return t;
}

mpz_class count_paths(const DerivedDigraph& Dx, std::size_t m, Elem s) {
  if (m < Dx.base().sigma()) throw SpecError("m < span: use count_short");
  return count_table(Dx, m, m).at(m, s);
}

std::vector<char> mark_tuples(const DeBruijnSubgraph& D, const std::vector<std::vector<Elem>>& U) {
  std::vector<char> mark(D.size(), 0);
  for (auto& t : U) {
    long v = D.index_of(D.encode(t));
    if (v >= 0) mark[std::size_t(v)] = 1;
  }
  return mark;
}

OccurrenceTable count_with_occurrences(const DerivedDigraph& Dx,
                                       const std::vector<std::vector<Elem>>& U, std::size_t m_lo,
                                       std::size_t m_hi, std::size_t r_max) {
  const auto& D = Dx.base();
  const auto& G = Dx.group();
  const std::size_t sigma = D.sigma(), k = G.order(), W = r_max + 1;
  if (m_lo > m_hi) throw SpecError("empty m range");
  auto mark = mark_tuples(D, U);
  OccurrenceTable t;
  t.m_lo = m_lo, t.m_hi = m_hi, t.r_max = r_max;
  t.counts.resize(m_hi - m_lo + 1);
  // shorter than the span: no windows, so every word has r = 0
  for (std::size_t m = m_lo; m < sigma && m <= m_hi; ++m) {
    auto& slab = t.counts[m - m_lo];
    slab.assign(k, std::vector<mpz_class>(W, 0));
    auto c = count_short_all(D, m);
    for (Elem a = 0; a < k; ++a) slab[a][0] = c[a];
  }
  if (m_hi < sigma) return t;
  LimbVec cur(Dx.size() * W), nxt(Dx.size() * W);
  for (std::size_t v = 0; v < D.size(); ++v)
    if (D.start()[v] && std::size_t(mark[v]) <= r_max) cur.set(Dx.id(v, D.vsum(v)) * W + mark[v], 1);
  std::vector<std::vector<std::size_t>> fin(k);
  for (Elem a = 0; a < k; ++a) fin[a] = Dx.finish_set(a);
  for (std::size_t m = sigma;; ++m) {
    if (m >= m_lo) {
      auto& slab = t.counts[m - m_lo];
      slab.assign(k, std::vector<mpz_class>(W, 0));
      std::vector<std::size_t> idx;
      for (Elem a = 0; a < k; ++a)
        for (std::size_t r = 0; r < W; ++r) {
          idx.clear();
          for (auto x : fin[a]) idx.push_back(x * W + r);
          slab[a][r] = cur.sum(idx);
        }
    }
    if (m == m_hi) break;
    nxt.pull(cur, Dx.in(), W);
    // Entering a marked vertex adds one occurrence.
    for (std::size_t x = 0; x < Dx.size(); ++x) {
      if (!mark[Dx.vertex_of(x)]) continue;
      for (std::size_t j = 0; j < nxt.limbs(); ++j) {
        auto* row = nxt.plane(j).data() + x * W;
        for (std::size_t r = W; r-- > 1;) row[r] = row[r - 1];
        row[0] = 0;
      }
    }
    std::swap(cur, nxt);
  }
  return t;
}

std::vector<mpz_class> occurrence_distribution(const DerivedDigraph& Dx,
                                               const std::vector<std::vector<Elem>>& U,
                                               std::size_t m, Elem s) {
  std::size_t rmax = m - Dx.base().sigma() + 1;
  auto t = count_with_occurrences(Dx, U, m, m, rmax);
  return t.counts[0].at(s);
}

Moments moments_of(const std::vector<mpz_class>& dist) {
  mpz_class n = 0, s1 = 0, s2 = 0;
  for (std::size_t r = 0; r < dist.size(); ++r) {
    n += dist[r];
    s1 += dist[r] * r;
    s2 += dist[r] * r * r;
  }
  if (n == 0) throw EmptyFamily("conditioning on empty event");
  Moments mo;
  mo.mean = mpq_class(s1, n);
  mo.mean.canonicalize();
  mpq_class e2(s2, n);
  e2.canonicalize();
  mo.variance = e2 - mo.mean * mo.mean;
  return mo;
}

Moments occurrence_moments(const DerivedDigraph& Dx, const std::vector<std::vector<Elem>>& U,
                           std::size_t m, Elem s) {
  if (U.empty()) return {0, 0};
  return moments_of(occurrence_distribution(Dx, U, m, s));
}

namespace {

// Dominant eigenpair of the 0/1 matrix given by pull rows (row i sums src over
// its listed columns). With shift, iterates on M + I.
struct PowerResult {
  double lambda = 0, residual = 0, ratio = 0;
  std::size_t iterations = 0;
  bool converged = false;
  std::vector<double> vec;
};

PowerResult power(const Csr& rows, bool shift, const PowerOptions& opt) {
  const auto& K = simd::active();
  const std::size_t n = rows.rows();
  PowerResult pr;
  std::vector<double> x(n, 1.0 / double(n)), y(n), prev(n);
  double lam_prev = std::numeric_limits<double>::quiet_NaN(), res_prev = 0;
  for (std::size_t it = 1; it <= opt.max_iter; ++it) {
    K.pull_f64(rows.rp.data(), rows.col.data(), x.data(), y.data(), n);
    if (shift) K.axpy_f64(1.0, x.data(), y.data(), n);
    double lam = K.dot_f64(x.data(), y.data(), n) / K.dot_f64(x.data(), x.data(), n);
    double norm = 0;
    for (double v : y) norm += v;
    if (norm == 0) {
      pr.lambda = 0;
      pr.converged = true;
      pr.iterations = it;
      pr.vec = x;
      return pr;
    }
    K.scale_f64(1.0 / norm, y.data(), n);
    double res = K.max_abs_diff_f64(x.data(), y.data(), n);
    if (res_prev > 0 && res > 0) pr.ratio = res / res_prev;
    res_prev = res;
    std::swap(x, y);
    pr.iterations = it;
    if (std::isfinite(lam_prev) && std::fabs(lam - lam_prev) < opt.tol * std::max(1.0, lam) &&
        res < opt.tol) {
      pr.converged = true;
      pr.lambda = lam;
      pr.residual = res;
      break;
    }
    lam_prev = lam;
    pr.lambda = lam;
    pr.residual = res;
  }
  if (shift) pr.lambda -= 1.0;
  pr.vec = std::move(x);
  return pr;
}

}  // namespace

AsymptoticEstimate asymptotics(const DerivedDigraph& Dx, const PowerOptions& opt) {
  AsymptoticEstimate est;
  const auto& G = Dx.group();
  const std::size_t k = G.order();
  auto start = Dx.start_set();
  std::vector<char> in_start(Dx.size(), 0);
  for (auto x : start) in_start[x] = 1;
  std::vector<std::vector<char>> in_fin(k, std::vector<char>(Dx.size(), 0));
  for (Elem a = 0; a < k; ++a)
    for (auto x : Dx.finish_set(a)) in_fin[a][x] = 1;

  if (Dx.inter_component_arcs())
    est.warnings.push_back("derived digraph has arcs between strong components; per-component constants ignore paths that cross components");

  std::size_t periodic = 0;
  for (std::size_t c = 0; c < Dx.component_count(); ++c) {
    if (Dx.component_arcs(c) == 0) continue;
    ComponentEstimate ce;
    ce.component = c;
    ce.period = Dx.period(c);
    for (std::size_t x = 0; x < Dx.size(); ++x)
      if (Dx.scc()[x] == c) ce.members.push_back(std::uint32_t(x));
    ce.size = ce.members.size();
    bool touches_start = false, touches_fin = false;
    for (auto x : ce.members) {
      touches_start |= bool(in_start[x]);
      for (Elem a = 0; a < k; ++a) touches_fin |= bool(in_fin[a][x]);
    }
    if (!touches_start || !touches_fin) continue;
    std::vector<std::int64_t> local(Dx.size(), -1);
    for (std::size_t i = 0; i < ce.size; ++i) local[ce.members[i]] = std::int64_t(i);
    Csr fwd, bwd;  // fwd: row i sums successors (right vector); bwd: predecessors
    for (auto x : ce.members) {
      for (auto j = Dx.out().rp[x]; j < Dx.out().rp[x + 1]; ++j)
        if (local[Dx.out().col[j]] >= 0) fwd.col.push_back(std::uint32_t(local[Dx.out().col[j]]));
      fwd.rp.push_back(std::uint32_t(fwd.col.size()));
      for (auto j = Dx.in().rp[x]; j < Dx.in().rp[x + 1]; ++j)
        if (local[Dx.in().col[j]] >= 0) bwd.col.push_back(std::uint32_t(local[Dx.in().col[j]]));
      bwd.rp.push_back(std::uint32_t(bwd.col.size()));
    }
    bool shift = ce.period != 1;
    if (shift) ++periodic;
    auto r = power(fwd, shift, opt);
    auto l = power(bwd, shift, opt);
    ce.lambda = r.lambda;
    ce.converged = r.converged && l.converged;
    ce.iterations = std::max(r.iterations, l.iterations);
    ce.residual = std::max(r.residual, l.residual);
    ce.subdominant_ratio = r.ratio;
    ce.right = r.vec;
    ce.left = l.vec;
    double vu = simd::active().dot_f64(ce.right.data(), ce.left.data(), ce.size);
    simd::active().scale_f64(1.0 / vu, ce.left.data(), ce.size);
    double psi_v = 0;
    for (std::size_t i = 0; i < ce.size; ++i)
      if (in_start[ce.members[i]]) psi_v += ce.right[i];
    ce.C.assign(k, 0);
    for (Elem a = 0; a < k; ++a) {
      double uphi = 0;
      for (std::size_t i = 0; i < ce.size; ++i)
        if (in_fin[a][ce.members[i]]) uphi += ce.left[i];
      ce.C[a] = psi_v * uphi;
    }
    if (!ce.converged) est.warnings.push_back("power iteration did not converge on component " + std::to_string(c));
    est.components.push_back(std::move(ce));
  }
  if (est.components.empty()) {
    est.zero_family = true;
    est.equal_split_deviation = std::numeric_limits<double>::quiet_NaN();
    return est;
  }
  if (periodic) est.warnings.push_back("periodic component(s): counts oscillate and the constants describe an average, not a limit");
  if (est.components.size() > 1)
    est.warnings.push_back("multiple strong components reach the start and finish sets; results are per component");
  for (auto& ce : est.components) est.lambda = std::max(est.lambda, ce.lambda);
  est.C.assign(k, 0);
  for (auto& ce : est.components)
    if (std::fabs(ce.lambda - est.lambda) <= 1e-9 * std::max(1.0, est.lambda))
      for (Elem a = 0; a < k; ++a) est.C[a] += ce.C[a];
  if (est.components.size() == 1 && est.components[0].period == 1) {
    double A = 0, dev = 0;
    for (double c : est.C) A += c;
    for (double c : est.C) dev = std::max(dev, std::fabs(c * double(k) / A - 1.0));
    est.equal_split_deviation = dev;
  } else {
    est.equal_split_deviation = std::numeric_limits<double>::quiet_NaN();
  }
  return est;
}

}  // namespace lrc

namespace lrc {

LimbVec path_vector(const DerivedDigraph& Dx, const std::vector<std::size_t>& start, std::size_t steps) {
  LimbVec cur(Dx.size()), nxt(Dx.size());
  for (auto x : start) cur.set(x, 1);
  for (std::size_t i = 0; i < steps; ++i) {
    nxt.pull(cur, Dx.in(), 1);
    std::swap(cur, nxt);
  }
  return cur;
}

}  // namespace lrc
