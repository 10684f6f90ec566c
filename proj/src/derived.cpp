#include "lrc/derived.hpp"

#include <numeric>
#include <sstream>

namespace lrc {

namespace {

Csr transpose(const Csr& a, std::size_t n) {
  Csr t;
  t.rp.assign(n + 1, 0);
  for (auto c : a.col) ++t.rp[c + 1];
  std::partial_sum(t.rp.begin(), t.rp.end(), t.rp.begin());
  t.col.resize(a.col.size());
  auto pos = t.rp;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (auto k = a.rp[i]; k < a.rp[i + 1]; ++k) t.col[pos[a.col[k]]++] = std::uint32_t(i);
  return t;
}

}  // namespace

std::vector<std::uint32_t> strong_components(const Csr& out, std::size_t* count) {
  // Iterative Tarjan.
  const std::size_t n = out.rows();
  const std::uint32_t none = ~0u;
  std::vector<std::uint32_t> idx(n, none), low(n), comp(n, none), stack, call;
  std::vector<std::uint32_t> edge(n);
  std::vector<char> on(n);
  std::uint32_t next = 0, nc = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (idx[s] != none) continue;
    call.push_back(std::uint32_t(s));
    idx[s] = low[s] = next++;
    edge[s] = out.rp[s];
    stack.push_back(std::uint32_t(s));
    on[s] = 1;
    while (!call.empty()) {
      std::uint32_t v = call.back();
      if (edge[v] < out.rp[v + 1]) {
        std::uint32_t w = out.col[edge[v]++];
        if (idx[w] == none) {
          idx[w] = low[w] = next++;
          edge[w] = out.rp[w];
          stack.push_back(w);
          on[w] = 1;
          call.push_back(w);
        } else if (on[w]) {
          low[v] = std::min(low[v], idx[w]);
        }
        continue;
      }
      call.pop_back();
      if (!call.empty()) low[call.back()] = std::min(low[call.back()], low[v]);
      if (low[v] == idx[v]) {
        std::uint32_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on[w] = 0;
          comp[w] = nc;
        } while (w != v);
        ++nc;
      }
    }
  }
  if (count) *count = nc;
  return comp;
}

DerivedDigraph::DerivedDigraph(GraphPtr base, std::size_t cap) : base_(std::move(base)) {
  const auto& D = *base_;
  const auto& G = D.group();
  const std::size_t k = G.order();
  if (D.size() > cap / k) throw CapError("derived digraph exceeds the vertex cap");
  n_ = D.size() * k;
  out_.rp.assign(n_ + 1, 0);
  out_.col.reserve(D.arc_count() * k);
  for (std::size_t u = 0; u < D.size(); ++u)
    for (Elem a = 0; a < k; ++a) {
      for (auto j = D.out_rp()[u]; j < D.out_rp()[u + 1]; ++j) {
        std::size_t v = D.out_col()[j];
        out_.col.push_back(std::uint32_t(id(v, G.op(a, D.last(v)))));
      }
      out_.rp[id(u, a) + 1] = std::uint32_t(out_.col.size());
    }
  in_ = transpose(out_, n_);

  std::size_t nc = 0;
  scc_ = strong_components(out_, &nc);
  comp_size_.assign(nc, 0);
  comp_arcs_.assign(nc, 0);
  period_.assign(nc, 0);
  for (std::size_t x = 0; x < n_; ++x) ++comp_size_[scc_[x]];
  for (std::size_t x = 0; x < n_; ++x)
    for (auto j = out_.rp[x]; j < out_.rp[x + 1]; ++j) {
      if (scc_[out_.col[j]] == scc_[x]) ++comp_arcs_[scc_[x]];
      else inter_arcs_ = true;
    }
  // Period: BFS levels inside each component, gcd of level(u)+1-level(v).
  std::vector<long> level(n_, -1);
  std::vector<std::uint32_t> queue;
  for (std::size_t r = 0; r < n_; ++r) {
    std::uint32_t c = scc_[r];
    if (level[r] >= 0 || comp_arcs_[c] == 0) continue;
    level[r] = 0;
    queue.assign(1, std::uint32_t(r));
    std::size_t g = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      std::uint32_t u = queue[h];
      for (auto j = out_.rp[u]; j < out_.rp[u + 1]; ++j) {
        std::uint32_t v = out_.col[j];
        if (scc_[v] != c) continue;
        if (level[v] < 0) {
          level[v] = level[u] + 1;
          queue.push_back(v);
        } else {
          long d = level[u] + 1 - level[v];
          g = std::gcd(g, std::size_t(d < 0 ? -d : d));
        }
      }
    }
    period_[c] = g;
  }
}

std::vector<std::size_t> DerivedDigraph::start_set() const {
  std::vector<std::size_t> s;
  for (std::size_t v = 0; v < base_->size(); ++v)
    if (base_->start()[v]) s.push_back(id(v, base_->vsum(v)));
  return s;
}

std::vector<std::size_t> DerivedDigraph::finish_set(Elem a) const {
  std::vector<std::size_t> s;
  for (std::size_t v = 0; v < base_->size(); ++v)
    if (base_->finish()[v]) s.push_back(id(v, a));
  return s;
}

DerivedDigraph derive(GraphPtr D) { return DerivedDigraph(std::move(D)); }

RegularityReport regularity_report(const DerivedDigraph& Dx) {
  RegularityReport r;
  const auto& D = Dx.base();
  Csr out;
  out.rp = D.out_rp();
  out.col = D.out_col();
  std::size_t nc = 0;
  strong_components(out, &nc);
  r.base_strong = D.size() > 0 && nc == 1 && D.arc_count() > 0;
  r.base_two_or_more = D.size() >= 2;
  std::size_t nontrivial = 0, which = 0;
  for (std::size_t c = 0; c < Dx.component_count(); ++c)
    if (Dx.component_arcs(c) > 0) ++nontrivial, which = c;
  r.derived_components = nontrivial;
  r.derived_strong = Dx.component_count() == 1 && nontrivial == 1;
  r.derived_period = nontrivial == 1 ? Dx.period(which) : 0;
  r.equal_hypotheses = r.derived_strong && r.derived_period == 1;
  return r;
}

std::string RegularityReport::text() const {
  std::ostringstream os;
  os << "base strongly connected: " << (base_strong ? "yes" : "no") << "\n"
     << "base has >= 2 vertices: " << (base_two_or_more ? "yes" : "no") << "\n"
     << "regular: " << (regular() ? "yes" : "no") << "\n"
     << "derived strongly connected: " << (derived_strong ? "yes" : "no") << "\n"
     << "derived nontrivial components: " << derived_components << "\n"
     << "derived period: " << derived_period << "\n"
     << "equal-split hypotheses hold: " << (equal_hypotheses ? "yes" : "no") << "\n";
  return os.str();
}

bool shift_is_automorphism(const DerivedDigraph& Dx, Elem c) {
  const auto& G = Dx.group();
  auto f = [&](std::size_t x) { return Dx.id(Dx.vertex_of(x), G.op(c, Dx.elem_of(x))); };
  std::vector<char> hit(Dx.size());
  for (std::size_t x = 0; x < Dx.size(); ++x) {
    if (hit[f(x)]) return false;
    hit[f(x)] = 1;
    const auto& o = Dx.out();
    std::size_t fx = f(x);
    for (auto j = o.rp[x]; j < o.rp[x + 1]; ++j) {
      std::size_t fy = f(o.col[j]);
      bool found = false;
      for (auto k = o.rp[fx]; k < o.rp[fx + 1] && !found; ++k) found = o.col[k] == fy;
      if (!found) return false;
    }
  }
  return true;
}

}  // namespace lrc
