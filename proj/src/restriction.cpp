#include "lrc/restriction.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace lrc {

std::size_t checked_tuple_count(std::size_t n, std::size_t sigma, std::size_t cap) {
  std::size_t t = 1;
  for (std::size_t i = 0; i < sigma; ++i) {
    if (t > cap / n) throw CapError("de Bruijn graph exceeds the vertex cap");
    t *= n;
  }
  if (t > cap) throw CapError("de Bruijn graph exceeds the vertex cap");
  return t;
}

DeBruijnSubgraph::DeBruijnSubgraph(std::shared_ptr<const FiniteGroup> g, std::size_t sigma,
                                   std::vector<Code> vertices, std::size_t cap)
    : g_(std::move(g)), sigma_(sigma), codes_(std::move(vertices)) {
  if (sigma_ == 0) throw SpecError("span must be at least 1");
  std::size_t all = checked_tuple_count(g_->order(), sigma_, cap);
  std::sort(codes_.begin(), codes_.end());
  codes_.erase(std::unique(codes_.begin(), codes_.end()), codes_.end());
  index_.assign(all, -1);
  for (std::size_t i = 0; i < codes_.size(); ++i) {
    if (codes_[i] >= all) throw SpecError("vertex code out of range");
    index_[codes_[i]] = std::int32_t(i);
  }
  const std::size_t n = codes_.size();
  first_.resize(n), last_.resize(n), sum_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto t = decode(codes_[i]);
    first_[i] = t.front();
    last_[i] = t.back();
    sum_[i] = total(*g_, t);
  }
  start_.assign(n, 1);
  finish_.assign(n, 1);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> arcs;
  const std::size_t k = g_->order();
  const Code high = all / k;  // k^(sigma-1)
  for (std::size_t i = 0; i < n; ++i) {
    Code suffix = codes_[i] % high;
    for (std::size_t x = 0; x < k; ++x) {
      long j = index_of(suffix * k + x);
      if (j >= 0) arcs.emplace_back(std::uint32_t(i), std::uint32_t(j));
    }
  }
  build_arcs(std::move(arcs));
}

std::vector<Elem> DeBruijnSubgraph::decode(Code c) const {
  std::vector<Elem> t(sigma_);
  const std::size_t k = g_->order();
  for (std::size_t i = sigma_; i-- > 0;) {
    t[i] = Elem(c % k);
    c /= k;
  }
  return t;
}

DeBruijnSubgraph::Code DeBruijnSubgraph::encode(const std::vector<Elem>& t) const {
  if (t.size() != sigma_) throw SpecError("tuple length does not match span");
  Code c = 0;
  for (Elem e : t) {
    if (e >= g_->order()) throw SpecError("tuple letter out of range");
    c = c * g_->order() + e;
  }
  return c;
}

long DeBruijnSubgraph::index_of(Code c) const {
  return c < index_.size() ? index_[c] : -1;
}

bool DeBruijnSubgraph::has_arc(std::size_t u, std::size_t v) const {
  for (std::uint32_t k = out_rp_[u]; k < out_rp_[u + 1]; ++k)
    if (out_col_[k] == v) return true;
  return false;
}

void DeBruijnSubgraph::build_arcs(std::vector<std::pair<std::uint32_t, std::uint32_t>> arcs) {
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  const std::size_t n = codes_.size();
  out_rp_.assign(n + 1, 0);
  in_rp_.assign(n + 1, 0);
  for (auto [u, v] : arcs) ++out_rp_[u + 1], ++in_rp_[v + 1];
  std::partial_sum(out_rp_.begin(), out_rp_.end(), out_rp_.begin());
  std::partial_sum(in_rp_.begin(), in_rp_.end(), in_rp_.begin());
  out_col_.resize(arcs.size());
  in_col_.resize(arcs.size());
  auto op = out_rp_, ip = in_rp_;
  for (auto [u, v] : arcs) {
    out_col_[op[u]++] = v;
    in_col_[ip[v]++] = u;
  }
}

void DeBruijnSubgraph::set_arcs(const std::vector<std::pair<std::size_t, std::size_t>>& arcs) {
  const std::size_t k = g_->order();
  Code high = 1;
  for (std::size_t i = 1; i < sigma_; ++i) high *= k;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> a;
  for (auto [u, v] : arcs) {
    if (u >= size() || v >= size()) throw SpecError("arc endpoint is not a vertex");
    if (codes_[u] % high != codes_[v] / k)
      throw SpecError("arc " + tuple_string(*g_, tuple(u)) + " -> " + tuple_string(*g_, tuple(v)) +
                      " violates the overlap rule");
    a.emplace_back(std::uint32_t(u), std::uint32_t(v));
  }
  explicit_arcs_ = true;
  build_arcs(std::move(a));
}

void DeBruijnSubgraph::set_start(std::vector<char> s) {
  if (s.size() != size()) throw SpecError("start set has wrong size");
  start_ = std::move(s);
}

void DeBruijnSubgraph::set_finish(std::vector<char> f) {
  if (f.size() != size()) throw SpecError("finish set has wrong size");
  finish_ = std::move(f);
}

bool DeBruijnSubgraph::legal(const std::vector<Elem>& w) const {
  if (w.size() < sigma_) return true;
  long prev = -1;
  for (std::size_t i = 0; i + sigma_ <= w.size(); ++i) {
    Code c = 0;
    for (std::size_t j = 0; j < sigma_; ++j) c = c * g_->order() + w[i + j];
    long v = index_of(c);
    if (v < 0) return false;
    if (prev >= 0 && explicit_arcs_ && !has_arc(std::size_t(prev), std::size_t(v))) return false;
    prev = v;
  }
  return true;
}

namespace {

template <class Pred>
DeBruijnSubgraph by_predicate(GroupPtr g, std::size_t sigma, Pred keep, std::string desc) {
  std::size_t all = checked_tuple_count(g->order(), sigma, kDefaultVertexCap);
  std::vector<DeBruijnSubgraph::Code> keepv, drop;
  std::vector<Elem> t(sigma);
  for (std::size_t c = 0; c < all; ++c) {
    std::size_t x = c;
    for (std::size_t i = sigma; i-- > 0;) t[i] = Elem(x % g->order()), x /= g->order();
    (keep(t) ? keepv : drop).push_back(c);
  }
  DeBruijnSubgraph d(std::move(g), sigma, std::move(keepv));
  d.forbidden = std::move(drop);
  d.descriptor = std::move(desc);
  return d;
}

std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::size_t parse_count(const std::string& s, const std::string& what) {
  try {
    std::size_t pos;
    long long v = std::stoll(s, &pos);
    if (pos != s.size() || v < 0) throw 0;
    return std::size_t(v);
  } catch (...) {
    throw SpecError("bad " + what + ": '" + s + "'");
  }
}

}  // namespace

std::vector<Elem> parse_tuple(const FiniteGroup& g, const std::string& s) {
  std::vector<Elem> t;
  for (auto& part : split_top(trim(s), ',')) t.push_back(g.find_label(trim(part)));
  return t;
}

std::string tuple_string(const FiniteGroup& g, const std::vector<Elem>& t) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ',';
    out += g.label(t[i]);
  }
  return out;
}

DeBruijnSubgraph full_debruijn(GroupPtr g, std::size_t sigma) {
  return by_predicate(std::move(g), sigma, [](auto&) { return true; },
                      "full:" + std::to_string(sigma));
}

DeBruijnSubgraph restrict_carlitz(GroupPtr g, std::size_t d) {
  if (d == 0) throw SpecError("carlitz:d needs d >= 1");
  std::size_t n = g->order();
  auto D = by_predicate(g, d + 1, [](const std::vector<Elem>& t) {
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (t[i] == t[j]) return false;
    return true;
  }, "carlitz:" + std::to_string(d));
  if (n < d + 2)
    D.warnings.push_back("carlitz:" + std::to_string(d) + " expects |G| >= d+2 (|G| = " +
                         std::to_string(n) + ")");
  return D;
}

DeBruijnSubgraph restrict_forbidden_subwords(GroupPtr g, std::size_t sigma,
                                             const std::vector<std::vector<Elem>>& U) {
  std::size_t all = checked_tuple_count(g->order(), sigma, kDefaultVertexCap);
  std::vector<char> bad(all);
  for (auto& t : U) {
    if (t.size() != sigma) throw SpecError("forbidden tuple has the wrong length");
    std::size_t c = 0;
    for (Elem e : t) {
      if (e >= g->order()) throw SpecError("forbidden tuple letter out of range");
      c = c * g->order() + e;
    }
    bad[c] = 1;
  }
  if (std::size_t(std::count(bad.begin(), bad.end(), 1)) == all)
    throw SpecError("forbidden set removes every tuple");
  std::size_t n = g->order();
  return by_predicate(std::move(g), sigma, [&](const std::vector<Elem>& t) {
    std::size_t c = 0;
    for (Elem e : t) c = c * n + e;
    return !bad[c];
  }, "forbid");
}

DeBruijnSubgraph restrict_mullen(GroupPtr g, std::size_t d) {
  if (d == 0) throw SpecError("mullen:d needs d >= 1");
  const FiniteGroup& G = *g;
  auto D = by_predicate(g, d, [&](const std::vector<Elem>& t) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      Elem s = G.identity();
      for (std::size_t j = i; j < t.size(); ++j) {
        s = G.op(s, t[j]);
        if (s == G.identity()) return false;
      }
    }
    return true;
  }, "mullen:" + std::to_string(d));
  if (G.order() < d + 2) D.warnings.push_back("mullen:d expects |G| >= d+2");
  return D;
}

DeBruijnSubgraph restrict_window_sum(GroupPtr g, std::size_t d) {
  const FiniteGroup& G = *g;
  auto D = by_predicate(g, d + 1, [&](const std::vector<Elem>& t) {
    return total(G, t) != G.identity();
  }, "windowsum:" + std::to_string(d));
  if (G.order() < d + 2) D.warnings.push_back("windowsum:d expects d <= |G|-2");
  return D;
}

DeBruijnSubgraph restrict_subword_pattern(GroupPtr g, const std::string& tau) {
  std::size_t s = tau.size();
  if (s < 2) throw SpecError("subword pattern needs length >= 2");
  std::vector<int> p;
  for (char c : tau) {
    if (c < '1' || std::size_t(c - '0') > s) throw SpecError("subword pattern letters must lie in 1..|tau|");
    p.push_back(c - '0');
  }
  const FiniteGroup& G = *g;
  return by_predicate(g, s, [&](const std::vector<Elem>& t) {
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j) {
        bool lt = G.rank(t[i]) < G.rank(t[j]);
        if (lt != (p[i] < p[j])) return true;
        if ((t[i] == t[j]) != (p[i] == p[j])) return true;
      }
    return false;
  }, "subword:" + tau);
}

DeBruijnSubgraph restrict_smooth(GroupPtr g, std::size_t p) {
  const FiniteGroup& G = *g;
  return by_predicate(g, 2, [&](const std::vector<Elem>& t) {
    std::size_t a = G.rank(t[0]), b = G.rank(t[1]);
    return (a > b ? a - b : b - a) <= p;
  }, "smooth:" + std::to_string(p));
}

DeBruijnSubgraph from_vertex_list(
    GroupPtr g, std::size_t sigma, const std::vector<std::vector<Elem>>& vertices,
    const std::vector<std::pair<std::vector<Elem>, std::vector<Elem>>>& arcs, std::string descriptor) {
  checked_tuple_count(g->order(), sigma, kDefaultVertexCap);
  std::vector<DeBruijnSubgraph::Code> codes;
  auto enc = [&](const std::vector<Elem>& t) {
    if (t.size() != sigma) throw SpecError("graph tuple has the wrong length");
    DeBruijnSubgraph::Code c = 0;
    for (Elem e : t) {
      if (e >= g->order()) throw SpecError("graph tuple letter out of range");
      c = c * g->order() + e;
    }
    return c;
  };
  for (auto& v : vertices) codes.push_back(enc(v));
  for (auto& [a, b] : arcs) codes.push_back(enc(a)), codes.push_back(enc(b));
  DeBruijnSubgraph d(g, sigma, codes);
  if (!arcs.empty()) {
    std::vector<std::pair<std::size_t, std::size_t>> idx;
    for (auto& [a, b] : arcs)
      idx.emplace_back(std::size_t(d.index_of(enc(a))), std::size_t(d.index_of(enc(b))));
    d.set_arcs(idx);
  }
  d.descriptor = std::move(descriptor);
  return d;
}

namespace {

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open '" + path + "'");
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    auto h = line.find('#');
    if (h != std::string::npos) line.resize(h);
    line = trim(line);
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

// Graph file lines: "vertex T", "arc T T", "start T", "finish T"; T is a tuple
// with comma-separated labels and no spaces.
DeBruijnSubgraph read_graph_file(GroupPtr g, const std::string& path) {
  std::vector<std::vector<Elem>> verts, starts, finishes;
  std::vector<std::pair<std::vector<Elem>, std::vector<Elem>>> arcs;
  std::size_t sigma = 0;
  auto note = [&](const std::vector<Elem>& t) {
    if (sigma && t.size() != sigma) throw SpecError("graph file mixes tuple lengths");
    sigma = t.size();
  };
  for (auto& line : read_lines(path)) {
    std::istringstream ss(line);
    std::string kw, a, b;
    ss >> kw >> a >> b;
    if (kw == "vertex") {
      verts.push_back(parse_tuple(*g, a));
      note(verts.back());
    } else if (kw == "arc") {
      arcs.emplace_back(parse_tuple(*g, a), parse_tuple(*g, b));
      note(arcs.back().first);
      note(arcs.back().second);
    } else if (kw == "start") {
      starts.push_back(parse_tuple(*g, a));
    } else if (kw == "finish") {
      finishes.push_back(parse_tuple(*g, a));
    } else {
      throw SpecError("unknown graph file keyword '" + kw + "'");
    }
  }
  if (!sigma) throw SpecError("graph file declares no vertices");
  auto d = from_vertex_list(g, sigma, verts, arcs, "graph:@" + path);
  auto mark = [&](const std::vector<std::vector<Elem>>& ts) {
    std::vector<char> f(d.size(), 0);
    for (auto& t : ts) {
      long i = d.index_of(d.encode(t));
      if (i < 0) throw SpecError("start/finish tuple is not a vertex");
      f[std::size_t(i)] = 1;
    }
    return f;
  };
  if (!starts.empty()) d.set_start(mark(starts));
  if (!finishes.empty()) d.set_finish(mark(finishes));
  return d;
}

}  // namespace

DeBruijnSubgraph parse_restriction(GroupPtr g, const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw SpecError("restriction spec needs a kind prefix: " + spec);
  std::string kind = spec.substr(0, colon), arg = spec.substr(colon + 1);
  if (kind == "carlitz") return restrict_carlitz(g, parse_count(arg, "carlitz d"));
  if (kind == "mullen") return restrict_mullen(g, parse_count(arg, "mullen d"));
  if (kind == "windowsum") return restrict_window_sum(g, parse_count(arg, "windowsum d"));
  if (kind == "smooth") return restrict_smooth(g, parse_count(arg, "smooth p"));
  if (kind == "full") return full_debruijn(g, parse_count(arg, "span"));
  if (kind == "subword") return restrict_subword_pattern(g, arg);
  if (kind == "noinverse") {
    if (!arg.empty()) throw SpecError("noinverse takes no argument");
    std::vector<std::vector<Elem>> U;
    for (Elem a = 0; a < g->order(); ++a) U.push_back({a, g->inverse(a)});
    auto d = restrict_forbidden_subwords(g, 2, U);
    d.descriptor = spec;
    return d;
  }
  if (kind == "forbid" || kind == "graph") {
    if (arg.empty() || arg[0] != '@') throw SpecError(kind + ": expects @file");
    std::string path = arg.substr(1);
    if (kind == "graph") return read_graph_file(g, path);
    std::vector<std::vector<Elem>> U;
    for (auto& line : read_lines(path)) U.push_back(parse_tuple(*g, line));
    if (U.empty()) throw SpecError("forbid file is empty; use full:sigma for no restriction");
    auto d = restrict_forbidden_subwords(g, U.front().size(), U);
    d.descriptor = spec;
    return d;
  }
  throw SpecError("unknown restriction kind '" + kind + "'");
}

}  // namespace lrc
