#include "lrc/group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>

namespace lrc {

FiniteGroup::FiniteGroup(std::vector<Elem> cayley, std::size_t n, std::vector<std::string> labels)
    : n_(n), cayley_(std::move(cayley)), labels_(std::move(labels)) {
  if (n_ == 0 || cayley_.size() != n_ * n_) throw SpecError("group table has wrong size");
  for (std::size_t i = 0; i < n_ * n_; ++i)
    if (cayley_[i] >= n_) throw SpecError("group table entry out of range");
  // Latin square.
  std::vector<char> seen(n_);
  for (std::size_t r = 0; r < n_; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t c = 0; c < n_; ++c) seen[op(Elem(r), Elem(c))] = 1;
    if (std::count(seen.begin(), seen.end(), 1) != std::ptrdiff_t(n_))
      throw SpecError("group table is not a Latin square");
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t c = 0; c < n_; ++c) seen[op(Elem(c), Elem(r))] = 1;
    if (std::count(seen.begin(), seen.end(), 1) != std::ptrdiff_t(n_))
      throw SpecError("group table is not a Latin square");
  }
  bool found = false;
  for (std::size_t e = 0; e < n_ && !found; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n_ && ok; ++x)
      ok = op(Elem(e), Elem(x)) == x && op(Elem(x), Elem(e)) == x;
    if (ok) id_ = Elem(e), found = true;
  }
  if (!found) throw SpecError("group table has no identity");
  if (n_ <= 256) {
    for (std::size_t x = 0; x < n_; ++x)
      for (std::size_t y = 0; y < n_; ++y)
        for (std::size_t z = 0; z < n_; ++z)
          if (op(op(Elem(x), Elem(y)), Elem(z)) != op(Elem(x), op(Elem(y), Elem(z))))
            throw SpecError("group table is not associative");
  }
  inv_.assign(n_, 0);
  for (std::size_t x = 0; x < n_; ++x)
    for (std::size_t y = 0; y < n_; ++y)
      if (op(Elem(x), Elem(y)) == id_) inv_[x] = Elem(y);
  for (std::size_t x = 0; x < n_ && abelian_; ++x)
    for (std::size_t y = 0; y < x; ++y)
      if (op(Elem(x), Elem(y)) != op(Elem(y), Elem(x))) {
        abelian_ = false;
        break;
      }
  if (labels_.size() != n_) {
    labels_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) labels_[i] = std::to_string(i);
  }
}

Elem FiniteGroup::power(Elem a, std::uint64_t n) const {
  Elem r = id_, b = a;
  while (n) {
    if (n & 1) r = op(r, b);
    b = op(b, b);
    n >>= 1;
  }
  return r;
}

std::size_t FiniteGroup::element_order(Elem a) const {
  std::size_t k = 1;
  for (Elem x = a; x != id_; x = op(x, a)) ++k;
  return k;
}

void FiniteGroup::set_order(std::vector<std::size_t> rank) {
  if (rank.size() != n_) throw SpecError("order override has wrong length");
  std::vector<std::size_t> s = rank;
  std::sort(s.begin(), s.end());
  for (std::size_t i = 0; i < n_; ++i)
    if (s[i] != i) throw SpecError("order override is not a permutation");
  rank_ = std::move(rank);
}

Elem FiniteGroup::find_label(const std::string& s) const {
  for (std::size_t i = 0; i < n_; ++i)
    if (labels_[i] == s) return Elem(i);
  throw SpecError("unknown element label '" + s + "'");
}

FiniteGroup make_cyclic(std::size_t k) {
  if (k == 0) throw SpecError("Z:k needs k >= 1");
  if (k > kDefaultGroupCap) throw CapError("group order exceeds cap");
  std::vector<Elem> t(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) t[a * k + b] = Elem((a + b) % k);
  return FiniteGroup(std::move(t), k, {});
}

std::string cycle_string(const Perm& p) {
  std::string out;
  std::vector<char> done(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (done[i] || p[i] == i) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = 1;
      if (!first && p.size() > 9) out += ' ';
      out += std::to_string(j + 1);
      first = false;
      j = p[j];
    }
    out += ')';
  }
  return out.empty() ? "id" : out;
}

Perm parse_cycles(const std::string& s, std::size_t degree) {
  std::vector<std::vector<std::uint32_t>> cycles;
  std::size_t i = 0, maxv = 0;
  auto skip = [&] {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  };
  skip();
  if (i == s.size() || s.substr(i) == "id") {
    Perm p(degree);
    std::iota(p.begin(), p.end(), 0u);
    return p;
  }
  while (i < s.size()) {
    skip();
    if (i == s.size()) break;
    if (s[i] != '(') throw SpecError("expected '(' in cycle notation: " + s);
    ++i;
    std::vector<std::uint32_t> cyc;
    // Digits are single characters unless separated by spaces or commas.
    bool sep = s.find_first_of(" ,", i) < s.find(')', i);
    while (i < s.size() && s[i] != ')') {
      if (s[i] == ' ' || s[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw SpecError("bad character in cycle notation: " + s);
      std::size_t v = 0;
      if (sep) {
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
          v = v * 10 + std::size_t(s[i++] - '0');
      } else {
        v = std::size_t(s[i++] - '0');
      }
      if (v == 0) throw SpecError("cycle points are 1-based: " + s);
      cyc.push_back(std::uint32_t(v - 1));
      maxv = std::max(maxv, v);
    }
    if (i == s.size()) throw SpecError("unterminated cycle: " + s);
    ++i;
    cycles.push_back(std::move(cyc));
  }
  std::size_t n = std::max(degree, maxv);
  Perm p(n);
  std::iota(p.begin(), p.end(), 0u);
  std::vector<char> used(n);
  for (auto& c : cycles)
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (used[c[j]]) throw SpecError("point repeated in cycle notation: " + s);
      used[c[j]] = 1;
      p[c[j]] = c[(j + 1) % c.size()];
    }
  return p;
}

FiniteGroup make_perm_group(const std::vector<Perm>& gens_in, std::size_t cap) {
  std::size_t deg = 0;
  for (auto& g : gens_in) deg = std::max(deg, g.size());
  std::vector<Perm> gens;
  for (auto g : gens_in) {
    std::vector<char> seen(g.size());
    for (auto v : g) {
      if (v >= g.size() || seen[v]) throw SpecError("generator is not a permutation");
      seen[v] = 1;
    }
    for (std::size_t i = g.size(); i < deg; ++i) g.push_back(std::uint32_t(i));
    gens.push_back(std::move(g));
  }
  auto compose = [](const Perm& p, const Perm& q) {
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
    return r;
  };
  Perm id(deg);
  std::iota(id.begin(), id.end(), 0u);
  std::vector<Perm> elems{id};
  std::map<Perm, Elem> index{{id, 0}};
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t cur = queue.front();
    queue.pop_front();
    for (auto& g : gens) {
      Perm nx = compose(elems[cur], g);
      if (index.count(nx)) continue;
      if (elems.size() >= cap) throw CapError("permutation group closure exceeds cap");
      index.emplace(nx, Elem(elems.size()));
      elems.push_back(std::move(nx));
      queue.push_back(elems.size() - 1);
    }
  }
  std::size_t n = elems.size();
  std::vector<Elem> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = index.at(compose(elems[a], elems[b]));
  std::vector<std::string> labels;
  for (auto& p : elems) labels.push_back(cycle_string(p));
  return FiniteGroup(std::move(t), n, std::move(labels));
}

FiniteGroup make_product(const FiniteGroup& a, const FiniteGroup& b, std::size_t cap) {
  std::size_t na = a.order(), nb = b.order(), n = na * nb;
  if (n > cap) throw CapError("product group order exceeds cap");
  std::vector<Elem> t(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    labels[x] = "(" + a.label(Elem(x / nb)) + "," + b.label(Elem(x % nb)) + ")";
    for (std::size_t y = 0; y < n; ++y)
      t[x * n + y] = Elem(a.op(Elem(x / nb), Elem(y / nb)) * nb + b.op(Elem(x % nb), Elem(y % nb)));
  }
  return FiniteGroup(std::move(t), n, std::move(labels));
}

Elem total(const FiniteGroup& g, std::span<const Elem> x) {
  Elem s = g.identity();
  for (Elem e : x) s = g.op(s, e);
  return s;
}

namespace {

// Split at top-level commas (outside brackets).
std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
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

std::string strip_brackets(std::string s) {
  while (s.size() >= 2 && s.front() == '[' && s.back() == ']') s = s.substr(1, s.size() - 2);
  return s;
}

}  // namespace

FiniteGroup parse_group(const std::string& spec_in) {
  std::string spec = strip_brackets(spec_in);
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw SpecError("group spec needs a kind prefix: " + spec);
  std::string kind = spec.substr(0, colon), rest = spec.substr(colon + 1);
  if (kind == "Z") {
    std::size_t k = 0;
    try {
      std::size_t pos;
      k = std::stoul(rest, &pos);
      if (pos != rest.size()) throw SpecError("");
    } catch (...) {
      throw SpecError("bad cyclic group order: " + rest);
    }
    return make_cyclic(k);
  }
  if (kind == "prod") {
    auto parts = split_top(rest, ',');
    if (parts.size() < 2) throw SpecError("prod: needs at least two factors");
    FiniteGroup g = parse_group(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i) g = make_product(g, parse_group(parts[i]));
    return g;
  }
  if (kind == "perm") {
    std::vector<Perm> gens;
    for (auto& part : split_top(rest, ';')) {
      std::string p = strip_brackets(part);
      if (p.find_first_not_of(" \t") == std::string::npos) continue;
      gens.push_back(parse_cycles(p));
    }
    return make_perm_group(gens);
  }
  throw SpecError("unknown group kind '" + kind + "'");
}

}  // namespace lrc
