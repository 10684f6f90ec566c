#include "lrc/pattern.hpp"

#include <stdexcept>

#include "lrc/group.hpp"

namespace lrc {

bool Pattern::is_subword() const {
  for (char a : adj)
    if (!a) return false;
  for (int p : primes)
    if (p) return false;
  return true;
}

Pattern parse_pattern(const std::string& t) {
  Pattern p;
  p.text = t;
  bool pending_gap = false;
  std::size_t i = 0;
  while (i < t.size()) {
    unsigned char c = static_cast<unsigned char>(t[i]);
    if (c >= '1' && c <= '9') {
      if (!p.value.empty()) p.adj.push_back(pending_gap ? 0 : 1);
      pending_gap = false;
      p.value.push_back(c - '0');
      p.primes.push_back(0);
      ++i;
    } else if (c == '\'') {
      if (p.value.empty()) throw SpecError("prime before any letter in pattern " + t);
      ++p.primes.back();
      ++i;
    } else if (c == 0xE2 && i + 2 < t.size() && static_cast<unsigned char>(t[i + 1]) == 0x80 &&
               (static_cast<unsigned char>(t[i + 2]) == 0xB2 || static_cast<unsigned char>(t[i + 2]) == 0xB3)) {
      if (p.value.empty()) throw SpecError("prime before any letter in pattern " + t);
      p.primes.back() += static_cast<unsigned char>(t[i + 2]) == 0xB2 ? 1 : 2;
      i += 3;
    } else if (c == '-') {
      if (p.value.empty() || pending_gap) throw SpecError("misplaced '-' in pattern " + t);
      pending_gap = true;
      ++i;
    } else {
      throw SpecError("bad character in pattern " + t);
    }
  }
  if (p.value.empty() || pending_gap) throw SpecError("malformed pattern " + t);
  return p;
}

Pattern subword_pattern(const std::vector<int>& letters) {
  Pattern p;
  for (int v : letters) {
    p.value.push_back(v);
    p.primes.push_back(0);
    p.text += std::to_string(v);
  }
  p.adj.assign(letters.empty() ? 0 : letters.size() - 1, 1);
  return p;
}

namespace {

int cmp(long a, long b) { return (a > b) - (a < b); }

struct Scanner {
  const std::vector<long>& w;
  const Pattern& p;
  std::vector<std::size_t> pos;
  bool stop_at_first;
  std::uint64_t found = 0;

  bool fits(std::size_t t, std::size_t i) const {
    for (std::size_t s = 0; s < t; ++s)
      if (p.comparable(s, t) && cmp(w[pos[s]], w[i]) != cmp(p.value[s], p.value[t])) return false;
    return true;
  }

  void go(std::size_t t) {
    if (t == p.size()) {
      ++found;
      return;
    }
    std::size_t lo = t == 0 ? 0 : pos[t - 1] + 1;
    std::size_t hi = w.size() - (p.size() - t);  // leave room for the rest
    if (w.size() < p.size() - t) return;
    if (t > 0 && p.adj[t - 1]) hi = std::min(hi, lo);
    for (std::size_t i = lo; i <= hi && i < w.size(); ++i) {
      if (!fits(t, i)) continue;
      pos[t] = i;
      go(t + 1);
      if (stop_at_first && found) return;
    }
  }
};

}  // namespace

std::uint64_t occurrence_scan(const std::vector<long>& w, const Pattern& p) {
  if (w.size() < p.size()) return 0;
  Scanner s{w, p, std::vector<std::size_t>(p.size()), false};
  s.go(0);
  return s.found;
}

bool avoids(const std::vector<long>& w, const Pattern& p) {
  if (w.size() < p.size()) return true;
  Scanner s{w, p, std::vector<std::size_t>(p.size()), true};
  s.go(0);
  return s.found == 0;
}

bool avoids_all(const std::vector<long>& w, const std::vector<Pattern>& ps) {
  for (auto& p : ps)
    if (!avoids(w, p)) return false;
  return true;
}

bool cyclically_avoids(const std::vector<long>& w, const Pattern& p) {
  if (w.empty()) return true;
  std::vector<long> x = w;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) x.push_back(w[i % w.size()]);
  return avoids(x, p);
}

}  // namespace lrc
