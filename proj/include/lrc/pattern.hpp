#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lrc {

// Generalized / partially ordered pattern. Letters carry a value and a prime
// class (0 = unprimed). Two letters are comparable when either is unprimed or
// both have the same number of primes. adj[i] says letters i and i+1 must sit
// at consecutive positions.
struct Pattern {
  std::vector<int> value;
  std::vector<int> primes;
  std::vector<char> adj;
  std::string text;

  std::size_t size() const { return value.size(); }
  bool comparable(std::size_t i, std::size_t j) const {
    return primes[i] == 0 || primes[j] == 0 || primes[i] == primes[j];
  }
  bool is_subword() const;
};

// "132" subword, "1-3-2" subsequence, "11-2" generalized, "2-1'-1''-2" POP.
// Primes may also be written as U+2032 / U+2033.
Pattern parse_pattern(const std::string& text);
Pattern subword_pattern(const std::vector<int>& letters);

// Number of occurrences of p in w (values compared as integers).
std::uint64_t occurrence_scan(const std::vector<long>& w, const Pattern& p);
bool avoids(const std::vector<long>& w, const Pattern& p);
bool avoids_all(const std::vector<long>& w, const std::vector<Pattern>& ps);
// Cyclic avoidance of a subword pattern: w followed by its first |p|-1 letters,
// taken cyclically.
bool cyclically_avoids(const std::vector<long>& w, const Pattern& p);

}  // namespace lrc
