#pragma once

#include <gmpxx.h>

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "lrc/transfer.hpp"

namespace lrc {

// A word is cyclically legal when all m cyclic windows are vertices and each
// cyclic window is joined to the next by an arc. For m < sigma the windows wrap
// around the word more than once.
bool cyclic_legal(const DeBruijnSubgraph& D, const std::vector<Elem>& x);

// Cyclically restricted m-compositions, per total.
std::vector<mpz_class> count_cyclic_all(const DerivedDigraph& Dx, std::size_t m);
mpz_class count_cyclic(const DerivedDigraph& Dx, std::size_t m, Elem a);

// Distribution of cyclic occurrences of U: result[total][r], r = 0..m.
std::vector<std::vector<mpz_class>> cyclic_occurrence_table(const DerivedDigraph& Dx,
                                                            const std::vector<std::vector<Elem>>& U,
                                                            std::size_t m);
Moments occurrence_moments_cyclic(const DerivedDigraph& Dx, const std::vector<std::vector<Elem>>& U,
                                  std::size_t m, Elem a);

// Point (d, b) of the poset Z_{>0} x G; (d', b') <= (d, b) iff d' | d and
// (d/d') b' = b.
struct PosetPoint {
  std::uint64_t d;
  Elem b;
  auto operator<=>(const PosetPoint&) const = default;
};

class MoebiusCache {
 public:
  explicit MoebiusCache(const FiniteGroup& g) : g_(g) {}
  bool leq(PosetPoint lo, PosetPoint hi) const;
  long mu(PosetPoint lo, PosetPoint hi);
  // All points below hi (inclusive).
  std::vector<PosetPoint> down_set(PosetPoint hi) const;
  std::size_t cached() const;

 private:
  const FiniteGroup& g_;
  mutable std::mutex mu_lock_;
  std::map<std::pair<PosetPoint, PosetPoint>, long> memo_;
};

long moebius_P(const FiniteGroup& g, PosetPoint lo, PosetPoint hi);

std::vector<mpz_class> count_aperiodic_all(const DerivedDigraph& Dx, std::size_t m);
std::vector<mpz_class> count_circular_all(const DerivedDigraph& Dx, std::size_t m);
mpz_class count_aperiodic_cyclic(const DerivedDigraph& Dx, std::size_t m, Elem a);
mpz_class count_circular(const DerivedDigraph& Dx, std::size_t m, Elem a);

// Throws SpecError with a witness when legal words are not closed under reversal.
void check_reversal_closed(const DeBruijnSubgraph& D);
std::vector<mpz_class> count_palindromic_all(const DerivedDigraph& Dx, std::size_t m);
std::vector<mpz_class> count_undirected_all(const DerivedDigraph& Dx, std::size_t m);
mpz_class count_palindromic_paths(const DerivedDigraph& Dx, std::size_t m, Elem a);
mpz_class count_undirected_paths(const DerivedDigraph& Dx, std::size_t m, Elem a);

mpz_class stirling2(std::size_t n, std::size_t k);
mpz_class count_gapfree_words(std::size_t k, std::size_t m);

}  // namespace lrc
