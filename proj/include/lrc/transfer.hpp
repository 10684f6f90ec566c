#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "lrc/derived.hpp"
#include "lrc/limbs.hpp"

namespace lrc {

// Exact counts indexed by (m, total).
struct CountTable {
  std::size_t m_lo = 0, m_hi = 0;
  std::vector<std::vector<mpz_class>> counts;  // [m - m_lo][total]
  const mpz_class& at(std::size_t m, Elem a) const { return counts.at(m - m_lo).at(a); }
};

// Counts for all m in [m_lo, m_hi] and every total. Words shorter than the span
// are counted by count_short; longer ones by iterating the derived digraph.
CountTable count_table(const DerivedDigraph& Dx, std::size_t m_lo, std::size_t m_hi);
mpz_class count_paths(const DerivedDigraph& Dx, std::size_t m, Elem s);
// m < sigma: every word of length m is legal; returns counts per total.
std::vector<mpz_class> count_short_all(const DeBruijnSubgraph& D, std::size_t m);
mpz_class count_short(const DeBruijnSubgraph& D, std::size_t m, Elem s);

// Per base vertex: 1 if the tuple is in U.
std::vector<char> mark_tuples(const DeBruijnSubgraph& D, const std::vector<std::vector<Elem>>& U);

// counts[m - m_lo][total][r] = legal m-words with exactly r windows in U, r <= r_max.
struct OccurrenceTable {
  std::size_t m_lo = 0, m_hi = 0, r_max = 0;
  std::vector<std::vector<std::vector<mpz_class>>> counts;
  const mpz_class& at(std::size_t m, Elem a, std::size_t r) const {
    return counts.at(m - m_lo).at(a).at(r);
  }
};

OccurrenceTable count_with_occurrences(const DerivedDigraph& Dx,
                                       const std::vector<std::vector<Elem>>& U, std::size_t m_lo,
                                       std::size_t m_hi, std::size_t r_max);

// Full distribution over r = 0..m-sigma+1 for one (m, s).
std::vector<mpz_class> occurrence_distribution(const DerivedDigraph& Dx,
                                               const std::vector<std::vector<Elem>>& U,
                                               std::size_t m, Elem s);

struct Moments {
  mpq_class mean, variance;
};
Moments moments_of(const std::vector<mpz_class>& dist);
Moments occurrence_moments(const DerivedDigraph& Dx, const std::vector<std::vector<Elem>>& U,
                           std::size_t m, Elem s);

struct PowerOptions {
  double tol = 1e-12;
  std::size_t max_iter = 100000;
};

struct ComponentEstimate {
  std::size_t component = 0, size = 0, period = 0, iterations = 0;
  double lambda = 0;
  bool converged = false;
  double residual = 0;
  double subdominant_ratio = 0;  // empirical, from successive residuals
  std::vector<double> C;         // per total, relative to lambda^(m - sigma)
  std::vector<double> right, left;  // on the component, v.u = 1
  std::vector<std::uint32_t> members;
};

struct AsymptoticEstimate {
  bool zero_family = false;
  double lambda = 0;
  std::vector<double> C;  // summed over components attaining lambda
  std::vector<ComponentEstimate> components;
  std::vector<std::string> warnings;
  // max_s |C_s |G| / sum C - 1| for a single aperiodic component, else NaN.
  double equal_split_deviation = 0;
};

AsymptoticEstimate asymptotics(const DerivedDigraph& Dx, const PowerOptions& opt = {});

}  // namespace lrc

namespace lrc {

// Walk-count vector after `steps` steps from the given derived-digraph vertices.
LimbVec path_vector(const DerivedDigraph& Dx, const std::vector<std::size_t>& start, std::size_t steps);

}  // namespace lrc
