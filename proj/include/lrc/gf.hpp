#pragma once

#include <gmpxx.h>

#include <vector>

#include "lrc/series.hpp"

namespace lrc {

// Integer compositions avoiding {11-2, 12-3}; [z^n u^m].
TruncatedSeries gf_pair_112_123(int N, int M);

// k-ary words avoiding {21-2, 2-12}, by the "run of k is contiguous"
// recurrence. Row m = 0..M.
std::vector<mpz_class> pair_212_212p_row(int k, int M);
mpz_class count_pair_212_212p(int k, int m);

// Compositions over the part set A avoiding {11-2, 12-1}. Parts above N are
// dropped since they cannot reach z^{<=N}.
TruncatedSeries gf_pair_112_121(const std::vector<int>& A, int N, int M);

// k-ary words avoiding {12-3, 3-21}. Row m = 0..M.
std::vector<mpz_class> pair_123_321_row(int k, int M);
mpz_class count_pair_123_321(int k, int m);

// h_k(n, m) for the POP 2^p-1'-...-1^(q)-2^r, p, q, r >= 1, over [k].
// Table indexed [n][m] for n <= N, m <= M.
std::vector<std::vector<mpz_class>> pop_general_table(int p, int q, int r, int k, int N, int M);
mpz_class count_pop_general(int p, int q, int r, int k, int n, int m);
// Same count with totals ignored (k-ary m-words).
mpz_class count_pop_general_words(int p, int q, int r, int k, int m);

// k-ary words avoiding 2-1'-1''-2, [z^m] H_k(z).
std::vector<mpz_class> pop_2112_words_row(int k, int M);
mpz_class count_pop_2112_words(int k, int m);

// h_k(n, m) for 1'-...-1^(q)-2^r over [k].
std::vector<std::vector<mpz_class>> pop_p0_table(int q, int r, int k, int N, int M);
mpz_class count_pop_p0(int q, int r, int k, int n, int m);

// Compositions over Z_k of a (parts 1..k, total mod k) avoiding 1'-2-1''.
// Table [a][m] for m <= M, by exponent binning of the integer series.
std::vector<std::vector<mpz_class>> zk_avoiding_121_table(int k, int M);
mpz_class count_zk_avoiding_121(int k, int a, int m);

// Nonempty compositions over [k] cyclically avoiding 122 / 321. Passing
// k = N gives the unbounded-part limit through z^N.
TruncatedSeries gf_cyclic_122(int k, int N, int M);
TruncatedSeries gf_cyclic_321(int k, int N, int M);
// Compositions over [k] avoiding 321 and not starting with a descent
// (empty composition included).
TruncatedSeries gf_no_321_no_initial_descent(int k, int N, int M);

mpz_class binomial(long n, long k);

}  // namespace lrc
