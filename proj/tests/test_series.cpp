#include <doctest.h>

#include <random>

#include "lrc/group.hpp"
#include "lrc/series.hpp"

using namespace lrc;

namespace {

TruncatedSeries random_series(std::mt19937_64& rng, int N, int M) {
  TruncatedSeries s(N, M);
  for (int i = 0; i <= N; ++i)
    for (int j = 0; j <= M; ++j) s.at(i, j) = long(rng() % 21) - 10;
  return s;
}

}  // namespace

TEST_SUITE("series") {
  TEST_CASE("ring laws under truncation") {
    std::mt19937_64 rng(1);
    for (int rep = 0; rep < 20; ++rep) {
      const int N = 1 + int(rng() % 6), M = int(rng() % 4);
      auto a = random_series(rng, N, M), b = random_series(rng, N, M), c = random_series(rng, N, M);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a + b - b == a);
      CHECK(a * TruncatedSeries::one(N, M) == a);
    }
  }

  TEST_CASE("product rule") {
    std::mt19937_64 rng(2);
    for (int rep = 0; rep < 20; ++rep) {
      const int N = 5, M = 4;
      auto f = random_series(rng, N, M), g = random_series(rng, N, M);
      // D_u drops the top u-degree, so compare below it
      auto lhs = (f * g).du(), rhs = f * g.du() + g * f.du();
      for (int i = 0; i <= N; ++i)
        for (int j = 0; j < M; ++j) CHECK(lhs.at(i, j) == rhs.at(i, j));
      auto lz = (f * g).dz(), rz = f * g.dz() + g * f.dz();
      for (int i = 0; i < N; ++i)
        for (int j = 0; j <= M; ++j) CHECK(lz.at(i, j) == rz.at(i, j));
    }
  }

  TEST_CASE("inverse") {
    std::mt19937_64 rng(3);
    for (int rep = 0; rep < 20; ++rep) {
      auto f = random_series(rng, 6, 3);
      f.at(0, 0) = rep % 2 ? 1 : -1;
      CHECK(f * f.inverse() == TruncatedSeries::one(6, 3));
    }
    // 1/(1 - z) = sum z^n
    auto g = (TruncatedSeries::one(8, 0) - TruncatedSeries::mono(8, 0, 1, 0)).inverse();
    for (int i = 0; i <= 8; ++i) CHECK(g.at(i) == 1);
    auto bad = TruncatedSeries::mono(4, 0, 0, 0, 2);
    CHECK_THROWS_AS(bad.inverse(), SpecError);
  }

  TEST_CASE("monomials, shifts and u D_u + 1") {
    auto m = TruncatedSeries::mono(5, 3, 2, 1, 7);
    CHECK(m.coeff(2, 1) == 7);
    CHECK(TruncatedSeries::mono(5, 3, 6, 1) == TruncatedSeries(5, 3));
    CHECK(m.shifted(3, 2).coeff(5, 3) == 7);
    CHECK(m.shifted(4, 0) == TruncatedSeries(5, 3));
    CHECK(m.u_du_plus_1().coeff(2, 1) == 14);
    CHECK(m.at_u1()[2] == 7);
    CHECK(m.coeff(9, 9) == 0);
    CHECK_THROWS_AS(TruncatedSeries(2, 1) + TruncatedSeries(2, 2), SpecError);
  }
}
