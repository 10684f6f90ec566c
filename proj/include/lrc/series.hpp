#pragma once

#include <gmpxx.h>

#include <vector>

namespace lrc {

// Bivariate power series in z (total) and u (length), truncated at z^N and
// u^M. M = 0 gives a univariate series in z. Coefficients are exact integers;
// the only division is the reciprocal of a series with constant term +-1.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  TruncatedSeries(int n_max, int m_max);

  static TruncatedSeries zero(int n_max, int m_max) { return {n_max, m_max}; }
  static TruncatedSeries one(int n_max, int m_max);
  // c * z^i * u^j, or zero if outside the truncation.
  static TruncatedSeries mono(int n_max, int m_max, int i, int j, const mpz_class& c = 1);

  int n_max() const { return n_; }
  int m_max() const { return m_; }
  const mpz_class& at(int i, int j = 0) const;
  mpz_class& at(int i, int j = 0);
  mpz_class coeff(int i, int j = 0) const;  // zero outside the window
  bool operator==(const TruncatedSeries& o) const;

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const mpz_class& c);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(TruncatedSeries a, const mpz_class& c) { return a *= c; }

  // Multiply by z^i u^j.
  TruncatedSeries shifted(int i, int j) const;
  // Throws SpecError unless the constant term is +-1.
  TruncatedSeries inverse() const;
  TruncatedSeries du() const;
  TruncatedSeries dz() const;
  // (u D_u + 1) f: coefficient of u^j scaled by j+1.
  TruncatedSeries u_du_plus_1() const;
  // f(z, 1) as a univariate series (all u powers collapsed).
  std::vector<mpz_class> at_u1() const;

 private:
  int n_ = 0, m_ = 0;
  std::vector<mpz_class> c_;
};

}  // namespace lrc
