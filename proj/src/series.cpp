#include "lrc/series.hpp"

#include "lrc/group.hpp"

namespace lrc {

TruncatedSeries::TruncatedSeries(int n_max, int m_max) : n_(n_max), m_(m_max) {
  if (n_max < 0 || m_max < 0) throw SpecError("negative truncation order");
  c_.assign(static_cast<std::size_t>(n_ + 1) * (m_ + 1), 0);
}

TruncatedSeries TruncatedSeries::one(int n_max, int m_max) {
  TruncatedSeries s(n_max, m_max);
  s.at(0, 0) = 1;
  return s;
}

TruncatedSeries TruncatedSeries::mono(int n_max, int m_max, int i, int j, const mpz_class& c) {
  TruncatedSeries s(n_max, m_max);
  if (i >= 0 && j >= 0 && i <= n_max && j <= m_max) s.at(i, j) = c;
  return s;
}

const mpz_class& TruncatedSeries::at(int i, int j) const { return c_[static_cast<std::size_t>(i) * (m_ + 1) + j]; }
mpz_class& TruncatedSeries::at(int i, int j) { return c_[static_cast<std::size_t>(i) * (m_ + 1) + j]; }

mpz_class TruncatedSeries::coeff(int i, int j) const {
  if (i < 0 || j < 0 || i > n_ || j > m_) return 0;
  return at(i, j);
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
  return n_ == o.n_ && m_ == o.m_ && c_ == o.c_;
}

static void same_shape(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.n_max() != b.n_max() || a.m_max() != b.m_max()) throw SpecError("series truncation mismatch");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  same_shape(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  same_shape(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const mpz_class& c) {
  for (auto& x : c_) x *= c;
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  same_shape(a, b);
  const int N = a.n_, M = a.m_;
  TruncatedSeries r(N, M);
  for (int i = 0; i <= N; ++i)
    for (int j = 0; j <= M; ++j) {
      const mpz_class& x = a.at(i, j);
      if (sgn(x) == 0) continue;
      for (int k = 0; i + k <= N; ++k)
        for (int l = 0; j + l <= M; ++l) {
          const mpz_class& y = b.at(k, l);
          if (sgn(y) != 0) mpz_addmul(r.at(i + k, j + l).get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
        }
    }
  return r;
}

TruncatedSeries TruncatedSeries::shifted(int di, int dj) const {
  TruncatedSeries r(n_, m_);
  for (int i = 0; i + di <= n_; ++i)
    for (int j = 0; j + dj <= m_; ++j) r.at(i + di, j + dj) = at(i, j);
  return r;
}

// Solve f*g = 1 coefficient by coefficient in (i, j) lexicographic order.
TruncatedSeries TruncatedSeries::inverse() const {
  const mpz_class& c0 = at(0, 0);
  if (c0 != 1 && c0 != -1) throw SpecError("series inverse needs constant term +-1");
  TruncatedSeries g(n_, m_);
  for (int i = 0; i <= n_; ++i)
    for (int j = 0; j <= m_; ++j) {
      mpz_class acc = (i == 0 && j == 0) ? 1 : 0;
      for (int k = 0; k <= i; ++k)
        for (int l = 0; l <= j; ++l) {
          if (k == 0 && l == 0) continue;
          const mpz_class& f = at(k, l);
          if (sgn(f) != 0) acc -= f * g.at(i - k, j - l);
        }
      g.at(i, j) = c0 == 1 ? acc : mpz_class(-acc);
    }
  return g;
}

TruncatedSeries TruncatedSeries::du() const {
  TruncatedSeries r(n_, m_);
  for (int i = 0; i <= n_; ++i)
    for (int j = 1; j <= m_; ++j) r.at(i, j - 1) = at(i, j) * j;
  return r;
}

TruncatedSeries TruncatedSeries::dz() const {
  TruncatedSeries r(n_, m_);
  for (int i = 1; i <= n_; ++i)
    for (int j = 0; j <= m_; ++j) r.at(i - 1, j) = at(i, j) * i;
  return r;
}

TruncatedSeries TruncatedSeries::u_du_plus_1() const {
  TruncatedSeries r(n_, m_);
  for (int i = 0; i <= n_; ++i)
    for (int j = 0; j <= m_; ++j) r.at(i, j) = at(i, j) * (j + 1);
  return r;
}

std::vector<mpz_class> TruncatedSeries::at_u1() const {
  std::vector<mpz_class> r(n_ + 1);
  for (int i = 0; i <= n_; ++i)
    for (int j = 0; j <= m_; ++j) r[i] += at(i, j);
  return r;
}

}  // namespace lrc
