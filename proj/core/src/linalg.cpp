#include "wildstrat/linalg.hpp"

#include <stdexcept>

namespace wildstrat {

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_columns(const std::vector<Vec>& cols, int rows) {
  QMatrix m(rows, static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols(); ++j)
    for (int i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<Vec>& rows, int cols) {
  QMatrix m(static_cast<int>(rows.size()), cols);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  return m;
}

Vec QMatrix::row(int i) const {
  return Vec(a_.begin() + static_cast<long>(i) * c_, a_.begin() + static_cast<long>(i + 1) * c_);
}

Vec QMatrix::col(int j) const {
  Vec v(r_);
  for (int i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

void QMatrix::set_col(int j, const Vec& v) {
  for (int i = 0; i < r_; ++i) (*this)(i, j) = v[i];
}

QMatrix QMatrix::transposed() const {
  QMatrix t(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool QMatrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (c_ != o.r_) throw std::invalid_argument("matrix shape mismatch");
  QMatrix p(r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      const Rational& x = (*this)(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.c_; ++j)
        if (o(k, j) != 0) p(i, j) += x * o(k, j);
    }
  return p;
}

Vec QMatrix::operator*(const Vec& v) const {
  Vec out(r_, Rational(0));
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j)
      if ((*this)(i, j) != 0 && v[j] != 0) out[i] += (*this)(i, j) * v[j];
  return out;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  QMatrix s = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] += o.a_[i];
  return s;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
  QMatrix s = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] -= o.a_[i];
  return s;
}

QMatrix QMatrix::scaled(const Rational& s) const {
  QMatrix m = *this;
  for (auto& x : m.a_) x *= s;
  return m;
}

RowEchelon rref(QMatrix m) {
  RowEchelon out;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int piv = -1;
    for (int i = row; i < m.rows(); ++i)
      if (m(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    Rational inv = 1 / m(row, col);
    for (int j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      Rational f = m(i, col);
      for (int j = col; j < m.cols(); ++j)
        if (m(row, j) != 0) m(i, j) -= f * m(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

int rank(const QMatrix& m) { return static_cast<int>(rref(m).pivots.size()); }

// Bareiss elimination; every division is exact.
Rational determinant(QMatrix m) {
  int n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  if (n == 0) return 1;
  Rational sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::vector<Vec> nullspace(const QMatrix& m) {
  RowEchelon e = rref(m);
  std::vector<bool> is_piv(m.cols(), false);
  for (int p : e.pivots) is_piv[p] = true;
  std::vector<Vec> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    Vec v(m.cols(), Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(static_cast<int>(r), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QMatrix> inverse(const QMatrix& m) {
  int n = m.rows();
  QMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  RowEchelon e = rref(aug);
  if (static_cast<int>(e.pivots.size()) < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  QMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

std::optional<Vec> solve(const QMatrix& a, const Vec& b) {
  QMatrix aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  RowEchelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  Vec x(a.cols(), Rational(0));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(static_cast<int>(r), a.cols());
  return x;
}

std::vector<int> independent_subset(const std::vector<Vec>& vs) {
  std::vector<int> keep;
  if (vs.empty()) return keep;
  // Incremental echelon basis.
  std::vector<Vec> ech;
  std::vector<int> lead;
  for (std::size_t k = 0; k < vs.size(); ++k) {
    Vec v = vs[k];
    for (std::size_t b = 0; b < ech.size(); ++b)
      if (v[lead[b]] != 0) axpy(v, -v[lead[b]], ech[b]);
    int l = -1;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) {
        l = static_cast<int>(i);
        break;
      }
    if (l < 0) continue;
    Rational inv = 1 / v[l];
    for (auto& x : v) x *= inv;
    for (std::size_t b = 0; b < ech.size(); ++b)
      if (ech[b][l] != 0) axpy(ech[b], -ech[b][l], v);
    ech.push_back(std::move(v));
    lead.push_back(l);
    keep.push_back(static_cast<int>(k));
  }
  return keep;
}

int span_dim(const std::vector<Vec>& vs) { return static_cast<int>(independent_subset(vs).size()); }

bool in_span(const std::vector<Vec>& basis, const Vec& v) {
  std::vector<Vec> all = basis;
  int d = span_dim(all);
  all.push_back(v);
  return span_dim(all) == d;
}

bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  int da = span_dim(a), db = span_dim(b);
  if (da != db) return false;
  std::vector<Vec> all = a;
  all.insert(all.end(), b.begin(), b.end());
  return span_dim(all) == da;
}

}  // namespace wildstrat
