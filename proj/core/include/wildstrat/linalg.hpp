#pragma once

#include <optional>
#include <vector>

#include "wildstrat/rational.hpp"

namespace wildstrat {

class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols, Rational(0)) {}

  static QMatrix identity(int n);
  static QMatrix from_columns(const std::vector<Vec>& cols, int rows);
  static QMatrix from_rows(const std::vector<Vec>& rows, int cols);

  int rows() const { return r_; }
  int cols() const { return c_; }
  Rational& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
  const Rational& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }

  Vec row(int i) const;
  Vec col(int j) const;
  void set_col(int j, const Vec& v);
  QMatrix transposed() const;
  bool is_zero() const;
  Vec flat() const { return a_; }

  QMatrix operator*(const QMatrix& o) const;
  Vec operator*(const Vec& v) const;
  QMatrix operator+(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  QMatrix scaled(const Rational& s) const;
  bool operator==(const QMatrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

 private:
  int r_ = 0, c_ = 0;
  Vec a_;
};

struct RowEchelon {
  QMatrix reduced;
  std::vector<int> pivots;
};

RowEchelon rref(QMatrix m);
int rank(const QMatrix& m);
Rational determinant(QMatrix m);
std::vector<Vec> nullspace(const QMatrix& m);
std::optional<QMatrix> inverse(const QMatrix& m);
std::optional<Vec> solve(const QMatrix& a, const Vec& b);

// Indices of a maximal linearly independent subfamily, greedy in order.
std::vector<int> independent_subset(const std::vector<Vec>& vs);
int span_dim(const std::vector<Vec>& vs);
bool in_span(const std::vector<Vec>& basis, const Vec& v);
bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b);

}  // namespace wildstrat
