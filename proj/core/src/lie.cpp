#include "wildstrat/lie.hpp"

#include <algorithm>
#include <cstdlib>

#include "wildstrat/errors.hpp"

namespace wildstrat::liecore {

GElement GElement::zero(const RootDatum& rd) { return GElement{zero_vec(rd.dim_t()), {}}; }

GElement GElement::from_cartan(const Vec& h) { return GElement{h, {}}; }

GElement GElement::root_vector(const RootDatum& rd, int a, const Rational& c) {
  GElement g = zero(rd);
  if (c != 0) g.roots[a] = c;
  return g;
}

bool GElement::is_zero() const { return wildstrat::is_zero(cartan) && roots.empty(); }

bool GElement::in_cartan() const { return roots.empty(); }

bool GElement::operator==(const GElement& o) const { return cartan == o.cartan && roots == o.roots; }

TcElement TcElement::zero(const RootDatum& rd, int r) {
  return TcElement{r, std::vector<GElement>(r, GElement::zero(rd))};
}

Vec to_flat(const RootDatum& rd, const GElement& x) {
  Vec v = zero_vec(rd.dim_g());
  for (int k = 0; k < rd.dim_t(); ++k) v[k] = x.cartan[k];
  for (const auto& [a, c] : x.roots) v[rd.dim_t() + a] = c;
  return v;
}

GElement g_from_flat(const RootDatum& rd, const Vec& v) {
  GElement g = GElement::zero(rd);
  for (int k = 0; k < rd.dim_t(); ++k) g.cartan[k] = v[k];
  for (int a = 0; a < rd.num_roots(); ++a)
    if (v[rd.dim_t() + a] != 0) g.roots[a] = v[rd.dim_t() + a];
  return g;
}

Vec to_flat(const RootDatum& rd, const TcElement& x) {
  Vec v;
  v.reserve(static_cast<std::size_t>(x.depth) * rd.dim_g());
  for (const auto& c : x.coeffs) {
    Vec f = to_flat(rd, c);
    v.insert(v.end(), f.begin(), f.end());
  }
  return v;
}

TcElement tc_from_flat(const RootDatum& rd, int r, const Vec& v) {
  TcElement t{r, {}};
  int d = rd.dim_g();
  for (int i = 0; i < r; ++i) t.coeffs.push_back(g_from_flat(rd, Vec(v.begin() + i * d, v.begin() + (i + 1) * d)));
  return t;
}

GElement operator+(const GElement& a, const GElement& b) {
  GElement s{a.cartan + b.cartan, a.roots};
  for (const auto& [k, c] : b.roots) {
    s.roots[k] += c;
    if (s.roots[k] == 0) s.roots.erase(k);
  }
  return s;
}

GElement operator*(const Rational& s, const GElement& a) {
  if (s == 0) return GElement{zero_vec(a.cartan.size()), {}};
  GElement g{s * a.cartan, a.roots};
  for (auto& kv : g.roots) kv.second *= s;
  return g;
}

TcElement operator+(const TcElement& a, const TcElement& b) {
  if (a.depth != b.depth) throw ValidationError("depth mismatch");
  TcElement s = a;
  for (int i = 0; i < a.depth; ++i) s.coeffs[i] = a.coeffs[i] + b.coeffs[i];
  return s;
}

TcElement operator*(const Rational& s, const TcElement& a) {
  TcElement t = a;
  for (auto& c : t.coeffs) c = s * c;
  return t;
}

Vec bracket_flat_g(const RootDatum& rd, const Vec& x, const Vec& y) {
  int d = rd.dim_g();
  Vec out = zero_vec(d);
  for (int i = 0; i < d; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (y[j] == 0) continue;
      Rational c = x[i] * y[j];
      for (const auto& [k, e] : rd.bracket_basis(i, j)) out[k] += c * e;
    }
  }
  return out;
}

GElement bracket_g(const RootDatum& rd, const GElement& x, const GElement& y) {
  if (static_cast<int>(x.cartan.size()) != rd.dim_t() || static_cast<int>(y.cartan.size()) != rd.dim_t())
    throw ValidationError("element does not belong to " + rd.name());
  return g_from_flat(rd, bracket_flat_g(rd, to_flat(rd, x), to_flat(rd, y)));
}

Vec bracket_flat_gr(const RootDatum& rd, int r, const Vec& x, const Vec& y) {
  int d = rd.dim_g();
  Vec out = zero_vec(static_cast<std::size_t>(r) * d);
  for (int i = 0; i < r * d; ++i) {
    if (x[i] == 0) continue;
    int di = i / d, bi = i % d;
    for (int j = 0; j < (r - di) * d; ++j) {
      if (y[j] == 0) continue;
      int dj = j / d, bj = j % d;
      Rational c = x[i] * y[j];
      int off = (di + dj) * d;
      for (const auto& [k, e] : rd.bracket_basis(bi, bj)) out[off + k] += c * e;
    }
  }
  return out;
}

SparseVec bracket_basis_gr(const RootDatum& rd, int r, int x, int y) {
  int d = rd.dim_g();
  int deg = x / d + y / d;
  if (deg >= r) return {};
  SparseVec out = rd.bracket_basis(x % d, y % d);
  for (auto& kv : out) kv.first += deg * d;
  return out;
}

TcElement bracket_gr(const RootDatum& rd, const TcElement& x, const TcElement& y) {
  if (x.depth != y.depth) throw ValidationError("depth mismatch in bracket_gr");
  return tc_from_flat(rd, x.depth, bracket_flat_gr(rd, x.depth, to_flat(rd, x), to_flat(rd, y)));
}

QMatrix ad_matrix_g(const RootDatum& rd, const Vec& x) {
  int d = rd.dim_g();
  QMatrix m(d, d);
  for (int i = 0; i < d; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < d; ++j)
      for (const auto& [k, e] : rd.bracket_basis(i, j)) m(k, j) += x[i] * e;
  }
  return m;
}

QMatrix ad_matrix_gr(const RootDatum& rd, int r, const Vec& x) {
  int n = r * rd.dim_g();
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < n; ++j)
      for (const auto& [k, e] : bracket_basis_gr(rd, r, i, j)) m(k, j) += x[i] * e;
  }
  return m;
}

CPoly minimal_polynomial(const QMatrix& m) {
  int n = m.rows();
  std::vector<Vec> powers{QMatrix::identity(n).flat()};
  QMatrix p = QMatrix::identity(n);
  for (int k = 1; k <= n; ++k) {
    p = p * m;
    Vec f = p.flat();
    QMatrix a = QMatrix::from_columns(powers, n * n);
    if (auto sol = solve(a, f)) {
      CPoly mp = CPoly::monomial(1, k);
      for (int i = 0; i < k; ++i) mp -= CPoly::monomial((*sol)[i], i);
      return mp;
    }
    powers.push_back(std::move(f));
  }
  throw ClaimViolation("minimal polynomial degree exceeds matrix size");
}

bool is_semisimple_matrix(const QMatrix& m) { return is_squarefree(minimal_polynomial(m)); }

bool is_semisimple(const RootDatum& rd, const GElement& x) { return is_semisimple_matrix(ad_matrix_g(rd, to_flat(rd, x))); }

SemisimpleSplit semisimple_split(const QMatrix& f, const std::vector<Vec>& space) {
  SemisimpleSplit out;
  int n = f.rows();
  if (space.empty()) return out;
  std::vector<Vec> basis;
  for (int k : independent_subset(space)) basis.push_back(space[k]);
  QMatrix s = QMatrix::from_columns(basis, n);
  QMatrix fs = f * s;
  for (const Vec& a : nullspace(fs)) out.kernel.push_back(s * a);
  std::vector<Vec> imgs;
  for (int j = 0; j < fs.cols(); ++j) imgs.push_back(fs.col(j));
  for (int k : independent_subset(imgs)) {
    out.image.push_back(imgs[k]);
    out.preimage.push_back(basis[k]);
  }
  for (const Vec& v : out.image)
    if (!in_span(basis, v)) throw ValidationError("semisimple_split: space is not invariant");
  std::vector<Vec> all = out.kernel;
  all.insert(all.end(), out.image.begin(), out.image.end());
  if (span_dim(all) != static_cast<int>(basis.size()))
    throw ValidationError("semisimple_split: kernel and image are not complementary (not semisimple)");
  return out;
}

Rational invariant_form_flat(const RootDatum& rd, const Vec& x, const Vec& y) {
  Rational s = 0;
  int t = rd.dim_t();
  for (int k = 0; k < t; ++k) {
    if (x[k] == 0) continue;
    for (int l = 0; l < t; ++l)
      if (y[l] != 0) s += x[k] * y[l] * rd.t_gram()(k, l);
  }
  for (int a = 0; a < rd.num_roots(); ++a) {
    const Rational& xa = x[t + a];
    if (xa == 0) continue;
    const Rational& yb = y[t + rd.root(a).neg];
    if (yb != 0) s += xa * yb * rd.root_form(a);
  }
  return s;
}

Rational invariant_form_g(const RootDatum& rd, const GElement& x, const GElement& y) {
  return invariant_form_flat(rd, to_flat(rd, x), to_flat(rd, y));
}

Rational pairing_c(const RootDatum& rd, const TcElement& x, const TcElement& y, int c) {
  if (x.depth != y.depth) throw ValidationError("depth mismatch in pairing");
  Rational s = 0;
  for (int i = 0; i < x.depth; ++i) {
    int j = c - 1 - i;
    if (j < 0 || j >= y.depth) continue;
    s += invariant_form_g(rd, x.coeffs[i], y.coeffs[j]);
  }
  return s;
}

GElement transpose(const RootDatum& rd, const GElement& x) {
  GElement t{x.cartan, {}};
  for (const auto& [a, c] : x.roots) t.roots[rd.root(a).neg] = c;
  return t;
}

TcElement transpose(const RootDatum& rd, const TcElement& x) {
  TcElement t = x;
  for (auto& c : t.coeffs) c = transpose(rd, c);
  return t;
}

TcElement cartan_theta(const RootDatum& rd, const TcElement& x) { return Rational(-1) * transpose(rd, x); }

int transpose_basis(const RootDatum& rd, int flat_index) {
  int d = rd.dim_g();
  int deg = flat_index / d, b = flat_index % d;
  if (b < rd.dim_t()) return flat_index;
  return deg * d + rd.dim_t() + rd.root(b - rd.dim_t()).neg;
}

UExpr antipode(const UExpr& u) {
  UExpr out;
  for (const auto& [w, c] : u) {
    Word rev(w.rbegin(), w.rend());
    Rational s = (w.size() % 2 == 0) ? c : Rational(-c);
    out[rev] += s;
    if (out[rev] == 0) out.erase(rev);
  }
  return out;
}

UExpr word_product(const UExpr& a, const UExpr& b) {
  UExpr out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out[w] += ca * cb;
      if (out[w] == 0) out.erase(w);
    }
  return out;
}

std::string basis_name(const RootDatum& rd, int flat_index) {
  int dg = rd.dim_g(), deg = flat_index / dg, b = flat_index % dg;
  std::string name;
  if (b < rd.dim_t()) {
    name = "h" + std::to_string(b);
  } else if (rd.matrix_type()) {
    auto [i, j] = rd.matrix_unit(b - rd.dim_t());
    name = "E" + std::to_string(i + 1) + std::to_string(j + 1);
  } else {
    const Root& a = rd.root(b - rd.dim_t());
    name = a.positive ? "e[" : "f[";
    for (std::size_t k = 0; k < a.simple.size(); ++k) name += (k ? "," : "") + std::to_string(std::abs(a.simple[k]));
    name += "]";
  }
  if (deg > 0) name += "*eps^" + std::to_string(deg);
  return name;
}

}  // namespace wildstrat::liecore
