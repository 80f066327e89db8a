#pragma once

#include <map>
#include <string>
#include <vector>

#include "wildstrat/cpoly.hpp"
#include "wildstrat/linalg.hpp"
#include "wildstrat/rootdatum.hpp"

namespace wildstrat::liecore {

using wildstrat::operator+;
using wildstrat::operator-;
using wildstrat::operator*;

struct GElement {
  Vec cartan;
  std::map<int, Rational> roots;

  static GElement zero(const RootDatum& rd);
  static GElement from_cartan(const Vec& h);
  static GElement root_vector(const RootDatum& rd, int a, const Rational& c = 1);
  bool is_zero() const;
  bool in_cartan() const;
  bool operator==(const GElement& o) const;
};

struct TcElement {
  int depth = 1;
  std::vector<GElement> coeffs;

  static TcElement zero(const RootDatum& rd, int r);
  bool operator==(const TcElement& o) const { return depth == o.depth && coeffs == o.coeffs; }
};

// Flat coordinates: g basis index b; g_r basis index deg * dim_g + b.
Vec to_flat(const RootDatum& rd, const GElement& x);
GElement g_from_flat(const RootDatum& rd, const Vec& v);
Vec to_flat(const RootDatum& rd, const TcElement& x);
TcElement tc_from_flat(const RootDatum& rd, int r, const Vec& v);

GElement operator+(const GElement& a, const GElement& b);
GElement operator*(const Rational& s, const GElement& a);
TcElement operator+(const TcElement& a, const TcElement& b);
TcElement operator*(const Rational& s, const TcElement& a);

GElement bracket_g(const RootDatum& rd, const GElement& x, const GElement& y);
TcElement bracket_gr(const RootDatum& rd, const TcElement& x, const TcElement& y);
Vec bracket_flat_g(const RootDatum& rd, const Vec& x, const Vec& y);
Vec bracket_flat_gr(const RootDatum& rd, int r, const Vec& x, const Vec& y);
SparseVec bracket_basis_gr(const RootDatum& rd, int r, int x, int y);

QMatrix ad_matrix_g(const RootDatum& rd, const Vec& x);
QMatrix ad_matrix_gr(const RootDatum& rd, int r, const Vec& x);

CPoly minimal_polynomial(const QMatrix& m);
bool is_semisimple_matrix(const QMatrix& m);
bool is_semisimple(const RootDatum& rd, const GElement& x);

struct SemisimpleSplit {
  std::vector<Vec> kernel;
  std::vector<Vec> image;
  std::vector<Vec> preimage;  // f(preimage[k]) = image[k], preimage[k] in the space
};
// Throws ValidationError when Ker f and f(V) are not complementary in V.
SemisimpleSplit semisimple_split(const QMatrix& f, const std::vector<Vec>& space);

Rational invariant_form_flat(const RootDatum& rd, const Vec& x, const Vec& y);
Rational invariant_form_g(const RootDatum& rd, const GElement& x, const GElement& y);
Rational pairing_c(const RootDatum& rd, const TcElement& x, const TcElement& y, int c);

GElement transpose(const RootDatum& rd, const GElement& x);
TcElement transpose(const RootDatum& rd, const TcElement& x);
TcElement cartan_theta(const RootDatum& rd, const TcElement& x);
// Transpose of a g_r basis vector is again a basis vector.
int transpose_basis(const RootDatum& rd, int flat_index);
// Readable name of a g_r basis vector, e.g. "E12*eps^1" or "h0".
std::string basis_name(const RootDatum& rd, int flat_index);

// Elements of tensor or enveloping algebras written as linear combinations of words.
using Word = std::vector<int>;
using UExpr = std::map<Word, Rational>;
UExpr antipode(const UExpr& u);
UExpr word_product(const UExpr& a, const UExpr& b);

}  // namespace wildstrat::liecore
