#pragma once

// Shared fixtures: sl2 and gl3 filtrations and the gl3 pairing formula.

#include <random>
#include <string>

#include "wildstrat/lie.hpp"
#include "wildstrat/parab.hpp"

namespace fixture {

using namespace wildstrat;
using namespace wildstrat::parab;

inline int unit_root(const RootDatum& rd, int i, int j) {
  for (int a = 0; a < rd.num_roots(); ++a)
    if (rd.matrix_unit(a) == std::make_pair(i, j)) return a;
  return -1;
}

inline Vec ints(std::initializer_list<long> xs) {
  Vec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// sl2 with psi^(k) = (B, .., B, Phi, ..) of depth r.
inline ParabolicFiltration sl2_filtration(const RootDatum& rd, int k, int r, bool negative = false) {
  ParabolicFiltration f;
  RootSubset b = positive_borel(rd);
  if (negative) b = strat::negated(rd, b);
  for (int i = 0; i < r; ++i) f.psi.push_back(i < k ? b : RootSubset::full(rd.num_roots()));
  return f;
}

// gl3 chain: psi_0 the upper Borel, psi_1 the parabolic with Levi {a12, a21}.
inline ParabolicFiltration gl3_chain(const RootDatum& rd) {
  return ParabolicFiltration{{positive_borel(rd), standard_parabolic(rd, 1u)}};
}

// lambda_0 = (l1, l2, l3), lambda_1 = (m1, m1, m2) on E11, E22, E33.
inline FormalType gl3_type(const Rational& l1, const Rational& l2, const Rational& l3, const Rational& m1,
                           const Rational& m2) {
  return FormalType{Vec{l1, l2, l3}, Vec{m1, m1, m2}};
}

// The pairing written with coordinates a0, b0, c0 (E12, E13, E23), b1, c1 (E13 eps, E23 eps):
// l1(a0a0' + b0b0') + l2(c0c0' - a0a0') - l3(b0b0' + c0c0') + (m1 - m2)(b0b1' + c0c1' + b1b0' + c1c0').
inline QMatrix gl3_formula(const RootDatum& rd, const TriangularSplit& s, const Rational& l1, const Rational& l2,
                           const Rational& l3, const Rational& m1, const Rational& m2) {
  auto name = [&](int flat) {
    int d = rd.dim_g();
    int deg = flat / d, a = flat % d - rd.dim_t();
    auto [i, j] = rd.matrix_unit(a);
    if (i > j) std::swap(i, j);
    std::string n = (i == 0 && j == 1) ? "a" : (i == 0 && j == 2) ? "b" : "c";
    return n + std::to_string(deg);
  };
  int n = static_cast<int>(s.u_plus.size());
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::string x = name(s.u_plus[i]), y = name(s.u_minus[j]);
      Rational v = 0;
      if (x == "a0" && y == "a0") v = l1 - l2;
      if (x == "b0" && y == "b0") v = l1 - l3;
      if (x == "c0" && y == "c0") v = l2 - l3;
      if ((x == "b0" && y == "b1") || (x == "c0" && y == "c1") || (x == "b1" && y == "b0") || (x == "c1" && y == "c0"))
        v = m1 - m2;
      m(i, j) = v;
    }
  return m;
}

inline Rational random_rational(std::mt19937& gen) {
  std::uniform_int_distribution<int> d(-3, 3);
  Rational x(d(gen), 1 + (d(gen) + 3) % 3);
  x.canonicalize();
  return x;
}

inline Vec random_vec(std::mt19937& gen, int n) {
  Vec v(n);
  for (auto& x : v) x = random_rational(gen);
  return v;
}

inline liecore::TcElement random_gauge(const RootDatum& rd, int r, std::mt19937& gen) {
  Vec z = random_vec(gen, r * rd.dim_g());
  for (int k = 0; k < rd.dim_g(); ++k) z[k] = 0;
  return liecore::tc_from_flat(rd, r, z);
}

// A TcElement with known strictness s and irregular type tau, before any gauge.
struct Planted {
  liecore::TcElement x;
  int s = 0;
  liecore::TcElement tau;
};

inline Planted planted_normal_form(const RootDatum& rd, int r, int s, std::mt19937& gen) {
  using liecore::GElement;
  Planted p;
  p.s = s;
  p.x = liecore::TcElement::zero(rd, r);
  std::uniform_int_distribution<int> pick(0, rd.num_roots() - 1);
  int alpha = pick(gen);
  const auto& root = rd.root(alpha);
  auto in_kernel = [&](Vec h) {
    if (s == r) return h;
    Rational q = dot(root.eval, h) / dot(root.eval, root.coroot);
    return h - q * root.coroot;
  };
  for (int i = 0; i < s; ++i) p.x.coeffs[i] = GElement::from_cartan(in_kernel(random_vec(gen, rd.dim_t())));
  if (s < r) {
    GElement xs = GElement::from_cartan(in_kernel(random_vec(gen, rd.dim_t())));
    xs.roots[alpha] = 1;
    p.x.coeffs[s] = xs;
  }
  for (int i = s + 1; i < r; ++i) p.x.coeffs[i] = liecore::g_from_flat(rd, random_vec(gen, rd.dim_g()));
  p.tau.depth = s;
  p.tau.coeffs.assign(p.x.coeffs.begin(), p.x.coeffs.begin() + s);
  return p;
}

}  // namespace fixture
