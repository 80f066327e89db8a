#pragma once

#include <map>
#include <string>
#include <utility>

#include "wildstrat/rational.hpp"

namespace wildstrat {

// Laurent polynomial in one variable (the dilation parameter c).
// Also used for plain polynomials over Q, e.g. minimal polynomials.
class CPoly {
 public:
  CPoly() = default;
  CPoly(const Rational& a);  // NOLINT: constants convert implicitly
  CPoly(int a);              // NOLINT

  static CPoly monomial(const Rational& a, int e);
  static CPoly var() { return monomial(1, 1); }

  const std::map<int, Rational>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == 0); }
  int degree() const;      // -infinity for zero is reported as INT_MIN
  int low_degree() const;  // INT_MAX for zero
  Rational coeff(int e) const;
  Rational constant() const { return coeff(0); }

  CPoly& operator+=(const CPoly& o);
  CPoly& operator-=(const CPoly& o);
  CPoly& operator*=(const CPoly& o);
  CPoly& operator*=(const Rational& a);
  CPoly operator-() const;
  friend CPoly operator+(CPoly a, const CPoly& b) { return a += b; }
  friend CPoly operator-(CPoly a, const CPoly& b) { return a -= b; }
  friend CPoly operator*(CPoly a, const CPoly& b) { return a *= b; }
  friend CPoly operator*(const Rational& s, CPoly a) { return a *= s; }
  bool operator==(const CPoly& o) const { return t_ == o.t_; }
  bool operator!=(const CPoly& o) const { return !(*this == o); }

  Rational eval(const Rational& x) const;
  CPoly shifted(int k) const;          // multiply by c^k
  CPoly truncated_above(int e) const;  // keep exponents <= e
  CPoly derivative() const;

  std::string str(const std::string& var = "c") const;

 private:
  void add_term(int e, const Rational& a);
  std::map<int, Rational> t_;
};

// Polynomial algorithms; arguments must have no negative exponents.
std::pair<CPoly, CPoly> poly_divmod(const CPoly& a, const CPoly& b);
CPoly poly_gcd(CPoly a, CPoly b);
bool is_squarefree(const CPoly& p);

}  // namespace wildstrat
