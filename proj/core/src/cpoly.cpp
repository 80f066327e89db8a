#include "wildstrat/cpoly.hpp"

#include <climits>
#include <sstream>

#include "wildstrat/errors.hpp"

namespace wildstrat {

CPoly::CPoly(const Rational& a) {
  if (a != 0) t_[0] = a;
}

CPoly::CPoly(int a) : CPoly(Rational(a)) {}

CPoly CPoly::monomial(const Rational& a, int e) {
  CPoly p;
  if (a != 0) p.t_[e] = a;
  return p;
}

int CPoly::degree() const { return t_.empty() ? INT_MIN : t_.rbegin()->first; }

int CPoly::low_degree() const { return t_.empty() ? INT_MAX : t_.begin()->first; }

Rational CPoly::coeff(int e) const {
  auto it = t_.find(e);
  return it == t_.end() ? Rational(0) : it->second;
}

void CPoly::add_term(int e, const Rational& a) {
  if (a == 0) return;
  auto [it, fresh] = t_.try_emplace(e, a);
  if (!fresh) {
    it->second += a;
    if (it->second == 0) t_.erase(it);
  }
}

CPoly& CPoly::operator+=(const CPoly& o) {
  for (const auto& [e, a] : o.t_) add_term(e, a);
  return *this;
}

CPoly& CPoly::operator-=(const CPoly& o) {
  for (const auto& [e, a] : o.t_) add_term(e, -a);
  return *this;
}

CPoly& CPoly::operator*=(const CPoly& o) {
  if (t_.empty()) return *this;
  if (o.is_constant()) return *this *= o.constant();
  CPoly r;
  for (const auto& [e1, a1] : t_)
    for (const auto& [e2, a2] : o.t_) r.add_term(e1 + e2, a1 * a2);
  t_ = std::move(r.t_);
  return *this;
}

CPoly& CPoly::operator*=(const Rational& a) {
  if (a == 0) {
    t_.clear();
    return *this;
  }
  for (auto& kv : t_) kv.second *= a;
  return *this;
}

CPoly CPoly::operator-() const {
  CPoly r = *this;
  for (auto& kv : r.t_) kv.second = -kv.second;
  return r;
}

Rational CPoly::eval(const Rational& x) const {
  Rational s = 0;
  for (const auto& [e, a] : t_) {
    Rational p = 1;
    if (e < 0 && x == 0) throw ValidationError("evaluating a Laurent polynomial at 0");
    Rational base = e >= 0 ? x : Rational(1) / x;
    for (int k = 0; k < (e >= 0 ? e : -e); ++k) p *= base;
    s += a * p;
  }
  return s;
}

CPoly CPoly::shifted(int k) const {
  CPoly r;
  for (const auto& [e, a] : t_) r.t_[e + k] = a;
  return r;
}

CPoly CPoly::truncated_above(int e) const {
  CPoly r;
  for (const auto& [k, a] : t_)
    if (k <= e) r.t_[k] = a;
  return r;
}

CPoly CPoly::derivative() const {
  CPoly r;
  for (const auto& [e, a] : t_)
    if (e != 0) r.add_term(e - 1, a * e);
  return r;
}

std::string CPoly::str(const std::string& var) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [e, a] = *it;
    if (!first) os << (a > 0 ? " + " : " - ");
    else if (a < 0) os << "-";
    first = false;
    Rational m = abs(a);
    if (e == 0) {
      os << m.get_str();
      continue;
    }
    if (m != 1) os << m.get_str() << "*";
    os << var;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

std::pair<CPoly, CPoly> poly_divmod(const CPoly& a, const CPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
  CPoly q, r = a;
  int db = b.degree();
  Rational lb = b.coeff(db);
  while (!r.is_zero() && r.degree() >= db) {
    int d = r.degree();
    CPoly t = CPoly::monomial(r.coeff(d) / lb, d - db);
    q += t;
    r -= t * b;
  }
  return {q, r};
}

CPoly poly_gcd(CPoly a, CPoly b) {
  while (!b.is_zero()) {
    CPoly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return (Rational(1) / a.coeff(a.degree())) * a;
}

bool is_squarefree(const CPoly& p) { return poly_gcd(p, p.derivative()).degree() <= 0; }

}  // namespace wildstrat
