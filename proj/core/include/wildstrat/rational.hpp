#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace wildstrat {

using Rational = mpq_class;
using Vec = std::vector<Rational>;

Rational parse_rational(const std::string& s);
std::string to_string(const Rational& q);

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Rational dot(const Vec& a, const Vec& b);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rational& s, const Vec& a);
void axpy(Vec& y, const Rational& a, const Vec& x);

}  // namespace wildstrat
