#pragma once

#include <memory>
#include <string>
#include <vector>

#include "wildstrat/singmod.hpp"

namespace wildstrat::quant {

using liecore::RootDatum;
using parab::FormalType;
using parab::ParabolicFiltration;
using singmod::InducedModule;
using singmod::Mono;
using singmod::MVec;
using singmod::SingularityModule;

// One coefficient of hbar^hdeg in U(u-) (x) U(u+).
// left indexes the generators X of u-, right the dual generators Y of u+.
struct HTerm {
  int hdeg = 0;
  std::vector<int> weight;
  Mono left, right;
  Rational coeff;
};

struct HTensor {
  int order = 0;  // N: coefficients of hbar^0 .. hbar^N
  int K = 0;      // weights that are sums of at most K generators were inverted
  std::shared_ptr<const SingularityModule> module;
  std::vector<Vec> dual;  // Y_{alpha,i} in flat g_r coordinates
  std::vector<HTerm> terms;

  std::vector<HTerm> degree(int d) const;
  std::vector<int> left_flats(const Mono& m) const;
  std::vector<Vec> right_vectors(const Mono& m) const;
};

// Requires a balanced filtration and a nonsingular character.
HTensor inverse_shapovalov_series(const RootDatum& rd, const ParabolicFiltration& f, const FormalType& lambda,
                                  int K, int N);

struct WedgePair {
  Vec x, y;  // x in u-, y in u+
  Rational coeff;
};

// Sum of X_{alpha,i} wedge Y_{alpha,i}, from the inverse of the pairing matrix B.
struct PoissonBivector {
  std::vector<WedgePair> pairs;
};
PoissonBivector poisson_bivector(const RootDatum& rd, const ParabolicFiltration& f, const FormalType& lambda);

// Tensors in powers of V_0, keyed by one normal-form monomial per factor.
using V0Tensor = std::map<std::vector<Mono>, Rational>;

// V_0 = U g_r / U g_r l: letters are u- then u+, the Levi part acts by zero.
class V0Space {
 public:
  V0Space(const RootDatum& rd, const ParabolicFiltration& f);

  const InducedModule& module() const { return *mod_; }
  int depth() const { return r_; }
  int num_minus() const { return minus_; }

  // p(x_1 ... x_k) = x_1 (x_2 ( ... (x_k w_0))).
  MVec project(const std::vector<Vec>& word) const;
  MVec project_flats(const std::vector<int>& word) const;
  MVec act(const Vec& x, const MVec& v) const { return mod_->act(x, v); }
  // Delta(x) acting on a tensor.
  V0Tensor act(const Vec& x, const V0Tensor& t) const;
  Vec basis_vector(int flat) const;
  std::string str(const Mono& m) const;

 private:
  const RootDatum* rd_;
  int r_ = 0, minus_ = 0;
  std::unique_ptr<InducedModule> mod_;
};

V0Tensor tensor(const std::vector<MVec>& factors, const Rational& coeff = 1);
void add_to(V0Tensor& t, const V0Tensor& o, const Rational& c = 1);
V0Tensor swapped(const V0Tensor& t);

struct BidiffSeries {
  int order = 0;
  std::vector<V0Tensor> coeff;  // coeff[d] in V_0 (x) V_0
};

BidiffSeries star_bidiff(const HTensor& F, const V0Space& v0);

// Skew part of the hbar^1 coefficient compared with Pi, both embedded in V_0 (x) V_0.
bool first_order_check(const HTensor& F, const V0Space& v0);
bool first_order_check(const HTensor& F);

// l-invariance of every coefficient of B.
bool levi_invariance_check(const BidiffSeries& B, const V0Space& v0, const ParabolicFiltration& f);

// g_r-invariance of F_c at the numeric dilation c, on every weight pair fully inside height K.
bool invariance_check(const RootDatum& rd, const ParabolicFiltration& f, const FormalType& lambda,
                      const Rational& c, int K);

struct AssociativityReport {
  bool equal = true;
  int order = 0;
  int first_degree = -1;
  std::string first_difference;
};

// Compares (Delta (x) 1)(B)(B (x) 1) with (1 (x) Delta)(B)(1 (x) B) in V_0^3 up to hbar^N.
AssociativityReport associativity_check(const HTensor& F, const V0Space& v0, int N);

std::string monomial_string(const HTensor& F, const Mono& m, bool right);

}  // namespace wildstrat::quant
