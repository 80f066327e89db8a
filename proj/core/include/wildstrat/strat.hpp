#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wildstrat/rootdatum.hpp"

namespace wildstrat::strat {

using liecore::RootDatum;
using liecore::WeylElement;

class RootSubset {
 public:
  RootSubset() = default;
  explicit RootSubset(int n) : bits_(n, false) {}
  static RootSubset full(int n);
  static RootSubset from_indices(int n, const std::vector<int>& idx);

  int universe() const { return static_cast<int>(bits_.size()); }
  bool test(int a) const { return bits_[a]; }
  void set(int a, bool v = true) { bits_[a] = v; }
  int count() const;
  bool empty() const { return count() == 0; }
  std::vector<int> indices() const;
  std::string bitmask() const;

  bool subset_of(const RootSubset& o) const;
  RootSubset operator|(const RootSubset& o) const;
  RootSubset operator&(const RootSubset& o) const;
  RootSubset minus(const RootSubset& o) const;
  bool operator==(const RootSubset& o) const { return bits_ == o.bits_; }
  bool operator!=(const RootSubset& o) const { return bits_ != o.bits_; }
  bool operator<(const RootSubset& o) const { return bits_ < o.bits_; }

 private:
  std::vector<bool> bits_;
};

RootSubset negated(const RootDatum& rd, const RootSubset& s);
RootSubset act(const RootDatum& rd, const WeylElement& w, const RootSubset& s);
std::string describe(const RootDatum& rd, const RootSubset& s);

// Kernel of the roots in phi, as a basis of t.
std::vector<Vec> kernel_basis(const RootDatum& rd, const RootSubset& phi);
RootSubset span_closure(const RootDatum& rd, const RootSubset& phi);

bool is_levi(const RootDatum& rd, const RootSubset& phi);
bool is_levi_by_kernel(const RootDatum& rd, const RootSubset& phi);
// Rational point X of Ker(phi) with phi_X = phi, or nothing if phi is not Levi.
std::optional<Vec> levi_witness(const RootDatum& rd, const RootSubset& phi);

RootSubset levi_of_point(const RootDatum& rd, const Vec& x);
std::vector<RootSubset> enumerate_levi(const RootDatum& rd);
std::vector<RootSubset> enumerate_levi_bruteforce(const RootDatum& rd);

struct LeviPoset {
  std::vector<RootSubset> nodes;
  std::vector<int> rank;                     // dim Ker(phi)
  std::vector<std::pair<int, int>> covers;   // (upper, lower)
  bool leq(int a, int b) const;              // a <= b iff nodes[a] contains nodes[b]
  std::string to_dot(const RootDatum& rd) const;
};
LeviPoset levi_poset(const RootDatum& rd);

struct LeviFiltration {
  std::vector<RootSubset> phi;  // phi_0 .. phi_{s-1}; phi_s = Phi implicitly

  int depth() const { return static_cast<int>(phi.size()); }
  bool operator==(const LeviFiltration& o) const { return phi == o.phi; }
  bool operator!=(const LeviFiltration& o) const { return phi != o.phi; }
  bool operator<(const LeviFiltration& o) const { return phi < o.phi; }
  const RootSubset& term(int i, const RootDatum& rd) const;
};

bool is_levi_filtration(const RootDatum& rd, const LeviFiltration& f);
// d_a = min{i : a in phi_i}, or s if a lies in no term.
std::vector<int> level_profile(const LeviFiltration& f);
// Order of the stratification: a <= b iff a_i contains b_i for every i.
bool filtration_leq(const LeviFiltration& a, const LeviFiltration& b);
LeviFiltration act(const RootDatum& rd, const WeylElement& w, const LeviFiltration& f);
std::string describe(const RootDatum& rd, const LeviFiltration& f);

using Tuple = std::vector<Vec>;

LeviFiltration stratum_of_tuple(const RootDatum& rd, const Tuple& x);
bool in_stratum(const RootDatum& rd, const LeviFiltration& f, const Tuple& x);
Tuple stratum_witness(const RootDatum& rd, const LeviFiltration& f);
Tuple act(const RootDatum& rd, const WeylElement& w, const Tuple& x);

struct Stratum {
  LeviFiltration filtration;
  int dimension = 0;
  std::vector<std::vector<Vec>> kernels;
};
Stratum make_stratum(const RootDatum& rd, const LeviFiltration& f);

std::vector<LeviFiltration> enumerate_filtrations(const RootDatum& rd, int s);
long long filtration_bound(const RootDatum& rd, int s);

struct QuotientClass {
  std::vector<int> members;  // indices into the input family
  int representative = 0;
  int setwise_order = 0;
  int pointwise_order = 0;
  int out_order = 0;
  bool free_on_samples = true;
};

struct WeylQuotient {
  std::vector<QuotientClass> classes;
  std::vector<std::pair<int, int>> order;  // (a, b) with class a <= class b, a != b
  bool order_well_defined = true;
};
WeylQuotient weyl_orbits_and_quotient(const RootDatum& rd, const std::vector<LeviFiltration>& family);

// Dual filtration: phi_i = {a : lambda_j(a-check) = 0 for all j >= i}.
LeviFiltration dual_stratum_of_covector(const RootDatum& rd, const std::vector<Vec>& lambdas);

struct AxiomReport {
  bool ok = true;
  std::string first_violation;
  int points_checked = 0;
};
// Checks the family against sample points and the ambient membership predicate.
AxiomReport verify_stratification_axioms(const RootDatum& rd, int s, const std::vector<LeviFiltration>& family,
                                         const std::vector<Tuple>& extra_points = {});

}  // namespace wildstrat::strat
