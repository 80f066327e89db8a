#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "wildstrat/cpoly.hpp"
#include "wildstrat/lie.hpp"
#include "wildstrat/parab.hpp"

namespace wildstrat::singmod {

using liecore::RootDatum;
using parab::FormalType;
using parab::ParabolicFiltration;

using Mono = std::vector<int>;  // nondecreasing letter positions
using MVec = std::map<Mono, Rational>;
using Character = std::function<Rational(int)>;

void add_to(MVec& v, const Mono& m, const Rational& c);
MVec scaled(const MVec& v, const Rational& c);

// U g_r tensored over the subalgebra spanned by the non-letter basis vectors, which act on w by chi.
// Letters are flat g_r indices acting freely, in the given order.
class InducedModule {
 public:
  InducedModule(const RootDatum& rd, int r, std::vector<int> letters, Character chi);

  const RootDatum& root_datum() const { return *rd_; }
  int depth() const { return r_; }
  const std::vector<int>& letters() const { return letters_; }
  int letter_position(int flat) const { return pos_[flat]; }
  Rational character(int flat) const { return chi_[flat]; }

  MVec act_basis(int flat, const Mono& m) const;
  MVec act(int flat, const MVec& v) const;
  MVec act(const Vec& g, const MVec& v) const;  // g in flat g_r coordinates
  // x_1 acts last: returns x_1 (x_2 (... (x_k v))).
  MVec act_word(const std::vector<int>& flats, const MVec& v) const;
  static MVec unit() { return {{Mono{}, Rational(1)}}; }

 private:
  const RootDatum* rd_;
  int r_;
  std::vector<int> letters_, pos_;
  std::vector<Rational> chi_;
  mutable std::map<std::pair<int, Mono>, MVec> memo_;
  mutable std::mutex mu_;
};

struct Generator {
  int root;    // alpha in nu_0; the letter is E_{-alpha} eps^degree
  int degree;
  int flat;
};

struct WeightIndex {
  std::vector<int> mu;                 // simple-root coordinates of the t-weight
  std::vector<std::vector<int>> dec;   // decompositions over nu_0
  int height = 0;
  bool indecomposable = false;
};

struct WeightSpace {
  WeightIndex index;
  std::vector<Mono> basis;  // nonincreasing length, then lexicographic
};

class SingularityModule {
 public:
  // The character is scale * lambda.
  SingularityModule(const RootDatum& rd, ParabolicFiltration f, FormalType lambda, const Rational& scale = 1);

  const RootDatum& root_datum() const { return *rd_; }
  const ParabolicFiltration& filtration() const { return f_; }
  const FormalType& lambda() const { return lambda_; }  // unscaled
  const Rational& scale() const { return scale_; }
  int depth() const { return f_.depth(); }
  const std::vector<int>& nu0() const { return nu0_; }
  int d(int root) const { return d_.at(root); }
  const std::vector<Generator>& generators() const { return gens_; }
  const InducedModule& module() const { return *mod_; }

  std::vector<int> weight(const Mono& m) const;
  int functional(const std::vector<int>& mu) const;
  std::vector<std::vector<int>> decompositions(const std::vector<int>& mu) const;
  WeightIndex weight_index(const std::vector<int>& mu) const;
  std::vector<WeightSpace> weight_spaces(int K) const;
  // Nonzero weights that are sums of at most k generator weights, each with its complete basis.
  std::vector<WeightSpace> weight_spaces_within(int k) const;

 private:
  const RootDatum* rd_;
  ParabolicFiltration f_;
  FormalType lambda_;
  Rational scale_;
  std::vector<int> nu0_;
  std::map<int, int> d_;
  std::vector<int> positive_;  // linear functional, positive on nu_0
  std::vector<Generator> gens_;
  std::unique_ptr<InducedModule> mod_;
};

SingularityModule opposite(const SingularityModule& m);

// Coefficient of w in (t x_k ... t x_1)(x' w), extended bilinearly.
Rational shapovalov_entry(const SingularityModule& m, const Mono& y, const Mono& x);
Rational shapovalov_pair(const SingularityModule& m, const MVec& a, const MVec& b);

struct ShapovalovBlock {
  WeightIndex index;
  std::vector<Mono> basis;
  QMatrix matrix;
};
ShapovalovBlock shapovalov_block(const SingularityModule& m, const WeightSpace& ws);

struct PolyMatrix {
  int n = 0;
  std::vector<CPoly> a;
  PolyMatrix() = default;
  explicit PolyMatrix(int size) : n(size), a(static_cast<std::size_t>(size) * size) {}
  CPoly& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  const CPoly& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
  PolyMatrix operator*(const PolyMatrix& o) const;
  bool operator==(const PolyMatrix& o) const { return n == o.n && a == o.a; }
  static PolyMatrix identity(int size);
};

CPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

// Y_{alpha,i} = -sum_m (G_alpha^{-1})_{im} E_alpha eps^m with G_alpha[i][j] = <lambda_{i+j}, alpha-check>.
std::vector<Vec> dual_generators(const SingularityModule& m);

// (-1)^k times the coefficient of w in y_k ... y_1 x w, for the dual generators y.
Rational dual_entry(const SingularityModule& m, const std::vector<Vec>& dual, const Mono& y, const Mono& x);

struct DilatedBlock {
  WeightIndex index;
  std::vector<Mono> basis;
  PolyMatrix matrix;  // entries S_c(Y_f, X_g) as polynomials in c
};
DilatedBlock dilated_block(const RootDatum& rd, const ParabolicFiltration& f, const FormalType& lambda,
                           const WeightSpace& ws);
std::vector<DilatedBlock> dilated_blocks(const RootDatum& rd, const ParabolicFiltration& f, const FormalType& lambda,
                                         const std::vector<WeightSpace>& spaces);

struct Factorisation {
  PolyMatrix D, C, Q;
  std::vector<int> lengths;
  std::vector<Rational> leading;  // d_i
};
int multiplicity_factorial(const Mono& m);
// Throws ClaimViolation when a degree bound or the leading coefficient fails.
Factorisation factorize_block(const DilatedBlock& b);

std::vector<Vec> radical(const ShapovalovBlock& b);

struct RadicalProfile {
  std::vector<std::pair<WeightIndex, int>> dims;  // radical dimension per weight
  bool simple = true;
};
RadicalProfile maximal_submodule_profile(const SingularityModule& m, int K);
bool is_simple_up_to(const SingularityModule& m, int K);

struct ConjectureReport {
  bool cond1_nonsingular = false;
  bool cond2_alcove = false;
  bool observed_simple = false;
  int K = 0;
  std::string verdict;
};
ConjectureReport conjecture_probe(const SingularityModule& m, int K);

// The closed-form criterion: lambda_k .. lambda_{r-1} vanish on t meet [g, g].
bool truncated_quotient_proper(const RootDatum& rd, const ParabolicFiltration& f, const FormalType& lambda, int k);
// Direct check: saturate eps^k g_r w under g_r inside weights of height <= K and test whether w is reached.
bool truncated_quotient_proper_by_saturation(const SingularityModule& m, int k, int K);

// theta(X) w^- in the opposite module, theta = -transpose.
MVec theta_image(const SingularityModule& minus, const Mono& x);
// S^iota(Y w^-, X w^+) = coefficient of w^+ in iota(Y) X w^+.
Rational nonsymmetric_entry(const SingularityModule& minus, const SingularityModule& plus, const Mono& y,
                            const Mono& x);
Rational nonsymmetric_pair(const SingularityModule& minus, const SingularityModule& plus, const MVec& a,
                           const MVec& b);
QMatrix nonsymmetric_block(const SingularityModule& minus, const SingularityModule& plus, const WeightSpace& ws);

}  // namespace wildstrat::singmod
