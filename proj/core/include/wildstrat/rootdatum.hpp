#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wildstrat/linalg.hpp"
#include "wildstrat/rational.hpp"

namespace wildstrat::liecore {

using SparseVec = std::vector<std::pair<int, Rational>>;

struct Root {
  std::vector<int> simple;  // coordinates in the simple roots
  Vec eval;                 // values on the t basis
  Vec coroot;               // alpha-check in t coordinates
  int neg = -1;
  int height = 0;
  bool positive = true;
};

struct WeylElement {
  QMatrix on_t;
  QMatrix on_t_inv;
  std::vector<int> perm;  // root a goes to perm[a]
};

// Split reductive Lie algebra with a Chevalley basis.
// Basis of g: t coordinates 0..dim_t-1, then one root vector per root.
class RootDatum {
 public:
  static RootDatum gl(int n);
  static RootDatum sl(int n);
  // Cartan matrix with A[k][j] = alpha_j(H_k).
  static RootDatum from_cartan(const std::string& name, const std::vector<std::vector<int>>& a);
  // "gl3", "sl2", "A2", "B2", "C3", "D4", "G2", "F4", "E6".
  static RootDatum parse(const std::string& spec);

  const std::string& name() const { return name_; }
  const std::string& family() const { return family_; }
  bool matrix_type() const { return !units_.empty(); }
  int matrix_size() const { return msize_; }
  std::pair<int, int> matrix_unit(int root) const { return units_[root]; }

  int rank() const { return rank_; }
  int center_dim() const { return dim_t_ - rank_; }
  int dim_t() const { return dim_t_; }
  int num_roots() const { return static_cast<int>(roots_.size()); }
  int num_positive() const { return num_roots() / 2; }
  int dim_g() const { return dim_t_ + num_roots(); }

  const Root& root(int a) const { return roots_[a]; }
  const std::vector<Root>& roots() const { return roots_; }
  const std::vector<int>& simple_roots() const { return simple_; }
  int find_root(const std::vector<int>& simple_coords) const;
  int sum_root(int a, int b) const { return sum_[a * num_roots() + b]; }
  const Rational& N(int a, int b) const { return n_[a * num_roots() + b]; }
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
  const Rational& root_norm(int a) const { return norm_[a]; }  // (alpha, alpha)
  Rational root_inner(int a, int b) const;                     // (alpha, beta)
  Rational eval(int a, const Vec& h) const { return dot(roots_[a].eval, h); }
  Rational coroot_pairing(const Vec& covector, int a) const { return dot(covector, roots_[a].coroot); }

  // Invariant form: Gram matrix on t and (E_a | E_{-a}).
  const QMatrix& t_gram() const { return gram_; }
  const Rational& root_form(int a) const { return efe_[a]; }

  // Bracket of g basis elements, sparse in the g basis.
  const SparseVec& bracket_basis(int x, int y) const { return table_[x * dim_g() + y]; }
  int root_basis_index(int a) const { return dim_t_ + a; }

  const std::vector<WeylElement>& weyl_group() const { return weyl_; }
  const QMatrix& simple_reflection(int i) const { return sref_[i]; }
  Vec act_t(const WeylElement& w, const Vec& h) const { return w.on_t * h; }
  Vec act_covector(const WeylElement& w, const Vec& lambda) const;

  // Exhaustive Jacobi check on basis triples.
  bool jacobi_holds() const;

 private:
  RootDatum() = default;
  void generate_roots(const std::vector<std::vector<int>>& a);
  void finish_cartan_type();
  void finish_common();
  void build_weyl();
  Rational carter_N(int a, int b, const std::vector<int>& sign) const;

  std::string name_, family_;
  int rank_ = 0, dim_t_ = 0, msize_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<Root> roots_;
  std::vector<int> simple_;
  std::vector<int> sum_;
  std::vector<Rational> n_;
  std::vector<Rational> norm_, efe_;
  std::vector<Rational> simple_norm_;
  QMatrix gram_;
  std::vector<SparseVec> table_;
  std::vector<std::pair<int, int>> units_;
  std::vector<QMatrix> sref_;
  std::vector<WeylElement> weyl_;
  std::vector<int> special_pair_;  // for Carter construction
};

}  // namespace wildstrat::liecore
