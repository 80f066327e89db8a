#pragma once

#include <map>
#include <vector>

#include "wildstrat/linalg.hpp"
#include "wildstrat/strat.hpp"

namespace wildstrat::parab {

using liecore::RootDatum;
using strat::LeviFiltration;
using strat::RootSubset;

struct ParabolicSubset {
  RootSubset psi, phi, nu;
};

bool is_closed(const RootDatum& rd, const RootSubset& s);
bool is_parabolic(const RootDatum& rd, const RootSubset& psi);
ParabolicSubset make_parabolic(const RootDatum& rd, const RootSubset& psi);
RootSubset levi_factor(const RootDatum& rd, const RootSubset& psi);
RootSubset positive_borel(const RootDatum& rd);
// Phi^+ together with the roots supported on the simple roots in mask.
RootSubset standard_parabolic(const RootDatum& rd, unsigned mask);

std::vector<RootSubset> enumerate_parabolic(const RootDatum& rd);
std::vector<RootSubset> enumerate_parabolic_bruteforce(const RootDatum& rd);
std::map<RootSubset, std::vector<RootSubset>> levi_factor_map(const RootDatum& rd);
int count_parabolic_classes(const RootDatum& rd);

struct ParabolicFiltration {
  std::vector<RootSubset> psi;  // psi_0 .. psi_{r-1}; psi_r = Phi implicitly
  int depth() const { return static_cast<int>(psi.size()); }
  bool operator==(const ParabolicFiltration& o) const { return psi == o.psi; }
  bool operator<(const ParabolicFiltration& o) const { return psi < o.psi; }
};

bool is_parabolic_filtration(const RootDatum& rd, const ParabolicFiltration& f);
std::vector<ParabolicFiltration> enumerate_parabolic_filtrations(const RootDatum& rd, int r);
LeviFiltration lf(const RootDatum& rd, const ParabolicFiltration& f);
bool is_balanced(const RootDatum& rd, const ParabolicFiltration& f);
ParabolicFiltration constant_filtration(const RootSubset& psi, int r);

// Flat g_r indices (deg * dim_g + b) of pure basis vectors.
struct TriangularSplit {
  std::vector<int> u_minus, levi, u_plus;  // u_minus[k] is the transpose of u_plus[k]
};
TriangularSplit triangular_split(const RootDatum& rd, const ParabolicFiltration& f);

using FormalType = std::vector<Vec>;  // lambda_i as covectors on the t basis

struct CharacterSpace {
  std::vector<std::vector<Vec>> bases;  // basis of Z_{phi_i} inside t*
  int dim = 0;
};
CharacterSpace character_space(const RootDatum& rd, const ParabolicFiltration& f);
bool is_admissible(const RootDatum& rd, const ParabolicFiltration& f, const FormalType& lambda);
void require_admissible(const RootDatum& rd, const ParabolicFiltration& f, const FormalType& lambda);
// Character of the Levi part of g_r on a flat basis index (zero off the Cartan part).
Rational character_value(const RootDatum& rd, const FormalType& lambda, int flat_index);

// Rows indexed by u_plus, columns by u_minus.
QMatrix b_pairing_matrix(const RootDatum& rd, const ParabolicFiltration& f, const FormalType& lambda);
bool is_nonsingular(const RootDatum& rd, const ParabolicFiltration& f, const FormalType& lambda);
bool nonsingular_by_dual_stratum(const RootDatum& rd, const ParabolicFiltration& f, const FormalType& lambda);

}  // namespace wildstrat::parab
