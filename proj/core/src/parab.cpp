#include "wildstrat/parab.hpp"

#include <functional>
#include <set>

#include "wildstrat/errors.hpp"
#include "wildstrat/lie.hpp"

namespace wildstrat::parab {

bool is_closed(const RootDatum& rd, const RootSubset& s) {
  for (int a : s.indices())
    for (int b : s.indices()) {
      int c = rd.sum_root(a, b);
      if (c >= 0 && !s.test(c)) return false;
    }
  return true;
}

bool is_parabolic(const RootDatum& rd, const RootSubset& psi) {
  if (psi.universe() != rd.num_roots()) return false;
  if ((psi | strat::negated(rd, psi)).count() != rd.num_roots()) return false;
  return is_closed(rd, psi);
}

RootSubset levi_factor(const RootDatum& rd, const RootSubset& psi) { return psi & strat::negated(rd, psi); }

ParabolicSubset make_parabolic(const RootDatum& rd, const RootSubset& psi) {
  if (!is_parabolic(rd, psi)) throw ValidationError("not a parabolic subset: " + strat::describe(rd, psi));
  ParabolicSubset p{psi, levi_factor(rd, psi), RootSubset()};
  p.nu = psi.minus(p.phi);
  return p;
}

RootSubset positive_borel(const RootDatum& rd) {
  RootSubset s(rd.num_roots());
  for (int a = 0; a < rd.num_roots(); ++a)
    if (rd.root(a).positive) s.set(a);
  return s;
}

RootSubset standard_parabolic(const RootDatum& rd, unsigned mask) {
  RootSubset s = positive_borel(rd);
  for (int a = 0; a < rd.num_roots(); ++a) {
    bool inside = true;
    for (int i = 0; i < rd.rank(); ++i)
      if (rd.root(a).simple[i] != 0 && !(mask & (1u << i))) inside = false;
    if (inside) s.set(a);
  }
  return s;
}

std::vector<RootSubset> enumerate_parabolic(const RootDatum& rd) {
  std::set<RootSubset> found;
  for (unsigned mask = 0; mask < (1u << rd.rank()); ++mask) {
    RootSubset p = standard_parabolic(rd, mask);
    for (const auto& w : rd.weyl_group()) found.insert(strat::act(rd, w, p));
  }
  return {found.begin(), found.end()};
}

std::vector<RootSubset> enumerate_parabolic_bruteforce(const RootDatum& rd) {
  int nr = rd.num_roots();
  if (nr > 20) throw ValidationError("brute-force parabolic enumeration limited to 20 roots");
  std::vector<RootSubset> out;
  for (long mask = 0; mask < (1L << nr); ++mask) {
    RootSubset s(nr);
    for (int a = 0; a < nr; ++a)
      if (mask & (1L << a)) s.set(a);
    if (is_parabolic(rd, s)) out.push_back(s);
  }
  return out;
}

std::map<RootSubset, std::vector<RootSubset>> levi_factor_map(const RootDatum& rd) {
  std::map<RootSubset, std::vector<RootSubset>> m;
  for (const auto& p : enumerate_parabolic(rd)) m[levi_factor(rd, p)].push_back(p);
  return m;
}

int count_parabolic_classes(const RootDatum& rd) {
  std::set<RootSubset> seen;
  int classes = 0;
  for (const auto& p : enumerate_parabolic(rd)) {
    if (seen.count(p)) continue;
    ++classes;
    for (const auto& w : rd.weyl_group()) seen.insert(strat::act(rd, w, p));
  }
  return classes;
}

bool is_parabolic_filtration(const RootDatum& rd, const ParabolicFiltration& f) {
  for (int i = 0; i < f.depth(); ++i) {
    if (!is_parabolic(rd, f.psi[i])) return false;
    if (i > 0 && !f.psi[i - 1].subset_of(f.psi[i])) return false;
  }
  return f.depth() >= 1;
}

std::vector<ParabolicFiltration> enumerate_parabolic_filtrations(const RootDatum& rd, int r) {
  if (r < 1) throw ValidationError("depth must be >= 1");
  auto ps = enumerate_parabolic(rd);
  std::vector<ParabolicFiltration> out;
  ParabolicFiltration cur;
  std::function<void()> rec = [&]() {
    if (cur.depth() == r) {
      out.push_back(cur);
      return;
    }
    for (const auto& p : ps) {
      if (!cur.psi.empty() && !cur.psi.back().subset_of(p)) continue;
      cur.psi.push_back(p);
      rec();
      cur.psi.pop_back();
    }
  };
  rec();
  return out;
}

LeviFiltration lf(const RootDatum& rd, const ParabolicFiltration& f) {
  LeviFiltration l;
  for (const auto& p : f.psi) l.phi.push_back(levi_factor(rd, p));
  return l;
}

ParabolicFiltration constant_filtration(const RootSubset& psi, int r) { return ParabolicFiltration{std::vector<RootSubset>(r, psi)}; }

bool is_balanced(const RootDatum& rd, const ParabolicFiltration& f) {
  int r = f.depth();
  std::vector<RootSubset> nu;
  for (const auto& p : f.psi) nu.push_back(p.minus(levi_factor(rd, p)));
  for (int i = 0; i < r; ++i)
    for (int j = 0; i + j < r; ++j)
      for (int sgn = 0; sgn < 2; ++sgn) {
        RootSubset a = sgn ? strat::negated(rd, nu[i]) : nu[i];
        RootSubset b = sgn ? strat::negated(rd, nu[j]) : nu[j];
        RootSubset target = sgn ? strat::negated(rd, nu[i + j]) : nu[i + j];
        for (int x : a.indices())
          for (int y : b.indices()) {
            int s = rd.sum_root(x, y);
            if (s >= 0 && rd.N(x, y) != 0 && !target.test(s)) return false;
          }
      }
  return true;
}

TriangularSplit triangular_split(const RootDatum& rd, const ParabolicFiltration& f) {
  if (!is_parabolic_filtration(rd, f)) throw ValidationError("not a parabolic filtration");
  TriangularSplit s;
  int d = rd.dim_g();
  for (int i = 0; i < f.depth(); ++i) {
    RootSubset phi = levi_factor(rd, f.psi[i]);
    RootSubset nu = f.psi[i].minus(phi);
    for (int k = 0; k < rd.dim_t(); ++k) s.levi.push_back(i * d + k);
    for (int a : phi.indices()) s.levi.push_back(i * d + rd.root_basis_index(a));
    for (int a : nu.indices()) {
      s.u_plus.push_back(i * d + rd.root_basis_index(a));
      s.u_minus.push_back(i * d + rd.root_basis_index(rd.root(a).neg));
    }
  }
  return s;
}

CharacterSpace character_space(const RootDatum& rd, const ParabolicFiltration& f) {
  CharacterSpace cs;
  for (const auto& phi : lf(rd, f).phi) {
    std::vector<Vec> rows;
    for (int a : phi.indices()) rows.push_back(rd.root(a).coroot);
    std::vector<Vec> basis;
    if (rows.empty()) {
      for (int k = 0; k < rd.dim_t(); ++k) basis.push_back(unit_vec(rd.dim_t(), k));
    } else {
      basis = nullspace(QMatrix::from_rows(rows, rd.dim_t()));
    }
    cs.dim += static_cast<int>(basis.size());
    cs.bases.push_back(std::move(basis));
  }
  return cs;
}

bool is_admissible(const RootDatum& rd, const ParabolicFiltration& f, const FormalType& lambda) {
  if (static_cast<int>(lambda.size()) != f.depth()) return false;
  auto l = lf(rd, f);
  for (int i = 0; i < f.depth(); ++i) {
    if (static_cast<int>(lambda[i].size()) != rd.dim_t()) return false;
    for (int a : l.phi[i].indices())
      if (rd.coroot_pairing(lambda[i], a) != 0) return false;
  }
  return true;
}

void require_admissible(const RootDatum& rd, const ParabolicFiltration& f, const FormalType& lambda) {
  if (!is_parabolic_filtration(rd, f)) throw ValidationError("not a parabolic filtration");
  if (!is_admissible(rd, f, lambda))
    throw ValidationError("formal type is not admissible: some lambda_i is nonzero on a coroot of phi_i");
}

Rational character_value(const RootDatum& rd, const FormalType& lambda, int flat_index) {
  int d = rd.dim_g();
  int deg = flat_index / d, b = flat_index % d;
  if (b >= rd.dim_t() || deg >= static_cast<int>(lambda.size())) return 0;
  return lambda[deg][b];
}

QMatrix b_pairing_matrix(const RootDatum& rd, const ParabolicFiltration& f, const FormalType& lambda) {
  require_admissible(rd, f, lambda);
  TriangularSplit s = triangular_split(rd, f);
  int r = f.depth();
  int n = static_cast<int>(s.u_plus.size());
  QMatrix b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto& [k, c] : liecore::bracket_basis_gr(rd, r, s.u_plus[i], s.u_minus[j]))
        b(i, j) += c * character_value(rd, lambda, k);
  return b;
}

bool is_nonsingular(const RootDatum& rd, const ParabolicFiltration& f, const FormalType& lambda) {
  QMatrix b = b_pairing_matrix(rd, f, lambda);
  return rank(b) == b.rows();
}

bool nonsingular_by_dual_stratum(const RootDatum& rd, const ParabolicFiltration& f, const FormalType& lambda) {
  require_admissible(rd, f, lambda);
  return strat::dual_stratum_of_covector(rd, lambda) == lf(rd, f);
}

}  // namespace wildstrat::parab
