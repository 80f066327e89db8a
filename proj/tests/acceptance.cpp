// Acceptance suite: one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "wildstrat/errors.hpp"
#include "wildstrat/orbit.hpp"
#include "wildstrat/quant.hpp"
#include "wildstrat/singmod.hpp"

using namespace wildstrat;
using fixture::ints;
using liecore::RootDatum;
using liecore::TcElement;
using parab::FormalType;
using parab::ParabolicFiltration;
using singmod::SingularityModule;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Failures analysed and recorded as known.
const std::set<int> kKnownFailures{5, 13};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

// All formal types sum_j coeff_j * basis_j of the character space, coefficients drawn from values.
std::vector<FormalType> character_grid(const RootDatum& rd, const ParabolicFiltration& f,
                                       const std::vector<Rational>& values) {
  auto cs = parab::character_space(rd, f);
  std::vector<std::pair<int, int>> slots;
  for (std::size_t i = 0; i < cs.bases.size(); ++i)
    for (std::size_t j = 0; j < cs.bases[i].size(); ++j) slots.emplace_back(i, j);
  std::vector<FormalType> out;
  std::vector<std::size_t> digit(slots.size(), 0);
  while (true) {
    FormalType lam(f.depth(), zero_vec(rd.dim_t()));
    for (std::size_t s = 0; s < slots.size(); ++s) axpy(lam[slots[s].first], values[digit[s]], cs.bases[slots[s].first][slots[s].second]);
    out.push_back(lam);
    std::size_t p = 0;
    while (p < digit.size() && ++digit[p] == values.size()) digit[p++] = 0;
    if (p == digit.size()) break;
  }
  return out;
}

FormalType random_character(const RootDatum& rd, const ParabolicFiltration& f, std::mt19937& gen) {
  auto cs = parab::character_space(rd, f);
  FormalType lam(f.depth(), zero_vec(rd.dim_t()));
  std::uniform_int_distribution<int> d(-2, 2);
  for (std::size_t i = 0; i < cs.bases.size(); ++i)
    for (const auto& b : cs.bases[i]) axpy(lam[i], Rational(d(gen)), b);
  return lam;
}

Outcome c1() {
  auto t0 = std::chrono::steady_clock::now();
  RootDatum gl3 = RootDatum::gl(3);
  auto p = strat::levi_poset(gl3);
  Outcome o;
  // Hasse shape: a bottom and a top joined through three incomparable middle elements.
  std::multiset<int> ranks(p.rank.begin(), p.rank.end());
  std::vector<int> up(p.nodes.size()), down(p.nodes.size());
  for (auto [u, l] : p.covers) ++down[u], ++up[l];
  int tops = 0, bottoms = 0, middles = 0;
  for (std::size_t i = 0; i < p.nodes.size(); ++i) {
    if (up[i] == 0 && down[i] == 3) ++tops;
    if (down[i] == 0 && up[i] == 3) ++bottoms;
    if (up[i] == 1 && down[i] == 1) ++middles;
  }
  double s = seconds_since(t0);
  o.pass = p.nodes.size() == 5 && p.covers.size() == 6 && tops == 1 && bottoms == 1 && middles == 3 &&
           ranks == std::multiset<int>{1, 2, 2, 2, 3} && s < 1.0;
  o.detail = std::to_string(p.nodes.size()) + " elements, " + std::to_string(p.covers.size()) + " covers, " +
             fmt_seconds(s);
  return o;
}

Outcome c2() {
  auto t0 = std::chrono::steady_clock::now();
  RootDatum gl3 = RootDatum::gl(3);
  auto n = parab::enumerate_parabolic(gl3).size();
  auto brute = parab::enumerate_parabolic_bruteforce(gl3).size();
  int classes = parab::count_parabolic_classes(gl3);
  double s = seconds_since(t0);
  Outcome o;
  o.pass = n == 13 && brute == 13 && classes == 4 && s < 1.0;
  o.detail = "|P| = " + std::to_string(n) + ", |P/W| = " + std::to_string(classes) + ", " + fmt_seconds(s);
  return o;
}

Outcome c3() {
  RootDatum sl2 = RootDatum::sl(2);
  Outcome o;
  for (int s = 1; s <= 6; ++s) {
    auto levi = strat::enumerate_filtrations(sl2, s).size();
    auto par = parab::enumerate_parabolic_filtrations(sl2, s).size();
    if (levi != static_cast<std::size_t>(s + 1) || par != static_cast<std::size_t>(2 * s + 1)) {
      o.pass = false;
      o.detail = "depth " + std::to_string(s) + ": " + std::to_string(levi) + " Levi, " + std::to_string(par) +
                 " parabolic";
      return o;
    }
  }
  o.detail = "s + 1 Levi and 2r + 1 parabolic filtrations for depths 1..6";
  return o;
}

Outcome c4() {
  auto t0 = std::chrono::steady_clock::now();
  // |W| and the rank of the root system, written out by hand.
  std::vector<std::tuple<const char*, long long, int>> cases{
      {"sl2", 2, 1}, {"gl2", 2, 1}, {"sl3", 6, 2}, {"gl3", 6, 2}, {"B2", 8, 2}};
  Outcome o;
  std::ostringstream d;
  for (auto [name, w, rk] : cases) {
    RootDatum rd = RootDatum::parse(name);
    for (int s = 1; s <= 3; ++s) {
      long long bound = w;
      for (int i = 0; i < rk; ++i) bound *= s + 1;
      auto n = static_cast<long long>(strat::enumerate_filtrations(rd, s).size());
      if (n > bound || strat::filtration_bound(rd, s) != bound) o.pass = false;
      if (s == 3) d << name << " " << n << "<=" << bound << " ";
    }
  }
  double s = seconds_since(t0);
  if (s >= 30.0) o.pass = false;
  o.detail = d.str() + "(s=3), " + fmt_seconds(s);
  return o;
}

Outcome c5() {
  RootDatum gl2 = RootDatum::gl(2);
  Outcome o;
  std::ostringstream literal, corrected;
  bool corrected_ok = true;
  for (int r = 2; r <= 4; ++r) {
    int n = r * gl2.dim_g();
    std::vector<TcElement> basis;
    for (int i = 0; i < n; ++i) basis.push_back(liecore::tc_from_flat(gl2, r, unit_vec(n, i)));
    auto invariant = [&](int c) {
      for (const auto& z : basis)
        for (const auto& x : basis)
          for (const auto& y : basis)
            if (liecore::pairing_c(gl2, liecore::bracket_gr(gl2, z, x), y, c) +
                    liecore::pairing_c(gl2, x, liecore::bracket_gr(gl2, z, y), c) !=
                0)
              return false;
      return true;
    };
    auto nondegenerate = [&](int c) {
      QMatrix g(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = liecore::pairing_c(gl2, basis[i], basis[j], c);
      return rank(g) == n;
    };
    if (!invariant(r)) o.pass = false;
    std::vector<int> holds;
    for (int c = 1; c <= 2 * r; ++c) {
      bool inv = c == r || invariant(c);
      if (c != r && inv) {
        o.pass = false;
        holds.push_back(c);
      }
      if ((inv && nondegenerate(c)) != (c == r)) corrected_ok = false;
    }
    literal << " r=" << r << ": invariant also at c in {";
    for (std::size_t i = 0; i < holds.size(); ++i) literal << (i ? "," : "") << holds[i];
    literal << "}";
  }
  corrected << "; corrected dichotomy (invariant and nondegenerate iff c = r, c in 1..2r): "
            << (corrected_ok ? "holds" : "fails");
  o.detail = "literal reading fails:" + literal.str() + corrected.str();
  if (o.pass) o.detail = "invariant exactly at c = r" + corrected.str();
  return o;
}

bool weyl_conjugate(const RootDatum& rd, const TcElement& a, const TcElement& b) {
  if (a == b) return true;
  if (a.depth != b.depth) return false;
  for (const auto& w : rd.weyl_group()) {
    bool same = true;
    for (int i = 0; i < a.depth && same; ++i) {
      if (!a.coeffs[i].in_cartan() || !b.coeffs[i].in_cartan()) return false;
      same = rd.act_t(w, a.coeffs[i].cartan) == b.coeffs[i].cartan;
    }
    if (same) return true;
  }
  return false;
}

Outcome c6() {
  Outcome o;
  std::mt19937 gen(20240601);
  int total = 0, bad = 0;
  for (const char* name : {"sl2", "gl2", "gl3"})
    for (int r = 2; r <= 3; ++r) {
      RootDatum rd = RootDatum::parse(name);
      std::uniform_int_distribution<int> pick_s(0, r);
      for (int trial = 0; trial < 200; ++trial) {
        auto p = fixture::planted_normal_form(rd, r, pick_s(gen), gen);
        TcElement y = orbit::apply_gauge(rd, fixture::random_gauge(rd, r, gen), p.x);
        auto nf = orbit::birkhoff_normalize(rd, y);
        ++total;
        if (nf.s != p.s || !weyl_conjugate(rd, nf.tau(), p.tau) || orbit::apply_gauge(rd, nf.gauge_log, y) != nf.normal)
          ++bad;
      }
    }
  o.pass = bad == 0 && total == 1200;
  o.detail = std::to_string(total) + " gauged planted inputs, " + std::to_string(bad) + " mismatches";
  return o;
}

Outcome c7() {
  Outcome o;
  int reps = 0, bad = 0;
  for (const char* name : {"sl2", "gl2", "sl3", "gl3", "B2"})
    for (int r = 1; r <= 3; ++r) {
      RootDatum rd = RootDatum::parse(name);
      for (const auto& f : strat::enumerate_filtrations(rd, r)) {
        TcElement x = orbit::from_marking_tuple(rd, strat::stratum_witness(rd, f));
        auto rep = orbit::centralizer(rd, x);
        // dim g^X plus dim l_phi_i over the deeper levels, with g^X = l_phi_0.
        int predicted = 0;
        for (int i = 0; i < r; ++i) predicted += rd.dim_t() + f.term(i, rd).count();
        ++reps;
        if (rep.dimension != predicted || rep.marking != f || !rep.matches) ++bad;
      }
    }
  o.pass = bad == 0;
  o.detail = std::to_string(reps) + " stratum representatives (r <= 3), " + std::to_string(bad) + " mismatches";
  return o;
}

Outcome c8() {
  Outcome o;
  RootDatum gl3 = RootDatum::gl(3);
  auto f = fixture::gl3_chain(gl3);
  auto s = parab::triangular_split(gl3, f);
  // B and the formula are linear in (l1, l2, l3, m1, m2): agreement on a basis is agreement as polynomials.
  bool formula = true;
  for (int k = 0; k < 5; ++k) {
    std::array<Rational, 5> v{0, 0, 0, 0, 0};
    v[k] = 1;
    auto lam = fixture::gl3_type(v[0], v[1], v[2], v[3], v[4]);
    if (parab::b_pairing_matrix(gl3, f, lam) != fixture::gl3_formula(gl3, s, v[0], v[1], v[2], v[3], v[4]))
      formula = false;
  }
  std::set<std::pair<bool, bool>> cases;
  int points = 0, bad = 0;
  const std::vector<Rational> grid{0, 1, Rational(-1, 2), 3};
  for (const auto& l1 : grid)
    for (const auto& l2 : grid)
      for (const auto& l3 : grid)
        for (const auto& m1 : grid)
          for (const auto& m2 : grid) {
            bool a = l1 != l2, b = m1 != m2;
            cases.insert({a, b});
            ++points;
            auto lam = fixture::gl3_type(l1, l2, l3, m1, m2);
            if (parab::b_pairing_matrix(gl3, f, lam) != fixture::gl3_formula(gl3, s, l1, l2, l3, m1, m2)) formula = false;
            if (parab::is_nonsingular(gl3, f, lam) != (a && b)) ++bad;
          }
  o.pass = formula && bad == 0 && cases.size() == 4;
  o.detail = std::string("formula ") + (formula ? "matches" : "differs") + ", " + std::to_string(points) +
             " grid points over " + std::to_string(cases.size()) + " cases, " + std::to_string(bad) + " mismatches";
  return o;
}

Outcome c9() {
  Outcome o;
  int points = 0, bad = 0;
  const std::vector<Rational> grid{0, 1, -2, Rational(1, 2)};
  for (const char* name : {"sl2", "gl2"})
    for (int r = 1; r <= 3; ++r) {
      RootDatum rd = RootDatum::parse(name);
      for (const auto& f : parab::enumerate_parabolic_filtrations(rd, r))
        for (const auto& lam : character_grid(rd, f, grid)) {
          ++points;
          if (parab::is_nonsingular(rd, f, lam) != parab::nonsingular_by_dual_stratum(rd, f, lam)) ++bad;
        }
    }
  RootDatum gl3 = RootDatum::gl(3);
  auto fams = parab::enumerate_parabolic_filtrations(gl3, 2);
  std::mt19937 gen(777);
  for (int t = 0; t < 500; ++t) {
    const auto& f = fams[gen() % fams.size()];
    auto lam = random_character(gl3, f, gen);
    ++points;
    if (parab::is_nonsingular(gl3, f, lam) != parab::nonsingular_by_dual_stratum(gl3, f, lam)) ++bad;
  }
  o.pass = bad == 0;
  o.detail = std::to_string(points) + " points (exhaustive sl2/gl2 r<=3, 500 sampled gl3 r=2), " +
             std::to_string(bad) + " disagreements";
  return o;
}

struct ModuleFixture {
  const RootDatum* rd;
  ParabolicFiltration f;
  FormalType lambda;
};

std::vector<ModuleFixture> shapovalov_fixtures(const RootDatum& sl2, const RootDatum& gl2, const RootDatum& gl3) {
  return {
      {&sl2, fixture::sl2_filtration(sl2, 1, 1), {ints({3})}},
      {&sl2, fixture::sl2_filtration(sl2, 2, 2), {ints({2}), ints({-3})}},
      {&gl2, parab::constant_filtration(parab::positive_borel(gl2), 2), {ints({1, 4}), ints({2, 7})}},
      {&gl3, fixture::gl3_chain(gl3), fixture::gl3_type(1, 3, -2, 4, 1)},
  };
}

Outcome c10(std::vector<std::pair<singmod::DilatedBlock, singmod::Factorisation>>& factored) {
  Outcome o;
  RootDatum sl2 = RootDatum::sl(2), gl2 = RootDatum::gl(2), gl3 = RootDatum::gl(3);
  const int K = 4;
  int blocks = 0;
  std::vector<std::string> failures;
  std::mt19937 gen(4242);
  for (const auto& fx : shapovalov_fixtures(sl2, gl2, gl3)) {
    const RootDatum& rd = *fx.rd;
    SingularityModule m(rd, fx.f, fx.lambda);
    auto spaces = m.weight_spaces(K);
    std::vector<std::vector<singmod::Mono>> all;
    for (const auto& ws : spaces) {
      auto b = singmod::shapovalov_block(m, ws);
      ++blocks;
      if (!(b.matrix == b.matrix.transposed())) failures.push_back("symmetry");
      if (ws.index.indecomposable) {
        int a = m.generators()[ws.basis[0][0]].root;
        int d = m.d(a);
        for (int i = 0; i < d; ++i)
          for (int j = 0; j < d; ++j) {
            Rational expect = i + j < d ? rd.coroot_pairing(fx.lambda[i + j], a) : Rational(0);
            if (b.matrix(i, j) != expect) failures.push_back("antitriangular shape");
          }
        if (rd.coroot_pairing(fx.lambda[d - 1], a) != b.matrix(0, d - 1)) failures.push_back("antidiagonal");
      }
      try {
        auto dil = singmod::dilated_block(rd, fx.f, fx.lambda, ws);
        auto fac = singmod::factorize_block(dil);
        for (std::size_t i = 0; i < ws.basis.size(); ++i)
          if (fac.leading[i] != singmod::multiplicity_factorial(ws.basis[i])) failures.push_back("leading coefficient");
        factored.emplace_back(std::move(dil), std::move(fac));
      } catch (const ClaimViolation& e) {
        failures.push_back(e.what());
      }
    }
    // Orthogonality across distinct weights, exhaustively.
    for (std::size_t p = 0; p < spaces.size(); ++p)
      for (std::size_t q = 0; q < spaces.size(); ++q)
        if (p != q)
          for (const auto& x : spaces[p].basis)
            for (const auto& y : spaces[q].basis)
              if (singmod::shapovalov_entry(m, x, y) != 0) failures.push_back("orthogonality");
    // Contragrediency S(t g . Y, X) = S(Y, g . X) on seeded samples.
    int n = fx.f.depth() * rd.dim_g();
    for (int t = 0; t < 150; ++t) {
      const auto& wa = spaces[gen() % spaces.size()];
      const auto& wb = spaces[gen() % spaces.size()];
      const auto& y = wa.basis[gen() % wa.basis.size()];
      const auto& x = wb.basis[gen() % wb.basis.size()];
      int b = static_cast<int>(gen() % n);
      singmod::MVec gy = m.module().act(liecore::transpose_basis(rd, b), singmod::MVec{{y, 1}});
      singmod::MVec gx = m.module().act(b, singmod::MVec{{x, 1}});
      if (singmod::shapovalov_pair(m, gy, singmod::MVec{{x, 1}}) != singmod::shapovalov_pair(m, singmod::MVec{{y, 1}}, gx))
        failures.push_back("contragrediency");
    }
  }
  o.pass = failures.empty();
  o.detail = std::to_string(blocks) + " blocks up to K=4 on sl2 tame, sl2 r=2, gl2 r=2, gl3 chain";
  if (!o.pass) o.detail += ", first failure: " + failures.front();
  return o;
}

Outcome c11(const std::vector<std::pair<singmod::DilatedBlock, singmod::Factorisation>>& factored,
            double prior_seconds) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  int bad = 0;
  for (const auto& [b, fac] : factored)
    if (!(fac.D * fac.C * fac.Q == b.matrix)) ++bad;
  double s = seconds_since(t0) + prior_seconds;
  o.pass = bad == 0 && !factored.empty() && s < 120.0;
  o.detail = std::to_string(factored.size()) + " factorisations, " + std::to_string(bad) + " mismatches, " +
             fmt_seconds(s);
  return o;
}

Outcome c12() {
  Outcome o;
  RootDatum sl2 = RootDatum::sl(2);
  const int K = 6;
  for (int n = 0; n <= 3; ++n) {
    SingularityModule m(sl2, fixture::sl2_filtration(sl2, 1, 1), FormalType{Vec{Rational(n)}});
    auto prof = singmod::maximal_submodule_profile(m, K);
    int first = -1;
    for (const auto& [idx, dim] : prof.dims) {
      int expect = oracle::sl2_diagonal(n, idx.height) == 0 ? 1 : 0;
      if (dim != expect) o.pass = false;
      if (dim > 0 && first < 0) first = idx.height;
    }
    if (first != n + 1 || static_cast<int>(prof.dims.size()) != K + 1) o.pass = false;
  }
  o.detail = "radical profile at n = 0..3 up to K=6 matches k! prod (n - j), first degeneracy at k = n + 1";
  return o;
}

Outcome c13() {
  Outcome o;
  int checked = 0, corrected_bad = 0;
  std::vector<std::string> disagreements;
  const std::vector<Rational> grid{0, 1, 2};
  for (const char* name : {"sl2", "gl2"})
    for (int r = 2; r <= 3; ++r) {
      RootDatum rd = RootDatum::parse(name);
      for (const auto& f : parab::enumerate_parabolic_filtrations(rd, r)) {
        if (f.psi[0] == strat::RootSubset::full(rd.num_roots())) continue;
        for (const auto& lam : character_grid(rd, f, grid)) {
          SingularityModule m(rd, f, lam);
          for (int k = 1; k < r; ++k) {
            ++checked;
            bool criterion = singmod::truncated_quotient_proper(rd, f, lam, k);
            bool direct = singmod::truncated_quotient_proper_by_saturation(m, k, 4);
            bool tail_zero = true;
            for (int i = k; i < r; ++i) tail_zero = tail_zero && is_zero(lam[i]);
            if (tail_zero != direct) ++corrected_bad;
            if (criterion != direct) {
              std::ostringstream d;
              d << name << " r=" << r << " k=" << k << " lambda=(";
              for (std::size_t i = 0; i < lam.size(); ++i) {
                d << (i ? ";" : "");
                for (std::size_t j = 0; j < lam[i].size(); ++j) d << (j ? "," : "") << lam[i][j];
              }
              d << ") criterion=" << criterion << " saturation=" << direct;
              disagreements.push_back(d.str());
            }
          }
        }
      }
    }
  o.pass = disagreements.empty();
  o.detail = std::to_string(checked) + " checks, " + std::to_string(disagreements.size()) + " disagreements";
  if (!o.pass) o.detail += ", e.g. " + disagreements.front();
  o.detail += "; vanishing of lambda_k..lambda_{r-1} on all of t disagrees with saturation " +
              std::to_string(corrected_bad) + " times";
  return o;
}

Outcome c14() {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  RootDatum sl2 = RootDatum::sl(2), gl3 = RootDatum::gl(3);
  std::vector<ModuleFixture> cases{
      {&sl2, fixture::sl2_filtration(sl2, 1, 1), {ints({3})}},
      {&sl2, fixture::sl2_filtration(sl2, 2, 2), {ints({2}), ints({-3})}},
      {&gl3, fixture::gl3_chain(gl3), fixture::gl3_type(1, 3, -2, 4, 1)},
  };
  auto degree_map = [](const quant::HTensor& F, int d) {
    std::map<std::pair<singmod::Mono, singmod::Mono>, Rational> m;
    for (const auto& t : F.degree(d)) m[{t.left, t.right}] += t.coeff;
    return m;
  };
  std::ostringstream d;
  for (const auto& c : cases) {
    auto F2 = quant::inverse_shapovalov_series(*c.rd, c.f, c.lambda, 2, 2);
    auto F4 = quant::inverse_shapovalov_series(*c.rd, c.f, c.lambda, 4, 2);
    quant::V0Space v0(*c.rd, c.f);
    auto f0 = degree_map(F2, 0);
    bool unit = f0.size() == 1 && f0.begin()->first.first.empty() && f0.begin()->first.second.empty() &&
                f0.begin()->second == 1;
    bool first = quant::first_order_check(F2, v0);
    bool assoc2 = quant::associativity_check(F2, v0, 2).equal;
    bool assoc4 = quant::associativity_check(F4, v0, 2).equal;
    bool stable = true;
    for (int k = 0; k <= 2; ++k) stable = stable && degree_map(F2, k) == degree_map(F4, k);
    if (!(unit && first && assoc2 && assoc4 && stable)) o.pass = false;
    d << c.rd->name() << " r=" << c.f.depth() << " [" << unit << first << assoc2 << stable << "] ";
  }
  double s = seconds_since(t0);
  if (s >= 300.0) o.pass = false;
  o.detail = d.str() + "(unit, Pi, associativity, K=4 stability), " + fmt_seconds(s);
  return o;
}

Outcome c15() {
  Outcome o;
  RootDatum sl2 = RootDatum::sl(2);
  auto fam = strat::enumerate_filtrations(sl2, 3);
  bool intact = strat::verify_stratification_axioms(sl2, 3, fam).ok;
  fam.erase(fam.begin() + 1);
  bool corrupted_rejected = !strat::verify_stratification_axioms(sl2, 3, fam).ok;

  RootDatum sl4 = RootDatum::sl(4);
  auto b = parab::positive_borel(sl4);
  ParabolicFiltration unbalanced{{b, b, parab::standard_parabolic(sl4, 0b011u)}};
  FormalType lam{ints({1, 2, 3}), ints({1, 2, 3}), ints({1, 0, 0})};
  auto rejects = [](const std::function<void()>& fn) {
    try {
      fn();
    } catch (const ValidationError&) {
      return true;
    }
    return false;
  };
  bool unbalanced_rejected = parab::is_parabolic_filtration(sl4, unbalanced) && !parab::is_balanced(sl4, unbalanced) &&
                             rejects([&] { quant::inverse_shapovalov_series(sl4, unbalanced, lam, 2, 2); });
  bool singular_rejected =
      rejects([&] { quant::inverse_shapovalov_series(sl2, fixture::sl2_filtration(sl2, 1, 1), {ints({0})}, 2, 2); }) &&
      rejects([&] {
        quant::inverse_shapovalov_series(sl2, fixture::sl2_filtration(sl2, 2, 2), {ints({1}), ints({0})}, 2, 2);
      });
  o.pass = intact && corrupted_rejected && unbalanced_rejected && singular_rejected;
  o.detail = std::string("corrupted stratification ") + (corrupted_rejected ? "rejected" : "accepted") +
             ", unbalanced sl4 " + (unbalanced_rejected ? "rejected" : "accepted") + ", singular lambda " +
             (singular_rejected ? "rejected" : "accepted");
  return o;
}

}  // namespace

int main() {
  std::vector<std::pair<singmod::DilatedBlock, singmod::Factorisation>> factored;
  double c10_seconds = 0;
  std::vector<std::function<Outcome()>> criteria{
      c1, c2, c3, c4, c5, c6, c7, c8, c9,
      [&] {
        auto t0 = std::chrono::steady_clock::now();
        auto o = c10(factored);
        c10_seconds = seconds_since(t0);
        return o;
      },
      [&] { return c11(factored, c10_seconds); },
      c12, c13, c14, c15};
  int unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    int id = static_cast<int>(i) + 1;
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    bool known = kKnownFailures.count(id) > 0;
    if (!o.pass && !known) ++unexpected;
    std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << (!o.pass && known ? " (known)" : "")
              << " | " << o.detail << std::endl;
  }
  std::cout << (unexpected == 0 ? "all failures are known and documented" : "unexpected failures present") << std::endl;
  return unexpected == 0 ? 0 : 1;
}
