#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "wildstrat/strat.hpp"

using namespace wildstrat;
using namespace wildstrat::strat;

namespace {

int unit_root(const RootDatum& rd, int i, int j) {
  for (int a = 0; a < rd.num_roots(); ++a)
    if (rd.matrix_unit(a) == std::make_pair(i, j)) return a;
  return -1;
}

Vec diag(std::initializer_list<int> xs) {
  Vec v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("Levi subsystem examples") {
  RootDatum b2 = RootDatum::parse("B2");
  RootSubset longs(b2.num_roots()), shorts(b2.num_roots());
  for (int a = 0; a < b2.num_roots(); ++a) (b2.root_norm(a) == 2 ? longs : shorts).set(a);
  CHECK(longs.count() == 4);
  CHECK_FALSE(is_levi(b2, longs));
  CHECK_FALSE(is_levi(b2, shorts));
  CHECK(is_levi(b2, RootSubset(b2.num_roots())));
  RootDatum gl3 = RootDatum::gl(3);
  CHECK(is_levi(gl3, RootSubset::from_indices(6, {unit_root(gl3, 0, 1), unit_root(gl3, 1, 0)})));
  CHECK_FALSE(is_levi(gl3, RootSubset::from_indices(6, {unit_root(gl3, 0, 1)})));
}

TEST_CASE("the Levi criteria agree on every subset") {
  for (const char* name : {"gl3", "sl3", "B2", "G2"}) {
    RootDatum rd = RootDatum::parse(name);
    int nr = rd.num_roots();
    int levis = 0;
    for (long mask = 0; mask < (1L << nr); ++mask) {
      RootSubset s(nr);
      for (int a = 0; a < nr; ++a)
        if (mask & (1L << a)) s.set(a);
      bool l = is_levi(rd, s);
      CHECK(l == is_levi_by_kernel(rd, s));
      CHECK(l == levi_witness(rd, s).has_value());
      levis += l;
    }
    CHECK(levis == static_cast<int>(enumerate_levi(rd).size()));
  }
}

TEST_CASE("Levi enumeration counts") {
  CHECK(enumerate_levi(RootDatum::gl(3)).size() == 5);
  CHECK(enumerate_levi(RootDatum::sl(2)).size() == 2);
  RootDatum b2 = RootDatum::parse("B2");
  CHECK(enumerate_levi(b2).size() == 6);
  CHECK(enumerate_levi(b2) .size() == enumerate_levi_bruteforce(b2).size());
  RootDatum gl4 = RootDatum::gl(4);
  auto l4 = enumerate_levi(gl4);
  CHECK(l4.size() == 15);  // set partitions of 4 points
}

TEST_CASE("Levi posets") {
  RootDatum gl3 = RootDatum::gl(3);
  LeviPoset p = levi_poset(gl3);
  REQUIRE(p.nodes.size() == 5);
  std::map<int, int> by_rank;
  for (int r : p.rank) by_rank[r]++;
  CHECK(by_rank == std::map<int, int>{{1, 1}, {2, 3}, {3, 1}});
  CHECK(p.covers.size() == 6);
  for (auto [u, l] : p.covers) CHECK(p.rank[u] == p.rank[l] + 1);
  CHECK(p.to_dot(gl3).find("digraph") == 0);
  LeviPoset s = levi_poset(RootDatum::sl(2));
  CHECK(s.nodes.size() == 2);
  CHECK(s.covers.size() == 1);
  LeviPoset q = levi_poset(RootDatum::gl(4));
  std::set<int> ranks(q.rank.begin(), q.rank.end());
  CHECK(ranks == std::set<int>{1, 2, 3, 4});
  for (auto [u, l] : q.covers) CHECK(q.rank[u] == q.rank[l] + 1);
}

TEST_CASE("levi_of_point and stratum_of_tuple") {
  RootDatum sl2 = RootDatum::sl(2);
  CHECK(levi_of_point(sl2, {1}).empty());
  CHECK(levi_of_point(sl2, {0}).count() == 2);
  RootDatum gl3 = RootDatum::gl(3);
  RootSubset p12 = RootSubset::from_indices(6, {unit_root(gl3, 0, 1), unit_root(gl3, 1, 0)});
  CHECK(levi_of_point(gl3, diag({1, 1, 0})) == p12);

  LeviFiltration f = stratum_of_tuple(sl2, {{1}, {0}});
  CHECK(f.phi[0].empty());
  CHECK(f.phi[1].count() == 2);
  LeviFiltration z = stratum_of_tuple(gl3, {diag({0, 0, 0}), diag({5, 5, 5}), diag({0, 0, 0})});
  for (const auto& t : z.phi) CHECK(t.count() == 6);
  LeviFiltration g = stratum_of_tuple(gl3, {diag({1, 1, 0}), diag({1, 2, 3})});
  CHECK(g.phi[0].empty());
  CHECK(g.phi[1].empty());
  // The last entry leads: phi_0 is the intersection over j >= 0.
  LeviFiltration h = stratum_of_tuple(gl3, {diag({1, 2, 3}), diag({1, 1, 0})});
  CHECK(h.phi[0].empty());
  CHECK(h.phi[1] == p12);
  CHECK(in_stratum(gl3, h, {diag({1, 2, 3}), diag({1, 1, 0})}));
  CHECK_FALSE(in_stratum(gl3, h, {diag({1, 1, 3}), diag({1, 1, 0})}));
}

TEST_CASE("stratum membership is W-equivariant and matches the hyperplane description") {
  std::mt19937 gen(5);
  std::uniform_int_distribution<int> d(-1, 1);
  for (const char* name : {"gl3", "B2", "sl3"}) {
    RootDatum rd = RootDatum::parse(name);
    auto fam = enumerate_filtrations(rd, 2);
    for (int t = 0; t < 200; ++t) {
      Tuple x(2, zero_vec(rd.dim_t()));
      for (auto& v : x)
        for (auto& c : v) c = d(gen);
      LeviFiltration f = stratum_of_tuple(rd, x);
      int hits = 0;
      for (const auto& g : fam) hits += in_stratum(rd, g, x);
      CHECK(hits == 1);
      CHECK(in_stratum(rd, f, x));
      for (const auto& w : rd.weyl_group()) CHECK(stratum_of_tuple(rd, act(rd, w, x)) == act(rd, w, f));
    }
  }
}

TEST_CASE("filtration enumeration") {
  RootDatum sl2 = RootDatum::sl(2);
  for (int s = 1; s <= 6; ++s) CHECK(static_cast<int>(enumerate_filtrations(sl2, s).size()) == s + 1);
  RootDatum gl3 = RootDatum::gl(3);
  auto levis = enumerate_levi(gl3);
  int oracle = 0;
  for (const auto& a : levis)
    for (const auto& b : levis) oracle += a.subset_of(b);
  auto fam = enumerate_filtrations(gl3, 2);
  CHECK(static_cast<int>(fam.size()) == oracle);
  CHECK(static_cast<long long>(fam.size()) <= 54);
  CHECK(filtration_bound(gl3, 2) == 54);
  for (const auto& f : fam) {
    CHECK(is_levi_filtration(gl3, f));
    auto d = level_profile(f);
    for (int a = 0; a < gl3.num_roots(); ++a)
      for (int i = 0; i < 2; ++i) CHECK(f.phi[i].test(a) == (d[a] <= i));
  }
}

TEST_CASE("Weyl quotients") {
  RootDatum gl3 = RootDatum::gl(3);
  auto tame = enumerate_filtrations(gl3, 1);
  auto q = weyl_orbits_and_quotient(gl3, tame);
  REQUIRE(q.classes.size() == 3);
  CHECK(q.order_well_defined);
  CHECK(q.order.size() == 3);  // a chain of three classes
  for (const auto& c : q.classes) {
    int n = tame[c.representative].phi[0].count();
    CHECK(c.free_on_samples);
    if (n == 0) CHECK(c.out_order == 6);
    if (n == 2) CHECK(c.out_order == 1);
    if (n == 6) CHECK(c.out_order == 1);
  }
  auto q2 = weyl_orbits_and_quotient(RootDatum::sl(2), enumerate_filtrations(RootDatum::sl(2), 2));
  CHECK(q2.classes.size() == 3);
  for (const auto& c : q2.classes) CHECK(c.free_on_samples);
}

TEST_CASE("dual strata") {
  RootDatum sl2 = RootDatum::sl(2);
  CHECK(dual_stratum_of_covector(sl2, {{0}}).phi[0].count() == 2);
  auto f = dual_stratum_of_covector(sl2, {{3}, {1}});
  CHECK(f.phi[0].empty());
  CHECK(f.phi[1].empty());
  RootDatum gl3 = RootDatum::gl(3);
  // lambda_0 = (1, 2, 3) generic, lambda_1 = (4, 4, 7) vanishing on a12-check.
  auto g = dual_stratum_of_covector(gl3, {diag({1, 2, 3}), diag({4, 4, 7})});
  CHECK(g.phi[0].empty());
  CHECK(g.phi[1] == RootSubset::from_indices(6, {unit_root(gl3, 0, 1), unit_root(gl3, 1, 0)}));
  // For simply-laced types coroots and roots agree on t, so dual and primal strata coincide.
  std::mt19937 gen(9);
  std::uniform_int_distribution<int> d(-1, 1);
  for (int t = 0; t < 100; ++t) {
    Tuple x(2, zero_vec(3));
    for (auto& v : x)
      for (auto& c : v) c = d(gen);
    CHECK(dual_stratum_of_covector(gl3, x) == stratum_of_tuple(gl3, x));
  }
}

TEST_CASE("stratification axioms") {
  RootDatum gl3 = RootDatum::gl(3);
  auto tame = enumerate_filtrations(gl3, 1);
  CHECK(verify_stratification_axioms(gl3, 1, tame).ok);
  RootDatum sl2 = RootDatum::sl(2);
  auto fam = enumerate_filtrations(sl2, 3);
  CHECK(verify_stratification_axioms(sl2, 3, fam).ok);
  fam.erase(fam.begin() + 1);
  auto bad = verify_stratification_axioms(sl2, 3, fam);
  CHECK_FALSE(bad.ok);
  CHECK(bad.first_violation.rfind("partition", 0) == 0);
}
