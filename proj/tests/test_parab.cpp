#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "wildstrat/errors.hpp"
#include "wildstrat/lie.hpp"

using namespace wildstrat;
using namespace wildstrat::parab;
using fixture::unit_root;

TEST_CASE("parabolic subsets") {
  RootDatum gl3 = RootDatum::gl(3);
  auto ps = enumerate_parabolic(gl3);
  CHECK(ps.size() == 13);
  CHECK(count_parabolic_classes(gl3) == 4);
  auto brute = enumerate_parabolic_bruteforce(gl3);
  CHECK(std::set<RootSubset>(brute.begin(), brute.end()) == std::set<RootSubset>(ps.begin(), ps.end()));
  RootDatum sl2 = RootDatum::sl(2);
  auto p2 = enumerate_parabolic(sl2);
  CHECK(p2.size() == 3);
  for (const char* name : {"B2", "sl3", "G2", "gl4"}) {
    RootDatum rd = RootDatum::parse(name);
    auto a = enumerate_parabolic(rd), b = enumerate_parabolic_bruteforce(rd);
    CHECK(std::set<RootSubset>(a.begin(), a.end()) == std::set<RootSubset>(b.begin(), b.end()));
  }
  CHECK_THROWS_AS(make_parabolic(gl3, RootSubset::from_indices(6, {0})), ValidationError);
}

TEST_CASE("Levi factor map") {
  for (const char* name : {"gl3", "B2"}) {
    RootDatum rd = RootDatum::parse(name);
    auto m = levi_factor_map(rd);
    CHECK(m.size() == strat::enumerate_levi(rd).size());
    const auto& borels = m.at(RootSubset(rd.num_roots()));
    CHECK(borels.size() == rd.weyl_group().size());
    std::set<RootSubset> orbit;
    for (const auto& w : rd.weyl_group()) orbit.insert(strat::act(rd, w, borels[0]));
    CHECK(orbit.size() == rd.weyl_group().size());
    auto ps = enumerate_parabolic(rd);
    for (const auto& p : ps)
      for (const auto& q : ps)
        if (p.subset_of(q)) CHECK(levi_factor(rd, p).subset_of(levi_factor(rd, q)));
    for (const auto& p : ps)
      for (const auto& w : rd.weyl_group())
        CHECK(levi_factor(rd, strat::act(rd, w, p)) == strat::act(rd, w, levi_factor(rd, p)));
  }
}

TEST_CASE("parabolic filtrations") {
  RootDatum sl2 = RootDatum::sl(2);
  for (int r = 1; r <= 6; ++r) CHECK(static_cast<int>(enumerate_parabolic_filtrations(sl2, r).size()) == 2 * r + 1);
  RootDatum gl3 = RootDatum::gl(3);
  auto ps = enumerate_parabolic(gl3);
  int oracle = 0;
  for (const auto& a : ps)
    for (const auto& b : ps) oracle += a.subset_of(b);
  auto fam = enumerate_parabolic_filtrations(gl3, 2);
  CHECK(static_cast<int>(fam.size()) == oracle);
  std::set<strat::LeviFiltration> image;
  for (const auto& f : fam) image.insert(lf(gl3, f));
  auto levis = strat::enumerate_filtrations(gl3, 2);
  CHECK(image == std::set<strat::LeviFiltration>(levis.begin(), levis.end()));
}

TEST_CASE("balanced filtrations") {
  for (const char* name : {"gl3", "sl3", "B2"}) {
    RootDatum rd = RootDatum::parse(name);
    for (const auto& f : enumerate_parabolic_filtrations(rd, 2)) CHECK(is_balanced(rd, f));
    for (const auto& p : enumerate_parabolic(rd)) CHECK(is_balanced(rd, constant_filtration(p, 3)));
  }
  RootDatum sl4 = RootDatum::sl(4);
  RootSubset b = positive_borel(sl4);
  ParabolicFiltration bad{{b, b, standard_parabolic(sl4, 0b011)}};
  CHECK(is_parabolic_filtration(sl4, bad));
  CHECK_FALSE(is_balanced(sl4, bad));
}

TEST_CASE("triangular splittings") {
  RootDatum sl2 = RootDatum::sl(2);
  auto s = triangular_split(sl2, fixture::sl2_filtration(sl2, 2, 2));
  CHECK(s.u_minus == std::vector<int>{2, 5});
  CHECK(s.levi == std::vector<int>{0, 3});
  CHECK(s.u_plus == std::vector<int>{1, 4});
  RootDatum gl3 = RootDatum::gl(3);
  auto g = triangular_split(gl3, fixture::gl3_chain(gl3));
  CHECK(g.u_plus.size() == 5);
  std::set<std::pair<int, int>> units;
  for (int k : g.u_plus) {
    int deg = k / gl3.dim_g();
    auto [i, j] = gl3.matrix_unit(k % gl3.dim_g() - gl3.dim_t());
    units.insert({deg, 10 * (i + 1) + (j + 1)});
  }
  CHECK(units == std::set<std::pair<int, int>>{{0, 12}, {0, 13}, {0, 23}, {1, 13}, {1, 23}});
  auto full = triangular_split(gl3, constant_filtration(RootSubset::full(6), 2));
  CHECK(full.u_plus.empty());
  CHECK(full.levi.size() == 18);
  for (const auto& f : enumerate_parabolic_filtrations(gl3, 2)) {
    auto t = triangular_split(gl3, f);
    int r = 2, n = r * gl3.dim_g();
    CHECK(t.u_plus.size() + t.u_minus.size() + t.levi.size() == static_cast<std::size_t>(n));
    std::set<int> all(t.u_plus.begin(), t.u_plus.end());
    all.insert(t.u_minus.begin(), t.u_minus.end());
    all.insert(t.levi.begin(), t.levi.end());
    CHECK(all.size() == static_cast<std::size_t>(n));
    for (std::size_t k = 0; k < t.u_plus.size(); ++k) CHECK(liecore::transpose_basis(gl3, t.u_plus[k]) == t.u_minus[k]);
    for (const auto* side : {&t.u_plus, &t.u_minus})
      for (int x : *side)
        for (int y : *side) {
          auto X = liecore::tc_from_flat(gl3, r, unit_vec(n, x)), Y = liecore::tc_from_flat(gl3, r, unit_vec(n, y));
          CHECK(liecore::pairing_c(gl3, X, Y, r) == 0);
        }
  }
}

TEST_CASE("character spaces") {
  RootDatum gl3 = RootDatum::gl(3);
  CHECK(character_space(gl3, fixture::gl3_chain(gl3)).dim == 5);
  RootDatum sl3 = RootDatum::sl(3);
  for (int r = 1; r <= 3; ++r) CHECK(character_space(sl3, constant_filtration(positive_borel(sl3), r)).dim == 2 * r);
  RootDatum sl2 = RootDatum::sl(2);
  for (int k = 0; k <= 4; ++k) CHECK(character_space(sl2, fixture::sl2_filtration(sl2, k, 4)).dim == k);
  CHECK(is_admissible(gl3, fixture::gl3_chain(gl3), fixture::gl3_type(1, 2, 3, 4, 5)));
  CHECK_FALSE(is_admissible(gl3, fixture::gl3_chain(gl3), FormalType{fixture::ints({1, 2, 3}), fixture::ints({1, 2, 3})}));
  CHECK_THROWS_AS(b_pairing_matrix(gl3, fixture::gl3_chain(gl3), FormalType{fixture::ints({1, 2, 3}), fixture::ints({1, 2, 3})}),
                  ValidationError);
}

TEST_CASE("the pairing B") {
  RootDatum gl3 = RootDatum::gl(3);
  auto f = fixture::gl3_chain(gl3);
  auto s = triangular_split(gl3, f);
  for (auto [l1, l2, l3, m1, m2] : std::vector<std::array<int, 5>>{{1, 2, 3, 4, 5}, {0, 0, 7, 1, 1}, {2, -1, 5, 3, -2}}) {
    CHECK(b_pairing_matrix(gl3, f, fixture::gl3_type(l1, l2, l3, m1, m2)) == fixture::gl3_formula(gl3, s, l1, l2, l3, m1, m2));
    bool expect = (l1 != l2) && (m1 != m2);
    CHECK(is_nonsingular(gl3, f, fixture::gl3_type(l1, l2, l3, m1, m2)) == expect);
  }
  CHECK(b_pairing_matrix(gl3, f, fixture::gl3_type(0, 0, 0, 0, 0)).is_zero());
  RootDatum sl2 = RootDatum::sl(2);
  auto g = fixture::sl2_filtration(sl2, 2, 2);
  QMatrix b = b_pairing_matrix(sl2, g, FormalType{fixture::ints({3}), fixture::ints({5})});
  CHECK(b(0, 0) == 3);
  CHECK(b(0, 1) == 5);
  CHECK(b(1, 0) == 5);
  CHECK(b(1, 1) == 0);
  CHECK(is_nonsingular(sl2, g, FormalType{fixture::ints({0}), fixture::ints({5})}));
  CHECK_FALSE(is_nonsingular(sl2, g, FormalType{fixture::ints({3}), fixture::ints({0})}));
}

TEST_CASE("nested parabolic brackets") {
  RootDatum gl3 = RootDatum::gl(3);
  auto ps = enumerate_parabolic(gl3);
  auto algebra = [&](const RootSubset& psi) {
    std::vector<Vec> basis;
    for (int k = 0; k < gl3.dim_t(); ++k) basis.push_back(unit_vec(gl3.dim_g(), k));
    for (int a : psi.indices()) basis.push_back(unit_vec(gl3.dim_g(), gl3.root_basis_index(a)));
    return basis;
  };
  auto brackets = [&](const std::vector<Vec>& x, const std::vector<Vec>& y) {
    std::vector<Vec> out;
    for (const auto& u : x)
      for (const auto& v : y) out.push_back(liecore::bracket_flat_g(gl3, u, v));
    return out;
  };
  for (const auto& p : ps)
    for (const auto& q : ps)
      if (p.subset_of(q)) {
        auto a = algebra(p), b = algebra(q);
        CHECK(same_span(brackets(a, b), brackets(b, b)));
      }
}
