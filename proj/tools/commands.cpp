#include "commands.hpp"

#include <atomic>
#include <random>
#include <thread>

#include "wildstrat/errors.hpp"
#include "wildstrat/orbit.hpp"
#include "wildstrat/quant.hpp"
#include "wildstrat/singmod.hpp"

namespace wildstrat::cli {

namespace {

using liecore::RootDatum;
using liecore::TcElement;

json rational_json(const Rational& q) { return q.get_str(); }

json vec_json(const Vec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(rational_json(x));
  return a;
}

json matrix_json(const QMatrix& m) {
  json a = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(rational_json(m(i, j)));
    a.push_back(row);
  }
  return a;
}

json poly_json(const CPoly& p) {
  json a = json::array();
  if (p.is_zero()) return a;
  int lo = std::min(0, p.low_degree());
  for (int e = lo; e <= p.degree(); ++e) a.push_back(rational_json(p.coeff(e)));
  if (lo == 0) return a;
  return {{"lowest_exponent", lo}, {"coefficients", a}};
}

json ints_json(const std::vector<int>& v) { return json(v); }

std::string element_string(const RootDatum& rd, const Vec& flat) {
  std::string s;
  for (std::size_t b = 0; b < flat.size(); ++b) {
    if (flat[b] == 0) continue;
    std::string c = flat[b].get_str();
    if (!s.empty()) s += " + ";
    s += (flat[b] == 1 ? "" : c + "*") + liecore::basis_name(rd, static_cast<int>(b));
  }
  return s.empty() ? "0" : s;
}

json element_json(const RootDatum& rd, const TcElement& x) {
  json j;
  Vec flat = liecore::to_flat(rd, x);
  json coeffs = json::array();
  for (int d = 0; d < x.depth; ++d)
    coeffs.push_back(vec_json(Vec(flat.begin() + d * rd.dim_g(), flat.begin() + (d + 1) * rd.dim_g())));
  j["coefficients"] = coeffs;
  j["text"] = element_string(rd, flat);
  return j;
}

json filtration_json(const RootDatum& rd, const parab::ParabolicFiltration& f) {
  json a = json::array();
  for (const auto& p : f.psi) a.push_back(strat::describe(rd, p));
  return a;
}

void run_parallel(int n, int workers, const std::function<void(int)>& job) {
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));
  auto worker = [&] {
    for (int i = next++; i < n; i = next++) {
      try {
        job(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < std::min(workers, n); ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

TcElement random_gauge(const RootDatum& rd, int r, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<int> d(-2, 2);
  Vec flat = zero_vec(static_cast<std::size_t>(r) * rd.dim_g());
  for (std::size_t b = rd.dim_g(); b < flat.size(); ++b) flat[b] = d(gen);
  return liecore::tc_from_flat(rd, r, flat);
}

json invariants_json(const RootDatum& rd, const TcElement& x) {
  json j;
  auto nf = orbit::birkhoff_normalize(rd, x);
  j["strictness"] = nf.s;
  j["irregular_type"] = element_json(rd, nf.tau());
  j["normal_form"] = element_json(rd, nf.normal);
  j["gauge_log"] = element_json(rd, nf.gauge_log);
  auto c = orbit::centralizer(rd, nf.normal);
  json cj;
  cj["dim"] = c.dimension;
  json basis = json::array();
  for (const auto& v : c.basis) basis.push_back(element_string(rd, v));
  cj["basis"] = basis;
  cj["marked_index"] = c.marked_s;
  cj["marking"] = strat::describe(rd, c.marking);
  cj["structural"] = c.structural;
  if (c.structural) {
    cj["predicted_dim"] = c.predicted_dimension;
    cj["matches"] = c.matches;
  }
  j["centralizer"] = cj;
  return j;
}

}  // namespace

json cmd_levi(const JobConfig& cfg, std::string* dot) {
  auto rd = RootDatum::parse(cfg.type);
  auto poset = strat::levi_poset(rd);
  json j;
  j["type"] = rd.name();
  j["nodes"] = poset.nodes.size();
  json nodes = json::array();
  for (std::size_t i = 0; i < poset.nodes.size(); ++i)
    nodes.push_back({{"id", i}, {"levi", strat::describe(rd, poset.nodes[i])}, {"rank", poset.rank[i]}});
  j["levi_subsets"] = nodes;
  json covers = json::array();
  for (const auto& [u, l] : poset.covers) covers.push_back({u, l});
  j["covers"] = covers;
  j["depth"] = cfg.depth;
  auto fams = strat::enumerate_filtrations(rd, cfg.depth);
  j["filtrations"] = fams.size();
  j["filtration_bound"] = strat::filtration_bound(rd, cfg.depth);
  j["weyl_classes"] = strat::weyl_orbits_and_quotient(rd, fams).classes.size();
  if (dot) *dot = poset.to_dot(rd);
  return j;
}

json cmd_parabolic(const JobConfig& cfg) {
  auto rd = RootDatum::parse(cfg.type);
  auto all = parab::enumerate_parabolic(rd);
  json j;
  j["type"] = rd.name();
  j["parabolic_subsets"] = all.size();
  j["weyl_classes"] = parab::count_parabolic_classes(rd);
  json list = json::array();
  for (const auto& p : all)
    list.push_back({{"psi", strat::describe(rd, p)}, {"levi", strat::describe(rd, parab::levi_factor(rd, p))}});
  j["subsets"] = list;
  auto fams = parab::enumerate_parabolic_filtrations(rd, cfg.depth);
  int balanced = 0;
  for (const auto& f : fams) balanced += parab::is_balanced(rd, f);
  j["depth"] = cfg.depth;
  j["parabolic_filtrations"] = fams.size();
  j["balanced_filtrations"] = balanced;
  return j;
}

json cmd_classify(const JobConfig& cfg) {
  auto rd = RootDatum::parse(cfg.type);
  TcElement x = resolve_element(rd, cfg);
  json j;
  j["type"] = rd.name();
  j["input"] = element_json(rd, x);
  j["depth"] = x.depth;
  bool cartan = true;
  for (const auto& c : x.coeffs) cartan = cartan && c.in_cartan();
  j["filtration"] = cartan ? json(strat::describe(rd, strat::stratum_of_tuple(rd, orbit::marking_tuple(rd, x))))
                           : json(nullptr);
  j.update(invariants_json(rd, x));
  if (cfg.gauge) {
    TcElement z = random_gauge(rd, cfg.depth, cfg.seed);
    TcElement y = orbit::apply_gauge(rd, z, x);
    json g;
    g["seed"] = cfg.seed;
    g["gauge"] = element_json(rd, z);
    g["input"] = element_json(rd, y);
    g.update(invariants_json(rd, y));
    g["same_invariants"] = g["strictness"] == j["strictness"] && g["irregular_type"] == j["irregular_type"] &&
                           g["centralizer"]["dim"] == j["centralizer"]["dim"];
    j["gauged"] = g;
  }
  return j;
}

json cmd_character(const JobConfig& cfg) {
  auto rd = RootDatum::parse(cfg.type);
  auto f = resolve_filtration(rd, cfg);
  auto lam = resolve_lambda(rd, cfg);
  json j;
  j["type"] = rd.name();
  j["filtration"] = filtration_json(rd, f);
  j["balanced"] = parab::is_balanced(rd, f);
  auto cs = parab::character_space(rd, f);
  j["character_space_dimension"] = cs.dim;
  j["admissible"] = parab::is_admissible(rd, f, lam);
  if (!j["admissible"].get<bool>()) return j;
  auto split = parab::triangular_split(rd, f);
  json up = json::array(), down = json::array();
  for (int x : split.u_plus) up.push_back(liecore::basis_name(rd, x));
  for (int x : split.u_minus) down.push_back(liecore::basis_name(rd, x));
  j["u_plus"] = up;
  j["u_minus"] = down;
  QMatrix b = parab::b_pairing_matrix(rd, f, lam);
  j["pairing"] = matrix_json(b);
  j["pairing_rank"] = rank(b);
  j["nonsingular"] = parab::is_nonsingular(rd, f, lam);
  j["nonsingular_by_dual_stratum"] = parab::nonsingular_by_dual_stratum(rd, f, lam);
  j["dual_stratum"] = strat::describe(rd, strat::dual_stratum_of_covector(rd, lam));
  j["kks_equals_pairing"] = orbit::kks_form(rd, f, lam) == b;
  return j;
}

json cmd_shapovalov(const JobConfig& cfg) {
  auto rd = RootDatum::parse(cfg.type);
  auto f = resolve_filtration(rd, cfg);
  auto lam = resolve_lambda(rd, cfg);
  singmod::SingularityModule m(rd, f, lam);
  auto spaces = m.weight_spaces(cfg.height);
  std::vector<json> rows(spaces.size());
  run_parallel(static_cast<int>(spaces.size()), cfg.workers, [&](int i) {
    const auto& ws = spaces[i];
    auto b = singmod::shapovalov_block(m, ws);
    json row;
    row["weight"] = ints_json(ws.index.mu);
    row["height"] = ws.index.height;
    row["indecomposable"] = ws.index.indecomposable;
    row["dim"] = ws.basis.size();
    row["rank"] = rank(b.matrix);
    row["radical_dim"] = static_cast<int>(ws.basis.size()) - rank(b.matrix);
    row["determinant"] = rational_json(determinant(b.matrix));
    row["matrix"] = matrix_json(b.matrix);
    json basis = json::array();
    for (const auto& mono : ws.basis) basis.push_back(json(mono));
    row["basis"] = basis;
    auto dil = singmod::dilated_block(rd, f, lam, ws);
    auto fac = singmod::factorize_block(dil);
    json fj;
    fj["lengths"] = fac.lengths;
    json lead = json::array();
    for (const auto& d : fac.leading) lead.push_back(rational_json(d));
    fj["leading"] = lead;
    json entries = json::array();
    for (int r = 0; r < dil.matrix.n; ++r) {
      json er = json::array();
      for (int c = 0; c < dil.matrix.n; ++c) er.push_back(poly_json(dil.matrix(r, c)));
      entries.push_back(er);
    }
    fj["dilated"] = entries;
    row["factorisation"] = fj;
    rows[i] = row;
  });
  json j;
  j["type"] = rd.name();
  j["filtration"] = filtration_json(rd, f);
  j["height"] = cfg.height;
  json gens = json::array();
  for (const auto& g : m.generators()) gens.push_back(liecore::basis_name(rd, g.flat));
  j["generators"] = gens;
  j["blocks"] = rows;
  j["first_singular_weight"] = nullptr;
  for (const auto& row : rows)
    if (row["radical_dim"] != 0) {
      j["first_singular_weight"] = row["weight"];
      break;
    }
  return j;
}

json cmd_simplicity(const JobConfig& cfg) {
  auto rd = RootDatum::parse(cfg.type);
  auto f = resolve_filtration(rd, cfg);
  auto lam = resolve_lambda(rd, cfg);
  singmod::SingularityModule m(rd, f, lam);
  auto probe = singmod::conjecture_probe(m, cfg.height);
  json j;
  j["type"] = rd.name();
  j["filtration"] = filtration_json(rd, f);
  j["height"] = cfg.height;
  j["nonsingular"] = probe.cond1_nonsingular;
  j["alcove_condition"] = probe.cond2_alcove;
  j["simple_up_to_height"] = probe.observed_simple;
  j["verdict"] = probe.verdict;
  auto prof = singmod::maximal_submodule_profile(m, cfg.height);
  json radicals = json::array();
  for (const auto& [idx, dim] : prof.dims)
    if (dim > 0) radicals.push_back({{"weight", idx.mu}, {"radical_dimension", dim}});
  j["radicals"] = radicals;
  json tq = json::array();
  for (int k = 1; k < f.depth(); ++k)
    tq.push_back({{"k", k},
                  {"criterion", singmod::truncated_quotient_proper(rd, f, lam, k)},
                  {"saturation", singmod::truncated_quotient_proper_by_saturation(m, k, cfg.height)}});
  j["truncated_quotients"] = tq;
  return j;
}

json cmd_quantize(const JobConfig& cfg) {
  auto rd = RootDatum::parse(cfg.type);
  auto f = resolve_filtration(rd, cfg);
  auto lam = resolve_lambda(rd, cfg);
  int N = cfg.order;
  if (cfg.height < N) throw ValidationError("inconsistent truncation: height K must be at least the order N");
  auto F = quant::inverse_shapovalov_series(rd, f, lam, cfg.height, N);
  quant::V0Space v0(rd, f);
  json j;
  j["type"] = rd.name();
  j["filtration"] = filtration_json(rd, f);
  j["order"] = N;
  j["height"] = cfg.height;
  json terms = json::array();
  for (const auto& t : F.terms)
    terms.push_back({{"hdeg", t.hdeg},
                     {"weight", t.weight},
                     {"left_monomial", quant::monomial_string(F, t.left, false)},
                     {"right_monomial", quant::monomial_string(F, t.right, true)},
                     {"coeff", rational_json(t.coeff)}});
  j["terms"] = terms;
  json dual = json::array();
  for (std::size_t p = 0; p < F.dual.size(); ++p)
    dual.push_back({{"name", quant::monomial_string(F, singmod::Mono{static_cast<int>(p)}, true)},
                    {"value", element_string(rd, F.dual[p])}});
  j["dual_generators"] = dual;
  auto pi = quant::poisson_bivector(rd, f, lam);
  json pj = json::array();
  for (const auto& w : pi.pairs) pj.push_back({{"x", element_string(rd, w.x)}, {"y", element_string(rd, w.y)}});
  j["poisson_bivector"] = pj;
  j["first_order_check"] = N >= 1 && cfg.height >= 1 ? json(quant::first_order_check(F, v0)) : json(nullptr);
  auto B = quant::star_bidiff(F, v0);
  j["levi_invariance"] = quant::levi_invariance_check(B, v0, f);
  auto rep = quant::associativity_check(F, v0, N);
  json aj;
  aj["equal"] = rep.equal;
  aj["order"] = rep.order;
  if (!rep.equal) {
    aj["first_degree"] = rep.first_degree;
    aj["first_difference"] = rep.first_difference;
  }
  j["associativity"] = aj;
  return j;
}

}  // namespace wildstrat::cli
