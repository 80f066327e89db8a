#include "wildstrat/quant.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "wildstrat/errors.hpp"

namespace wildstrat::quant {

using singmod::PolyMatrix;

std::vector<HTerm> HTensor::degree(int d) const {
  std::vector<HTerm> out;
  for (const auto& t : terms)
    if (t.hdeg == d) out.push_back(t);
  return out;
}

std::vector<int> HTensor::left_flats(const Mono& m) const {
  std::vector<int> out;
  for (int p : m) out.push_back(module->generators()[p].flat);
  return out;
}

std::vector<Vec> HTensor::right_vectors(const Mono& m) const {
  std::vector<Vec> out;
  for (int p : m) out.push_back(dual[p]);
  return out;
}

namespace {

// Laurent polynomial in c with no positive powers, rewritten in hbar = 1/c.
CPoly to_hbar(const CPoly& p) {
  CPoly out;
  for (const auto& [e, a] : p.terms()) out += CPoly::monomial(a, -e);
  return out;
}

void require_quantisable(const RootDatum& rd, const ParabolicFiltration& f, const FormalType& lambda) {
  if (!parab::is_parabolic_filtration(rd, f)) throw ValidationError("not a parabolic filtration");
  if (!parab::is_balanced(rd, f))
    throw ValidationError("filtration is not balanced: u+ and u- are not Lie subalgebras");
  parab::require_admissible(rd, f, lambda);
  if (!parab::is_nonsingular(rd, f, lambda)) throw ValidationError("character is singular: the pairing B is degenerate");
}

}  // namespace

HTensor inverse_shapovalov_series(const RootDatum& rd, const ParabolicFiltration& f, const FormalType& lambda,
                                  int K, int N) {
  if (K < 0 || N < 0) throw ValidationError("truncation orders must be nonnegative");
  require_quantisable(rd, f, lambda);
  HTensor F;
  F.order = N;
  F.K = K;
  auto m = std::make_shared<SingularityModule>(rd, f, lambda);
  F.module = m;
  F.dual = singmod::dual_generators(*m);
  F.terms.push_back({0, std::vector<int>(rd.rank(), 0), {}, {}, Rational(1)});

  auto spaces = m->weight_spaces_within(K);
  auto blocks = singmod::dilated_blocks(rd, f, lambda, spaces);
  for (const auto& b : blocks) {
    auto fac = singmod::factorize_block(b);
    int n = b.matrix.n;
    int minlen = fac.lengths.back();
    QMatrix cc(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) cc(i, j) = fac.C(i, j).constant();
    auto cinv = inverse(cc);
    if (!cinv) throw ClaimViolation("constant factor is not invertible");

    PolyMatrix neg_r(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) neg_r(i, j) = -to_hbar(fac.Q(i, j) - CPoly(i == j ? 1 : 0));
    PolyMatrix qinv = PolyMatrix::identity(n), power = PolyMatrix::identity(n);
    for (int k = 1; k <= N; ++k) {
      power = power * neg_r;
      for (auto& e : power.a) e = e.truncated_above(N);
      for (std::size_t q = 0; q < qinv.a.size(); ++q) qinv.a[q] += power.a[q];
    }

    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int lj = fac.lengths[j];
        CPoly s;
        for (int k = 0; k < n; ++k)
          if ((*cinv)(k, j) != 0) s += (*cinv)(k, j) * qinv(i, k);
        s = ((Rational(1) / fac.leading[j]) * s).shifted(lj).truncated_above(N);
        if (s.is_zero()) continue;
        if (i < j && s.low_degree() <= lj) throw ClaimViolation("upper inverse coefficient below order l_j + 1");
        if (i >= j && (s.low_degree() < lj || s.coeff(lj) != (*cinv)(i, j) / fac.leading[j]))
          throw ClaimViolation("lower inverse coefficient does not start with C^-1 / d_j");
        for (const auto& [e, a] : s.terms()) {
          if (e < minlen) throw ClaimViolation("weight contributes below its minimal length");
          F.terms.push_back({e, b.index.mu, b.basis[i], b.basis[j], a});
        }
      }
  }
  std::stable_sort(F.terms.begin(), F.terms.end(), [](const HTerm& a, const HTerm& b) {
    return std::tie(a.hdeg, a.weight, a.left, a.right) < std::tie(b.hdeg, b.weight, b.left, b.right);
  });
  return F;
}

PoissonBivector poisson_bivector(const RootDatum& rd, const ParabolicFiltration& f, const FormalType& lambda) {
  require_quantisable(rd, f, lambda);
  auto split = parab::triangular_split(rd, f);
  QMatrix b = parab::b_pairing_matrix(rd, f, lambda);
  auto inv = inverse(b);
  if (!inv) throw ValidationError("character is singular: the pairing B is degenerate");
  int n = f.depth() * rd.dim_g();
  PoissonBivector pi;
  for (std::size_t m = 0; m < split.u_minus.size(); ++m) {
    Vec y = zero_vec(n);
    for (std::size_t k = 0; k < split.u_plus.size(); ++k) y[split.u_plus[k]] = -(*inv)(m, k);
    pi.pairs.push_back({unit_vec(n, split.u_minus[m]), y, Rational(1)});
  }
  return pi;
}

V0Space::V0Space(const RootDatum& rd, const ParabolicFiltration& f) : rd_(&rd), r_(f.depth()) {
  auto split = parab::triangular_split(rd, f);
  std::vector<int> letters = split.u_minus;
  minus_ = static_cast<int>(letters.size());
  letters.insert(letters.end(), split.u_plus.begin(), split.u_plus.end());
  if (letters.size() + split.levi.size() != static_cast<std::size_t>(r_ * rd.dim_g()))
    throw ValidationError("triangular split does not cover g_r");
  mod_ = std::make_unique<InducedModule>(rd, r_, letters, [](int) { return Rational(0); });
}

MVec V0Space::project(const std::vector<Vec>& word) const {
  MVec v = InducedModule::unit();
  for (auto it = word.rbegin(); it != word.rend() && !v.empty(); ++it) v = mod_->act(*it, v);
  return v;
}

MVec V0Space::project_flats(const std::vector<int>& word) const { return mod_->act_word(word, InducedModule::unit()); }

Vec V0Space::basis_vector(int flat) const { return unit_vec(r_ * rd_->dim_g(), flat); }

V0Tensor V0Space::act(const Vec& x, const V0Tensor& t) const {
  V0Tensor out;
  for (const auto& [key, c] : t)
    for (std::size_t k = 0; k < key.size(); ++k) {
      MVec img = mod_->act(x, MVec{{key[k], Rational(1)}});
      for (const auto& [m, a] : img) {
        auto key2 = key;
        key2[k] = m;
        add_to(out, V0Tensor{{key2, c * a}});
      }
    }
  return out;
}

std::string V0Space::str(const Mono& m) const {
  if (m.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i)
    s += (i ? " " : "") + liecore::basis_name(*rd_, mod_->letters()[m[i]]);
  return s;
}

V0Tensor tensor(const std::vector<MVec>& factors, const Rational& coeff) {
  V0Tensor out{{{}, coeff}};
  for (const auto& f : factors) {
    V0Tensor next;
    for (const auto& [key, c] : out)
      for (const auto& [m, a] : f) {
        auto key2 = key;
        key2.push_back(m);
        add_to(next, V0Tensor{{key2, c * a}});
      }
    out = std::move(next);
  }
  return out;
}

void add_to(V0Tensor& t, const V0Tensor& o, const Rational& c) {
  if (c == 0) return;
  for (const auto& [key, a] : o) {
    auto it = t.find(key);
    if (it == t.end()) {
      t.emplace(key, c * a);
      continue;
    }
    it->second += c * a;
    if (it->second == 0) t.erase(it);
  }
}

V0Tensor swapped(const V0Tensor& t) {
  V0Tensor out;
  for (const auto& [key, a] : t) out.emplace(std::vector<Mono>(key.rbegin(), key.rend()), a);
  return out;
}

namespace {

struct ProjectedTerm {
  HTerm term;
  std::vector<int> a;
  std::vector<Vec> b;
  MVec pa, pb;
};

std::vector<std::vector<ProjectedTerm>> project_terms(const HTensor& F, const V0Space& v0, int N) {
  std::vector<std::vector<ProjectedTerm>> out(N + 1);
  std::map<Mono, MVec> left_cache, right_cache;
  for (const auto& t : F.terms) {
    if (t.hdeg > N) continue;
    ProjectedTerm p{t, F.left_flats(t.left), F.right_vectors(t.right), {}, {}};
    auto li = left_cache.find(t.left);
    if (li == left_cache.end()) li = left_cache.emplace(t.left, v0.project_flats(p.a)).first;
    auto ri = right_cache.find(t.right);
    if (ri == right_cache.end()) ri = right_cache.emplace(t.right, v0.project(p.b)).first;
    p.pa = li->second;
    p.pb = ri->second;
    out[t.hdeg].push_back(std::move(p));
  }
  return out;
}

BidiffSeries assemble(const std::vector<std::vector<ProjectedTerm>>& terms) {
  BidiffSeries B;
  B.order = static_cast<int>(terms.size()) - 1;
  for (const auto& deg : terms) {
    V0Tensor t;
    for (const auto& p : deg) add_to(t, tensor({p.pa, p.pb}), p.term.coeff);
    B.coeff.push_back(std::move(t));
  }
  return B;
}

std::string tensor_term_string(const V0Space& v0, const std::vector<Mono>& key, const Rational& c) {
  std::string s = c.get_str();
  for (std::size_t i = 0; i < key.size(); ++i) s += (i ? " (x) " : " * ") + v0.str(key[i]);
  return s;
}

}  // namespace

BidiffSeries star_bidiff(const HTensor& F, const V0Space& v0) { return assemble(project_terms(F, v0, F.order)); }

bool first_order_check(const HTensor& F, const V0Space& v0) {
  if (F.order < 1 || F.K < 1) throw ValidationError("first-order check needs N >= 1 and K >= 1");
  auto B = assemble(project_terms(F, v0, 1));
  V0Tensor skew = B.coeff[1];
  add_to(skew, swapped(B.coeff[1]), Rational(-1));
  const auto& m = *F.module;
  auto pi = poisson_bivector(m.root_datum(), m.filtration(), m.lambda());
  V0Tensor expected;
  for (const auto& w : pi.pairs) {
    MVec px = v0.project({w.x}), py = v0.project({w.y});
    add_to(expected, tensor({px, py}), w.coeff);
    add_to(expected, tensor({py, px}), -w.coeff);
  }
  return skew == expected;
}

bool first_order_check(const HTensor& F) {
  const auto& m = *F.module;
  V0Space v0(m.root_datum(), m.filtration());
  return first_order_check(F, v0);
}

bool levi_invariance_check(const BidiffSeries& B, const V0Space& v0, const ParabolicFiltration& f) {
  auto split = parab::triangular_split(v0.module().root_datum(), f);
  for (const auto& c : B.coeff)
    for (int x : split.levi)
      if (!v0.act(v0.basis_vector(x), c).empty()) return false;
  return true;
}

bool invariance_check(const RootDatum& rd, const ParabolicFiltration& f, const FormalType& lambda,
                      const Rational& c, int K) {
  require_quantisable(rd, f, lambda);
  SingularityModule plus(rd, f, lambda, c);
  SingularityModule minus = opposite(plus);
  auto dual = singmod::dual_generators(plus);
  using Key = std::pair<Mono, Mono>;
  std::map<Key, Rational> F;
  std::set<std::vector<int>> known;
  for (const auto& ws : plus.weight_spaces(K)) {
    known.insert(ws.index.mu);
    int n = static_cast<int>(ws.basis.size());
    QMatrix a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = singmod::dual_entry(plus, dual, ws.basis[i], ws.basis[j]);
    auto inv = inverse(a);
    if (!inv) throw ValidationError("Shapovalov block is degenerate at this dilation");
    for (int j = 0; j < n; ++j) {
      MVec y = InducedModule::unit();
      for (auto it = ws.basis[j].rbegin(); it != ws.basis[j].rend(); ++it) y = minus.module().act(dual[*it], y);
      for (int i = 0; i < n; ++i) {
        if ((*inv)(i, j) == 0) continue;
        for (const auto& [my, cy] : y) F[{ws.basis[i], my}] += (*inv)(i, j) * cy;
      }
    }
  }
  auto is_known = [&](const std::vector<int>& mu) { return known.count(mu) || plus.decompositions(mu).empty(); };
  auto neg = [](std::vector<int> v) {
    for (auto& x : v) x = -x;
    return v;
  };
  int n = f.depth() * rd.dim_g();
  for (int x = 0; x < n; ++x) {
    std::map<Key, Rational> out;
    for (const auto& [key, coeff] : F) {
      if (coeff == 0) continue;
      for (const auto& [m, a] : plus.module().act_basis(x, key.first)) out[{m, key.second}] += coeff * a;
      for (const auto& [m, a] : minus.module().act_basis(x, key.second)) out[{key.first, m}] += coeff * a;
    }
    for (const auto& [key, v] : out) {
      if (v == 0) continue;
      if (is_known(plus.weight(key.first)) && is_known(neg(minus.weight(key.second)))) return false;
    }
  }
  return true;
}

AssociativityReport associativity_check(const HTensor& F, const V0Space& v0, int N) {
  if (N < 0 || N > F.order || N > F.K)
    throw ValidationError("inconsistent truncation: need 0 <= N <= order and N <= K");
  auto terms = project_terms(F, v0, N);
  auto B = assemble(terms);
  std::map<std::pair<std::vector<int>, int>, V0Tensor> left_memo;
  std::map<std::pair<Mono, int>, V0Tensor> right_memo;
  auto delta_flats = [&](const std::vector<int>& word, int m) {
    auto key = std::make_pair(word, m);
    auto it = left_memo.find(key);
    if (it != left_memo.end()) return it->second;
    V0Tensor t = B.coeff[m];
    for (auto w = word.rbegin(); w != word.rend(); ++w) t = v0.act(v0.basis_vector(*w), t);
    return left_memo.emplace(key, t).first->second;
  };
  auto delta_vecs = [&](const Mono& right, const std::vector<Vec>& word, int m) {
    auto key = std::make_pair(right, m);
    auto it = right_memo.find(key);
    if (it != right_memo.end()) return it->second;
    V0Tensor t = B.coeff[m];
    for (auto w = word.rbegin(); w != word.rend(); ++w) t = v0.act(*w, t);
    return right_memo.emplace(key, t).first->second;
  };
  auto append = [](const V0Tensor& t, const MVec& v) {
    V0Tensor out;
    for (const auto& [key, c] : t)
      for (const auto& [m, a] : v) {
        auto key2 = key;
        key2.push_back(m);
        add_to(out, V0Tensor{{key2, c * a}});
      }
    return out;
  };
  auto prepend = [](const MVec& v, const V0Tensor& t) {
    V0Tensor out;
    for (const auto& [m, a] : v)
      for (const auto& [key, c] : t) {
        std::vector<Mono> key2{m};
        key2.insert(key2.end(), key.begin(), key.end());
        add_to(out, V0Tensor{{key2, c * a}});
      }
    return out;
  };

  AssociativityReport rep;
  rep.order = N;
  for (int d = 0; d <= N; ++d) {
    V0Tensor lhs, rhs;
    for (int k = 0; k <= d; ++k)
      for (const auto& p : terms[k]) {
        add_to(lhs, append(delta_flats(p.a, d - k), p.pb), p.term.coeff);
        add_to(rhs, prepend(p.pa, delta_vecs(p.term.right, p.b, d - k)), p.term.coeff);
      }
    if (lhs == rhs) continue;
    rep.equal = false;
    rep.first_degree = d;
    V0Tensor diff = lhs;
    add_to(diff, rhs, Rational(-1));
    const auto& [key, c] = *diff.begin();
    rep.first_difference = "hbar^" + std::to_string(d) + ": " + tensor_term_string(v0, key, c);
    break;
  }
  return rep;
}

std::string monomial_string(const HTensor& F, const Mono& m, bool right) {
  if (m.empty()) return "1";
  const auto& rd = F.module->root_datum();
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const auto& g = F.module->generators()[m[i]];
    std::string name = liecore::basis_name(rd, g.flat);
    if (right) name = "Y(" + liecore::basis_name(rd, liecore::transpose_basis(rd, g.flat)) + ")";
    s += (i ? " " : "") + name;
  }
  return s;
}

}  // namespace wildstrat::quant
