#include "wildstrat/singmod.hpp"

#include <algorithm>
#include <set>

#include "wildstrat/errors.hpp"

namespace wildstrat::singmod {

using liecore::bracket_basis_gr;
using liecore::transpose_basis;

void add_to(MVec& v, const Mono& m, const Rational& c) {
  if (c == 0) return;
  auto it = v.find(m);
  if (it == v.end()) {
    v.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second == 0) v.erase(it);
}

MVec scaled(const MVec& v, const Rational& c) {
  MVec out;
  if (c == 0) return out;
  for (const auto& [m, x] : v) out.emplace(m, x * c);
  return out;
}

InducedModule::InducedModule(const RootDatum& rd, int r, std::vector<int> letters, Character chi)
    : rd_(&rd), r_(r), letters_(std::move(letters)) {
  int n = r * rd.dim_g();
  pos_.assign(n, -1);
  for (std::size_t p = 0; p < letters_.size(); ++p) {
    if (letters_[p] < 0 || letters_[p] >= n || pos_[letters_[p]] >= 0) throw ValidationError("bad letter list");
    pos_[letters_[p]] = static_cast<int>(p);
  }
  chi_.assign(n, Rational(0));
  for (int b = 0; b < n; ++b)
    if (pos_[b] < 0) chi_[b] = chi(b);
}

MVec InducedModule::act_basis(int b, const Mono& m) const {
  std::pair<int, Mono> key{b, m};
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  MVec out;
  int p = pos_[b];
  if (m.empty()) {
    if (p >= 0)
      out.emplace(Mono{p}, Rational(1));
    else if (chi_[b] != 0)
      out.emplace(Mono{}, chi_[b]);
  } else if (p >= 0 && p <= m[0]) {
    Mono n;
    n.reserve(m.size() + 1);
    n.push_back(p);
    n.insert(n.end(), m.begin(), m.end());
    out.emplace(std::move(n), Rational(1));
  } else {
    int x = m[0];
    Mono rest(m.begin() + 1, m.end());
    for (const auto& [mm, c] : act_basis(b, rest))
      for (const auto& [m2, c2] : act_basis(letters_[x], mm)) add_to(out, m2, c * c2);
    for (const auto& [k, c] : bracket_basis_gr(*rd_, r_, b, letters_[x]))
      for (const auto& [m2, c2] : act_basis(k, rest)) add_to(out, m2, c * c2);
  }
  std::lock_guard<std::mutex> lock(mu_);
  memo_.emplace(std::move(key), out);
  return out;
}

MVec InducedModule::act(int b, const MVec& v) const {
  MVec out;
  for (const auto& [m, c] : v)
    for (const auto& [m2, c2] : act_basis(b, m)) add_to(out, m2, c * c2);
  return out;
}

MVec InducedModule::act(const Vec& g, const MVec& v) const {
  MVec out;
  for (std::size_t b = 0; b < g.size(); ++b) {
    if (g[b] == 0) continue;
    for (const auto& [m, c] : act(static_cast<int>(b), v)) add_to(out, m, g[b] * c);
  }
  return out;
}

MVec InducedModule::act_word(const std::vector<int>& flats, const MVec& v) const {
  MVec out = v;
  for (auto it = flats.rbegin(); it != flats.rend(); ++it) out = act(*it, out);
  return out;
}

namespace {

std::vector<int> add_vec(std::vector<int> a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

}  // namespace

SingularityModule::SingularityModule(const RootDatum& rd, ParabolicFiltration f, FormalType lambda,
                                     const Rational& scale)
    : rd_(&rd), f_(std::move(f)), lambda_(std::move(lambda)), scale_(scale) {
  parab::require_admissible(rd, f_, lambda_);
  int r = f_.depth(), dg = rd.dim_g();
  auto phi = parab::lf(rd, f_);
  const auto& psi0 = f_.psi[0];
  for (int a = 0; a < rd.num_roots(); ++a) {
    if (!psi0.test(a) || phi.phi[0].test(a)) continue;
    int d = r;
    for (int i = 0; i < r; ++i)
      if (phi.phi[i].test(a)) {
        d = i;
        break;
      }
    d_[a] = d;
  }
  // A Borel w(Phi+) inside psi_0 gives the functional height(w^{-1} .), positive on nu_0.
  for (const auto& w : rd.weyl_group()) {
    bool inside = true;
    for (int a = 0; a < rd.num_roots() && inside; ++a)
      if (rd.root(a).positive) inside = psi0.test(w.perm[a]);
    if (!inside) continue;
    std::vector<int> inv(rd.num_roots());
    for (int a = 0; a < rd.num_roots(); ++a) inv[w.perm[a]] = a;
    for (int s : rd.simple_roots()) positive_.push_back(rd.root(inv[s]).height);
    break;
  }
  if (positive_.empty()) throw ValidationError("nu_0 does not span a pointed cone");
  for (const auto& [a, d] : d_) {
    (void)d;
    nu0_.push_back(a);
  }
  std::vector<int> heights(rd.num_roots(), 0);
  for (int a : nu0_) {
    int h = 0;
    for (const auto& dec : decompositions(rd.root(a).simple)) {
      int len = 0;
      for (int x : dec) len += x;
      h = std::max(h, len);
    }
    heights[a] = h;
  }
  std::stable_sort(nu0_.begin(), nu0_.end(), [&](int a, int b) { return heights[a] < heights[b]; });
  for (int a : nu0_)
    for (int i = 0; i < d_[a]; ++i) gens_.push_back({a, i, i * dg + rd.root_basis_index(rd.root(a).neg)});
  std::vector<int> letters;
  for (const auto& g : gens_) letters.push_back(g.flat);
  Rational sc = scale_;
  FormalType lam = lambda_;
  int dt = rd.dim_t();
  mod_ = std::make_unique<InducedModule>(rd, r, letters, [lam, sc, dg, dt](int flat) {
    int deg = flat / dg, b = flat % dg;
    if (b >= dt || deg >= static_cast<int>(lam.size())) return Rational(0);
    return Rational(sc * lam[deg][b]);
  });
}

std::vector<int> SingularityModule::weight(const Mono& m) const {
  std::vector<int> mu(rd_->rank(), 0);
  for (int p : m) mu = add_vec(mu, rd_->root(gens_[p].root).simple);
  return mu;
}

int SingularityModule::functional(const std::vector<int>& mu) const {
  int s = 0;
  for (std::size_t i = 0; i < mu.size(); ++i) s += positive_[i] * mu[i];
  return s;
}

std::vector<std::vector<int>> SingularityModule::decompositions(const std::vector<int>& mu) const {
  std::vector<std::vector<int>> out;
  std::vector<int> f(nu0_.size(), 0);
  std::function<void(std::size_t, std::vector<int>)> rec = [&](std::size_t j, std::vector<int> rem) {
    if (j == nu0_.size()) {
      if (std::all_of(rem.begin(), rem.end(), [](int x) { return x == 0; })) out.push_back(f);
      return;
    }
    const auto& a = rd_->root(nu0_[j]).simple;
    int ga = functional(a);
    int most = functional(rem) / ga;
    for (int k = 0; k <= most; ++k) {
      f[j] = k;
      rec(j + 1, rem);
      for (std::size_t i = 0; i < rem.size(); ++i) rem[i] -= a[i];
    }
    f[j] = 0;
  };
  if (functional(mu) >= 0) rec(0, mu);
  std::sort(out.begin(), out.end());
  return out;
}

WeightIndex SingularityModule::weight_index(const std::vector<int>& mu) const {
  WeightIndex w;
  w.mu = mu;
  w.dec = decompositions(mu);
  for (const auto& f : w.dec) {
    int len = 0;
    for (int x : f) len += x;
    w.height = std::max(w.height, len);
  }
  w.indecomposable = w.height == 1;
  return w;
}

std::vector<WeightSpace> SingularityModule::weight_spaces(int K) const {
  if (K < 0) throw ValidationError("height bound must be nonnegative");
  std::map<std::vector<int>, std::vector<Mono>> groups;
  Mono cur;
  int g = static_cast<int>(gens_.size());
  std::function<void(int)> rec = [&](int start) {
    groups[weight(cur)].push_back(cur);
    if (static_cast<int>(cur.size()) == K) return;
    for (int p = start; p < g; ++p) {
      cur.push_back(p);
      rec(p);
      cur.pop_back();
    }
  };
  rec(0);
  std::vector<WeightSpace> out;
  for (auto& [mu, monos] : groups) {
    WeightIndex idx = weight_index(mu);
    if (idx.height > K) continue;
    std::sort(monos.begin(), monos.end(), [](const Mono& a, const Mono& b) {
      if (a.size() != b.size()) return a.size() > b.size();
      return a < b;
    });
    out.push_back({idx, monos});
  }
  std::sort(out.begin(), out.end(), [this](const WeightSpace& a, const WeightSpace& b) {
    if (a.index.height != b.index.height) return a.index.height < b.index.height;
    int fa = functional(a.index.mu), fb = functional(b.index.mu);
    if (fa != fb) return fa < fb;
    return a.index.mu < b.index.mu;
  });
  return out;
}

std::vector<WeightSpace> SingularityModule::weight_spaces_within(int k) const {
  if (k < 0) throw ValidationError("length bound must be nonnegative");
  std::set<std::vector<int>> weights;
  std::vector<int> zero(rd_->rank(), 0);
  std::set<std::vector<int>> layer{zero};
  for (int step = 0; step < k; ++step) {
    std::set<std::vector<int>> next;
    for (const auto& mu : layer)
      for (int a : nu0_) next.insert(add_vec(mu, rd_->root(a).simple));
    weights.insert(next.begin(), next.end());
    layer = std::move(next);
  }
  int g = static_cast<int>(gens_.size());
  std::vector<WeightSpace> out;
  for (const auto& mu : weights) {
    std::vector<Mono> monos;
    Mono cur;
    std::function<void(int, std::vector<int>)> rec = [&](int start, std::vector<int> rem) {
      int fr = functional(rem);
      if (fr == 0) {
        if (rem == zero) monos.push_back(cur);
        return;
      }
      for (int p = start; p < g; ++p) {
        const auto& a = rd_->root(gens_[p].root).simple;
        std::vector<int> next = rem;
        for (std::size_t i = 0; i < next.size(); ++i) next[i] -= a[i];
        if (functional(next) < 0) continue;
        cur.push_back(p);
        rec(p, std::move(next));
        cur.pop_back();
      }
    };
    rec(0, mu);
    std::sort(monos.begin(), monos.end(), [](const Mono& a, const Mono& b) {
      if (a.size() != b.size()) return a.size() > b.size();
      return a < b;
    });
    out.push_back({weight_index(mu), std::move(monos)});
  }
  std::sort(out.begin(), out.end(), [this](const WeightSpace& a, const WeightSpace& b) {
    if (a.index.height != b.index.height) return a.index.height < b.index.height;
    int fa = functional(a.index.mu), fb = functional(b.index.mu);
    if (fa != fb) return fa < fb;
    return a.index.mu < b.index.mu;
  });
  return out;
}

SingularityModule opposite(const SingularityModule& m) {
  ParabolicFiltration f;
  for (const auto& p : m.filtration().psi) f.psi.push_back(strat::negated(m.root_datum(), p));
  FormalType lam = m.lambda();
  for (auto& l : lam)
    for (auto& x : l) x = -x;
  return SingularityModule(m.root_datum(), f, lam, m.scale());
}

Rational shapovalov_entry(const SingularityModule& m, const Mono& y, const Mono& x) {
  const auto& mod = m.module();
  MVec v{{x, Rational(1)}};
  for (int p : y) {
    v = mod.act(transpose_basis(m.root_datum(), mod.letters()[p]), v);
    if (v.empty()) return 0;
  }
  auto it = v.find(Mono{});
  return it == v.end() ? Rational(0) : it->second;
}

Rational shapovalov_pair(const SingularityModule& m, const MVec& a, const MVec& b) {
  Rational s = 0;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) s += ca * cb * shapovalov_entry(m, ma, mb);
  return s;
}

ShapovalovBlock shapovalov_block(const SingularityModule& m, const WeightSpace& ws) {
  int n = static_cast<int>(ws.basis.size());
  ShapovalovBlock b{ws.index, ws.basis, QMatrix(n, n)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b.matrix(i, j) = shapovalov_entry(m, ws.basis[i], ws.basis[j]);
  return b;
}

PolyMatrix PolyMatrix::identity(int size) {
  PolyMatrix p(size);
  for (int i = 0; i < size; ++i) p(i, i) = CPoly(1);
  return p;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  PolyMatrix p(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const CPoly& x = (*this)(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < n; ++j)
        if (!o(k, j).is_zero()) p(i, j) += x * o(k, j);
    }
  return p;
}

CPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  CPoly out;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    if (ys[j] == 0) continue;
    CPoly term(ys[j]);
    for (std::size_t m = 0; m < xs.size(); ++m) {
      if (m == j) continue;
      term *= (CPoly::var() - CPoly(xs[m]));
      term *= Rational(1) / (xs[j] - xs[m]);
    }
    out += term;
  }
  return out;
}

std::vector<Vec> dual_generators(const SingularityModule& m) {
  const auto& rd = m.root_datum();
  int r = m.depth(), dg = rd.dim_g();
  std::vector<Vec> out;
  for (int a : m.nu0()) {
    int d = m.d(a);
    QMatrix g(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (i + j < r) g(i, j) = rd.coroot_pairing(m.lambda()[i + j], a);
    auto inv = inverse(g);
    if (!inv) throw ValidationError("character is singular: no dual basis of u+");
    for (int i = 0; i < d; ++i) {
      Vec y = zero_vec(r * dg);
      for (int k = 0; k < d; ++k) y[k * dg + rd.root_basis_index(a)] = -(*inv)(i, k);
      out.push_back(y);
    }
  }
  return out;
}

Rational dual_entry(const SingularityModule& m, const std::vector<Vec>& dual, const Mono& y, const Mono& x) {
  const auto& mod = m.module();
  MVec v{{x, Rational(1)}};
  for (int p : y) {
    v = mod.act(dual[p], v);
    if (v.empty()) return 0;
  }
  auto it = v.find(Mono{});
  Rational c = it == v.end() ? Rational(0) : it->second;
  return y.size() % 2 ? Rational(-c) : c;
}

DilatedBlock dilated_block(const RootDatum& rd, const ParabolicFiltration& f, const FormalType& lambda,
                           const WeightSpace& ws) {
  return dilated_blocks(rd, f, lambda, {ws}).front();
}

std::vector<DilatedBlock> dilated_blocks(const RootDatum& rd, const ParabolicFiltration& f, const FormalType& lambda,
                                         const std::vector<WeightSpace>& spaces) {
  std::size_t maxlen = 0;
  for (const auto& ws : spaces)
    for (const auto& m : ws.basis) maxlen = std::max(maxlen, m.size());
  std::vector<std::unique_ptr<SingularityModule>> mods;
  std::vector<std::vector<Vec>> duals;
  for (std::size_t c = 1; c <= maxlen + 1; ++c) {
    mods.push_back(std::make_unique<SingularityModule>(rd, f, lambda, Rational(static_cast<long>(c))));
    duals.push_back(dual_generators(*mods.back()));
  }
  std::vector<DilatedBlock> out;
  for (const auto& ws : spaces) {
    int n = static_cast<int>(ws.basis.size());
    std::size_t len = 0;
    for (const auto& m : ws.basis) len = std::max(len, m.size());
    std::vector<Rational> xs;
    for (std::size_t c = 1; c <= len + 1; ++c) xs.emplace_back(static_cast<long>(c));
    DilatedBlock b{ws.index, ws.basis, PolyMatrix(n)};
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::vector<Rational> ys;
        for (std::size_t c = 0; c < xs.size(); ++c) ys.push_back(dual_entry(*mods[c], duals[c], ws.basis[i], ws.basis[j]));
        b.matrix(i, j) = interpolate(xs, ys);
      }
    out.push_back(std::move(b));
  }
  return out;
}

int multiplicity_factorial(const Mono& m) {
  int out = 1, run = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    run = (i > 0 && m[i] == m[i - 1]) ? run + 1 : 1;
    out *= run;
  }
  return out;
}

Factorisation factorize_block(const DilatedBlock& b) {
  int n = b.matrix.n;
  Factorisation out;
  for (const auto& m : b.basis) {
    out.lengths.push_back(static_cast<int>(m.size()));
    out.leading.emplace_back(multiplicity_factorial(m));
  }
  for (int i = 0; i + 1 < n; ++i)
    if (out.lengths[i] < out.lengths[i + 1]) throw ValidationError("basis must have nonincreasing lengths");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const CPoly& e = b.matrix(i, j);
      int li = out.lengths[i], lj = out.lengths[j];
      if (!e.is_zero() && (e.low_degree() < 0 || e.degree() > std::min(li, lj)))
        throw ClaimViolation("Shapovalov entry exceeds the degree bound min(k, l)");
      if (i == j && e.coeff(li) != out.leading[i])
        throw ClaimViolation("diagonal leading coefficient differs from the product of factorials");
      if (i != j && li == lj && !e.is_zero() && e.degree() >= li)
        throw ClaimViolation("off-diagonal entry does not drop degree");
    }
  out.D = PolyMatrix(n);
  PolyMatrix dinv_a(n);
  out.C = PolyMatrix(n);
  QMatrix cconst(n, n);
  for (int i = 0; i < n; ++i) {
    out.D(i, i) = CPoly::monomial(out.leading[i], out.lengths[i]);
    Rational inv = Rational(1) / out.leading[i];
    for (int j = 0; j < n; ++j) {
      dinv_a(i, j) = (inv * b.matrix(i, j)).shifted(-out.lengths[i]);
      cconst(i, j) = dinv_a(i, j).constant();
      out.C(i, j) = CPoly(cconst(i, j));
    }
  }
  auto cinv = inverse(cconst);
  if (!cinv) throw ClaimViolation("constant part is not unipotent");
  PolyMatrix ci(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ci(i, j) = CPoly((*cinv)(i, j));
  out.Q = ci * dinv_a;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (cconst(i, j) != (i == j ? 1 : 0) && j >= i) throw ClaimViolation("constant part is not unipotent lower triangular");
      CPoly q = out.Q(i, j) - CPoly(i == j ? 1 : 0);
      if (!q.is_zero() && q.degree() >= 0) throw ClaimViolation("Q - Id has nonnegative powers of c");
    }
  if (!(out.D * out.C * out.Q == b.matrix)) throw ClaimViolation("D C Q does not reproduce the block");
  return out;
}

std::vector<Vec> radical(const ShapovalovBlock& b) { return nullspace(b.matrix); }

RadicalProfile maximal_submodule_profile(const SingularityModule& m, int K) {
  RadicalProfile p;
  for (const auto& ws : m.weight_spaces(K)) {
    int dim = static_cast<int>(radical(shapovalov_block(m, ws)).size());
    p.dims.emplace_back(ws.index, dim);
    if (dim > 0) p.simple = false;
  }
  return p;
}

bool is_simple_up_to(const SingularityModule& m, int K) { return maximal_submodule_profile(m, K).simple; }

ConjectureReport conjecture_probe(const SingularityModule& m, int K) {
  const auto& rd = m.root_datum();
  ConjectureReport rep;
  rep.K = K;
  rep.cond1_nonsingular = parab::is_nonsingular(rd, m.filtration(), m.lambda());
  rep.cond2_alcove = true;
  for (int a : m.nu0()) {
    if (m.d(a) != 1 || m.depth() < 2) continue;
    Rational v = rd.coroot_pairing(m.lambda()[0], a);
    if (v.get_den() == 1 && v > 0) rep.cond2_alcove = false;
  }
  rep.observed_simple = is_simple_up_to(m, K);
  bool predicted = rep.cond1_nonsingular && rep.cond2_alcove;
  rep.verdict = predicted == rep.observed_simple ? "consistent up to K=" + std::to_string(K)
                                                 : "disagreement up to K=" + std::to_string(K);
  return rep;
}

bool truncated_quotient_proper(const RootDatum& rd, const ParabolicFiltration& f, const FormalType& lambda, int k) {
  int r = f.depth();
  if (k < 1 || k > r - 1) throw ValidationError("truncation index must lie in 1..r-1");
  parab::require_admissible(rd, f, lambda);
  for (int i = k; i < r; ++i)
    for (int a = 0; a < rd.num_roots(); ++a)
      if (rd.coroot_pairing(lambda[i], a) != 0) return false;
  return true;
}

bool truncated_quotient_proper_by_saturation(const SingularityModule& m, int k, int K) {
  const auto& rd = m.root_datum();
  const auto& mod = m.module();
  int r = m.depth(), dg = rd.dim_g();
  if (k < 1 || k > r - 1) throw ValidationError("truncation index must lie in 1..r-1");
  auto spaces = m.weight_spaces(K);
  std::map<std::vector<int>, std::map<Mono, int>> coords;
  for (const auto& ws : spaces) {
    auto& c = coords[ws.index.mu];
    for (std::size_t i = 0; i < ws.basis.size(); ++i) c[ws.basis[i]] = static_cast<int>(i);
  }
  std::map<std::vector<int>, std::vector<Vec>> spans;
  std::vector<MVec> queue;
  auto consider = [&](const MVec& v) {
    if (v.empty()) return;
    auto mu = m.weight(v.begin()->first);
    auto it = coords.find(mu);
    if (it == coords.end()) return;
    Vec x = zero_vec(static_cast<int>(it->second.size()));
    for (const auto& [mono, c] : v) x[it->second.at(mono)] = c;
    auto& span = spans[mu];
    if (in_span(span, x)) return;
    span.push_back(x);
    queue.push_back(v);
  };
  for (int b = k * dg; b < r * dg; ++b) consider(mod.act_basis(b, Mono{}));
  while (!queue.empty()) {
    MVec v = queue.back();
    queue.pop_back();
    for (int b = 0; b < r * dg; ++b) consider(mod.act(b, v));
  }
  return spans[std::vector<int>(rd.rank(), 0)].empty();
}

MVec theta_image(const SingularityModule& minus, const Mono& x) {
  const auto& rd = minus.root_datum();
  const auto& mod = minus.module();
  MVec v = InducedModule::unit();
  // theta(x_1 ... x_k) = (-1)^k t x_1 ... t x_k, and t x_k acts first.
  for (auto it = x.rbegin(); it != x.rend(); ++it) {
    int letter = minus.generators()[*it].flat;  // E_alpha eps^i, the transpose of the plus letter
    v = mod.act(letter, v);
  }
  (void)rd;
  return x.size() % 2 ? scaled(v, -1) : v;
}

Rational nonsymmetric_entry(const SingularityModule& minus, const SingularityModule& plus, const Mono& y,
                            const Mono& x) {
  const auto& mod = plus.module();
  MVec v{{x, Rational(1)}};
  for (int p : y) {
    v = mod.act(minus.generators()[p].flat, v);
    if (v.empty()) return 0;
  }
  auto it = v.find(Mono{});
  Rational c = it == v.end() ? Rational(0) : it->second;
  return y.size() % 2 ? Rational(-c) : c;
}

Rational nonsymmetric_pair(const SingularityModule& minus, const SingularityModule& plus, const MVec& a,
                           const MVec& b) {
  Rational s = 0;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) s += ca * cb * nonsymmetric_entry(minus, plus, ma, mb);
  return s;
}

QMatrix nonsymmetric_block(const SingularityModule& minus, const SingularityModule& plus, const WeightSpace& ws) {
  int n = static_cast<int>(ws.basis.size());
  QMatrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = nonsymmetric_entry(minus, plus, ws.basis[i], ws.basis[j]);
  return out;
}

}  // namespace wildstrat::singmod
