#include "wildstrat/orbit.hpp"

#include "wildstrat/errors.hpp"

namespace wildstrat::orbit {

using liecore::ad_matrix_g;
using liecore::ad_matrix_gr;
using liecore::g_from_flat;
using liecore::tc_from_flat;
using liecore::to_flat;

TcElement BirkhoffNormalForm::tau() const {
  TcElement t;
  t.depth = s;
  t.coeffs.assign(normal.coeffs.begin(), normal.coeffs.begin() + s);
  return t;
}

namespace {

void require_birkhoff(const RootDatum& rd, const TcElement& z) {
  if (z.depth >= 1 && !z.coeffs[0].is_zero()) throw ValidationError("gauge must lie in eps g_r");
  (void)rd;
}

std::vector<Vec> common_centralizer(const RootDatum& rd, const std::vector<Vec>& xs) {
  int n = rd.dim_g();
  std::vector<Vec> rows;
  for (const Vec& x : xs) {
    QMatrix m = ad_matrix_g(rd, x);
    for (int i = 0; i < n; ++i) rows.push_back(m.row(i));
  }
  if (rows.empty()) {
    std::vector<Vec> all;
    for (int k = 0; k < n; ++k) all.push_back(unit_vec(n, k));
    return all;
  }
  return nullspace(QMatrix::from_rows(rows, n));
}

Vec coeff_flat(const RootDatum& rd, const TcElement& x, int i) { return to_flat(rd, x.coeffs[i]); }

std::vector<Vec> levi_basis(const RootDatum& rd, const strat::RootSubset& phi) {
  std::vector<Vec> b;
  int n = rd.dim_g();
  for (int k = 0; k < rd.dim_t(); ++k) b.push_back(unit_vec(n, k));
  for (int a : phi.indices()) b.push_back(unit_vec(n, rd.root_basis_index(a)));
  return b;
}

strat::RootSubset vanishing_roots(const RootDatum& rd, const TcElement& x, int upto) {
  strat::RootSubset s(rd.num_roots());
  for (int a = 0; a < rd.num_roots(); ++a) {
    bool zero = true;
    for (int i = 0; i < upto && zero; ++i) zero = dot(rd.root(a).eval, x.coeffs[i].cartan) == 0;
    s.set(a, zero);
  }
  return s;
}

Vec embed(const Vec& g, int deg, int dim_g, int r) {
  Vec out = zero_vec(r * dim_g);
  for (int k = 0; k < dim_g; ++k) out[deg * dim_g + k] = g[k];
  return out;
}

}  // namespace

QMatrix gauge_matrix(const RootDatum& rd, const TcElement& z) {
  require_birkhoff(rd, z);
  int n = z.depth * rd.dim_g();
  QMatrix ad = ad_matrix_gr(rd, z.depth, to_flat(rd, z));
  QMatrix out = QMatrix::identity(n), term = QMatrix::identity(n);
  for (int k = 1; k < z.depth; ++k) {
    term = (ad * term).scaled(Rational(1, k));
    if (term.is_zero()) break;
    out = out + term;
  }
  return out;
}

TcElement apply_gauge(const RootDatum& rd, const TcElement& z, const TcElement& x) {
  if (z.depth != x.depth) throw ValidationError("depth mismatch in gauge action");
  require_birkhoff(rd, z);
  int r = x.depth;
  Vec zf = to_flat(rd, z), term = to_flat(rd, x), out = term;
  for (int k = 1; k < r; ++k) {
    term = liecore::bracket_flat_gr(rd, r, zf, term);
    if (is_zero(term)) break;
    Rational inv(1, k);
    for (auto& c : term) c *= inv;
    out = out + term;
  }
  return tc_from_flat(rd, r, out);
}

TcElement gauge_log_of(const RootDatum& rd, int r, const QMatrix& m) {
  int dg = rd.dim_g(), n = r * dg;
  QMatrix nil = m - QMatrix::identity(n);
  QMatrix log(n, n), power = nil;
  for (int k = 1; !power.is_zero(); ++k) {
    log = log + power.scaled(Rational(k % 2 ? 1 : -1, k));
    power = power * nil;
  }
  std::vector<Vec> cols;
  for (int b = dg; b < n; ++b) cols.push_back(ad_matrix_gr(rd, r, unit_vec(n, b)).flat());
  auto sol = solve(QMatrix::from_columns(cols, n * n), log.flat());
  if (!sol) throw ClaimViolation("gauge logarithm is not an inner derivation");
  Vec z = zero_vec(n);
  for (int b = dg; b < n; ++b) z[b] = (*sol)[b - dg];
  return tc_from_flat(rd, r, z);
}

BirkhoffNormalForm birkhoff_normalize(const RootDatum& rd, const TcElement& x) {
  int r = x.depth, dg = rd.dim_g();
  if (r < 1) throw ValidationError("depth must be at least 1");
  BirkhoffNormalForm out;
  out.normal = x;
  QMatrix total = QMatrix::identity(r * dg);
  std::vector<Vec> leading;
  int s = 0;
  while (s < r) {
    Vec xs = coeff_flat(rd, out.normal, s);
    QMatrix ad = ad_matrix_g(rd, xs);
    if (!liecore::is_semisimple_matrix(ad)) break;
    std::vector<Vec> space = common_centralizer(rd, leading);
    leading.push_back(xs);
    auto split = liecore::semisimple_split(ad, space);
    std::vector<Vec> cols = split.kernel;
    cols.insert(cols.end(), split.image.begin(), split.image.end());
    QMatrix basis = QMatrix::from_columns(cols, dg);
    int nk = static_cast<int>(split.kernel.size());
    for (int i = s + 1; i < r; ++i) {
      auto coords = solve(basis, coeff_flat(rd, out.normal, i));
      if (!coords) throw ClaimViolation("lower coefficient left the common centralizer");
      Vec y = zero_vec(dg);
      for (std::size_t k = 0; k < split.preimage.size(); ++k) axpy(y, (*coords)[nk + k], split.preimage[k]);
      if (is_zero(y)) continue;
      TcElement z = tc_from_flat(rd, r, embed(y, i - s, dg, r));
      out.normal = apply_gauge(rd, z, out.normal);
      total = gauge_matrix(rd, z) * total;
    }
    ++s;
  }
  out.s = s;
  out.gauge_log = gauge_log_of(rd, r, total);
  if (!(apply_gauge(rd, out.gauge_log, x) == out.normal)) throw ClaimViolation("gauge round trip failed");
  return out;
}

int strictness_index(const RootDatum& rd, const TcElement& x) { return birkhoff_normalize(rd, x).s; }

TcElement irregular_type(const RootDatum& rd, const TcElement& x) { return birkhoff_normalize(rd, x).tau(); }

Tuple marking_tuple(const RootDatum& rd, const TcElement& x) {
  Tuple t(x.depth);
  for (int i = 0; i < x.depth; ++i) {
    if (!x.coeffs[i].in_cartan()) throw ValidationError("marking coefficients must lie in t");
    t[x.depth - 1 - i] = x.coeffs[i].cartan;
  }
  (void)rd;
  return t;
}

TcElement from_marking_tuple(const RootDatum& rd, const Tuple& t) {
  int r = static_cast<int>(t.size());
  TcElement x = TcElement::zero(rd, r);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(t[r - 1 - i].size()) != rd.dim_t()) throw ValidationError("tuple entry has wrong length");
    x.coeffs[i] = GElement::from_cartan(t[r - 1 - i]);
  }
  return x;
}

namespace {

bool marking_holds(const RootDatum& rd, const TcElement& x, int s) {
  std::vector<Vec> lead;
  for (int i = 0; i < s; ++i) {
    if (!x.coeffs[i].in_cartan()) return false;
    lead.push_back(coeff_flat(rd, x, i));
  }
  for (int j = s; j < x.depth; ++j)
    for (const Vec& l : lead)
      if (!is_zero(liecore::bracket_flat_g(rd, l, coeff_flat(rd, x, j)))) return false;
  return true;
}

}  // namespace

int marked_index(const RootDatum& rd, const TcElement& x) {
  int s = 0;
  while (s < x.depth && marking_holds(rd, x, s + 1)) ++s;
  return s;
}

CentralizerReport centralizer(const RootDatum& rd, const TcElement& x, int s) {
  int r = x.depth, dg = rd.dim_g();
  if (s < 0) {
    s = marked_index(rd, x);
  } else if (s > r || !marking_holds(rd, x, s)) {
    throw ValidationError("element violates the marking conditions for s = " + std::to_string(s));
  }
  CentralizerReport rep;
  rep.marked_s = s;
  rep.basis = nullspace(ad_matrix_gr(rd, r, to_flat(rd, x)));
  rep.dimension = static_cast<int>(rep.basis.size());
  Tuple lead;
  for (int i = s - 1; i >= 0; --i) lead.push_back(x.coeffs[i].cartan);
  rep.marking = s > 0 ? strat::stratum_of_tuple(rd, lead) : LeviFiltration{};
  rep.structural = s >= r - 1;
  if (!rep.structural) return rep;
  std::vector<Vec> all;
  for (int i = 0; i < r; ++i) all.push_back(coeff_flat(rd, x, i));
  for (const Vec& v : common_centralizer(rd, all)) rep.predicted_basis.push_back(embed(v, 0, dg, r));
  for (int j = 1; j < r; ++j)
    for (const Vec& v : levi_basis(rd, vanishing_roots(rd, x, r - j))) rep.predicted_basis.push_back(embed(v, j, dg, r));
  rep.predicted_dimension = static_cast<int>(rep.predicted_basis.size());
  rep.matches = rep.predicted_dimension == rep.dimension && same_span(rep.basis, rep.predicted_basis);
  return rep;
}

MarkedComparison classify_marked(const RootDatum& rd, const Tuple& x, const Tuple& y) {
  MarkedComparison c;
  c.first = strat::stratum_of_tuple(rd, x);
  c.second = strat::stratum_of_tuple(rd, y);
  c.same = c.first == c.second;
  return c;
}

bool classify_unmarked(const RootDatum& rd, const Tuple& x, const Tuple& y) {
  if (x.size() != y.size()) return false;
  for (const auto& w : rd.weyl_group())
    if (strat::act(rd, w, x) == y) return true;
  return false;
}

QMatrix kks_form(const RootDatum& rd, const parab::ParabolicFiltration& f, const parab::FormalType& lambda) {
  parab::require_admissible(rd, f, lambda);
  auto split = parab::triangular_split(rd, f);
  int r = f.depth(), n = r * rd.dim_g(), dg = rd.dim_g();
  int m = static_cast<int>(split.u_plus.size());
  QMatrix out(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Vec br = liecore::bracket_flat_gr(rd, r, unit_vec(n, split.u_plus[i]), unit_vec(n, split.u_minus[j]));
      Rational v = 0;
      for (int deg = 0; deg < r; ++deg)
        for (int k = 0; k < rd.dim_t(); ++k) v += lambda[deg][k] * br[deg * dg + k];
      out(i, j) = v;
    }
  return out;
}

}  // namespace wildstrat::orbit
