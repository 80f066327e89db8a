#include "wildstrat/strat.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "wildstrat/errors.hpp"
#include "wildstrat/linalg.hpp"

namespace wildstrat::strat {

RootSubset RootSubset::full(int n) {
  RootSubset s(n);
  for (int a = 0; a < n; ++a) s.set(a);
  return s;
}

RootSubset RootSubset::from_indices(int n, const std::vector<int>& idx) {
  RootSubset s(n);
  for (int a : idx) {
    if (a < 0 || a >= n) throw ValidationError("root index out of range: " + std::to_string(a));
    s.set(a);
  }
  return s;
}

int RootSubset::count() const { return static_cast<int>(std::count(bits_.begin(), bits_.end(), true)); }

std::vector<int> RootSubset::indices() const {
  std::vector<int> out;
  for (int a = 0; a < universe(); ++a)
    if (bits_[a]) out.push_back(a);
  return out;
}

std::string RootSubset::bitmask() const {
  std::string s;
  for (bool b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

bool RootSubset::subset_of(const RootSubset& o) const {
  for (int a = 0; a < universe(); ++a)
    if (bits_[a] && !o.bits_[a]) return false;
  return true;
}

RootSubset RootSubset::operator|(const RootSubset& o) const {
  RootSubset r = *this;
  for (int a = 0; a < universe(); ++a) r.bits_[a] = bits_[a] || o.bits_[a];
  return r;
}

RootSubset RootSubset::operator&(const RootSubset& o) const {
  RootSubset r = *this;
  for (int a = 0; a < universe(); ++a) r.bits_[a] = bits_[a] && o.bits_[a];
  return r;
}

RootSubset RootSubset::minus(const RootSubset& o) const {
  RootSubset r = *this;
  for (int a = 0; a < universe(); ++a) r.bits_[a] = bits_[a] && !o.bits_[a];
  return r;
}

RootSubset negated(const RootDatum& rd, const RootSubset& s) {
  RootSubset r(s.universe());
  for (int a : s.indices()) r.set(rd.root(a).neg);
  return r;
}

RootSubset act(const RootDatum& rd, const WeylElement& w, const RootSubset& s) {
  (void)rd;
  RootSubset r(s.universe());
  for (int a : s.indices()) r.set(w.perm[a]);
  return r;
}

namespace {

std::string root_label(const RootDatum& rd, int a) {
  if (rd.matrix_type()) {
    auto [i, j] = rd.matrix_unit(a);
    return "a" + std::to_string(i + 1) + std::to_string(j + 1);
  }
  std::string s = rd.root(a).positive ? "+" : "-";
  for (int c : rd.root(a).simple) s += std::to_string(c < 0 ? -c : c);
  return s;
}

Vec simple_coords(const RootDatum& rd, int a) {
  Vec v;
  for (int c : rd.root(a).simple) v.emplace_back(c);
  return v;
}

Vec point_from_kernel(const std::vector<Vec>& k, int dim, const Rational& t) {
  Vec x = zero_vec(dim);
  Rational p = 1;
  for (const auto& v : k) {
    axpy(x, p, v);
    p *= t;
  }
  return x;
}

}  // namespace

std::string describe(const RootDatum& rd, const RootSubset& s) {
  if (s.empty()) return "{}";
  if (s.count() == rd.num_roots()) return "Phi";
  std::string out = "{";
  bool first = true;
  for (int a : s.indices()) {
    if (!first) out += ",";
    first = false;
    out += root_label(rd, a);
  }
  return out + "}";
}

std::vector<Vec> kernel_basis(const RootDatum& rd, const RootSubset& phi) {
  std::vector<Vec> rows;
  for (int a : phi.indices()) rows.push_back(rd.root(a).eval);
  if (rows.empty()) {
    std::vector<Vec> basis;
    for (int k = 0; k < rd.dim_t(); ++k) basis.push_back(unit_vec(rd.dim_t(), k));
    return basis;
  }
  return nullspace(QMatrix::from_rows(rows, rd.dim_t()));
}

RootSubset span_closure(const RootDatum& rd, const RootSubset& phi) {
  std::vector<Vec> gens;
  for (int a : phi.indices()) gens.push_back(simple_coords(rd, a));
  std::vector<Vec> basis;
  for (int k : independent_subset(gens)) basis.push_back(gens[k]);
  RootSubset out(rd.num_roots());
  for (int a = 0; a < rd.num_roots(); ++a)
    if (phi.test(a) || (!basis.empty() && in_span(basis, simple_coords(rd, a)))) out.set(a);
  return out;
}

bool is_levi(const RootDatum& rd, const RootSubset& phi) { return span_closure(rd, phi) == phi; }

bool is_levi_by_kernel(const RootDatum& rd, const RootSubset& phi) {
  auto k = kernel_basis(rd, phi);
  for (int a = 0; a < rd.num_roots(); ++a) {
    bool vanishes = true;
    for (const auto& v : k)
      if (rd.eval(a, v) != 0) {
        vanishes = false;
        break;
      }
    if (vanishes != phi.test(a)) return false;
  }
  return true;
}

RootSubset levi_of_point(const RootDatum& rd, const Vec& x) {
  RootSubset s(rd.num_roots());
  for (int a = 0; a < rd.num_roots(); ++a)
    if (rd.eval(a, x) == 0) s.set(a);
  return s;
}

namespace {

std::optional<Vec> witness_from(const RootDatum& rd, const RootSubset& phi, int t0) {
  auto k = kernel_basis(rd, phi);
  int limit = rd.num_roots() * std::max<int>(1, static_cast<int>(k.size())) + 2;
  for (int t = t0; t <= t0 + limit; ++t) {
    Vec x = point_from_kernel(k, rd.dim_t(), t);
    if (levi_of_point(rd, x) == phi) return x;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Vec> levi_witness(const RootDatum& rd, const RootSubset& phi) { return witness_from(rd, phi, 1); }

std::vector<RootSubset> enumerate_levi(const RootDatum& rd) {
  int n = rd.rank();
  std::set<RootSubset> found;
  for (int mask = 0; mask < (1 << n); ++mask) {
    RootSubset std_levi(rd.num_roots());
    for (int a = 0; a < rd.num_roots(); ++a) {
      bool inside = true;
      for (int i = 0; i < n; ++i)
        if (rd.root(a).simple[i] != 0 && !(mask & (1 << i))) inside = false;
      if (inside) std_levi.set(a);
    }
    for (const auto& w : rd.weyl_group()) found.insert(act(rd, w, std_levi));
  }
  std::vector<RootSubset> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](const RootSubset& x, const RootSubset& y) {
    if (x.count() != y.count()) return x.count() < y.count();
    return y < x;
  });
  return out;
}

std::vector<RootSubset> enumerate_levi_bruteforce(const RootDatum& rd) {
  int nr = rd.num_roots();
  if (nr > 20) throw ValidationError("brute-force Levi enumeration limited to 20 roots");
  std::vector<RootSubset> out;
  for (long mask = 0; mask < (1L << nr); ++mask) {
    RootSubset s(nr);
    for (int a = 0; a < nr; ++a)
      if (mask & (1L << a)) s.set(a);
    if (is_levi(rd, s)) out.push_back(s);
  }
  return out;
}

bool LeviPoset::leq(int a, int b) const { return nodes[b].subset_of(nodes[a]); }

std::string LeviPoset::to_dot(const RootDatum& rd) const {
  std::ostringstream os;
  os << "digraph levi_poset {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < nodes.size(); ++i)
    os << "  n" << i << " [label=\"" << describe(rd, nodes[i]) << "\\n" << nodes[i].bitmask() << " rank " << rank[i]
       << "\"];\n";
  for (const auto& [u, l] : covers) os << "  n" << l << " -> n" << u << ";\n";
  os << "}\n";
  return os.str();
}

LeviPoset levi_poset(const RootDatum& rd) {
  LeviPoset p;
  p.nodes = enumerate_levi(rd);
  for (const auto& s : p.nodes) p.rank.push_back(static_cast<int>(kernel_basis(rd, s).size()));
  int n = static_cast<int>(p.nodes.size());
  for (int u = 0; u < n; ++u)
    for (int l = 0; l < n; ++l) {
      if (u == l || !p.nodes[u].subset_of(p.nodes[l])) continue;
      bool cover = true;
      for (int m = 0; m < n && cover; ++m)
        if (m != u && m != l && p.nodes[u].subset_of(p.nodes[m]) && p.nodes[m].subset_of(p.nodes[l])) cover = false;
      if (cover) p.covers.emplace_back(u, l);
    }
  return p;
}

const RootSubset& LeviFiltration::term(int i, const RootDatum& rd) const {
  static thread_local RootSubset full_cache;
  if (i < depth()) return phi[i];
  full_cache = RootSubset::full(rd.num_roots());
  return full_cache;
}

bool is_levi_filtration(const RootDatum& rd, const LeviFiltration& f) {
  for (int i = 0; i < f.depth(); ++i) {
    if (f.phi[i].universe() != rd.num_roots() || !is_levi(rd, f.phi[i])) return false;
    if (i > 0 && !f.phi[i - 1].subset_of(f.phi[i])) return false;
  }
  return true;
}

std::vector<int> level_profile(const LeviFiltration& f) {
  int n = f.phi.empty() ? 0 : f.phi[0].universe();
  std::vector<int> d(n, f.depth());
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < f.depth(); ++i)
      if (f.phi[i].test(a)) {
        d[a] = i;
        break;
      }
  return d;
}

bool filtration_leq(const LeviFiltration& a, const LeviFiltration& b) {
  if (a.depth() != b.depth()) return false;
  for (int i = 0; i < a.depth(); ++i)
    if (!b.phi[i].subset_of(a.phi[i])) return false;
  return true;
}

LeviFiltration act(const RootDatum& rd, const WeylElement& w, const LeviFiltration& f) {
  LeviFiltration g;
  for (const auto& s : f.phi) g.phi.push_back(act(rd, w, s));
  return g;
}

std::string describe(const RootDatum& rd, const LeviFiltration& f) {
  std::string out = "(";
  for (int i = 0; i < f.depth(); ++i) {
    if (i) out += ", ";
    out += describe(rd, f.phi[i]);
  }
  return out + ")";
}

LeviFiltration stratum_of_tuple(const RootDatum& rd, const Tuple& x) {
  if (x.empty()) throw ValidationError("stratum_of_tuple needs s >= 1");
  int s = static_cast<int>(x.size());
  LeviFiltration f;
  f.phi.assign(s, RootSubset(rd.num_roots()));
  RootSubset acc = RootSubset::full(rd.num_roots());
  for (int i = s - 1; i >= 0; --i) {
    if (static_cast<int>(x[i].size()) != rd.dim_t()) throw ValidationError("tuple entry has wrong dimension");
    acc = acc & levi_of_point(rd, x[i]);
    f.phi[i] = acc;
  }
  return f;
}

bool in_stratum(const RootDatum& rd, const LeviFiltration& f, const Tuple& x) {
  if (static_cast<int>(x.size()) != f.depth()) return false;
  for (int i = 0; i < f.depth(); ++i) {
    const RootSubset& next = f.term(i + 1, rd);
    RootSubset cur = f.phi[i];
    for (int a = 0; a < rd.num_roots(); ++a) {
      Rational v = rd.eval(a, x[i]);
      if (cur.test(a) && v != 0) return false;
      if (!cur.test(a) && next.test(a) && v == 0) return false;
    }
  }
  return true;
}

Tuple stratum_witness(const RootDatum& rd, const LeviFiltration& f) {
  Tuple x;
  for (const auto& s : f.phi) {
    auto w = levi_witness(rd, s);
    if (!w) throw ValidationError("filtration term is not a Levi subsystem");
    x.push_back(*w);
  }
  return x;
}

Tuple act(const RootDatum& rd, const WeylElement& w, const Tuple& x) {
  Tuple y;
  for (const auto& v : x) y.push_back(rd.act_t(w, v));
  return y;
}

Stratum make_stratum(const RootDatum& rd, const LeviFiltration& f) {
  Stratum st;
  st.filtration = f;
  for (const auto& s : f.phi) {
    st.kernels.push_back(kernel_basis(rd, s));
    st.dimension += static_cast<int>(st.kernels.back().size());
  }
  return st;
}

std::vector<LeviFiltration> enumerate_filtrations(const RootDatum& rd, int s) {
  if (s < 1) throw ValidationError("filtration depth must be >= 1");
  auto levis = enumerate_levi(rd);
  std::vector<LeviFiltration> out;
  LeviFiltration cur;
  std::function<void()> rec = [&]() {
    if (cur.depth() == s) {
      out.push_back(cur);
      return;
    }
    for (const auto& l : levis) {
      if (!cur.phi.empty() && !cur.phi.back().subset_of(l)) continue;
      cur.phi.push_back(l);
      rec();
      cur.phi.pop_back();
    }
  };
  rec();
  return out;
}

long long filtration_bound(const RootDatum& rd, int s) {
  long long b = static_cast<long long>(rd.weyl_group().size());
  for (int i = 0; i < rd.rank(); ++i) b *= (s + 1);
  return b;
}

WeylQuotient weyl_orbits_and_quotient(const RootDatum& rd, const std::vector<LeviFiltration>& family) {
  WeylQuotient q;
  std::map<LeviFiltration, int> index;
  for (std::size_t i = 0; i < family.size(); ++i) index[family[i]] = static_cast<int>(i);
  std::vector<int> cls(family.size(), -1);
  const auto& W = rd.weyl_group();
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (cls[i] >= 0) continue;
    QuotientClass c;
    c.representative = static_cast<int>(i);
    std::set<int> members;
    for (const auto& w : W) {
      auto it = index.find(act(rd, w, family[i]));
      if (it != index.end()) members.insert(it->second);
    }
    for (int m : members) cls[m] = static_cast<int>(q.classes.size());
    c.members.assign(members.begin(), members.end());
    const LeviFiltration& f = family[i];
    auto ker0 = f.depth() ? kernel_basis(rd, f.phi[0]) : std::vector<Vec>{};
    Tuple sample = stratum_witness(rd, f);
    Tuple sample2;
    for (const auto& t : f.phi) sample2.push_back(*witness_from(rd, t, 5));
    for (const auto& w : W) {
      bool setwise = act(rd, w, f) == f;
      if (!setwise) continue;
      ++c.setwise_order;
      bool pointwise = true;
      for (const auto& v : ker0)
        if (rd.act_t(w, v) != v) pointwise = false;
      if (pointwise) ++c.pointwise_order;
      if (!pointwise && (act(rd, w, sample) == sample || act(rd, w, sample2) == sample2)) c.free_on_samples = false;
    }
    c.out_order = c.pointwise_order ? c.setwise_order / c.pointwise_order : 0;
    q.classes.push_back(std::move(c));
  }
  int nc = static_cast<int>(q.classes.size());
  std::vector<std::vector<bool>> le(nc, std::vector<bool>(nc, false));
  for (std::size_t a = 0; a < family.size(); ++a)
    for (std::size_t b = 0; b < family.size(); ++b)
      if (filtration_leq(family[a], family[b])) le[cls[a]][cls[b]] = true;
  for (int a = 0; a < nc; ++a)
    for (int b = 0; b < nc; ++b) {
      if (a != b && le[a][b]) q.order.emplace_back(a, b);
      if (a != b && le[a][b] && le[b][a]) q.order_well_defined = false;
    }
  return q;
}

LeviFiltration dual_stratum_of_covector(const RootDatum& rd, const std::vector<Vec>& lambdas) {
  int r = static_cast<int>(lambdas.size());
  if (r < 1) throw ValidationError("dual stratum needs r >= 1");
  LeviFiltration f;
  f.phi.assign(r, RootSubset(rd.num_roots()));
  RootSubset acc = RootSubset::full(rd.num_roots());
  for (int i = r - 1; i >= 0; --i) {
    if (static_cast<int>(lambdas[i].size()) != rd.dim_t()) throw ValidationError("covector has wrong dimension");
    RootSubset z(rd.num_roots());
    for (int a = 0; a < rd.num_roots(); ++a)
      if (rd.coroot_pairing(lambdas[i], a) == 0) z.set(a);
    acc = acc & z;
    f.phi[i] = acc;
  }
  return f;
}

AxiomReport verify_stratification_axioms(const RootDatum& rd, int s, const std::vector<LeviFiltration>& family,
                                         const std::vector<Tuple>& extra_points) {
  AxiomReport rep;
  auto fail = [&](const std::string& msg) {
    if (rep.ok) {
      rep.ok = false;
      rep.first_violation = msg;
    }
  };
  std::set<LeviFiltration> distinct(family.begin(), family.end());
  if (distinct.size() != family.size()) fail("family contains repeated strata");
  for (const auto& f : family) {
    if (f.depth() != s || !is_levi_filtration(rd, f)) {
      fail("not a depth-" + std::to_string(s) + " Levi filtration: " + describe(rd, f));
      continue;
    }
    if (!in_stratum(rd, f, stratum_witness(rd, f))) fail("empty stratum " + describe(rd, f));
  }
  if (!rep.ok) return rep;

  std::vector<Tuple> points = extra_points;
  for (const auto& f : enumerate_filtrations(rd, s)) points.push_back(stratum_witness(rd, f));
  int dim = rd.dim_t() * s;
  if (dim <= 6) {
    int total = 1;
    for (int k = 0; k < dim; ++k) total *= 3;
    for (int code = 0; code < total; ++code) {
      Tuple x(s, zero_vec(rd.dim_t()));
      int c = code;
      for (int k = 0; k < dim; ++k, c /= 3) x[k / rd.dim_t()][k % rd.dim_t()] = c % 3 - 1;
      points.push_back(x);
    }
  }
  std::vector<std::vector<std::vector<Vec>>> kers;
  for (const auto& f : family) kers.push_back(make_stratum(rd, f).kernels);
  auto in_closure = [&](std::size_t b, const Tuple& x) {
    for (int i = 0; i < s; ++i)
      for (int a : family[b].phi[i].indices())
        if (rd.eval(a, x[i]) != 0) return false;
    return true;
  };
  for (const auto& x : points) {
    ++rep.points_checked;
    std::vector<std::size_t> hits;
    for (std::size_t k = 0; k < family.size(); ++k)
      if (in_stratum(rd, family[k], x)) hits.push_back(k);
    if (hits.size() != 1) {
      fail("partition: a point lies in " + std::to_string(hits.size()) + " strata (its own stratum is " +
           describe(rd, stratum_of_tuple(rd, x)) + ")");
      return rep;
    }
    for (std::size_t b = 0; b < family.size(); ++b)
      if (in_closure(b, x) && !filtration_leq(family[hits[0]], family[b])) {
        fail("frontier: " + describe(rd, family[hits[0]]) + " meets the closure of " + describe(rd, family[b]));
        return rep;
      }
  }
  for (std::size_t a = 0; a < family.size(); ++a)
    for (std::size_t b = 0; b < family.size(); ++b) {
      bool incl = true;
      for (int i = 0; i < s && incl; ++i)
        for (const auto& v : kers[a][i])
          if (!in_span(kers[b][i], v)) {
            incl = false;
            break;
          }
      if (incl != filtration_leq(family[a], family[b])) {
        fail("closure order differs from filtration order between " + describe(rd, family[a]) + " and " +
             describe(rd, family[b]));
        return rep;
      }
    }
  return rep;
}

}  // namespace wildstrat::strat
