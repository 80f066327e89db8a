#include "wildstrat/rootdatum.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <regex>
#include <set>

#include "wildstrat/errors.hpp"

namespace wildstrat::liecore {

namespace {

std::vector<std::vector<int>> cartan_A(int n) {
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    a[i][i] = 2;
    if (i + 1 < n) a[i][i + 1] = a[i + 1][i] = -1;
  }
  return a;
}

std::vector<std::vector<int>> cartan_for(char family, int n) {
  auto a = cartan_A(n);
  switch (family) {
    case 'A':
      break;
    case 'B':  // last simple root short
      if (n < 2) throw ValidationError("B_n needs n >= 2");
      a[n - 1][n - 2] = -2;
      break;
    case 'C':
      if (n < 2) throw ValidationError("C_n needs n >= 2");
      a[n - 2][n - 1] = -2;
      break;
    case 'D':
      if (n < 3) throw ValidationError("D_n needs n >= 3");
      a[n - 2][n - 1] = a[n - 1][n - 2] = 0;
      a[n - 3][n - 1] = a[n - 1][n - 3] = -1;
      break;
    case 'G':
      if (n != 2) throw ValidationError("G_n only for n = 2");
      a[0][1] = -3;
      break;
    case 'F':
      if (n != 4) throw ValidationError("F_n only for n = 4");
      a[2][1] = -2;
      break;
    case 'E': {
      if (n < 6 || n > 8) throw ValidationError("E_n needs 6 <= n <= 8");
      a.assign(n, std::vector<int>(n, 0));
      for (int i = 0; i < n; ++i) a[i][i] = 2;
      auto link = [&](int i, int j) { a[i - 1][j - 1] = a[j - 1][i - 1] = -1; };
      link(1, 3);
      link(3, 4);
      link(2, 4);
      for (int i = 4; i < n; ++i) link(i, i + 1);
      break;
    }
    default:
      throw ValidationError(std::string("unknown Cartan type ") + family);
  }
  return a;
}

}  // namespace

void RootDatum::generate_roots(const std::vector<std::vector<int>>& a) {
  cartan_ = a;
  rank_ = static_cast<int>(a.size());
  // Symmetrise: s_k = (alpha_k, alpha_k) with A[k][j] s_k = A[j][k] s_j.
  simple_norm_.assign(rank_, Rational(0));
  for (int start = 0; start < rank_; ++start) {
    if (simple_norm_[start] != 0) continue;
    simple_norm_[start] = 1;
    std::deque<int> q{start};
    while (!q.empty()) {
      int k = q.front();
      q.pop_front();
      for (int j = 0; j < rank_; ++j) {
        if (j == k || a[j][k] == 0) continue;
        Rational sj = Rational(a[k][j]) * simple_norm_[k] / a[j][k];
        if (simple_norm_[j] == 0) {
          simple_norm_[j] = sj;
          q.push_back(j);
        } else if (simple_norm_[j] != sj) {
          throw ValidationError("Cartan matrix is not symmetrisable");
        }
      }
    }
  }
  Rational mx = *std::max_element(simple_norm_.begin(), simple_norm_.end());
  for (auto& s : simple_norm_) s = s * 2 / mx;

  std::set<std::vector<int>> pos;
  std::vector<std::vector<int>> layer;
  for (int i = 0; i < rank_; ++i) {
    std::vector<int> e(rank_, 0);
    e[i] = 1;
    pos.insert(e);
    layer.push_back(e);
  }
  while (!layer.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& b : layer)
      for (int i = 0; i < rank_; ++i) {
        int p = 0;
        for (;;) {
          auto c = b;
          c[i] -= p + 1;
          if (!pos.count(c)) break;
          ++p;
        }
        int pairing = 0;
        for (int j = 0; j < rank_; ++j) pairing += b[j] * a[i][j];
        int q = p - pairing;
        if (q > 0) {
          auto c = b;
          c[i] += 1;
          if (pos.insert(c).second) next.push_back(c);
        }
      }
    layer = std::move(next);
  }
  std::vector<std::vector<int>> sorted(pos.begin(), pos.end());
  auto height = [](const std::vector<int>& v) {
    int h = 0;
    for (int x : v) h += x;
    return h;
  };
  std::stable_sort(sorted.begin(), sorted.end(), [&](const auto& x, const auto& y) {
    int hx = height(x), hy = height(y);
    if (hx != hy) return hx < hy;
    return x > y;
  });
  int np = static_cast<int>(sorted.size());
  roots_.assign(2 * np, Root{});
  for (int k = 0; k < np; ++k) {
    roots_[k].simple = sorted[k];
    roots_[k].height = height(sorted[k]);
    roots_[k].positive = true;
    roots_[k].neg = k + np;
    auto m = sorted[k];
    for (auto& x : m) x = -x;
    roots_[k + np].simple = m;
    roots_[k + np].height = -roots_[k].height;
    roots_[k + np].positive = false;
    roots_[k + np].neg = k;
  }
  simple_.clear();
  for (int k = 0; k < np; ++k)
    if (roots_[k].height == 1) simple_.push_back(k);
  int nr = num_roots();
  norm_.assign(nr, Rational(0));
  for (int k = 0; k < nr; ++k) {
    Rational s = 0;
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j)
        if (roots_[k].simple[i] != 0 && roots_[k].simple[j] != 0)
          s += Rational(roots_[k].simple[i] * roots_[k].simple[j]) * a[j][i] * simple_norm_[j] / 2;
    norm_[k] = s;
  }
}

Rational RootDatum::root_inner(int x, int y) const {
  Rational s = 0;
  const auto& cx = roots_[x].simple;
  const auto& cy = roots_[y].simple;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      if (cx[i] != 0 && cy[j] != 0) s += Rational(cx[i] * cy[j]) * cartan_[j][i] * simple_norm_[j] / 2;
  return s;
}

int RootDatum::find_root(const std::vector<int>& c) const {
  for (int k = 0; k < num_roots(); ++k)
    if (roots_[k].simple == c) return k;
  return -1;
}

RootDatum RootDatum::gl(int n) {
  if (n < 1 || n > 8) throw ValidationError("gl_n supported for 1 <= n <= 8");
  RootDatum rd;
  rd.name_ = "gl" + std::to_string(n);
  rd.family_ = "gl";
  rd.msize_ = n;
  rd.generate_roots(cartan_A(n - 1));
  rd.dim_t_ = n;
  int np = rd.num_positive();
  rd.units_.assign(rd.num_roots(), {0, 0});
  for (int k = 0; k < np; ++k) {
    const auto& c = rd.roots_[k].simple;
    int i = static_cast<int>(std::find(c.begin(), c.end(), 1) - c.begin());
    int j = i;
    while (j < n - 1 && c[j] == 1) ++j;
    rd.units_[k] = {i, j};
    rd.units_[k + np] = {j, i};
  }
  for (int k = 0; k < rd.num_roots(); ++k) {
    auto [i, j] = rd.units_[k];
    Vec e(n, Rational(0));
    e[i] = 1;
    e[j] = -1;
    rd.roots_[k].eval = e;
    rd.roots_[k].coroot = e;
  }
  rd.gram_ = QMatrix::identity(n);
  rd.efe_.assign(rd.num_roots(), Rational(1));
  rd.finish_common();
  return rd;
}

RootDatum RootDatum::sl(int n) {
  if (n < 2 || n > 8) throw ValidationError("sl_n supported for 2 <= n <= 8");
  RootDatum rd;
  rd.name_ = "sl" + std::to_string(n);
  rd.family_ = "sl";
  rd.msize_ = n;
  rd.generate_roots(cartan_A(n - 1));
  rd.dim_t_ = n - 1;
  int np = rd.num_positive();
  rd.units_.assign(rd.num_roots(), {0, 0});
  for (int k = 0; k < np; ++k) {
    const auto& c = rd.roots_[k].simple;
    int i = static_cast<int>(std::find(c.begin(), c.end(), 1) - c.begin());
    int j = i;
    while (j < n - 1 && c[j] == 1) ++j;
    rd.units_[k] = {i, j};
    rd.units_[k + np] = {j, i};
  }
  for (int k = 0; k < rd.num_roots(); ++k) {
    auto [i, j] = rd.units_[k];
    Vec ev(n - 1, Rational(0)), co(n - 1, Rational(0));
    // H_m = E_mm - E_{m+1,m+1}
    for (int m = 0; m < n - 1; ++m) {
      int v = (i == m) - (i == m + 1) - (j == m) + (j == m + 1);
      ev[m] = v;
    }
    int lo = std::min(i, j), hi = std::max(i, j);
    for (int m = lo; m < hi; ++m) co[m] = i < j ? 1 : -1;
    rd.roots_[k].eval = ev;
    rd.roots_[k].coroot = co;
  }
  rd.efe_.assign(rd.num_roots(), Rational(1));
  rd.gram_ = QMatrix(n - 1, n - 1);
  for (int a = 0; a < n - 1; ++a)
    for (int b = 0; b < n - 1; ++b) rd.gram_(a, b) = rd.cartan_[b][a];
  rd.finish_common();
  return rd;
}

RootDatum RootDatum::from_cartan(const std::string& name, const std::vector<std::vector<int>>& a) {
  RootDatum rd;
  rd.name_ = name;
  rd.family_ = name.substr(0, 1);
  rd.generate_roots(a);
  rd.dim_t_ = rd.rank_;
  for (auto& r : rd.roots_) {
    r.eval.assign(rd.rank_, Rational(0));
    r.coroot.assign(rd.rank_, Rational(0));
  }
  int nr = rd.num_roots();
  rd.efe_.assign(nr, Rational(0));
  for (int k = 0; k < nr; ++k) {
    auto& r = rd.roots_[k];
    for (int m = 0; m < rd.rank_; ++m) {
      Rational v = 0;
      for (int j = 0; j < rd.rank_; ++j) v += r.simple[j] * a[m][j];
      r.eval[m] = v;
      r.coroot[m] = Rational(r.simple[m]) * rd.simple_norm_[m] / rd.norm_[k];
    }
    rd.efe_[k] = Rational(2) / rd.norm_[k];
  }
  rd.gram_ = QMatrix(rd.rank_, rd.rank_);
  for (int i = 0; i < rd.rank_; ++i)
    for (int j = 0; j < rd.rank_; ++j) rd.gram_(i, j) = rd.efe_[rd.simple_[i]] * a[j][i];
  rd.finish_cartan_type();
  rd.finish_common();
  return rd;
}

RootDatum RootDatum::parse(const std::string& spec) {
  std::smatch m;
  static const std::regex re("^(gl|sl|[A-G])([0-9]+)$");
  if (!std::regex_match(spec, m, re)) throw ValidationError("unknown root datum '" + spec + "'");
  std::string fam = m[1];
  int n = std::stoi(m[2]);
  if (fam == "gl") return gl(n);
  if (fam == "sl") return sl(n);
  if (n < 1 || n > 8) throw ValidationError("rank out of range in '" + spec + "'");
  return from_cartan(spec, cartan_for(fam[0], n));
}

Rational RootDatum::carter_N(int a, int b, const std::vector<int>& sign) const {
  int np = num_positive();
  const Root& ra = roots_[a];
  const Root& rb = roots_[b];
  if (ra.positive && rb.positive) {
    if (a > b) return -carter_N(b, a, sign);
    int id = special_pair_[a * num_roots() + b];
    if (id < 0 || sign[id] == 0) return 0;
    int p = 0;
    for (;;) {
      auto c = rb.simple;
      for (int i = 0; i < rank_; ++i) c[i] -= (p + 1) * ra.simple[i];
      if (find_root(c) < 0) break;
      ++p;
    }
    return Rational(sign[id] * (p + 1));
  }
  if (!ra.positive && !rb.positive) return -carter_N(ra.neg, rb.neg, sign);
  if (!ra.positive) return -carter_N(b, a, sign);
  // a positive, b negative; t = -(a+b)
  int s = sum_root(a, b);
  int t = roots_[s].neg;
  (void)np;
  if (roots_[t].positive) return norm_[t] / norm_[b] * carter_N(t, a, sign);
  return norm_[t] / norm_[a] * carter_N(b, t, sign);
}

void RootDatum::finish_cartan_type() {
  int nr = num_roots(), np = num_positive();
  sum_.assign(nr * nr, -1);
  for (int a = 0; a < nr; ++a)
    for (int b = 0; b < nr; ++b) {
      std::vector<int> c(rank_);
      for (int i = 0; i < rank_; ++i) c[i] = roots_[a].simple[i] + roots_[b].simple[i];
      sum_[a * nr + b] = find_root(c);
    }
  special_pair_.assign(nr * nr, -1);
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < np; ++a)
    for (int b = a + 1; b < np; ++b)
      if (sum_[a * nr + b] >= 0) {
        special_pair_[a * nr + b] = static_cast<int>(pairs.size());
        pairs.emplace_back(a, b);
      }
  std::vector<int> sign(pairs.size(), 0);
  std::vector<int> extra(nr, -1);
  for (std::size_t id = 0; id < pairs.size(); ++id) {
    int xi = sum_[pairs[id].first * nr + pairs[id].second];
    if (extra[xi] < 0) {
      extra[xi] = static_cast<int>(id);
      sign[id] = 1;
    }
  }
  std::vector<int> unknown;
  for (std::size_t id = 0; id < pairs.size(); ++id)
    if (sign[id] == 0) unknown.push_back(static_cast<int>(id));
  std::sort(unknown.begin(), unknown.end(), [&](int x, int y) {
    int sx = sum_[pairs[x].first * nr + pairs[x].second];
    int sy = sum_[pairs[y].first * nr + pairs[y].second];
    return sx != sy ? sx < sy : x < y;
  });

  // Jacobi on root-vector triples, skipping any triple that touches an unresolved pair.
  auto resolved = [&](int a, int b) {
    std::vector<int> all(sign.size(), 1);
    Rational probe = carter_N(a, b, all);
    return probe == 0 || carter_N(a, b, sign) != 0;
  };
  auto root_triple_ok = [&](int x, int y, int z, bool& skipped) {
    // Result as a map over g basis: t coords then roots.
    std::map<int, Rational> acc;
    auto br_root_into = [&](int u, const std::map<int, Rational>& v, const Rational& scale) {
      for (const auto& [idx, c] : v) {
        if (idx < dim_t_) {
          // [e_u, h] = -u(h) e_u
          Rational val = -roots_[u].eval[idx] * c * scale;
          if (val != 0) acc[dim_t_ + u] += val;
        } else {
          int w = idx - dim_t_;
          if (w == roots_[u].neg) {
            for (int k = 0; k < dim_t_; ++k)
              if (roots_[u].coroot[k] != 0) acc[k] += roots_[u].coroot[k] * c * scale;
          } else if (int s = sum_[u * nr + w]; s >= 0) {
            if (!resolved(u, w)) skipped = true;
            Rational n = carter_N(u, w, sign);
            if (n != 0) acc[dim_t_ + s] += n * c * scale;
          }
        }
      }
    };
    auto inner = [&](int u, int w) {
      std::map<int, Rational> v;
      if (w == roots_[u].neg) {
        for (int k = 0; k < dim_t_; ++k)
          if (roots_[u].coroot[k] != 0) v[k] = roots_[u].coroot[k];
      } else if (int s = sum_[u * nr + w]; s >= 0) {
        if (!resolved(u, w)) skipped = true;
        Rational n = carter_N(u, w, sign);
        if (n != 0) v[dim_t_ + s] = n;
      }
      return v;
    };
    br_root_into(x, inner(y, z), 1);
    br_root_into(y, inner(z, x), 1);
    br_root_into(z, inner(x, y), 1);
    for (const auto& kv : acc)
      if (kv.second != 0) return false;
    return true;
  };
  auto all_checked_ok = [&]() {
    for (int x = 0; x < nr; ++x)
      for (int y = x + 1; y < nr; ++y)
        for (int z = y + 1; z < nr; ++z) {
          bool skipped = false;
          bool ok = root_triple_ok(x, y, z, skipped);
          if (!skipped && !ok) return false;
        }
    return true;
  };
  for (int id : unknown) {
    sign[id] = 1;
    if (all_checked_ok()) continue;
    sign[id] = -1;
    if (!all_checked_ok()) throw ClaimViolation("no consistent structure-constant sign for " + name_);
  }
  n_.assign(nr * nr, Rational(0));
  for (int a = 0; a < nr; ++a)
    for (int b = 0; b < nr; ++b)
      if (sum_[a * nr + b] >= 0) n_[a * nr + b] = carter_N(a, b, sign);
}

void RootDatum::finish_common() {
  int nr = num_roots();
  if (sum_.empty()) {
    sum_.assign(nr * nr, -1);
    for (int a = 0; a < nr; ++a)
      for (int b = 0; b < nr; ++b) {
        std::vector<int> c(rank_);
        for (int i = 0; i < rank_; ++i) c[i] = roots_[a].simple[i] + roots_[b].simple[i];
        sum_[a * nr + b] = find_root(c);
      }
  }
  if (n_.empty()) {
    // Matrix units: [E_ij, E_kl] = d_jk E_il - d_li E_kj.
    n_.assign(nr * nr, Rational(0));
    for (int a = 0; a < nr; ++a)
      for (int b = 0; b < nr; ++b) {
        if (sum_[a * nr + b] < 0) continue;
        auto [i, j] = units_[a];
        auto [k, l] = units_[b];
        n_[a * nr + b] = (j == k) ? 1 : (l == i ? -1 : 0);
      }
  }
  int d = dim_g();
  table_.assign(d * d, SparseVec{});
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) {
      SparseVec& out = table_[x * d + y];
      bool xr = x >= dim_t_, yr = y >= dim_t_;
      if (!xr && !yr) continue;
      if (!xr) {
        Rational v = roots_[y - dim_t_].eval[x];
        if (v != 0) out.emplace_back(y, v);
        continue;
      }
      if (!yr) {
        Rational v = -roots_[x - dim_t_].eval[y];
        if (v != 0) out.emplace_back(x, v);
        continue;
      }
      int a = x - dim_t_, b = y - dim_t_;
      if (b == roots_[a].neg) {
        for (int k = 0; k < dim_t_; ++k)
          if (roots_[a].coroot[k] != 0) out.emplace_back(k, roots_[a].coroot[k]);
      } else if (int s = sum_[a * nr + b]; s >= 0 && n_[a * nr + b] != 0) {
        out.emplace_back(dim_t_ + s, n_[a * nr + b]);
      }
    }
  for (int a = 0; a < nr; ++a)
    if (eval(a, roots_[a].coroot) != 2) throw ClaimViolation("coroot normalisation failed in " + name_);
  build_weyl();
  if (!jacobi_holds()) throw ClaimViolation("Jacobi identity fails for structure constants of " + name_);
}

void RootDatum::build_weyl() {
  int nr = num_roots();
  sref_.clear();
  std::vector<std::vector<int>> sperm;
  for (int i = 0; i < rank_; ++i) {
    const Root& ai = roots_[simple_[i]];
    QMatrix s = QMatrix::identity(dim_t_);
    for (int k = 0; k < dim_t_; ++k)
      for (int m = 0; m < dim_t_; ++m) s(m, k) -= ai.eval[k] * ai.coroot[m];
    sref_.push_back(s);
    std::vector<int> p(nr);
    for (int a = 0; a < nr; ++a) {
      Rational pairing = dot(roots_[a].eval, ai.coroot);
      auto c = roots_[a].simple;
      c[i] -= static_cast<int>(pairing.get_num().get_si());
      p[a] = find_root(c);
      if (p[a] < 0) throw ClaimViolation("reflection does not permute roots");
      // (s alpha)(s h) = alpha(h)
      Vec lhs = s.transposed() * roots_[p[a]].eval;
      if (lhs != roots_[a].eval) throw ClaimViolation("reflection matrix and permutation disagree");
    }
    sperm.push_back(p);
  }
  weyl_.clear();
  std::map<std::vector<int>, int> seen;
  std::vector<int> idp(nr);
  for (int a = 0; a < nr; ++a) idp[a] = a;
  weyl_.push_back({QMatrix::identity(dim_t_), QMatrix::identity(dim_t_), idp});
  seen[idp] = 0;
  for (std::size_t head = 0; head < weyl_.size(); ++head) {
    if (weyl_.size() > 50000) throw ValidationError("Weyl group too large to enumerate");
    for (int i = 0; i < rank_; ++i) {
      std::vector<int> p(nr);
      for (int a = 0; a < nr; ++a) p[a] = sperm[i][weyl_[head].perm[a]];
      if (seen.count(p)) continue;
      QMatrix m = sref_[i] * weyl_[head].on_t;
      QMatrix minv = weyl_[head].on_t_inv * sref_[i];
      seen[p] = static_cast<int>(weyl_.size());
      weyl_.push_back({m, minv, p});
    }
  }
}

Vec RootDatum::act_covector(const WeylElement& w, const Vec& lambda) const {
  return w.on_t_inv.transposed() * lambda;
}

bool RootDatum::jacobi_holds() const {
  int d = dim_g();
  auto br = [&](int x, const SparseVec& v, std::vector<Rational>& acc, const Rational& s) {
    for (const auto& [y, c] : v)
      for (const auto& [z, e] : table_[x * d + y]) acc[z] += s * c * e;
  };
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      for (int z = 0; z < d; ++z) {
        std::vector<Rational> acc(d, Rational(0));
        br(x, table_[y * d + z], acc, 1);
        br(y, table_[z * d + x], acc, 1);
        br(z, table_[x * d + y], acc, 1);
        for (const auto& v : acc)
          if (v != 0) return false;
      }
  return true;
}

}  // namespace wildstrat::liecore
