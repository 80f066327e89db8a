#pragma once

#include <vector>

#include "wildstrat/lie.hpp"
#include "wildstrat/parab.hpp"
#include "wildstrat/strat.hpp"

namespace wildstrat::orbit {

using liecore::GElement;
using liecore::RootDatum;
using liecore::TcElement;
using strat::LeviFiltration;
using strat::Tuple;

struct BirkhoffNormalForm {
  int s = 0;
  TcElement normal;
  TcElement gauge_log;  // exp(ad gauge_log) maps the input to normal

  TcElement tau() const;
};

// exp(ad_z)(x); z must lie in eps g_r.
TcElement apply_gauge(const RootDatum& rd, const TcElement& z, const TcElement& x);
QMatrix gauge_matrix(const RootDatum& rd, const TcElement& z);
// The element z of eps g_r with exp(ad_z) = m, for m a product of gauge matrices.
TcElement gauge_log_of(const RootDatum& rd, int r, const QMatrix& m);

BirkhoffNormalForm birkhoff_normalize(const RootDatum& rd, const TcElement& x);
int strictness_index(const RootDatum& rd, const TcElement& x);
TcElement irregular_type(const RootDatum& rd, const TcElement& x);

// Orbit coefficients X_0..X_{r-1} to the stratification tuple (entry r-1-i is X_i).
Tuple marking_tuple(const RootDatum& rd, const TcElement& x);
TcElement from_marking_tuple(const RootDatum& rd, const Tuple& t);

// Largest s with X_0..X_{s-1} in t and the remaining coefficients commuting with them.
int marked_index(const RootDatum& rd, const TcElement& x);

struct CentralizerReport {
  std::vector<Vec> basis;  // flat g_r coordinates
  int dimension = 0;
  int marked_s = 0;
  LeviFiltration marking;  // depth marked_s
  bool structural = false;
  std::vector<Vec> predicted_basis;
  int predicted_dimension = 0;
  bool matches = false;
};

// s < 0 uses the largest valid marking; otherwise the conditions for s are checked.
CentralizerReport centralizer(const RootDatum& rd, const TcElement& x, int s = -1);

struct MarkedComparison {
  bool same = false;
  LeviFiltration first, second;
};
MarkedComparison classify_marked(const RootDatum& rd, const Tuple& x, const Tuple& y);
bool classify_unmarked(const RootDatum& rd, const Tuple& x, const Tuple& y);

// omega_lambda(Y, Y') = <lambda, [Y, Y']> on u+ x u-.
QMatrix kks_form(const RootDatum& rd, const parab::ParabolicFiltration& f, const parab::FormalType& lambda);

}  // namespace wildstrat::orbit
