#pragma once

#include <functional>
#include <map>

#include "beltrami/geometry/chart.hpp"

namespace beltrami::testing {

/// Numeric values for chart variables; cos(x)/sin(x) are derived from x.
/// Any other symbol is a test bug and aborts the evaluation.
struct NumPoint {
  std::map<std::string, long double> values;
  long double lookup(Var v) const;
};

long double eval(const MultiPoly& p, const NumPoint& at);
long double eval(const Expr& e, const NumPoint& at);
long double eval(const ExtElement& e, const NumPoint& at);

using ScalarField = std::function<long double(long double, long double)>;

/// Delta^III f at (p1, p2) computed purely numerically: the unit normal from
/// central differences of the chart map, III_ij = <n_i, n_j>, and the
/// divergence form of the operator by nested central differences.
long double numeric_third_beltrami(const SurfaceChart& chart, const ScalarField& f, long double p1, long double p2);

/// III entries (e11, e12, e22) from the numeric unit normal.
std::array<long double, 3> numeric_third_form(const SurfaceChart& chart, long double p1, long double p2);

bool close(long double a, long double b, long double rel = 1e-5L);

}  // namespace beltrami::testing
