#pragma once

#include <array>

#include "beltrami/geometry/chart.hpp"

namespace beltrami {

enum class FormLabel { I, II, III };
const char* to_string(FormLabel label);

/// Symmetric 2x2 form e11 du1^2 + 2 e12 du1 du2 + e22 du2^2.
struct FundamentalForm {
  FormLabel label;
  ExtElement e11, e12, e22;

  ExtElement det() const { return e11 * e22 - e12 * e12; }
  /// Entries as W-free rational functions; raises ResidualRadical otherwise.
  std::array<Expr, 3> rational(const char* context) const;
};

/// Inverse entries (e^11, e^12, e^22) of a rational form; det == 0 raises
/// DegenerateForm.
std::array<Expr, 3> inverse(const FundamentalForm& form);

FundamentalForm first_form(const SurfaceChart& chart);

/// sqrt(det g) inside the chart's extension: the radicand is det g itself for
/// radical-free charts; for a chart with W^2 = w, det g or det g * w must be a
/// perfect square (otherwise Unsupported).
ExtElement metric_root(const SurfaceChart& chart, const FundamentalForm& first);

/// Normal N = d1x x d2x (not normalized).
Vec3 normal_vector(const SurfaceChart& chart);

struct CurvatureData {
  Expr K;
  ExtElement H;
  Vec3 n;  // unit normal N / sqrt(det g)
};

FundamentalForm second_form(const SurfaceChart& chart);
Expr gauss_curvature(const SurfaceChart& chart);
ExtElement mean_curvature(const SurfaceChart& chart);
CurvatureData curvature(const SurfaceChart& chart);

/// III computed without a unit normal: e_ij = h^_ik g^kl h^_lj / det g with
/// h^_ij = <d_ij x, N>. K == 0 raises FlatChart.
FundamentalForm third_form(const SurfaceChart& chart);

/// III = II g^-1 II for abstract forms.
FundamentalForm third_form(const FundamentalForm& first, const FundamentalForm& second);
/// K = det II / det I for abstract forms.
Expr gauss_curvature(const FundamentalForm& first, const FundamentalForm& second);

}  // namespace beltrami
