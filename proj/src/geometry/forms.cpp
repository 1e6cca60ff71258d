#include "beltrami/geometry/forms.hpp"

#include "beltrami/algebra/error.hpp"

namespace beltrami {

const char* to_string(FormLabel label) {
  switch (label) {
    case FormLabel::I: return "I";
    case FormLabel::II: return "II";
    case FormLabel::III: return "III";
  }
  return "?";
}

std::array<Expr, 3> FundamentalForm::rational(const char* context) const {
  return {e11.as_rational(context), e12.as_rational(context), e22.as_rational(context)};
}

std::array<Expr, 3> inverse(const FundamentalForm& form) {
  auto [a, b, c] = form.rational("inverse form");
  Expr det = a * c - b * b;
  if (det.is_zero())
    throw Error(ErrorKind::DegenerateForm, std::string("form ") + to_string(form.label) + " has zero discriminant");
  Expr inv = det.inverse();
  return {c * inv, -b * inv, a * inv};
}

namespace {

struct Frame {
  Vec3 x1, x2;
};

Frame frame(const SurfaceChart& chart) {
  return {partial(chart.x, chart.u1, chart.env), partial(chart.x, chart.u2, chart.env)};
}

FundamentalForm first_from(const Frame& f) {
  return {FormLabel::I, dot(f.x1, f.x1), dot(f.x1, f.x2), dot(f.x2, f.x2)};
}

Expr metric_det(const SurfaceChart& chart, const FundamentalForm& first) {
  Expr det = first.det().as_rational("det g");
  if (det.is_zero()) throw Error(ErrorKind::DegenerateChart, chart.name + ": det g vanishes identically");
  return det;
}

// <d_ij x, N> for the unnormalized normal N = x1 x x2.
std::array<ExtElement, 3> second_hat(const SurfaceChart& chart, const Frame& f) {
  Vec3 n = cross(f.x1, f.x2);
  return {dot(partial(f.x1, chart.u1, chart.env), n), dot(partial(f.x1, chart.u2, chart.env), n),
          dot(partial(f.x2, chart.u2, chart.env), n)};
}

// h A h for symmetric 2x2 matrices given as (11, 12, 22).
std::array<ExtElement, 3> sandwich(const std::array<ExtElement, 3>& h, const std::array<ExtElement, 3>& a) {
  ExtElement m11 = h[0] * a[0] + h[1] * a[1];
  ExtElement m12 = h[0] * a[1] + h[1] * a[2];
  ExtElement m21 = h[1] * a[0] + h[2] * a[1];
  ExtElement m22 = h[1] * a[1] + h[2] * a[2];
  return {m11 * h[0] + m12 * h[1], m11 * h[1] + m12 * h[2], m21 * h[1] + m22 * h[2]};
}

}  // namespace

FundamentalForm first_form(const SurfaceChart& chart) { return first_from(frame(chart)); }

ExtElement metric_root(const SurfaceChart& chart, const FundamentalForm& first) {
  Expr det = metric_det(chart, first);
  if (auto r = expr_sqrt(det)) return ExtElement(*r);
  if (!chart.radicand) return ExtElement::root(make_radicand(det));
  const Expr& w = chart.radicand->value;
  if (auto r = expr_sqrt(det * w)) return ExtElement(Expr(0), *r / w, chart.radicand);
  throw Error(ErrorKind::Unsupported,
              chart.name + ": sqrt(det g) needs a second square root beyond the chart's extension");
}

Vec3 normal_vector(const SurfaceChart& chart) {
  Frame f = frame(chart);
  return cross(f.x1, f.x2);
}

FundamentalForm second_form(const SurfaceChart& chart) {
  Frame f = frame(chart);
  FundamentalForm first = first_from(f);
  ExtElement root = metric_root(chart, first);
  ExtElement inv = root.inverse();
  auto h = second_hat(chart, f);
  return {FormLabel::II, h[0] * inv, h[1] * inv, h[2] * inv};
}

Expr gauss_curvature(const SurfaceChart& chart) {
  Frame f = frame(chart);
  Expr det = metric_det(chart, first_from(f));
  auto h = second_hat(chart, f);
  Expr det_h = (h[0] * h[2] - h[1] * h[1]).as_rational("det II");
  return det_h * det.inverse().pow(2);
}

ExtElement mean_curvature(const SurfaceChart& chart) { return curvature(chart).H; }

CurvatureData curvature(const SurfaceChart& chart) {
  Frame f = frame(chart);
  FundamentalForm g = first_from(f);
  Expr det = metric_det(chart, g);
  ExtElement root = metric_root(chart, g);
  ExtElement inv = root.inverse();
  auto h = second_hat(chart, f);
  Expr det_h = (h[0] * h[2] - h[1] * h[1]).as_rational("det II");
  CurvatureData out;
  out.K = det_h * det.inverse().pow(2);
  ExtElement trace = g.e22 * h[0] - ExtElement(2) * g.e12 * h[1] + g.e11 * h[2];
  out.H = trace * inv * ExtElement(Expr(1) / (Expr(2) * det));
  out.n = scale(inv, cross(f.x1, f.x2));
  return out;
}

FundamentalForm third_form(const SurfaceChart& chart) {
  Frame f = frame(chart);
  FundamentalForm g = first_from(f);
  Expr det = metric_det(chart, g);
  auto h = second_hat(chart, f);
  Expr det_h = (h[0] * h[2] - h[1] * h[1]).as_rational("det II");
  if (det_h.is_zero()) throw Error(ErrorKind::FlatChart, chart.name + ": Gauss curvature vanishes identically");
  auto e = sandwich(h, {g.e22, -g.e12, g.e11});
  Expr inv2 = det.inverse().pow(2);
  return {FormLabel::III, ExtElement(e[0].as_rational("III") * inv2), ExtElement(e[1].as_rational("III") * inv2),
          ExtElement(e[2].as_rational("III") * inv2)};
}

FundamentalForm third_form(const FundamentalForm& first, const FundamentalForm& second) {
  auto [g11, g12, g22] = first.rational("first form");
  Expr det = g11 * g22 - g12 * g12;
  if (det.is_zero()) throw Error(ErrorKind::DegenerateForm, "first form has zero discriminant");
  if (gauss_curvature(first, second).is_zero())
    throw Error(ErrorKind::FlatChart, "Gauss curvature vanishes identically");
  Expr inv = det.inverse();
  auto e = sandwich({second.e11, second.e12, second.e22}, {ExtElement(g22 * inv), ExtElement(-g12 * inv), ExtElement(g11 * inv)});
  return {FormLabel::III, ExtElement(e[0].as_rational("III")), ExtElement(e[1].as_rational("III")),
          ExtElement(e[2].as_rational("III"))};
}

Expr gauss_curvature(const FundamentalForm& first, const FundamentalForm& second) {
  Expr det_g = first.det().as_rational("det I");
  if (det_g.is_zero()) throw Error(ErrorKind::DegenerateForm, "first form has zero discriminant");
  return second.det().as_rational("det II") / det_g;
}

}  // namespace beltrami
