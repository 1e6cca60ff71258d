#pragma once

#include <map>
#include <string>
#include <vector>

#include "beltrami/geometry/chart.hpp"

namespace beltrami {

/// Surface spec: a catalog name plus key=value parameters. A missing value
/// means the parameter stays symbolic.
struct SurfaceSpec {
  std::string name;
  std::map<std::string, Expr> params;
  bool symbolic = false;

  std::string to_string() const;
};

/// Parses `name key=p/q ...` (and `--symbolic`).
SurfaceSpec parse_surface_spec(const std::vector<std::string>& words);

/// Parameter value or the symbolic parameter of that name.
Expr param_or_symbol(const SurfaceSpec& spec, const std::string& key);

SurfaceChart helicoid_chart(const Expr& h);
/// Graph chart (u, v, sqrt(c + a u^2 + b v^2)).
SurfaceChart quadric1_chart(const Expr& a, const Expr& b, const Expr& c);
SurfaceChart sphere_chart(const Expr& c);
/// (u, v, a u^2/2 + b v^2/2).
SurfaceChart quadric2_chart(const Expr& a, const Expr& b);
SurfaceChart plane_chart();
SurfaceChart translate(const SurfaceChart& chart, const Vec3& offset);

/// Chart for a catalog spec; `ruled-generic` has no chart and raises Usage.
SurfaceChart chart_for(const SurfaceSpec& spec);

}  // namespace beltrami
