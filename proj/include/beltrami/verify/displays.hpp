#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "beltrami/algebra/expr.hpp"

namespace beltrami {

/// A printed formula transcribed into parser syntax. Comparing the engine's
/// result against these strings keeps the check independent of the code
/// that builds the same quantity.
struct Display {
  std::string id;
  std::string text;
};

const std::vector<Display>& displays();

/// Parsed display; unknown ids raise Usage.
Expr display_expr(std::string_view id);

}  // namespace beltrami
