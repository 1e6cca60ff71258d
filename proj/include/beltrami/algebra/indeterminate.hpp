#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace beltrami {

// Kinds are listed in global variable order: chart variables come first
// (most significant in the term order), then parameters, then differential
// symbols ordered by (name, derivative order).
enum class VarKind : std::uint8_t {
  Chart = 0,
  Parameter = 1,
  Differential = 2,
  Cos = 3,  // cos(name) of the chart variable `name`; cos^2 + sin^2 = 1
  Sin = 4,
  Free = 5,  // not bound by any derivation rule
  ExtRoot = 6,
};

struct Indeterminate {
  VarKind kind;
  std::string name;
  int order = 0;
  std::uint64_t prefix_key = 0;  // kind + first 7 bytes of name, for fast ordering
};

/// Interned, immutable, process-lifetime handle. Two handles are equal iff
/// they denote the same (kind, name, order).
using Var = const Indeterminate*;

Var intern(VarKind kind, std::string_view name, int order = 0);

inline Var chart_var(std::string_view name) { return intern(VarKind::Chart, name); }
inline Var parameter(std::string_view name) { return intern(VarKind::Parameter, name); }
inline Var differential(std::string_view name, int order = 0) {
  return intern(VarKind::Differential, name, order);
}
inline Var cos_of(std::string_view angle) { return intern(VarKind::Cos, angle); }
inline Var sin_of(std::string_view angle) { return intern(VarKind::Sin, angle); }
inline Var free_symbol(std::string_view name) { return intern(VarKind::Free, name); }

/// Strict weak order used everywhere a deterministic variable order is needed.
inline bool var_less(Var a, Var b) {
  if (a == b) return false;
  if (a->prefix_key != b->prefix_key) return a->prefix_key < b->prefix_key;
  if (a->name != b->name) return a->name < b->name;
  return a->order < b->order;
}

/// Same symbol at derivative order + 1 (differential symbols only).
Var prime(Var v);

/// Canonical text spelling: `zeta''`, `cos(s)`, `u`.
std::string text_name(Var v);
std::string latex_name(Var v);

}  // namespace beltrami
