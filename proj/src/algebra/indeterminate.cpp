#include "beltrami/algebra/indeterminate.hpp"

#include <deque>
#include <map>
#include <mutex>
#include <tuple>

#include "beltrami/algebra/error.hpp"
#include "beltrami/algebra/scalar.hpp"

namespace beltrami {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedExpression: return "malformed expression";
    case ErrorKind::UnboundSymbol: return "unbound symbol";
    case ErrorKind::EvaluationPole: return "evaluation pole";
    case ErrorKind::ExtensionMismatch: return "extension mismatch";
    case ErrorKind::Usage: return "usage error";
    case ErrorKind::DegenerateChart: return "degenerate chart";
    case ErrorKind::DegenerateForm: return "degenerate form";
    case ErrorKind::FlatChart: return "flat chart";
    case ErrorKind::InvalidRuledParametrization: return "invalid ruled parametrization";
    case ErrorKind::ParameterConstraint: return "parameter constraint violated";
    case ErrorKind::ResidualRadical: return "residual radical";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Parse: return "parse error";
  }
  return "error";
}

namespace {

std::uint64_t make_prefix_key(VarKind kind, std::string_view name) {
  std::uint64_t key = static_cast<std::uint64_t>(kind) << 56;
  for (std::size_t i = 0; i < 7; ++i) {
    std::uint64_t byte = i < name.size() ? static_cast<unsigned char>(name[i]) : 0;
    key |= byte << (8 * (6 - i));
  }
  return key;
}

// The symbol table is append-only; handles stay valid for the process lifetime.
struct Registry {
  std::mutex mutex;
  std::deque<Indeterminate> storage;
  std::map<std::tuple<VarKind, std::string, int>, Var, std::less<>> index;
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

Var intern(VarKind kind, std::string_view name, int order) {
  Registry& r = registry();
  std::lock_guard lock(r.mutex);
  auto key = std::make_tuple(kind, std::string(name), order);
  auto it = r.index.find(key);
  if (it != r.index.end()) return it->second;
  r.storage.push_back(Indeterminate{kind, std::string(name), order, make_prefix_key(kind, name)});
  Var v = &r.storage.back();
  r.index.emplace(std::move(key), v);
  return v;
}

Var prime(Var v) {
  if (v->kind != VarKind::Differential)
    throw Error(ErrorKind::UnboundSymbol, "prime of non-differential symbol " + v->name);
  return intern(v->kind, v->name, v->order + 1);
}

std::string text_name(Var v) {
  switch (v->kind) {
    case VarKind::Cos: return "cos(" + v->name + ")";
    case VarKind::Sin: return "sin(" + v->name + ")";
    case VarKind::Differential: return v->name + std::string(static_cast<std::size_t>(v->order), '\'');
    default: return v->name;
  }
}

namespace {
bool is_greek(std::string_view name) {
  static const char* greek[] = {"alpha", "beta",  "gamma", "delta", "epsilon", "zeta", "eta",   "theta",
                                "iota",  "kappa", "lambda", "mu",   "nu",      "xi",   "pi",    "rho",
                                "sigma", "tau",   "phi",   "chi",   "psi",     "omega"};
  for (const char* g : greek)
    if (name == g) return true;
  return false;
}
}  // namespace

std::string latex_name(Var v) {
  std::string base = is_greek(v->name) ? "\\" + v->name : v->name;
  switch (v->kind) {
    case VarKind::Cos: return "\\cos " + base;
    case VarKind::Sin: return "\\sin " + base;
    case VarKind::Differential:
      if (v->order == 0) return base;
      if (v->order <= 3) return base + std::string(static_cast<std::size_t>(v->order), '\'');
      return base + "^{(" + std::to_string(v->order) + ")}";
    default: return base;
  }
}

Scalar parse_scalar(std::string_view text) {
  Scalar x;
  if (x.set_str(std::string(text), 10) != 0)
    throw Error(ErrorKind::Parse, "not a rational number: " + std::string(text));
  if (x.get_den() == 0) throw Error(ErrorKind::Parse, "zero denominator in " + std::string(text));
  x.canonicalize();
  return x;
}

std::string to_string(const Scalar& x) { return x.get_str(); }

std::optional<Scalar> exact_sqrt(const Scalar& x) {
  if (sgn(x) < 0) return std::nullopt;
  Integer n = sqrt(Integer(x.get_num()));
  Integer d = sqrt(Integer(x.get_den()));
  if (n * n != x.get_num() || d * d != x.get_den()) return std::nullopt;
  return Scalar(n, d);
}

}  // namespace beltrami
