#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include "beltrami/algebra/error.hpp"
#include "beltrami/algebra/format.hpp"
#include "beltrami/quadric/quadric.hpp"
#include "beltrami/ruled/ruled.hpp"
#include "beltrami/verify/report.hpp"

using namespace beltrami;

namespace {

// Exit codes: 0 success, 1 verification mismatch, 2 usage or parameter
// error, 3 the computation is not available for this input.
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitEngine = 3;

enum class Style { Text, Latex, Json };

// Collects name = value lines and renders them in the requested style.
class Listing {
 public:
  explicit Listing(Style style) : style_(style) {}

  void add(const std::string& name, const Expr& e) {
    items_.push_back({name, style_ == Style::Latex ? to_latex(e) : to_text(e)});
  }
  void add(const std::string& name, const ExtElement& e) {
    items_.push_back({name, style_ == Style::Latex ? to_latex(e) : to_text(e)});
  }
  void add_text(const std::string& name, const std::string& value) { items_.push_back({name, value}); }

  std::string render() const {
    if (style_ == Style::Json) {
      nlohmann::ordered_json j = nlohmann::ordered_json::object();
      for (const auto& [k, v] : items_) j[k] = v;
      return j.dump(2) + "\n";
    }
    std::string out;
    for (const auto& [k, v] : items_) out += k + " = " + v + "\n";
    return out;
  }

 private:
  Style style_;
  std::vector<std::pair<std::string, std::string>> items_;
};

void add_form(Listing& l, const FundamentalForm& f) {
  std::string n = to_string(f.label);
  l.add(n + ".e11", f.e11);
  l.add(n + ".e12", f.e12);
  l.add(n + ".e22", f.e22);
}

void add_vec(Listing& l, const std::string& name, const Vec3& v) {
  for (int i = 0; i < 3; ++i) l.add(name + "[" + std::to_string(i + 1) + "]", v[static_cast<std::size_t>(i)]);
}

void add_op(Listing& l, const BeltramiOperator& op) {
  std::string a = text_name(op.u1), b = text_name(op.u2);
  l.add("c_" + a + a, op.c11);
  l.add("c_" + a + b, op.c12);
  l.add("c_" + b + b, op.c22);
  l.add("c_" + a, op.c1);
  l.add("c_" + b, op.c2);
}

void add_f(Listing& l, const std::array<Expr, 5>& f) {
  for (int i = 0; i < 5; ++i) l.add("f" + std::to_string(i + 1), f[static_cast<std::size_t>(i)]);
}

std::string ledger_text(const std::string& name, const std::vector<LedgerRow>& rows) {
  std::string out;
  for (const auto& r : rows)
    out += name + " k=" + std::to_string(r.k) + ": leading " + to_text(r.leading_coefficient) + " on degree " +
           std::to_string(r.leading_degree) + ", remainder degree " + std::to_string(r.remainder_degree) +
           (r.holds ? ", matches closed form" : ", differs from closed form") + "\n";
  return out;
}

std::string show(const SurfaceSpec& spec, const std::string& what, int k, int k_max, Style style) {
  Listing l(style);
  const bool ruled = spec.name == "ruled-generic";
  if (what == "ledger") {
    std::vector<LedgerRow> ru, rv;
    if (spec.name == "quadric1") {
      QuadricKindI q = make_kind1(param_or_symbol(spec, "a"), param_or_symbol(spec, "b"), param_or_symbol(spec, "c"));
      QuadricOperator op = kind1_operator(q);
      ru = kind1_iterate_u(q, op.op, k_max);
      rv = kind1_iterate_v(q, op.op, k_max);
    } else if (spec.name == "quadric2") {
      QuadricKindII q = make_kind2(param_or_symbol(spec, "a"), param_or_symbol(spec, "b"));
      QuadricOperator op = kind2_operator(q);
      ru = kind2_iterate_u(q, op.op, k_max);
      rv = kind2_iterate_v(q, op.op, k_max);
    } else {
      throw Error(ErrorKind::Usage, "ledger is available for quadric1 and quadric2");
    }
    if (style == Style::Json) {
      nlohmann::json j{{"u", nlohmann::json::parse(ledger_json(ru))}, {"v", nlohmann::json::parse(ledger_json(rv))}};
      return j.dump(2) + "\n";
    }
    return ledger_text("u", ru) + ledger_text("v", rv);
  }
  if (ruled) {
    RuledSpec g = ruled_generic();
    if (what == "forms") {
      add_form(l, ruled_first_form(g));
      add_form(l, ruled_second_form(g));
      add_form(l, ruled_third_form(g));
    } else if (what == "curvature") {
      l.add("K", ruled_gauss_curvature(g));
      l.add("H", ruled_mean_curvature(g));
    } else if (what == "operator") {
      RuledOperator op = ruled_third_beltrami(g);
      l.add("P1", op.P1());
      l.add("P2", op.P2());
      l.add("P3", op.P3());
      l.add("P4", op.P4());
      l.add("P5", op.P5());
    } else if (what == "iterate") {
      RuledOperator op = ruled_third_beltrami(g);
      Expr q = q1_vector(g, op)[0];
      for (int i = 1; i < k; ++i) q = apply(op.op, q);
      l.add("Q" + std::to_string(k), q);
    }
    return l.render();
  }
  SurfaceChart chart = chart_for(spec);
  if (what == "forms") {
    add_form(l, first_form(chart));
    add_form(l, second_form(chart));
    try {
      add_form(l, third_form(chart));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::FlatChart) std::cout << l.render();  // I and II are still meaningful
      throw;
    }
    return l.render();
  }
  if (what == "curvature") {
    l.add("K", gauss_curvature(chart));
    l.add("H", mean_curvature(chart));
    return l.render();
  }
  BeltramiOperator op = beltrami_operator(third_form(chart), chart.u1, chart.u2, chart.env);
  if (what == "operator") {
    add_op(l, op);
    if (spec.name == "quadric1")
      add_f(l, kind1_operator(make_kind1(param_or_symbol(spec, "a"), param_or_symbol(spec, "b"),
                                         param_or_symbol(spec, "c")))
                   .f);
    if (spec.name == "quadric2")
      add_f(l, kind2_operator(make_kind2(param_or_symbol(spec, "a"), param_or_symbol(spec, "b"))).f);
    return l.render();
  }
  Vec3 x = chart.x;
  for (int i = 0; i < k; ++i) x = apply_vector(op, x);
  add_vec(l, "D^" + std::to_string(k) + " x", x);
  return l.render();
}

int engine_exit(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Usage:
    case ErrorKind::Parse:
    case ErrorKind::ParameterConstraint:
    case ErrorKind::MalformedExpression:
      return kExitUsage;
    default:
      return kExitEngine;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact third-form Beltrami operators and finite-type checks for surfaces"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run the formula verification suite");
  std::string filter = "*";
  int verify_kmax = 3, threads = 0;
  bool verify_json = false, bless = false, timing = false, list = false;
  std::string golden;
  verify->add_option("filter", filter, "case id glob");
  verify->add_option("--kmax", verify_kmax, "ledger depth")->check(CLI::PositiveNumber);
  verify->add_option("--threads", threads, "worker threads (0: all cores)")->check(CLI::NonNegativeNumber);
  verify->add_flag("--json", verify_json, "JSON report");
  verify->add_option("--golden", golden, "directory of golden files");
  verify->add_flag("--bless", bless, "rewrite the golden files")->needs("--golden");
  verify->add_flag("--timing", timing, "include per-case runtimes");
  verify->add_flag("--list", list, "list case ids and exit");

  auto* classify_cmd = app.add_subcommand("classify", "classify a catalog surface");
  std::vector<std::string> classify_words;
  int classify_kmax = 4;
  bool classify_json = false, classify_symbolic = false;
  classify_cmd->add_option("spec", classify_words, "name key=value ...")->required();
  classify_cmd->add_option("--kmax", classify_kmax, "iterate depth")->check(CLI::PositiveNumber);
  classify_cmd->add_flag("--json", classify_json, "JSON report");
  classify_cmd->add_flag("--symbolic", classify_symbolic, "keep missing parameters symbolic");

  auto* show_cmd = app.add_subcommand("show", "print forms, curvature, operator, iterates or ledgers");
  std::vector<std::string> show_words;
  bool latex = false, show_json = false, show_symbolic = false;
  int show_kmax = 3;
  show_cmd->add_option("words", show_words, "<spec...> forms|curvature|operator|iterate <k>|ledger")->required();
  show_cmd->add_flag("--latex", latex, "LaTeX output");
  show_cmd->add_flag("--json", show_json, "JSON output");
  show_cmd->add_flag("--symbolic", show_symbolic, "keep missing parameters symbolic");
  show_cmd->add_option("--kmax", show_kmax, "ledger depth")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*verify) {
      if (list) {
        for (const auto& id : suite_case_ids(verify_kmax))
          if (glob_match(filter, id)) std::cout << id << "\n";
        return 0;
      }
      auto results = run_suite({filter, verify_kmax, threads});
      if (results.empty()) throw Error(ErrorKind::Usage, "no case matches '" + filter + "'");
      if (!golden.empty()) apply_golden(results, golden, bless);
      std::cout << (verify_json ? suite_json(results, timing) : suite_text(results, timing));
      return suite_passed(results) ? 0 : kExitMismatch;
    }
    if (*classify_cmd) {
      SurfaceSpec spec = parse_surface_spec(classify_words);
      spec.symbolic = spec.symbolic || classify_symbolic;
      ClassificationReport r = classify_spec(spec, classify_kmax);
      std::cout << (classify_json ? report_json(r) : report_text(r));
      return 0;
    }
    if (latex && show_json) throw Error(ErrorKind::Usage, "--latex and --json are exclusive");
    static const std::vector<std::string> kinds = {"forms", "curvature", "operator", "iterate", "ledger"};
    std::size_t at = 0;
    while (at < show_words.size() && std::find(kinds.begin(), kinds.end(), show_words[at]) == kinds.end()) ++at;
    if (at == 0 || at == show_words.size())
      throw Error(ErrorKind::Usage, "expected: show <spec...> forms|curvature|operator|iterate <k>|ledger");
    std::string what = show_words[at];
    int k = 1;
    if (what == "iterate") {
      if (at + 2 != show_words.size()) throw Error(ErrorKind::Usage, "iterate needs exactly one k");
      k = std::stoi(show_words[at + 1]);
      if (k < 1) throw Error(ErrorKind::Usage, "iterate k must be at least 1");
    } else if (at + 1 != show_words.size()) {
      throw Error(ErrorKind::Usage, "unexpected words after '" + what + "'");
    }
    SurfaceSpec spec = parse_surface_spec({show_words.begin(), show_words.begin() + static_cast<long>(at)});
    spec.symbolic = spec.symbolic || show_symbolic;
    Style style = latex ? Style::Latex : show_json ? Style::Json : Style::Text;
    std::cout << show(spec, what, k, show_kmax, style);
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return engine_exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
