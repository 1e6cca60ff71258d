// Runs every acceptance criterion at exact equality and prints one line per
// criterion. Exit status is nonzero if any criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "beltrami/quadric/quadric.hpp"
#include "beltrami/verify/suite.hpp"
#include "properties.hpp"

using namespace beltrami;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    detail += (detail.empty() ? "" : "; ") + what;
  }
};

// Runs the suite cases matching each glob; every case must match (or be the
// permitted structural-only case) and at least `min_cases` must run.
void suite_cases(Outcome& v, const std::vector<std::string>& globs, std::size_t min_cases) {
  std::size_t seen = 0;
  for (const auto& g : globs) {
    SuiteOptions o;
    o.filter = g;
    for (const auto& r : run_suite(o)) {
      ++seen;
      bool ok = r.status == CaseStatus::Match || (r.status == CaseStatus::StructuralOnly && r.id == "ruled.P4");
      v.require(ok, r.id + " " + to_string(r.status) + (r.detail.empty() ? "" : " (" + r.detail + ")"));
    }
  }
  v.require(seen >= min_cases, "only " + std::to_string(seen) + " cases ran");
}

struct Criterion {
  int number;
  std::string title;
  double budget_seconds;
  std::function<void(Outcome&)> check;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "ruled operator coefficients P1, P2, P3, P5 exact; P4 structural", 10,
       [](Outcome& v) { suite_cases(v, {"e4.P*", "e4.expansion", "ruled.P4"}, 6); }},
      {2, "Gauss curvature K = -A^2/n^2 of the generic ruled chart", 10,
       [](Outcome& v) { suite_cases(v, {"K.ruled"}, 1); }},
      {3, "ruled degree growth deg(Delta g) <= deg g + 4 for d = 0..8", 30,
       [](Outcome& v) { suite_cases(v, {"L2.1.d*"}, 9); }},
      {4, "Delta x of a ruled surface: t-degree 5 iff mu != 0, else <= 3", 10,
       [](Outcome& v) { suite_cases(v, {"Q1.*"}, 2); }},
      {5, "helicoid: normalization, H = 0, Delta x = 0, finite null type 1", 10,
       [](Outcome& v) { suite_cases(v, {"helicoid.*"}, 4); }},
      {6, "first-kind quadric: III, reduction identities, f1..f5 (symbolic a, b, c)", 60,
       [](Outcome& v) { suite_cases(v, {"III.quadric1", "e6.operator", "e7.*"}, 13); }},
      {7, "first-kind leading terms of Delta^k u and Delta^k v, k = 1..3", 600,
       [](Outcome& v) {
         suite_cases(v, {"L1.k*", "L2.k*"}, 6);
         // rational parameters, separately timed against the 30 s target
         auto t0 = std::chrono::steady_clock::now();
         QuadricKindI q = make_kind1(Expr(2), Expr(3), Expr(5));
         QuadricOperator op = kind1_operator(q);
         for (const auto& r : kind1_iterate_u(q, op.op, 3)) v.require(r.holds, "rational u ledger k=" + std::to_string(r.k));
         for (const auto& r : kind1_iterate_v(q, op.op, 3)) v.require(r.holds, "rational v ledger k=" + std::to_string(r.k));
         double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
         v.require(s < 30, "rational ledgers took " + std::to_string(s) + " s");
       }},
      {8, "first-kind monomial law for d = 1..12", 60, [](Outcome& v) { suite_cases(v, {"law1.*"}, 12); }},
      {9, "first-kind classification: a = b = -1 forced; unit sphere is type 1", 60,
       [](Outcome& v) { suite_cases(v, {"quadric1.classify", "sphere.*"}, 4); }},
      {10, "second-kind quadric: operator, f1..f5, leading terms, law, contradiction, certificate", 60,
       [](Outcome& v) { suite_cases(v, {"III.quadric2", "e16.*", "L3.k*", "L4.k*", "law2.*", "quadric2.*"}, 31); }},
      {11, "Delta x = grad(2H/K, n) - (2H/K) n on helicoid, sphere, paraboloid", 30,
       [](Outcome& v) { suite_cases(v, {"identity.*"}, 3); }},
      {12, "property suites, 1000 randomized cases each", 120,
       [](Outcome& v) {
         for (const auto& r : beltrami::testing::all_properties(2024, 1000)) {
           v.require(r.cases >= 1000, r.name + " ran " + std::to_string(r.cases) + " cases");
           v.require(r.failures == 0, r.name + ": " + std::to_string(r.failures) + " failures, " + r.first_failure);
         }
       }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Outcome v;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.check(v);
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    v.require(s < c.budget_seconds, "runtime " + std::to_string(s) + " s exceeds " + std::to_string(c.budget_seconds));
    if (!v.pass) ++failed;
    std::printf("criterion %2d: %s - %s (%.2f s)%s%s\n", c.number, v.pass ? "PASS" : "FAIL", c.title.c_str(), s,
                v.detail.empty() ? "" : " - ", v.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
