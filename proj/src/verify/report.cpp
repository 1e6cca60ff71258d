#include "beltrami/verify/report.hpp"

#include <json.hpp>
#include <sstream>

#include "beltrami/algebra/error.hpp"
#include "beltrami/algebra/format.hpp"
#include "beltrami/ruled/ruled.hpp"

namespace beltrami {

using nlohmann::json;

namespace {

json degree_json(int d) {
  if (d == kDegreeNegInf) return "-inf";
  if (d == kDegreePosInf) return "non-polynomial";
  return d;
}

std::string degree_str(int d) {
  if (d == kDegreeNegInf) return "-inf";
  if (d == kDegreePosInf) return "n/p";
  return std::to_string(d);
}

}  // namespace

ClassificationReport classify_spec(const SurfaceSpec& spec, int k_max) {
  if (k_max < 1) throw Error(ErrorKind::Usage, "--kmax must be at least 1");
  const std::string& n = spec.name;
  if (n == "ruled-generic") {
    if (!spec.params.empty()) throw Error(ErrorKind::Usage, "ruled-generic takes no parameters");
    return ruled_classification(ruled_generic(), k_max);
  }
  if (n == "quadric1") {
    chart_for(spec);  // validates the parameters
    return kind1_classify(make_kind1(param_or_symbol(spec, "a"), param_or_symbol(spec, "b"), param_or_symbol(spec, "c")),
                          k_max);
  }
  if (n == "quadric2") {
    chart_for(spec);
    return kind2_classify(make_kind2(param_or_symbol(spec, "a"), param_or_symbol(spec, "b")), k_max);
  }
  SurfaceChart chart = chart_for(spec);
  ClassificationReport report = classify(chart, k_max);
  if (n == "helicoid") {
    ClassificationReport ruled = ruled_classification(helicoid_ruled(param_or_symbol(spec, "h")), k_max);
    report.cross_checks.push_back("ruled route: " + ruled.summary);
    if (report.verdict == Verdict::NullType) report.summary += " (minimal); helicoid";
  }
  if (n == "sphere" && report.verdict == Verdict::FiniteType) report.summary += "; sphere";
  return report;
}

std::string report_text(const ClassificationReport& r) {
  std::ostringstream out;
  out << "surface: " << r.surface << "\n";
  out << "k_max: " << r.k_max << "\n";
  out << "verdict: " << to_string(r.verdict) << "\n";
  out << "summary: " << r.summary << "\n";
  if (r.relation) {
    out << "relation: " << r.relation->to_text() << "\n";
    out << "eigenvalues:";
    for (const auto& e : r.relation->eigenvalues) out << " " << to_text(Expr(e.value));
    out << (r.relation->null ? " (null)" : "") << "\n";
  }
  if (r.split) {
    out << "eigen split:";
    if (r.split->x0)
      out << " x0 = (" << to_text((*r.split->x0)[0]) << ", " << to_text((*r.split->x0)[1]) << ", "
          << to_text((*r.split->x0)[2]) << ")";
    for (std::size_t i = 0; i < r.split->components.size(); ++i) {
      const Vec3& c = r.split->components[i];
      out << " [lambda = " << to_text(Expr(r.split->eigenvalues[i])) << ": (" << to_text(c[0]) << ", "
          << to_text(c[1]) << ", " << to_text(c[2]) << ")]";
    }
    out << "\n";
  }
  for (const auto& c : r.constraints) out << "constraint: " << c << "\n";
  if (!r.degree_table.empty()) {
    out << "degrees:\n";
    for (const auto& row : r.degree_table) {
      out << "  k=" << row.k << ":";
      for (int d : row.degrees) out << " " << degree_str(d);
      out << "\n";
    }
  }
  for (std::size_t i = 0; i < r.leading_degrees.size(); ++i)
    out << "leading k=" << (i + 1) << ": degree " << r.leading_degrees[i] << ", coefficient "
        << r.leading_coefficients[i] << "\n";
  for (const auto& c : r.cross_checks) out << "check: " << c << "\n";
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  return out.str();
}

std::string report_json(const ClassificationReport& r) {
  json j;
  j["surface"] = r.surface;
  j["k_max"] = r.k_max;
  j["verdict"] = to_string(r.verdict);
  j["summary"] = r.summary;
  if (r.relation) {
    json rel;
    rel["k"] = r.relation->k;
    rel["text"] = r.relation->to_text();
    rel["constants"] = json::array();
    for (const auto& c : r.relation->constants) rel["constants"].push_back(to_text(Expr(c)));
    rel["eigenvalues"] = json::array();
    for (const auto& e : r.relation->eigenvalues)
      rel["eigenvalues"].push_back({{"value", to_text(Expr(e.value))}, {"multiplicity", e.multiplicity}});
    rel["null"] = r.relation->null;
    j["relation"] = rel;
  } else {
    j["relation"] = nullptr;
  }
  j["degree_table"] = json::array();
  for (const auto& row : r.degree_table) {
    json degs = json::array();
    for (int d : row.degrees) degs.push_back(degree_json(d));
    j["degree_table"].push_back({{"k", row.k}, {"degrees", degs}});
  }
  j["leading_degrees"] = r.leading_degrees;
  j["leading_coefficients"] = r.leading_coefficients;
  j["constraints"] = r.constraints;
  j["cross_checks"] = r.cross_checks;
  j["notes"] = r.notes;
  return j.dump(2) + "\n";
}

std::string suite_text(const std::vector<CaseResult>& results, bool timing) {
  std::ostringstream out;
  int bad = 0;
  for (const auto& r : results) {
    out << r.id << ": " << to_string(r.status);
    if (timing) out << " (" << r.seconds << " s)";
    if (!r.detail.empty()) out << " - " << r.detail;
    out << "\n";
    if (r.status == CaseStatus::Mismatch || r.status == CaseStatus::Error) ++bad;
  }
  out << results.size() << " cases, " << bad << " failing\n";
  return out.str();
}

std::string suite_json(const std::vector<CaseResult>& results, bool timing) {
  json cases = json::array();
  for (const auto& r : results) {
    json c{{"id", r.id}, {"target", r.target}, {"status", to_string(r.status)}, {"detail", r.detail},
           {"canonical", r.canonical}};
    if (timing) c["seconds"] = r.seconds;
    cases.push_back(c);
  }
  return json{{"cases", cases}, {"passed", suite_passed(results)}}.dump(2) + "\n";
}

std::string ledger_json(const std::vector<LedgerRow>& rows) {
  json out = json::array();
  for (const auto& r : rows)
    out.push_back({{"k", r.k},
                   {"leading_coefficient", to_text(r.leading_coefficient)},
                   {"leading_degree", degree_json(r.leading_degree)},
                   {"remainder_degree", degree_json(r.remainder_degree)}});
  return out.dump(2) + "\n";
}

}  // namespace beltrami
