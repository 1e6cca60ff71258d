#pragma once

#include <string>
#include <vector>

#include "beltrami/finite_type/finite_type.hpp"
#include "beltrami/geometry/catalog.hpp"
#include "beltrami/quadric/quadric.hpp"
#include "beltrami/verify/suite.hpp"

namespace beltrami {

/// Routes a catalog spec to the family classifier: ruled specs and quadrics
/// use their leading-term arguments, other charts the generic detector.
ClassificationReport classify_spec(const SurfaceSpec& spec, int k_max);

std::string report_text(const ClassificationReport& report);
/// {surface, k_max, verdict, relation: {k, constants, eigenvalues, null},
///  degree_table: [{k, degrees}], cross_checks, ...}
std::string report_json(const ClassificationReport& report);

/// One line per case plus a summary line; details only for non-matches.
std::string suite_text(const std::vector<CaseResult>& results, bool timing);
std::string suite_json(const std::vector<CaseResult>& results, bool timing);

/// Rows {k, leading_coefficient, leading_degree, remainder_degree}.
std::string ledger_json(const std::vector<LedgerRow>& rows);

}  // namespace beltrami
