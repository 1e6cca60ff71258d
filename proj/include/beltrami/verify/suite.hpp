#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace beltrami {

enum class CaseStatus { Match, Mismatch, StructuralOnly, Error };
const char* to_string(CaseStatus s);

struct CaseResult {
  std::string id;
  std::string target;     // what is being checked
  CaseStatus status = CaseStatus::Error;
  std::string detail;     // diff, note or error message
  std::string canonical;  // canonical text of the engine's value (golden payload)
  double seconds = 0;
};

struct SuiteOptions {
  std::string filter = "*";
  int k_max = 3;     // depth of the iterate ledgers
  int threads = 0;   // 0: hardware concurrency
};

/// Shell-style glob with '*' and '?'.
bool glob_match(std::string_view pattern, std::string_view text);

/// Every case id for the given ledger depth, sorted.
std::vector<std::string> suite_case_ids(int k_max);

/// Runs the matching cases concurrently; results are sorted by id.
std::vector<CaseResult> run_suite(const SuiteOptions& options);

/// Compares each case's canonical text with `dir/<id>.txt`; a difference or a
/// missing file turns the case into a mismatch. With `bless` the files are
/// (re)written instead.
void apply_golden(std::vector<CaseResult>& results, const std::filesystem::path& dir, bool bless);

/// No mismatches and no errors.
bool suite_passed(const std::vector<CaseResult>& results);

}  // namespace beltrami
