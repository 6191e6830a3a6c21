#pragma once

#include <string>
#include <vector>

#include "ringoid/corpus.hpp"

namespace ringoid {

struct SuiteResult {
  std::string name;
  int criterion = 0;
  std::size_t instances = 0;
  std::size_t checks = 0;
  std::vector<std::string> notes;
  std::vector<std::string> failures;  // "<instance>: <what>", witness included

  bool pass() const noexcept { return failures.empty(); }
};

/// Suite names in criterion order; "all" selects every one.
const std::vector<std::string>& suite_names();

/// Runs one suite over the corpus. Law failures and precondition errors
/// become failures; BudgetExceeded propagates. Throws MalformedInput for an
/// unknown name.
SuiteResult run_suite(const std::string& name, const Corpus& corpus, const Budget& budget = {});
std::vector<SuiteResult> run_suites(const std::string& selection, const Corpus& corpus, const Budget& budget = {});

/// Line-oriented and deterministic: one header per suite, then notes and
/// failures, then a summary line.
std::string format_report(const std::vector<SuiteResult>& results);

}  // namespace ringoid
