#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace sjack::checks {

// One compared quantity. lhs/rhs are rendered strings: p/q when exact, shortest decimal otherwise.
struct CheckRow {
  std::string id;
  std::string lhs;
  std::string rhs;
  double abs_err = 0;
  double tol = 0;
  bool pass = false;
  bool exact = false;
};

struct CriterionReport {
  std::string id;
  std::string title;
  std::vector<CheckRow> rows;
  double seconds = 0;
  double time_budget = 0;  // 0: no budget
  bool within_budget = true;
  bool pass = false;
};

struct SuiteOptions {
  bool full = false;
  std::string filter;  // substring of the criterion id
  int threads = 1;
  std::uint64_t seed = 20240611;
};

const std::vector<std::pair<std::string, std::string>>& criteria();  // (id, title)

std::vector<CriterionReport> run_acceptance(const SuiteOptions& opts,
                                            const std::function<void(const CriterionReport&)>& on_done = {});

// Named identity checks for the verify subcommand. Values are raw command-line strings.
struct VerifyParams {
  std::map<std::string, std::string> values;
  bool allow_float = false;
  double fudge = 1;  // multiplies every lhs before comparison
  int threads = 1;
  std::uint64_t seed = 20240611;

  std::string get(const std::string& key, const std::string& fallback) const;
};

const std::vector<std::string>& identity_names();
std::vector<CheckRow> verify_identity(const std::string& name, const VerifyParams& params);

std::string fmt_double(double v);
CheckRow make_row(std::string id, double lhs, double rhs, double tol, bool relative = false);

}  // namespace sjack::checks
