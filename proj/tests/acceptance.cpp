// Runs every acceptance criterion and prints one line per criterion.
// Usage: sjack_acceptance [fast|full] [threads]
#include <cstdio>
#include <cstdlib>
#include <string>

#include "checks.hpp"

int main(int argc, char** argv) {
  sjack::checks::SuiteOptions opts;
  if (argc > 1) opts.full = std::string(argv[1]) == "full";
  if (argc > 2) opts.threads = std::atoi(argv[2]);
  if (opts.threads < 1) opts.threads = 1;

  int failed = 0;
  auto reports = sjack::checks::run_acceptance(opts, [&](const sjack::checks::CriterionReport& r) {
    double worst = 0;
    for (const auto& row : r.rows)
      if (row.tol > 0 && row.abs_err / row.tol > worst) worst = row.abs_err / row.tol;
    std::printf("%s %-28s checks=%-4zu worst_err/tol=%.3g time=%.1fs%s  %s\n", r.pass ? "PASS" : "FAIL",
                r.id.c_str(), r.rows.size(), worst, r.seconds, r.within_budget ? "" : " (over budget)",
                r.title.c_str());
    if (!r.pass)
      for (const auto& row : r.rows)
        if (!row.pass)
          std::printf("    failed %s lhs=%s rhs=%s abs_err=%g tol=%g\n", row.id.c_str(), row.lhs.c_str(),
                      row.rhs.c_str(), row.abs_err, row.tol);
    std::fflush(stdout);
    if (!r.pass) ++failed;
  });
  std::printf("%zu criteria, %d failed\n", reports.size(), failed);
  return failed == 0 ? 0 : 1;
}
