// Acceptance run: one line per criterion with its time budget. Exit status
// is nonzero if any criterion fails or overruns.

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "drinfeld/checks.hpp"

using namespace drinfeld;

namespace {

struct Criterion {
  int id;
  const char* title;
  double budget_s;
  std::function<CheckResult(const SuiteOptions&)> run;
};

}  // namespace

int main() {
  SuiteOptions o;
  o.prec = 30;
  o.seed = 1;
  const std::vector<Criterion> criteria{
      {1, "omega closed form", 1, check_omega_closed_form},
      {2, "zeta size law", 5, check_zeta_size_law},
      {3, "class invariance", 60, check_class_invariance},
      {4, "separation and injectivity", 60, check_separation},
      {5, "Carlitz pipeline and functional equation", 30, check_carlitz_pipeline},
      {6, "homomorphism and star action", 120, check_homomorphism_star},
      {7, "torsion", 30, check_torsion},
      {8, "numerical hygiene", 300, check_numerical_hygiene},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    CheckResult r = timed_check(c.title, [&] { return c.run(o); });
    bool in_time = r.seconds < c.budget_s;
    bool ok = r.pass && in_time;
    if (!ok) ++failed;
    std::printf("[%s] %d %s (%.2f s of %.0f s)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.title, r.seconds, c.budget_s,
                r.detail.empty() ? "" : ": ", r.detail.c_str());
    if (!in_time) std::printf("       over budget\n");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
