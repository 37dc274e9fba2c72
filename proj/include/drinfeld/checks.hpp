#pragma once

// Named verification checks over the built-in fixture curves, grouped into
// suites (zeta, ideal, ore, drinfeld, hygiene). Shared by the CLI verify
// command and the test binaries.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

#include "drinfeld/curve.hpp"
#include "drinfeld/laurent.hpp"

namespace drinfeld {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  nlohmann::json data = nlohmann::json::object();
};

struct SuiteOptions {
  /// Certified digits demanded of series comparisons.
  int prec = 30;
  std::uint64_t seed = 1;
};

/// rational (F_3[T]), elliptic (h = 4), inert (h = 8), genus2 (h = 29).
CurveSpec builtin_fixture(const std::string& name);

/// a and b agree on their common precision, which is at least `digits`
/// relative digits.
bool agree_to(const LaurentSeries& a, const LaurentSeries& b, int digits);

// closed form of the first degree block against brute force (exact over
// F_3(T) and in K, and in Laurent series on the elliptic fixture)
CheckResult check_omega_closed_form(const SuiteOptions& o);
// |zeta^(p0*)(q^k - 1) - 1| = |alpha_1|^{q^k (1-q)}, k = 1, 2
CheckResult check_zeta_size_law(const SuiteOptions& o);
// j((alpha) a) = j(a) for random principal multipliers; sign-set independence
CheckResult check_class_invariance(const SuiteOptions& o);
// pairwise distinct j-table and the predicted J separation
CheckResult check_separation(const SuiteOptions& o);
// Carlitz module from the lattice pipeline; functional equation
CheckResult check_carlitz_pipeline(const SuiteOptions& o);
// rho_{ab} = rho_a rho_b; star action permutes the j-table
CheckResult check_homomorphism_star(const SuiteOptions& o);
// torsion annihilation and exact Carlitz reductions
CheckResult check_torsion(const SuiteOptions& o);
// every command's series stable under +10 digits and +5 truncation degrees
CheckResult check_numerical_hygiene(const SuiteOptions& o);

CheckResult check_class_groups(const SuiteOptions& o);
CheckResult check_star_representative(const SuiteOptions& o);
CheckResult check_ore_examples(const SuiteOptions& o);
CheckResult check_zeta_truncation(const SuiteOptions& o);

/// Runs fn, timing it and turning exceptions into a failed result.
CheckResult timed_check(const std::string& name, const std::function<CheckResult()>& fn);

std::vector<std::string> suite_names();
/// "all" runs zeta, ideal, ore and drinfeld; "hygiene" is separate.
std::vector<CheckResult> run_suite(const std::string& suite, const SuiteOptions& o);

/// Pairs series ({start, prec, coeffs} objects) at equal paths in two
/// reports and checks agreement on the common precision.
struct SeriesComparison {
  bool ok = true;
  int compared = 0;
  std::string first_mismatch;
};
SeriesComparison compare_report_series(const nlohmann::json& a, const nlohmann::json& b);

}  // namespace drinfeld
