#pragma once

// Rank-one Drinfeld modules from lattices, at xi = 1:
//
//   lattice a  ->  S_n = sum_{0 != l in a} l^{-n}
//              ->  e(z) = sum c_n z^{q^n}        (1/e(z) = 1/z - sum S_k z^{k-1})
//              ->  rho_a = a + g_1 tau + ... + g_d tau^d   (e(az) = rho_a(e(z)))
//
// A quantity of xi-weight w stands for xi^w * value in the module of the
// scaled lattice xi*a.

#include <optional>
#include <string>
#include <vector>

#include "drinfeld/class_group.hpp"
#include "drinfeld/ideal.hpp"
#include "drinfeld/ore.hpp"
#include "drinfeld/zeta.hpp"

namespace drinfeld {

using TwistedSeries = TwistedPoly<LaurentSeries>;

struct WeightedValue {
  LaurentSeries value;
  long long xi_weight = 0;

  WeightedValue operator+(const WeightedValue& o) const;
  WeightedValue operator-(const WeightedValue& o) const;
  WeightedValue operator*(const WeightedValue& o) const;
};

struct DrinfeldModule {
  const CurveModel* model;
  FracIdeal lattice;
  /// c_0 = 1, c_1, ..., c_N with c_n of weight 1 - q^n.
  std::vector<WeightedValue> exp_coeffs;
  /// Ring generators (T, or x and y) and their images.
  std::vector<FFElement> generators;
  std::vector<TwistedSeries> rho_generators;
  /// Certified relative digits of every stored coefficient.
  int precision;

  /// rho_a for integral a, through the generator images.
  TwistedSeries rho(const FFElement& a) const;
  /// xi-weight of the coefficient of tau^i.
  long long coefficient_weight(int i) const;
};

/// Relative precision floor of a series list.
int min_relative_precision(const std::vector<LaurentSeries>& v);

/// S_1 .. S_max_n (index 0 unused) to absolute precision
/// prec + n * D0 / d_inf.
std::vector<LaurentSeries> lattice_power_sums(const FracIdeal& lattice, int max_n, int prec,
                                              const ZetaOptions& opts = {});

/// c_0..c_N from power sums through q^N - 1; throws InconsistentSeries if a
/// coefficient of z^{m+1} with m != q^n - 1 fails to vanish.
std::vector<LaurentSeries> exponential_from_lattice(const std::vector<LaurentSeries>& sums, std::uint32_t q, int N);

/// rho_a from exponential coefficients through q^{deg a}.
TwistedSeries module_from_exponential(const std::vector<LaurentSeries>& c, const FFElement& a, int prec_hint = 0);

/// Inverse recursion: c_0..c_N from rho_a (deg a >= 1).
std::vector<LaurentSeries> exponential_from_module(const TwistedSeries& rho_a, const FFElement& a, int N);

/// Module of the lattice with coefficients certified to `prec` relative
/// digits and exponential coefficients through q^N (N >= degrees of the
/// generators).
DrinfeldModule build_module(const FracIdeal& lattice, int prec, int N = 0, const ZetaOptions& opts = {});

struct FunctionalEquationReport {
  bool pass;
  int z_order;
  /// For each k <= z_order: v(e(az) - rho_a(e(z))) at z^{q^k}, or empty
  /// when the difference vanishes to precision.
  std::vector<std::optional<int>> discrepancy;
  /// Relative digits on which the comparison was made (minimum over k).
  int certified_digits;
};

FunctionalEquationReport verify_functional_equation(const DrinfeldModule& mod, const FFElement& a, int z_order);

/// e_a(m) by the F_q-linear product recursion over a degree basis.
LaurentSeries exp_evaluate(const FracIdeal& lattice, const FFElement& m, int prec);

struct TorsionPoint {
  FFElement m;
  /// e(m); exactly zero for m in the lattice.
  LaurentSeries value;
  /// rho_beta(e(m)) for each annihilator beta.
  std::vector<LaurentSeries> images;
  /// Digits of cancellation certified below the largest term rho_beta sums
  /// (empty for m in the lattice).
  std::optional<int> digits;
};

struct TorsionReport {
  std::vector<FFElement> annihilators;
  std::vector<TorsionPoint> points;
  bool pass;
  int min_digits;
};

/// e(m) for m in (modulus^{-1} lattice) / lattice and rho_beta(e(m)) for the
/// HNF generators beta of the modulus; pass when every image vanishes with
/// at least `prec` digits of cancellation.
TorsionReport torsion_check(const DrinfeldModule& mod, const FracIdeal& modulus, int prec);

struct StarActionResult {
  TwistedSeries iso;        // rho_b, monic
  DrinfeldModule image;     // b * rho, lattice b^{-1} a
  /// Precision floor reached by the remainders of rho_b rho_a / rho_b.
  int remainder_floor;
};

StarActionResult star_action(const DrinfeldModule& mod, const FracIdeal& b);

/// J and j of a module from its exponential coefficients (weight 0).
JValue j_from_module(const DrinfeldModule& mod, int prec);

struct SignNormalization {
  bool solvable;
  std::string detail;
  /// w = xi^{q-1}
  std::optional<LaurentSeries> w;
  std::vector<TwistedSeries> normalized_generators;
  std::vector<LaurentSeries> normalized_exp_coeffs;
  /// v(w^{e_i} - W_i) per generator, empty when consistent to precision.
  std::vector<std::optional<int>> consistency;
};

SignNormalization sign_normalization_analysis(const DrinfeldModule& mod);

/// rho_T = T + tau over F_q(T) (rational model).
TwistedPoly<RatFunc> carlitz_rho_T_exact(const GaloisField& F);
/// c_n = c_{n-1}^q / (T^{q^n} - T), exactly.
std::vector<RatFunc> carlitz_exponential_exact(const GaloisField& F, int N);
/// The Carlitz module embedded at infinity with `prec` relative digits.
DrinfeldModule carlitz_reference(const CurveModel& rational, int prec, int N);

/// Embedding of an exact rational function in T = x into F_inf((u)).
LaurentSeries embed_ratfunc(const CurveModel& m, const RatFunc& r, int rel_prec);

}  // namespace drinfeld
