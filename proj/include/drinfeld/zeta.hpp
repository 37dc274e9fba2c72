#pragma once

// Partial zeta values  zeta^a(n) = sum_{x in a^+} x^{-n}  in F_inf((u)) and
// the rank-one invariant
//
//   J(a) = zeta^a(q^2-1) / zeta^a(q-1)^(q+1)
//   j(a) = 1 / ( 1/(T^q-T) - (T^{q^2}-T)/(T^q-T)^{q+1} * J(a) )
//
// with T the model's x.

#include <optional>
#include <vector>

#include "drinfeld/class_group.hpp"
#include "drinfeld/ideal.hpp"
#include "drinfeld/laurent.hpp"

namespace drinfeld {

struct ZetaOptions {
  /// Extra degrees summed beyond the certified truncation degree.
  int extra_truncation = 0;
  bool parallel = true;
  /// Sum each block through the subspace polynomial of its lower span,
  /// falling back to enumeration when that loses precision.
  bool subspace = true;
  /// Use the alternate coset representatives for the sign set S.
  bool alternate_signs = false;
  /// Enumeration budget (number of terms) before PrecisionUnreachable.
  double max_terms = 5e7;
};

struct ZetaValue {
  FracIdeal ideal;
  long long n;
  LaurentSeries value;
  int truncation_degree;
  /// |tail| <= q^{-tail_bound_exponent}.
  long long tail_bound_exponent;
  /// Absolute precision of value (in powers of u).
  int precision;
  long long terms;
};

/// Smallest degree of a positive element of the ideal.
int minimal_positive_degree(const FracIdeal& ideal, const SignData& signs);

/// k with n = q^k - 1, or 0.
int carlitz_index(long long n, std::uint32_t q);

/// Smallest j > 0 with (q-1) | j and binom(-n, j) != 0 mod p: a sum over
/// an F_q-line beta + F_q a_0 has absolute value <= |a_0|^{-n} |beta/a_0|^{-n-j}.
int leading_gap(long long n, std::uint32_t q);

/// A-priori exponent E with |sum of blocks beyond degree D| <= q^{-E};
/// lower_dim is the number of basis vectors of degree <= D.
long long tail_exponent(long long n, std::uint32_t q, int D0, int D, int lower_dim);

/// Subsum over (c . (a_0..a_{i-1}) + a_i)^{-n}, c in F_q^i.
LaurentSeries omega_block(const DegreeBasis& basis, std::size_t i, long long n, int prec, bool parallel = true);

ZetaValue zeta_partial(const FracIdeal& ideal, long long n, int prec, const ZetaOptions& opts = {});

struct JValue {
  std::size_t class_index = 0;
  LaurentSeries J;
  LaurentSeries j;
  /// min relative precision of J and j.
  int precision;
};

/// j = 1 / (1/(T^q-T) - (T^{q^2}-T)/(T^q-T)^{q+1} * J); empty if the
/// denominator vanishes to the precision of J.
std::optional<LaurentSeries> j_from_J(const CurveModel& m, const LaurentSeries& J);

JValue j_invariant(const FracIdeal& ideal, int prec, const ZetaOptions& opts = {});

struct JTable {
  std::vector<JValue> entries;
  /// v(j_i - j_k), empty when the difference vanishes to precision.
  std::vector<std::vector<std::optional<int>>> j_separation;
  std::vector<std::vector<std::optional<int>>> J_separation;
  bool pairwise_distinct() const;
};

JTable j_table(const IdealClassTable& classes, int prec, const ZetaOptions& opts = {});

/// v(a - b) or empty if a and b agree to their common precision.
std::optional<int> separation(const LaurentSeries& a, const LaurentSeries& b);

}  // namespace drinfeld
