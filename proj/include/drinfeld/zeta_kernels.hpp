#pragma once

// Inner loops of partial zeta sums: for a top series t and lower series
// l_1..l_m (all embedded at infinity) compute
//
//   sum_{c in F_q^m} (t + c_1 l_1 + ... + c_m l_m)^{-n}   mod u^prec.
//
// The serial version is the reference; the parallel one splits the
// coefficient range across OpenMP threads and must agree exactly.
//
// The subspace version avoids the enumeration: with V the F_q-span of the
// l_i and P_V(X) = prod_{v in V} (X - v) = sum a_i X^{q^i}, the sums
// S_k = sum_v (t + v)^{-k} satisfy
//
//   S_1 = a_0 / P_V(t),   S_k = (sum_{q^i < k} a_i S_{k - q^i}) / P_V(t).

#include <vector>

#include "drinfeld/gf.hpp"
#include "drinfeld/laurent.hpp"

namespace drinfeld::kernels {

struct BlockInput {
  const FieldEmbedding* constants;  // F_q -> F_inf
  LaurentSeries top;
  std::vector<LaurentSeries> lower;
  long long n;
  int prec;
};

LaurentSeries inverse_power_sum_serial(const BlockInput& in);
LaurentSeries inverse_power_sum_parallel(const BlockInput& in);
/// Precision of the result follows the inputs and may fall below in.prec
/// when the l_i nearly cancel; callers check precision().
LaurentSeries inverse_power_sum_subspace(const BlockInput& in);

/// Coefficients a_0..a_m of P_V for V = span(lower); a_m = 1.
std::vector<LaurentSeries> subspace_polynomial(const FieldEmbedding& constants, const std::vector<LaurentSeries>& lower,
                                               int prec);

/// Threads OpenMP would use (1 without OpenMP).
int max_threads();

}  // namespace drinfeld::kernels
