#include "drinfeld/zeta_kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace drinfeld::kernels {

namespace {

using Raw = GaloisField::Raw;

std::uint64_t combination_count(const BlockInput& in) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < in.lower.size(); ++i) total *= in.constants->sub().order();
  return total;
}

// Precomputed scalar multiples c * l_i for every c in F_q.
struct Multiples {
  std::vector<std::vector<LaurentSeries>> m;  // m[i][c]
};

Multiples multiples(const BlockInput& in) {
  const GaloisField& Fq = in.constants->sub();
  Multiples out;
  for (const auto& l : in.lower) {
    std::vector<LaurentSeries> row;
    for (Raw c = 0; c < Fq.order(); ++c) row.push_back(l.scaled((*in.constants)(c)));
    out.m.push_back(std::move(row));
  }
  return out;
}

LaurentSeries term(const BlockInput& in, const Multiples& mult, std::uint64_t code) {
  const std::uint32_t q = in.constants->sub().order();
  LaurentSeries x = in.top;
  for (std::size_t i = 0; i < mult.m.size(); ++i) {
    Raw c = static_cast<Raw>(code % q);
    code /= q;
    if (c) x += mult.m[i][c];
  }
  return x.inverse().pow(in.n).truncated(in.prec);
}

}  // namespace

LaurentSeries inverse_power_sum_serial(const BlockInput& in) {
  const GaloisField& F = in.top.field();
  Multiples mult = multiples(in);
  LaurentSeries acc(F, in.prec);
  std::uint64_t total = combination_count(in);
  for (std::uint64_t code = 0; code < total; ++code) acc += term(in, mult, code);
  return acc;
}

LaurentSeries inverse_power_sum_parallel(const BlockInput& in) {
#ifdef _OPENMP
  const GaloisField& F = in.top.field();
  std::uint64_t total = combination_count(in);
  if (total < 64) return inverse_power_sum_serial(in);
  Multiples mult = multiples(in);
  int nt = omp_get_max_threads();
  std::vector<LaurentSeries> partial(nt, LaurentSeries(F, in.prec));
  const long long ntotal = static_cast<long long>(total);
#pragma omp parallel
  {
    LaurentSeries& mine = partial[omp_get_thread_num()];
#pragma omp for schedule(static)
    for (long long code = 0; code < ntotal; ++code) mine += term(in, mult, static_cast<std::uint64_t>(code));
  }
  LaurentSeries acc(F, in.prec);
  for (const auto& s : partial) acc += s;
  return acc;
#else
  return inverse_power_sum_serial(in);
#endif
}

std::vector<LaurentSeries> subspace_polynomial(const FieldEmbedding& constants, const std::vector<LaurentSeries>& lower,
                                               int prec) {
  const int e = static_cast<int>(constants.sub().degree());
  const GaloisField& F = constants.super();
  const std::uint32_t q = constants.sub().order();
  std::vector<LaurentSeries> a{LaurentSeries::one(F, prec)};
  for (const auto& w : lower) {
    // P_{V + <w>} = P_V^q - P_V(w)^{q-1} P_V
    LaurentSeries pw(F, prec);
    LaurentSeries wk = w;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i) wk = wk.frobenius(e);
      pw += a[i] * wk;
    }
    LaurentSeries c = pw.pow(q - 1);
    std::vector<LaurentSeries> next;
    for (std::size_t i = 0; i <= a.size(); ++i) {
      LaurentSeries t = i < a.size() ? -(c * a[i]) : LaurentSeries(F, prec);
      if (i > 0) t += a[i - 1].frobenius(e);
      next.push_back(std::move(t));
    }
    a = std::move(next);
  }
  return a;
}

LaurentSeries inverse_power_sum_subspace(const BlockInput& in) {
  const GaloisField& F = in.top.field();
  const int e = static_cast<int>(in.constants->sub().degree());
  const long long q = in.constants->sub().order();
  std::vector<LaurentSeries> a = subspace_polynomial(*in.constants, in.lower, in.top.precision());
  LaurentSeries E(F, in.top.precision());
  LaurentSeries tk = in.top;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) tk = tk.frobenius(e);
    E += a[i] * tk;
  }
  LaurentSeries X = E.inverse();
  std::vector<long long> qi{1};
  while (qi.size() < a.size()) qi.push_back(qi.back() * q);
  std::vector<LaurentSeries> S{LaurentSeries(F, in.prec)};
  for (long long k = 1; k <= in.n; ++k) {
    LaurentSeries acc(F, in.prec);
    if (k == 1) acc = a[0];
    for (std::size_t i = 0; i < a.size() && qi[i] < k; ++i) acc += a[i] * S[k - qi[i]];
    S.push_back((acc * X).truncated(in.prec));
  }
  return S[in.n];
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace drinfeld::kernels
