#include "drinfeld/zeta.hpp"

#include <algorithm>
#include <cmath>

#include "drinfeld/error.hpp"
#include "drinfeld/zeta_kernels.hpp"

namespace drinfeld {

using Raw = GaloisField::Raw;

int minimal_positive_degree(const FracIdeal& ideal, const SignData& signs) {
  const CurveModel& m = ideal.model();
  int lo = ideal.norm_degree();
  for (int B = lo; B <= lo + 2 * m.genus() + 2 * m.d_inf() + 2; ++B) {
    DegreeBasis db = degree_basis(ideal, B, signs);
    if (!db.vectors.empty()) return db.vectors.front().degree;
  }
  throw Error(ErrorCode::BasisTooShort, "ideal has no element of small degree");
}

int carlitz_index(long long n, std::uint32_t q) {
  long long p = 1;
  for (int k = 1; k < 40; ++k) {
    p *= q;
    if (p - 1 == n) return k;
    if (p - 1 > n) break;
  }
  return 0;
}

namespace {

// binom(a, b) mod p by Lucas.
bool binomial_nonzero_mod_p(long long a, long long b, long long p) {
  while (b > 0) {
    if (b % p > a % p) return false;
    a /= p;
    b /= p;
  }
  return true;
}

}  // namespace

int leading_gap(long long n, std::uint32_t q) {
  // sum_{c in F_q} (beta + c)^{-n} = -sum_{(q-1) | j > 0} binom(-n, j) beta^{-n-j}
  long long ch = 2;
  while (q % ch) ++ch;
  for (long long j = q - 1;; j += q - 1)
    if (binomial_nonzero_mod_p(n + j - 1, j, ch)) return static_cast<int>(j);
}

long long tail_exponent(long long n, std::uint32_t q, int D0, int D, int lower_dim) {
  // line bound: sum over beta + F_q a_0
  long long line = n * D0 + (n + leading_gap(n, q)) * static_cast<long long>(D + 1 - D0);
  // space bound: power sums over an r-dimensional F_q-space vanish below
  // degree q^r - 1
  long long qr = 1;
  for (int i = 0; i < lower_dim && qr < (1LL << 40); ++i) qr *= q;
  long long space = n * static_cast<long long>(D + 1) + (qr - 1);
  return std::max(line, space);
}

namespace {

// Absolute precision needed for an element of degree d so that x^{-n}
// is known mod u^prec.
int element_precision(int prec, long long n, int d, int dinf) {
  return static_cast<int>(prec - (n + 1) * d / dinf);
}

bool block_negligible(int prec, long long n, int d, int dinf) { return n * d / dinf >= prec; }

// Extra input digits for the subspace kernel, which loses a little to
// cancellation between lower vectors of equal degree.
constexpr int kSubspaceMargin = 8;

LaurentSeries run_block(const kernels::BlockInput& in, bool parallel) {
  return parallel ? kernels::inverse_power_sum_parallel(in) : kernels::inverse_power_sum_serial(in);
}

LaurentSeries run_block(const kernels::BlockInput& in, const ZetaOptions& opts) {
  if (opts.subspace && !in.lower.empty()) {
    try {
      LaurentSeries s = kernels::inverse_power_sum_subspace(in);
      if (s.precision() >= in.prec) return s;
    } catch (const Error&) {
    }
    kernels::BlockInput cut = in;
    int ep = in.top.precision() - kSubspaceMargin;
    cut.top = cut.top.truncated(ep);
    for (auto& l : cut.lower) l = l.truncated(ep);
    return run_block(cut, opts.parallel);
  }
  return run_block(in, opts.parallel);
}

}  // namespace

LaurentSeries omega_block(const DegreeBasis& basis, std::size_t i, long long n, int prec, bool parallel) {
  const CurveModel& m = basis.ideal.model();
  if (i == 0 || i >= basis.vectors.size()) throw Error(ErrorCode::BasisTooShort, "omega block index beyond basis");
  int d = basis.vectors[i].degree;
  int dinf = m.d_inf();
  if (block_negligible(prec, n, d, dinf)) return LaurentSeries(m.inf_field(), prec);
  int ep = element_precision(prec, n, d, dinf);
  kernels::BlockInput in{&m.constants(), embed_at_infinity(basis.vectors[i].value, ep), {}, n, prec};
  for (std::size_t k = 0; k < i; ++k) in.lower.push_back(embed_at_infinity(basis.vectors[k].value, ep));
  return run_block(in, parallel);
}

ZetaValue zeta_partial(const FracIdeal& ideal, long long n, int prec, const ZetaOptions& opts) {
  if (n < 1) throw Error(ErrorCode::PrecisionTooLow, "zeta exponent must be positive");
  const CurveModel& m = ideal.model();
  const GaloisField& Fq = m.base_field();
  const GaloisField& Finf = m.inf_field();
  const FieldEmbedding& E = m.constants();
  SignData signs(m, opts.alternate_signs);
  const int dinf = m.d_inf();
  const std::uint32_t q = m.q();

  int D0 = minimal_positive_degree(ideal, signs);
  // grow the basis until the certified tail is below u^prec
  int D = D0;
  DegreeBasis basis = degree_basis(ideal, D, signs);
  while (tail_exponent(n, q, D0, D, static_cast<int>(basis.vectors.size())) < static_cast<long long>(prec) * dinf) {
    D += dinf;
    basis = degree_basis(ideal, D, signs);
  }
  long long tail = tail_exponent(n, q, D0, D, static_cast<int>(basis.vectors.size()));
  if (opts.extra_truncation > 0) {
    D += opts.extra_truncation;
    basis = degree_basis(ideal, D, signs);
    tail = tail_exponent(n, q, D0, D, static_cast<int>(basis.vectors.size()));
  }

  // embed each basis vector once, at the precision its own block needs
  const int margin = opts.subspace ? kSubspaceMargin : 0;
  std::vector<LaurentSeries> emb;
  for (const auto& v : basis.vectors) {
    int ep = element_precision(prec, n, v.degree, dinf) + margin;
    emb.push_back(block_negligible(prec, n, v.degree, dinf) ? LaurentSeries(Finf, ep)
                                                             : embed_at_infinity(v.value, ep));
  }

  double budget = 0;
  for (int d : basis.realized_degrees()) {
    if (block_negligible(prec, n, d, dinf)) continue;
    auto [b, e] = basis.block(d);
    budget += std::pow(static_cast<double>(q), static_cast<double>(opts.subspace ? e - b : e));
  }
  if (budget > opts.max_terms)
    throw Error(ErrorCode::PrecisionUnreachable,
                "zeta sum needs about " + std::to_string(static_cast<long long>(budget)) + " terms");

  LaurentSeries total(Finf, prec);
  long long terms = 0;
  for (int d : basis.realized_degrees()) {
    if (block_negligible(prec, n, d, dinf)) continue;
    auto [b, e] = basis.block(d);
    int ep = element_precision(prec, n, d, dinf) + margin;
    std::vector<LaurentSeries> lower;
    for (std::size_t k = 0; k < b; ++k) lower.push_back(emb[k].truncated(ep));
    // every F_q-combination of the top vectors with sign in S
    std::size_t tk = e - b;
    std::size_t ncomb = 1;
    for (std::size_t i = 0; i < tk; ++i) ncomb *= Fq.order();
    for (std::size_t code = 1; code < ncomb; ++code) {
      std::size_t c = code;
      Raw sign = 0;
      LaurentSeries top(Finf, ep);
      for (std::size_t i = 0; i < tk; ++i) {
        Raw t = static_cast<Raw>(c % Fq.order());
        c /= Fq.order();
        if (!t) continue;
        sign = Finf.add(sign, Finf.mul(E(t), basis.vectors[b + i].sign));
        top += emb[b + i].truncated(ep).scaled(E(t));
      }
      if (sign == 0 || !signs.contains(sign)) continue;
      kernels::BlockInput in{&E, top, lower, n, prec};
      total += run_block(in, opts);
      terms += static_cast<long long>(std::pow(static_cast<double>(q), static_cast<double>(b)));
    }
  }
  return ZetaValue{ideal, n, total, D, tail, prec, terms};
}

std::optional<int> separation(const LaurentSeries& a, const LaurentSeries& b) {
  LaurentSeries d = a - b;
  if (d.is_zero()) return std::nullopt;
  return d.valuation();
}

std::optional<LaurentSeries> j_from_J(const CurveModel& m, const LaurentSeries& J) {
  const long long q = m.q();
  const int dinf = m.d_inf();
  // T = x at infinity, with ample relative precision for T^{q^2}
  int degx = m.is_rational() ? 1 : 2;
  int vT = -degx / dinf;
  int R = J.relative_precision();
  LaurentSeries T = embed_at_infinity(FFElement::x(m), R + 8 + static_cast<int>(q * q) * (-vT) + vT);
  LaurentSeries A = T.pow(q) - T;
  LaurentSeries B = T.pow(q * q) - T;
  LaurentSeries Ainv = A.inverse();
  LaurentSeries bracket = Ainv - B * Ainv.pow(q + 1) * J;
  if (bracket.is_zero()) return std::nullopt;
  return bracket.inverse();
}

JValue j_invariant(const FracIdeal& ideal, int prec, const ZetaOptions& opts) {
  const CurveModel& m = ideal.model();
  const long long q = m.q();
  const int dinf = m.d_inf();
  SignData signs(m, opts.alternate_signs);
  int D0 = minimal_positive_degree(ideal, signs);
  const long long n1 = q - 1, n2 = q * q - 1;
  int extra = 4;
  const int cap = 10 * prec + 200;
  while (extra <= cap) {
    int R = prec + extra;
    int W1 = static_cast<int>(R + n1 * D0 / dinf);
    int W2 = static_cast<int>(R + n2 * D0 / dinf);
    LaurentSeries Z1 = zeta_partial(ideal, n1, W1, opts).value;
    LaurentSeries Z2 = zeta_partial(ideal, n2, W2, opts).value;
    LaurentSeries J = Z2 / Z1.pow(q + 1);
    std::optional<LaurentSeries> j = j_from_J(m, J);
    int deficit = prec;
    if (j) {
      int got = std::min(j->relative_precision(), J.relative_precision());
      if (got >= prec) return JValue{0, J, *j, got};
      deficit = prec - got;
    }
    extra += std::max(8, deficit);
  }
  throw Error(ErrorCode::DenominatorVanishes, "j denominator vanishes to working precision; raise --prec");
}

bool JTable::pairwise_distinct() const {
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t k = i + 1; k < entries.size(); ++k)
      if (!j_separation[i][k]) return false;
  return true;
}

JTable j_table(const IdealClassTable& classes, int prec, const ZetaOptions& opts) {
  JTable t;
  for (std::size_t i = 0; i < classes.order(); ++i) {
    JValue v = j_invariant(classes.representative(i), prec, opts);
    v.class_index = i;
    t.entries.push_back(std::move(v));
  }
  std::size_t h = t.entries.size();
  t.j_separation.assign(h, std::vector<std::optional<int>>(h));
  t.J_separation.assign(h, std::vector<std::optional<int>>(h));
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t k = 0; k < h; ++k)
      if (i != k) {
        t.j_separation[i][k] = separation(t.entries[i].j, t.entries[k].j);
        t.J_separation[i][k] = separation(t.entries[i].J, t.entries[k].J);
      }
  return t;
}

}  // namespace drinfeld
