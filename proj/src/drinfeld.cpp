#include "drinfeld/drinfeld.hpp"

#include <algorithm>

#include "drinfeld/error.hpp"

namespace drinfeld {

using Raw = GaloisField::Raw;

namespace {

long long ipow(long long b, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// The field generator count of the twist: tau a = a^(p^m) tau.
int twist_exponent(const CurveModel& m) { return static_cast<int>(m.base_field().degree()); }

LaurentSeries embed_rel(const FFElement& a, int rel_prec) {
  return embed_at_infinity(a, rel_prec + degree_valuation(a).v);
}

int tau_degree(const FFElement& a) { return degree(a); }

std::vector<FFElement> ring_generators(const CurveModel& m) {
  if (m.is_rational()) return {FFElement::x(m)};
  return {FFElement::x(m), FFElement::y(m)};
}

}  // namespace

WeightedValue WeightedValue::operator+(const WeightedValue& o) const {
  if (xi_weight != o.xi_weight) throw Error(ErrorCode::DomainMismatch, "adding values of different xi-weight");
  return {value + o.value, xi_weight};
}

WeightedValue WeightedValue::operator-(const WeightedValue& o) const {
  if (xi_weight != o.xi_weight) throw Error(ErrorCode::DomainMismatch, "subtracting values of different xi-weight");
  return {value - o.value, xi_weight};
}

WeightedValue WeightedValue::operator*(const WeightedValue& o) const {
  return {value * o.value, xi_weight + o.xi_weight};
}

long long DrinfeldModule::coefficient_weight(int i) const { return 1 - ipow(model->q(), i); }

int min_relative_precision(const std::vector<LaurentSeries>& v) {
  int r = 1 << 30;
  for (const auto& s : v)
    if (!s.is_zero()) r = std::min(r, s.relative_precision());
  return r;
}

TwistedSeries DrinfeldModule::rho(const FFElement& a) const {
  const CurveModel& m = *model;
  if (!a.is_integral()) throw Error(ErrorCode::DomainMismatch, "rho is defined on A only");
  const GaloisField& Finf = m.inf_field();
  const FieldEmbedding& E = m.constants();
  const int e = twist_exponent(m);
  int pc = 0;
  for (const auto& r : rho_generators)
    for (const auto& c : r.coeffs()) pc = std::max(pc, c.precision());
  pc += 16;
  auto constant = [&](Raw c) { return TwistedSeries::constant(LaurentSeries::monomial(Finf, 0, E(c), pc), e); };
  auto horner = [&](const Poly& u) {
    TwistedSeries acc(e);
    for (int i = u.degree(); i >= 0; --i) {
      acc = acc * rho_generators[0];
      if (u.coeff(i)) acc = acc + constant(u.coeff(i));
    }
    return acc;
  };
  TwistedSeries r = horner(a.u());
  if (!a.v().is_zero()) r = r + horner(a.v()) * rho_generators.at(1);
  return r;
}

std::vector<LaurentSeries> lattice_power_sums(const FracIdeal& lattice, int max_n, int prec, const ZetaOptions& opts) {
  const CurveModel& m = lattice.model();
  const int q = static_cast<int>(m.q());
  SignData signs(m, opts.alternate_signs);
  int D0 = minimal_positive_degree(lattice, signs);
  std::vector<LaurentSeries> out;
  out.emplace_back(m.inf_field(), prec);
  for (int n = 1; n <= max_n; ++n) {
    int W = prec + n * D0 / m.d_inf();
    if (n % (q - 1) != 0) {
      out.emplace_back(m.inf_field(), W);
      continue;
    }
    // sum over c in F_q^x of c^{-n} is -1 when (q-1) | n
    out.push_back(-zeta_partial(lattice, n, W, opts).value);
  }
  return out;
}

std::vector<LaurentSeries> exponential_from_lattice(const std::vector<LaurentSeries>& sums, std::uint32_t q, int N) {
  const long long M = ipow(q, N) - 1;
  if (static_cast<long long>(sums.size()) <= M)
    throw Error(ErrorCode::InsufficientCoefficients, "power sums do not reach q^N - 1");
  const GaloisField& F = sums.at(1).field();
  int pmax = 0;
  for (long long k = 1; k <= M; ++k) pmax = std::max(pmax, sums[k].precision());
  // e(z) = sum_m e_m z^{m+1};  e_m = sum_{k=1}^m S_k e_{m-k}
  std::vector<std::optional<LaurentSeries>> e(M + 1);
  e[0] = LaurentSeries::one(F, pmax);
  std::vector<LaurentSeries> c{*e[0]};
  long long next_power = q;  // next m + 1 of the form q^n
  for (long long mm = 1; mm <= M; ++mm) {
    if (mm % (q - 1) != 0) continue;
    std::optional<LaurentSeries> acc;
    for (long long k = q - 1; k <= mm; k += q - 1) {
      if (!e[mm - k]) continue;
      LaurentSeries t = sums[k] * *e[mm - k];
      acc = acc ? *acc + t : t;
    }
    if (mm + 1 == next_power) {
      e[mm] = *acc;
      c.push_back(*acc);
      next_power *= q;
    } else if (acc && !acc->is_zero()) {
      throw Error(ErrorCode::InconsistentSeries,
                  "coefficient of z^" + std::to_string(mm + 1) + " in e(z) does not vanish (valuation " +
                      std::to_string(acc->valuation()) + ", precision " + std::to_string(acc->precision()) + ")");
    }
  }
  return c;
}

TwistedSeries module_from_exponential(const std::vector<LaurentSeries>& c, const FFElement& a, int prec_hint) {
  const CurveModel& m = a.model();
  const int e = twist_exponent(m);
  int d = tau_degree(a);
  if (d < 0 || static_cast<int>(c.size()) <= d)
    throw Error(ErrorCode::InsufficientCoefficients, "need exponential coefficients through q^" + std::to_string(d));
  int rel = std::max(prec_hint, min_relative_precision(c)) + 16;
  LaurentSeries A = embed_rel(a, rel);
  std::vector<LaurentSeries> g{A};
  for (int k = 1; k <= d; ++k) {
    LaurentSeries gk = c[k] * A.frobenius(e * k) - A * c[k];
    for (int i = 1; i < k; ++i) gk -= g[i] * c[k - i].frobenius(e * i);
    g.push_back(gk);
  }
  if (d > 0 && g.back().is_zero())
    throw Error(ErrorCode::PrecisionLoss, "top coefficient of rho_" + a.to_string() + " vanishes to precision " +
                                              std::to_string(g.back().precision()));
  return TwistedSeries(std::move(g), e);
}

std::vector<LaurentSeries> exponential_from_module(const TwistedSeries& rho_a, const FFElement& a, int N) {
  const CurveModel& m = a.model();
  const int e = twist_exponent(m);
  int d = rho_a.degree();
  if (d < 1) throw Error(ErrorCode::InsufficientCoefficients, "module generator of degree 0");
  int rel = min_relative_precision(rho_a.coeffs()) + 16;
  LaurentSeries A = embed_rel(a, rel);
  std::vector<LaurentSeries> c{LaurentSeries::one(m.inf_field(), rho_a.coeff(0).precision() + 16)};
  for (int k = 1; k <= N; ++k) {
    std::optional<LaurentSeries> num;
    if (k <= d) num = rho_a.coeff(k);
    for (int i = 1; i < k && i <= d; ++i) {
      LaurentSeries t = rho_a.coeff(i) * c[k - i].frobenius(e * i);
      num = num ? *num + t : t;
    }
    c.push_back(*num / (A.frobenius(e * k) - A));
  }
  return c;
}

DrinfeldModule build_module(const FracIdeal& lattice, int prec, int N, const ZetaOptions& opts) {
  const CurveModel& m = lattice.model();
  const std::uint32_t q = m.q();
  std::vector<FFElement> gens = ring_generators(m);
  for (const auto& g : gens) N = std::max(N, tau_degree(g));
  int extra = 16;
  for (int attempt = 0; attempt < 12; ++attempt) {
    int W = prec + extra;
    std::vector<LaurentSeries> sums = lattice_power_sums(lattice, static_cast<int>(ipow(q, N) - 1), W, opts);
    std::vector<LaurentSeries> c = exponential_from_lattice(sums, q, N);
    DrinfeldModule mod{&m, lattice, {}, gens, {}, 0};
    for (int n = 0; n <= N; ++n) mod.exp_coeffs.push_back({c[n], 1 - ipow(q, n)});
    int got = min_relative_precision(c);
    bool short_top = false;
    for (const auto& g : gens) {
      try {
        mod.rho_generators.push_back(module_from_exponential(c, g, prec));
      } catch (const Error& err) {
        if (err.code() != ErrorCode::PrecisionLoss) throw;
        short_top = true;
        break;
      }
      got = std::min(got, min_relative_precision(mod.rho_generators.back().coeffs()));
    }
    if (short_top) {
      extra = 2 * extra + 32;
      continue;
    }
    mod.precision = got;
    if (got >= prec) return mod;
    extra += (prec - got) + 8;
  }
  throw Error(ErrorCode::PrecisionUnreachable, "module coefficients did not reach the requested precision");
}

FunctionalEquationReport verify_functional_equation(const DrinfeldModule& mod, const FFElement& a, int z_order) {
  const CurveModel& m = *mod.model;
  const int e = twist_exponent(m);
  if (static_cast<int>(mod.exp_coeffs.size()) <= z_order)
    throw Error(ErrorCode::InsufficientCoefficients, "exponential known only through q^" +
                                                         std::to_string(mod.exp_coeffs.size() - 1));
  TwistedSeries rho_a = mod.rho(a);
  LaurentSeries A = embed_rel(a, mod.precision + 16);
  FunctionalEquationReport rep{true, z_order, {}, 1 << 30};
  for (int k = 0; k <= z_order; ++k) {
    const LaurentSeries& ck = mod.exp_coeffs[k].value;
    LaurentSeries lhs = ck * A.frobenius(e * k);
    std::optional<LaurentSeries> rhs;
    for (int i = 0; i <= std::min(k, rho_a.degree()); ++i) {
      LaurentSeries t = rho_a.coeff(i) * mod.exp_coeffs[k - i].value.frobenius(e * i);
      rhs = rhs ? *rhs + t : t;
    }
    LaurentSeries diff = lhs - *rhs;
    rep.certified_digits = std::min(rep.certified_digits, diff.precision() - lhs.valuation());
    if (diff.is_zero()) {
      rep.discrepancy.emplace_back();
    } else {
      rep.discrepancy.emplace_back(diff.valuation());
      rep.pass = false;
    }
  }
  if (rep.certified_digits < 1) rep.pass = false;
  return rep;
}

LaurentSeries exp_evaluate(const FracIdeal& lattice, const FFElement& mval, int prec) {
  const CurveModel& m = lattice.model();
  const GaloisField& Finf = m.inf_field();
  const int q = static_cast<int>(m.q());
  if (mval.is_zero() || lattice.contains(mval)) return LaurentSeries(Finf, prec);
  SignData signs(m);
  // Once V holds every lattice vector of degree <= D, each remaining factor
  // 1 - (e_V(z)/e_V(l))^{q-1} is 1 up to |e_V(z)/e_V(w)|^{q-1}, w the next
  // basis vector, since |e_V(l)| only grows with deg l.
  int D = std::max(degree(mval), lattice.norm_degree()) + 2 * m.genus() + 2 * m.d_inf() + 2;
  for (int round = 0; round < 8; ++round, D *= 2) {
    DegreeBasis basis = degree_basis(lattice, D, signs);
    const auto& vec = basis.vectors;
    for (int margin = 16; margin <= 256; margin *= 2) {
      std::vector<LaurentSeries> vals;
      for (const auto& v : vec) vals.push_back(embed_rel(v.value, prec + margin));
      LaurentSeries em = embed_rel(mval, prec + margin);
      bool lost = false;
      for (std::size_t i = 0; i < vals.size(); ++i) {
        if (vals[i].is_zero() || em.is_zero()) {
          lost = true;
          break;
        }
        LaurentSeries scale = vals[i].pow(q - 1).inverse();
        for (std::size_t j = i + 1; j < vals.size(); ++j) vals[j] -= vals[j].pow(q) * scale;
        em -= em.pow(q) * scale;
        std::size_t nx = i + 1;
        if (nx == vals.size() || vec[nx].degree == vec[i].degree) continue;
        if (em.is_zero() || vals[nx].is_zero()) {
          lost = true;
          break;
        }
        long long gap = static_cast<long long>(q - 1) * (em.valuation() - vals[nx].valuation());
        if (gap < prec) continue;
        int digits = static_cast<int>(std::min<long long>(gap, em.relative_precision()));
        if (digits < prec) {
          lost = true;
          break;
        }
        return em.truncated(em.valuation() + prec);
      }
      if (!lost) break;  // ran out of vectors: widen D
    }
  }
  throw Error(ErrorCode::PrecisionUnreachable, "exponential value lost precision");
}

TorsionReport torsion_check(const DrinfeldModule& mod, const FracIdeal& modulus, int prec) {
  if (!modulus.is_integral()) throw Error(ErrorCode::ZeroModulus, "modulus must be an integral ideal");
  TorsionReport out{modulus.lattice_basis(), {}, true, 1 << 30};
  std::vector<TwistedSeries> rhos;
  for (const auto& beta : out.annihilators) rhos.push_back(mod.rho(beta));
  for (const auto& mval : torsion_representatives(mod.lattice, modulus)) {
    TorsionPoint pt{mval, exp_evaluate(mod.lattice, mval, prec), {}, std::nullopt};
    const bool trivial = pt.value.is_zero();
    for (const auto& r : rhos) {
      LaurentSeries img = r(pt.value);
      if (!trivial) {
        // largest term of sum_k g_k e^{q^k}
        int top = 1 << 30;
        LaurentSeries zk = pt.value;
        for (int k = 0; k <= r.degree(); ++k) {
          if (k > 0) zk = zk.frobenius(r.frobenius_exponent());
          if (!r.coeff(k).is_zero()) top = std::min(top, r.coeff(k).valuation() + zk.valuation());
        }
        int d = img.precision() - top;
        pt.digits = pt.digits ? std::min(*pt.digits, d) : d;
      }
      if (!img.is_zero()) out.pass = false;
      pt.images.push_back(std::move(img));
    }
    if (pt.digits) {
      out.min_digits = std::min(out.min_digits, *pt.digits);
      if (*pt.digits < prec) out.pass = false;
    }
    out.points.push_back(std::move(pt));
  }
  return out;
}

JValue j_from_module(const DrinfeldModule& mod, int prec) {
  const CurveModel& m = *mod.model;
  const long long q = m.q();
  if (mod.exp_coeffs.size() < 3) throw Error(ErrorCode::InsufficientCoefficients, "j needs c_1 and c_2");
  const long long M = q * q - 1;
  // E(z) = e(z)/z = sum e_k z^k; 1/E = 1 - sum S_k z^k
  const GaloisField& F = m.inf_field();
  std::vector<std::optional<LaurentSeries>> ek(M + 1);
  ek[0] = mod.exp_coeffs[0].value;
  ek[q - 1] = mod.exp_coeffs[1].value;
  ek[M] = mod.exp_coeffs[2].value;
  std::vector<std::optional<LaurentSeries>> inv(M + 1);
  inv[0] = LaurentSeries::one(F, ek[0]->precision());
  for (long long k = 1; k <= M; ++k) {
    for (long long i = 1; i <= k; ++i) {
      if (!ek[i] || !inv[k - i]) continue;
      LaurentSeries t = -(*ek[i] * *inv[k - i]);
      inv[k] = inv[k] ? *inv[k] + t : t;
    }
  }
  // zeta(n) = -S_n = inv_n
  LaurentSeries Z1 = *inv[q - 1], Z2 = *inv[M];
  LaurentSeries J = Z2 / Z1.pow(q + 1);
  std::optional<LaurentSeries> j = j_from_J(m, J);
  if (!j) throw Error(ErrorCode::DenominatorVanishes, "j denominator vanishes at module precision");
  int got = std::min(J.relative_precision(), j->relative_precision());
  if (got < prec)
    throw Error(ErrorCode::PrecisionLoss, "module data certify only " + std::to_string(got) + " digits of j");
  return JValue{0, J, *j, got};
}

StarActionResult star_action(const DrinfeldModule& mod, const FracIdeal& b) {
  const CurveModel& m = *mod.model;
  if (!b.is_integral()) throw Error(ErrorCode::DomainMismatch, "star action needs an integral ideal");
  const int q = static_cast<int>(m.q());
  const int e = mod.rho_generators.at(0).frobenius_exponent();
  const GaloisField& F = m.inf_field();
  const int work = mod.precision + 10;
  // rho_b is the monic additive polynomial vanishing on e(b^{-1} a / a):
  // P_{V + <w>} = (tau - P_V(e(w))^{q-1}) P_V
  std::vector<FFElement> reps = torsion_representatives(mod.lattice, b);
  TwistedSeries iso = TwistedSeries::constant(LaurentSeries::one(F, work + 64), e);
  for (std::size_t idx = 1; idx < reps.size(); idx *= static_cast<std::size_t>(q)) {
    LaurentSeries t = iso(exp_evaluate(mod.lattice, reps[idx], work));
    if (t.is_zero()) throw Error(ErrorCode::PrecisionLoss, "torsion point collapsed in rho_b");
    LaurentSeries one = LaurentSeries::one(F, work + 64);
    TwistedSeries step({-t.pow(q - 1), one}, e);
    iso = step * iso;
  }
  if (iso.degree() != b.norm_degree())
    throw Error(ErrorCode::RemainderNotZero, "deg rho_b = " + std::to_string(iso.degree()) + " but deg N(b) = " +
                                                 std::to_string(b.norm_degree()));
  int floor = 1 << 30;
  auto check_zero = [&](const TwistedSeries& rem, const std::string& what) {
    if (!rem.is_zero()) throw Error(ErrorCode::RemainderNotZero, what + ": remainder " + rem.to_string());
  };
  auto note_floor = [&](const TwistedSeries& f, const TwistedSeries& g) {
    // remainder digits are certified only up to the precision of the inputs
    for (const auto& c : f.coeffs()) floor = std::min(floor, c.precision());
    for (const auto& c : g.coeffs()) floor = std::min(floor, c.precision());
  };
  // rho_b right-divides rho_beta for the generators of b
  for (const auto& beta : b.lattice_basis()) {
    TwistedSeries rb = mod.rho(beta);
    note_floor(rb, iso);
    check_zero(tw_right_divmod(rb, iso).second, "rho_beta not right divisible by rho_b");
  }
  DrinfeldModule image{&m, b.inverse() * mod.lattice, {}, mod.generators, {}, 0};
  int got = 1 << 30;
  for (std::size_t i = 0; i < mod.generators.size(); ++i) {
    TwistedSeries prod = iso * mod.rho_generators[i];
    note_floor(prod, iso);
    auto [psi, rem] = tw_right_divmod(prod, iso);
    check_zero(rem, "rho_b rho_a not right divisible by rho_b");
    got = std::min(got, min_relative_precision(psi.coeffs()));
    image.rho_generators.push_back(psi);
  }
  int N = static_cast<int>(mod.exp_coeffs.size()) - 1;
  std::vector<LaurentSeries> c = exponential_from_module(image.rho_generators[0], mod.generators[0], N);
  for (int n = 0; n <= N; ++n) image.exp_coeffs.push_back({c[n], 1 - ipow(m.q(), n)});
  image.precision = std::min(got, min_relative_precision(c));
  return {iso, image, floor};
}

SignNormalization sign_normalization_analysis(const DrinfeldModule& mod) {
  const CurveModel& m = *mod.model;
  if (m.d_inf() != 1)
    throw Error(ErrorCode::UnsupportedInfinitePlace,
                "sign normalization for d_inf = " + std::to_string(m.d_inf()) + " needs a twisted sign function");
  const long long q = m.q();
  SignNormalization out{false, "", std::nullopt, {}, {}, {}};
  // w^{e_d} = g_d(a) / sgn(a),  e_d = (q^d - 1)/(q - 1)
  std::vector<long long> ex;
  std::vector<LaurentSeries> W;
  for (std::size_t i = 0; i < mod.generators.size(); ++i) {
    const TwistedSeries& r = mod.rho_generators[i];
    int d = r.degree();
    ex.push_back((ipow(q, d) - 1) / (q - 1));
    Raw s = sgn_of(mod.generators[i]);
    W.push_back(r.lead().scaled(m.inf_field().inv(s)));
  }
  // Bezout combination of the exponents
  long long g = ex[0];
  std::vector<long long> coef{1};
  for (std::size_t i = 1; i < ex.size(); ++i) {
    // extended Euclid on (g, ex[i])
    long long a = g, b = ex[i], s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (b) {
      long long qq = a / b;
      std::tie(a, b) = std::make_pair(b, a - qq * b);
      std::tie(s0, s1) = std::make_pair(s1, s0 - qq * s1);
      std::tie(t0, t1) = std::make_pair(t1, t0 - qq * t1);
    }
    for (auto& c : coef) c *= s0;
    coef.push_back(t0);
    g = a;
  }
  if (g != 1) {
    out.detail = "exponents (q^d-1)/(q-1) of the generators have gcd " + std::to_string(g);
    return out;
  }
  LaurentSeries w = LaurentSeries::one(m.inf_field(), W[0].precision() + 16);
  for (std::size_t i = 0; i < W.size(); ++i) {
    if (coef[i] >= 0)
      w *= W[i].pow(coef[i]);
    else
      w *= W[i].inverse().pow(-coef[i]);
  }
  out.solvable = true;
  for (std::size_t i = 0; i < W.size(); ++i) {
    auto sep = separation(w.pow(ex[i]), W[i]);
    out.consistency.push_back(sep);
    if (sep) out.solvable = false;
  }
  out.w = w;
  LaurentSeries winv = w.inverse();
  for (const auto& r : mod.rho_generators) {
    std::vector<LaurentSeries> g2;
    for (int i = 0; i <= r.degree(); ++i) g2.push_back(r.coeff(i) * winv.pow((ipow(q, i) - 1) / (q - 1)));
    out.normalized_generators.emplace_back(std::move(g2), r.frobenius_exponent());
  }
  for (std::size_t n = 0; n < mod.exp_coeffs.size(); ++n)
    out.normalized_exp_coeffs.push_back(mod.exp_coeffs[n].value *
                                        winv.pow((ipow(q, static_cast<int>(n)) - 1) / (q - 1)));
  out.detail = out.solvable ? "w = xi^(q-1) solved from the top coefficients" : "top coefficients are inconsistent";
  return out;
}

TwistedPoly<RatFunc> carlitz_rho_T_exact(const GaloisField& F) {
  return TwistedPoly<RatFunc>({RatFunc::variable(F), RatFunc::constant(F, 1)}, static_cast<int>(F.degree()));
}

std::vector<RatFunc> carlitz_exponential_exact(const GaloisField& F, int N) {
  const long long q = F.order();
  std::vector<RatFunc> c{RatFunc::constant(F, 1)};
  RatFunc T = RatFunc::variable(F);
  for (int n = 1; n <= N; ++n) c.push_back(c.back().pow(q) / (T.pow(ipow(q, n)) - T));
  return c;
}

LaurentSeries embed_ratfunc(const CurveModel& m, const RatFunc& r, int rel_prec) {
  if (r.is_zero()) return LaurentSeries(m.inf_field(), rel_prec);
  FFElement a(m, r.num(), Poly(m.base_field()), r.den());
  return embed_rel(a, rel_prec);
}

DrinfeldModule carlitz_reference(const CurveModel& rational, int prec, int N) {
  if (!rational.is_rational()) throw Error(ErrorCode::UnsupportedModel, "Carlitz module needs the rational model");
  const GaloisField& F = rational.base_field();
  DrinfeldModule mod{&rational, FracIdeal::unit(rational), {}, {FFElement::x(rational)}, {}, prec};
  std::vector<RatFunc> c = carlitz_exponential_exact(F, N);
  for (int n = 0; n <= N; ++n) mod.exp_coeffs.push_back({embed_ratfunc(rational, c[n], prec), 1 - ipow(F.order(), n)});
  std::vector<LaurentSeries> g;
  TwistedPoly<RatFunc> rho_T = carlitz_rho_T_exact(F);
  for (const auto& a : rho_T.coeffs()) g.push_back(embed_ratfunc(rational, a, prec));
  mod.rho_generators.emplace_back(std::move(g), static_cast<int>(F.degree()));
  return mod;
}

}  // namespace drinfeld
