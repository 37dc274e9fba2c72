#include "drinfeld/checks.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "drinfeld/class_group.hpp"
#include "drinfeld/commands.hpp"
#include "drinfeld/drinfeld.hpp"
#include "drinfeld/error.hpp"
#include "drinfeld/ore.hpp"
#include "drinfeld/parse.hpp"
#include "drinfeld/zeta.hpp"

namespace drinfeld {

namespace {

using nlohmann::json;

// Collects failures; a check passes when none were recorded.
struct Log {
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  void require(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  CheckResult finish(const std::string& name, json data = json::object()) const {
    CheckResult r;
    r.name = name;
    r.pass = failures.empty();
    std::ostringstream os;
    const auto& v = failures.empty() ? notes : failures;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "; " : "") << v[i];
    r.detail = os.str();
    r.data = std::move(data);
    return r;
  }
};

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::string sep_str(const std::optional<int>& s) { return s ? std::to_string(*s) : "agree"; }

FracIdeal p0(const CurveModel& m) { return parse_ideal(m, "(x, 2 + y)"); }

// Random element of A of degree <= dmax (nonzero).
FFElement random_element(const CurveModel& m, int dmax, std::mt19937_64& rng) {
  const GaloisField& F = m.base_field();
  std::vector<FFElement> monos;
  for (int i = 0; i <= dmax; ++i) {
    FFElement xi = FFElement::x(m).pow(i);
    if (degree(xi) <= dmax) monos.push_back(xi);
    if (!m.is_rational()) {
      FFElement xy = xi * FFElement::y(m);
      if (degree(xy) <= dmax) monos.push_back(xy);
    }
  }
  std::uniform_int_distribution<std::uint32_t> coef(0, F.order() - 1);
  for (;;) {
    FFElement a = FFElement::zero(m);
    for (const auto& mono : monos) {
      std::uint32_t c = coef(rng);
      if (c) a = a + mono.scaled(c);
    }
    if (!a.is_zero()) return a;
  }
}

TwistedPoly<RatFunc> carlitz_rho_exact(const GaloisField& F, const Poly& P) {
  TwistedPoly<RatFunc> rT = carlitz_rho_T_exact(F);
  TwistedPoly<RatFunc> acc(rT.frobenius_exponent());
  for (int i = P.degree(); i >= 0; --i) {
    acc = acc * rT + TwistedPoly<RatFunc>::constant(RatFunc::constant(F, P.coeff(i)), rT.frobenius_exponent());
  }
  return acc;
}

// f(z) = sum a_i z^{q^i} as an ordinary polynomial over the residue field.
Poly additive_to_poly(const TwistedPoly<FqElem>& f, const GaloisField& F, std::uint32_t q) {
  std::vector<GaloisField::Raw> c;
  long long qi = 1;
  for (int i = 0; i <= f.degree(); ++i, qi *= q) {
    if (static_cast<long long>(c.size()) < qi + 1) c.resize(qi + 1, 0);
    c[qi] = f.coeff(i).raw();
  }
  return Poly(F, c);
}

}  // namespace

CurveSpec builtin_fixture(const std::string& name) {
  CurveSpec s;
  s.p = 3;
  s.m = 1;
  s.label = name;
  if (name == "rational") {
    s.kind = ModelKind::Rational;
  } else if (name == "elliptic") {
    s.kind = ModelKind::Quadratic;
    s.f = {1, 1, 0, 1};
  } else if (name == "inert") {
    s.kind = ModelKind::Quadratic;
    s.f = {1, 0, 0, 0, 2};
  } else if (name == "genus2") {
    s.kind = ModelKind::Quadratic;
    s.f = {1, 2, 0, 0, 0, 1};
  } else {
    throw Error(ErrorCode::ParseError, "unknown fixture '" + name + "'");
  }
  return s;
}

bool agree_to(const LaurentSeries& a, const LaurentSeries& b, int digits) {
  if (separation(a, b)) return false;
  return std::min(a.relative_precision(), b.relative_precision()) >= digits;
}

CheckResult timed_check(const std::string& name, const std::function<CheckResult()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  CheckResult r;
  try {
    r = fn();
  } catch (const std::exception& e) {
    r.name = name;
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.name = name;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

CheckResult check_omega_closed_form(const SuiteOptions& o) {
  Log log;
  json data;
  const int digits = std::max(o.prec, 40);
  // exact over F_3(T), alpha = T
  {
    const GaloisField& F = GaloisField::get(3, 1);
    const long long q = F.order();
    RatFunc a = RatFunc::variable(F);
    for (int k = 1; k <= 2; ++k) {
      const long long qk = ipow(q, k);
      RatFunc brute(F);
      for (GaloisField::Raw c = 0; c < q; ++c) brute += (RatFunc::constant(F, c) + a).pow(1 - qk);
      RatFunc aq = a.pow(qk);
      RatFunc den = RatFunc::constant(F, 1);
      for (GaloisField::Raw c = 0; c < q; ++c) den *= RatFunc::constant(F, c) + aq;
      RatFunc closed = (aq - a) / den;
      log.require(brute == closed, "F_3(T), k=" + std::to_string(k) + ": " + brute.to_string() + " != " +
                                       closed.to_string());
      data["rational"].push_back({{"k", k}, {"value", closed.to_string()}});
    }
  }
  // elliptic fixture, alpha = alpha_1 of p0*
  auto M = CurveModel::create(builtin_fixture("elliptic"));
  SignData signs(*M);
  StarRepresentative st = star_representative(p0(*M), 4, signs);
  const FFElement alpha = st.basis.vectors.at(1).value;
  const long long q = M->q();
  int worst = 1 << 30;
  for (int k = 1; k <= 2; ++k) {
    const long long qk = ipow(q, k);
    // exact identity in K
    FFElement brute = FFElement::zero(*M);
    for (GaloisField::Raw c = 0; c < q; ++c) brute += (FFElement::constant(*M, c) + alpha).pow(1 - qk);
    FFElement aq = alpha.pow(qk);
    FFElement den = FFElement::one(*M);
    for (GaloisField::Raw c = 0; c < q; ++c) den *= FFElement::constant(*M, c) + aq;
    FFElement closed = (aq - alpha) / den;
    log.require(brute == closed, "K, k=" + std::to_string(k) + ": exact sums differ");
    // Laurent series at infinity
    const int rel = digits + 20;
    LaurentSeries A = embed_at_infinity(alpha, rel + 1);
    LaurentSeries lhs(M->inf_field(), 1 << 20);
    bool first = true;
    for (GaloisField::Raw c = 0; c < q; ++c) {
      LaurentSeries t = (A + LaurentSeries::monomial(M->inf_field(), 0, c, A.precision())).pow(1 - qk);
      lhs = first ? t : lhs + t;
      first = false;
    }
    LaurentSeries Aq = A.pow(qk);
    LaurentSeries d = LaurentSeries::one(M->inf_field(), Aq.precision());
    for (GaloisField::Raw c = 0; c < q; ++c) d *= Aq + LaurentSeries::monomial(M->inf_field(), 0, c, Aq.precision());
    LaurentSeries rhs = (Aq - A) / d;
    // the degree-block kernel computes the same sum
    LaurentSeries kern = omega_block(st.basis, 1, qk - 1, rhs.precision());
    int got = std::min({lhs.relative_precision(), rhs.relative_precision(), kern.relative_precision()});
    worst = std::min(worst, got);
    log.require(!separation(lhs, rhs), "Laurent k=" + std::to_string(k) + ": brute and closed form differ at u^" +
                                           sep_str(separation(lhs, rhs)));
    log.require(!separation(kern, rhs), "Laurent k=" + std::to_string(k) + ": block kernel differs");
    log.require(got >= digits, "Laurent k=" + std::to_string(k) + ": only " + std::to_string(got) + " digits");
    // |Omega_1| = |alpha|^{q^k (1-q)}
    long long want = qk * (1 - q) * A.valuation();
    log.require(rhs.valuation() == want, "valuation " + std::to_string(rhs.valuation()) + " != " + std::to_string(want));
    data["elliptic"].push_back({{"k", k}, {"value", series_json(rhs)}, {"digits", got}});
  }
  log.notes.push_back("exact over F_3(T) and K; " + std::to_string(worst) + " Laurent digits on alpha_1 = " +
                      alpha.to_string());
  return log.finish("omega_closed_form", data);
}

CheckResult check_zeta_size_law(const SuiteOptions& o) {
  Log log;
  json data;
  // the inert fixture is left out: there 1 < |alpha_1| = |alpha_2|, outside
  // the hypothesis |alpha_i| > |alpha_1| of the size law
  for (const char* name : {"elliptic", "genus2"}) {
    auto M = CurveModel::create(builtin_fixture(name));
    SignData signs(*M);
    StarRepresentative st = star_representative(p0(*M), 4, signs);
    const FFElement alpha = st.basis.vectors.at(1).value;
    const int va = degree_valuation(alpha).v;
    const long long q = M->q();
    for (int k = 1; k <= 2; ++k) {
      const long long qk = ipow(q, k);
      ZetaValue z = zeta_partial(st.star, qk - 1, std::max(o.prec, 40));
      LaurentSeries hat = z.value - LaurentSeries::one(M->inf_field(), z.value.precision());
      const long long want = qk * (1 - q) * va;
      bool certified = !hat.is_zero();
      log.require(certified, std::string(name) + " k=" + std::to_string(k) + ": zeta - 1 vanishes to precision");
      if (certified)
        log.require(hat.valuation() == want, std::string(name) + " k=" + std::to_string(k) + ": v(zeta - 1) = " +
                                                 std::to_string(hat.valuation()) + ", expected " + std::to_string(want));
      data[name].push_back({{"k", k}, {"valuation", certified ? json(hat.valuation()) : json()}, {"expected", want}});
    }
  }
  log.notes.push_back("v(zeta^(p0*)(q^k-1) - 1) = q^k (1-q) v(alpha_1) for k = 1, 2 on the elliptic and genus 2 curves");
  return log.finish("zeta_size_law", data);
}

CheckResult check_class_invariance(const SuiteOptions& o) {
  Log log;
  std::mt19937_64 rng(o.seed);
  int compared = 0, nontrivial_signs = 0;
  for (const char* name : {"elliptic", "inert"}) {
    auto M = CurveModel::create(builtin_fixture(name));
    IdealClassTable T = class_group(*M);
    JTable base = j_table(T, o.prec);
    for (std::size_t i = 0; i < T.order(); ++i) {
      const JValue& ref = base.entries[i];
      for (int t = 0; t < 5; ++t) {
        FFElement a = random_element(*M, 3, rng);
        // odd trials get a non-trivial constant sign on top
        if (t % 2) a = a.scaled(M->base_field().from_int(-1));
        if (sgn_of(a) != 1) ++nontrivial_signs;
        JValue jv = j_invariant(T.representative(i) * a, o.prec);
        ++compared;
        log.require(agree_to(jv.j, ref.j, o.prec) && agree_to(jv.J, ref.J, o.prec),
                    std::string(name) + " class " + std::to_string(i) + " times " + a.to_string() + ": j differs at u^" +
                        sep_str(separation(jv.j, ref.j)) + " (prec " + std::to_string(jv.precision) + ")");
      }
    }
    ZetaOptions alt;
    alt.alternate_signs = true;
    JTable other = j_table(T, o.prec, alt);
    for (std::size_t i = 0; i < T.order(); ++i)
      log.require(agree_to(other.entries[i].j, base.entries[i].j, o.prec),
                  std::string(name) + " class " + std::to_string(i) + ": j depends on the sign set");
  }
  log.require(nontrivial_signs > 0, "no multiplier of non-trivial sign was drawn");
  log.notes.push_back(std::to_string(compared) + " multipliers (" + std::to_string(nontrivial_signs) +
                      " of non-trivial sign) and a second sign set agree to " + std::to_string(o.prec) + " digits");
  return log.finish("class_invariance", {{"multipliers", compared}, {"nontrivial_signs", nontrivial_signs}});
}

CheckResult check_separation(const SuiteOptions& o) {
  Log log;
  auto M = CurveModel::create(builtin_fixture("elliptic"));
  IdealClassTable T = class_group(*M);
  JTable jt = j_table(T, o.prec);
  log.require(T.order() == 4, "class number " + std::to_string(T.order()) + " != 4");
  for (std::size_t i = 0; i < jt.entries.size(); ++i) {
    log.require(jt.entries[i].precision >= o.prec, "class " + std::to_string(i) + " has only " +
                                                       std::to_string(jt.entries[i].precision) + " digits");
    for (std::size_t k = i + 1; k < jt.entries.size(); ++k)
      log.require(jt.j_separation[i][k].has_value(),
                  "j of classes " + std::to_string(i) + " and " + std::to_string(k) + " agree to precision");
  }
  SignData signs(*M);
  StarRepresentative st = star_representative(p0(*M), 4, signs);
  const long long q = M->q();
  const long long want = q * (q - 1) * -degree_valuation(st.basis.vectors.at(1).value).v;
  std::size_t c = T.class_of(p0(*M));
  std::optional<int> got = jt.J_separation[c][0];
  log.require(got && *got == want, "J separation of p0* from (1) is " + sep_str(got) + ", expected " +
                                       std::to_string(want));
  json sep = json::array();
  for (const auto& row : jt.j_separation) {
    json r = json::array();
    for (const auto& s : row) r.push_back(s ? json(*s) : json());
    sep.push_back(r);
  }
  log.notes.push_back("4 distinct j-values; v(J(p0*) - J(1)) = " + sep_str(got));
  return log.finish("separation", {{"j_separation", sep}, {"J_separation_p0", got ? json(*got) : json()}});
}

CheckResult check_carlitz_pipeline(const SuiteOptions& o) {
  Log log;
  json data;
  {
    auto R = CurveModel::create(builtin_fixture("rational"));
    DrinfeldModule mod = build_module(FracIdeal::unit(*R), o.prec, 3);
    SignNormalization sn = sign_normalization_analysis(mod);
    log.require(sn.solvable, "sign normalization not solvable: " + sn.detail);
    if (sn.solvable) {
      const TwistedSeries& r = sn.normalized_generators.at(0);
      LaurentSeries T = embed_at_infinity(FFElement::x(*R), o.prec + 8);
      log.require(r.degree() == 1, "normalized rho_T has degree " + std::to_string(r.degree()));
      if (r.degree() == 1) {
        log.require(agree_to(r.coeff(0), T, o.prec), "constant term differs from T at u^" +
                                                         sep_str(separation(r.coeff(0), T)));
        log.require(agree_to(r.coeff(1), LaurentSeries::one(R->inf_field(), o.prec + 8), o.prec),
                    "tau coefficient is not 1");
      }
      DrinfeldModule ref = carlitz_reference(*R, o.prec, 3);
      for (int n = 0; n <= 3; ++n)
        log.require(agree_to(sn.normalized_exp_coeffs.at(n), ref.exp_coeffs.at(n).value, o.prec),
                    "exponential coefficient " + std::to_string(n) + " differs from the Carlitz exponential");
      data["rho_T"] = twisted_json(r);
    }
    auto fe = verify_functional_equation(mod, FFElement::x(*R), 3);
    log.require(fe.pass, "functional equation fails on F_3[T]");
  }
  for (const char* name : {"elliptic", "inert"}) {
    auto M = CurveModel::create(builtin_fixture(name));
    DrinfeldModule mod = build_module(FracIdeal::unit(*M), o.prec, 3);
    for (const auto& a : {FFElement::x(*M), FFElement::y(*M), FFElement::x(*M) + FFElement::y(*M)}) {
      auto fe = verify_functional_equation(mod, a, 3);
      log.require(fe.pass && fe.certified_digits >= o.prec,
                  std::string(name) + ": functional equation for " + a.to_string() + " fails or has only " +
                      std::to_string(fe.certified_digits) + " digits");
      data[name].push_back({{"a", a.to_string()}, {"pass", fe.pass}, {"digits", fe.certified_digits}});
    }
  }
  log.notes.push_back("normalized rho_T = T + tau to " + std::to_string(o.prec) +
                      " digits; e(az) = rho_a(e(z)) through z^27 on both fixtures");
  return log.finish("carlitz_pipeline", data);
}

CheckResult check_homomorphism_star(const SuiteOptions& o) {
  Log log;
  json data;
  std::mt19937_64 rng(o.seed + 1);
  int stars = 0;
  for (const char* name : {"elliptic", "inert"}) {
    auto M = CurveModel::create(builtin_fixture(name));
    IdealClassTable T = class_group(*M);
    JTable jt = j_table(T, o.prec);
    // full permutation on the elliptic fixture, the (1) row on the inert one
    std::size_t lattices = std::string(name) == "elliptic" ? T.order() : 1;
    for (std::size_t li = 0; li < lattices; ++li) {
      const FracIdeal& L = T.representative(li);
      // images lose a few digits through the right division
      DrinfeldModule mod = build_module(L, o.prec + 16, 3);
      if (li == 0) {
        for (int t = 0; t < 5; ++t) {
          FFElement a = random_element(*M, 3, rng), b = random_element(*M, 3, rng);
          TwistedSeries lhs = mod.rho(a * b), rhs = mod.rho(a) * mod.rho(b);
          TwistedSeries diff = lhs - rhs;
          int digits = min_relative_precision(lhs.coeffs());
          log.require(diff.is_zero() && lhs.degree() == rhs.degree() && digits >= o.prec,
                      std::string(name) + ": rho_ab != rho_a rho_b for a = " + a.to_string() + ", b = " + b.to_string());
        }
      }
      for (std::size_t bi = 0; bi < T.order(); ++bi) {
        const FracIdeal& B = T.representative(bi);
        StarActionResult st = star_action(mod, B);
        ++stars;
        std::size_t target = T.class_of(B.inverse() * L);
        JValue jv = j_from_module(st.image, o.prec);
        std::vector<std::size_t> hits;
        for (std::size_t k = 0; k < jt.entries.size(); ++k)
          if (!separation(jv.j, jt.entries[k].j)) hits.push_back(k);
        log.require(hits.size() == 1 && hits[0] == target && jv.precision >= o.prec,
                    std::string(name) + ": b = " + B.to_string() + " on lattice " + L.to_string() +
                        " does not land on class " + std::to_string(target));
        data[name].push_back({{"lattice", li}, {"b", B.to_string()}, {"target", target},
                              {"iso_degree", st.iso.degree()}, {"remainder_floor", st.remainder_floor}});
      }
    }
  }
  log.notes.push_back("rho_ab = rho_a rho_b for 10 random pairs; " + std::to_string(stars) +
                      " star actions land on the class of b^{-1} a");
  return log.finish("homomorphism_star", data);
}

CheckResult check_torsion(const SuiteOptions& o) {
  Log log;
  json data;
  int points = 0;
  struct Case {
    const char* curve;
    const char* modulus;
    bool all_classes;
  };
  for (const Case& c : {Case{"rational", "(T)", false}, Case{"rational", "(T^2 + 1)", false},
                        Case{"elliptic", "(x)", true}, Case{"elliptic", "(x, 2 + y)", false},
                        Case{"inert", "(x)", false}}) {
    auto M = CurveModel::create(builtin_fixture(c.curve));
    FracIdeal mod_ideal = parse_modulus(*M, c.modulus);
    std::vector<FracIdeal> lattices{FracIdeal::unit(*M)};
    if (c.all_classes) lattices = class_group(*M).representatives();
    for (const auto& L : lattices) {
      DrinfeldModule mod = build_module(L, o.prec, 3);
      TorsionReport rep = torsion_check(mod, mod_ideal, o.prec);
      points += static_cast<int>(rep.points.size());
      log.require(rep.pass, std::string(c.curve) + " " + c.modulus + " on " + L.to_string() +
                                ": torsion value not annihilated (min digits " + std::to_string(rep.min_digits) + ")");
      log.require(static_cast<long long>(rep.points.size()) == ipow(M->q(), mod_ideal.norm_degree()),
                  std::string(c.curve) + " " + c.modulus + ": wrong number of torsion points");
      data["cases"].push_back({{"curve", c.curve}, {"modulus", c.modulus}, {"lattice", L.to_string()},
                               {"points", rep.points.size()}, {"min_digits", rep.min_digits}});
    }
  }
  // exact reductions of the Carlitz module
  const GaloisField& F = GaloisField::get(3, 1);
  for (int d = 1; d <= 2; ++d) {
    for (const Poly& P : monic_irreducibles(F, d)) {
      Reduction r = tw_reduce_mod(carlitz_rho_exact(F, P), P);
      bool is_tau_d = r.poly.degree() == d && r.poly.coeff(d).is_one();
      for (int i = 0; i < d && is_tau_d; ++i) is_tau_d = r.poly.coeff(i).is_zero();
      log.require(is_tau_d, "rho_P mod P != tau^" + std::to_string(d) + " for P = " + P.to_string("T"));
    }
  }
  Poly P = Poly::from_ints(F, {1, 0, 1});
  TwistedPoly<RatFunc> rP = carlitz_rho_exact(F, P);
  for (const Poly& Q : monic_irreducibles(F, 1)) {
    Reduction r = tw_reduce_mod(rP, Q);
    Poly f = additive_to_poly(r.poly, *r.residue_field, F.order());
    log.require(r.degree_preserved && gcd(f, f.derivative()).degree() == 0,
                "rho_{T^2+1} mod " + Q.to_string("T") + " is not separable");
  }
  log.notes.push_back(std::to_string(points) + " torsion points annihilated; rho_P mod P = tau^deg P for deg P <= 2; "
                      "rho_{T^2+1} separable modulo (T), (T+1), (T+2)");
  return log.finish("torsion", data);
}

CheckResult check_class_groups(const SuiteOptions&) {
  Log log;
  json data;
  struct Want {
    const char* name;
    std::size_t h;
    std::vector<std::int64_t> inv;
  };
  for (const Want& w : {Want{"rational", 1, {}}, Want{"elliptic", 4, {4}}, Want{"inert", 8, {2, 4}},
                        Want{"genus2", 29, {29}}}) {
    auto M = CurveModel::create(builtin_fixture(w.name));
    IdealClassTable T = class_group(*M);
    log.require(T.order() == w.h, std::string(w.name) + ": h = " + std::to_string(T.order()));
    log.require(T.invariant_factors() == w.inv, std::string(w.name) + ": wrong invariant factors");
    log.require(static_cast<std::int64_t>(T.order()) == T.expected_order(),
                std::string(w.name) + ": table order differs from the L-polynomial count");
    // group axioms on the table
    for (std::size_t i = 0; i < T.order(); ++i) {
      log.require(T.multiply(i, T.inverse(i)) == 0, std::string(w.name) + ": bad inverse");
      for (std::size_t j = 0; j < T.order(); ++j) {
        log.require(T.multiply(i, j) == T.multiply(j, i), std::string(w.name) + ": not commutative");
        log.require(T.class_of(T.representative(i) * T.representative(j)) == T.multiply(i, j),
                    std::string(w.name) + ": product table disagrees with ideal products");
      }
    }
    data[w.name] = {{"h", T.order()}, {"narrow", T.narrow_order()}};
  }
  log.notes.push_back("h = 1, 4, 8, 29 with the expected structures");
  return log.finish("class_groups", data);
}

CheckResult check_star_representative(const SuiteOptions&) {
  Log log;
  auto M = CurveModel::create(builtin_fixture("elliptic"));
  SignData signs(*M);
  StarRepresentative st = star_representative(p0(*M), 4, signs);
  log.require(st.g == FFElement::x(*M), "g = " + st.g.to_string() + ", expected x");
  const FFElement alpha = st.basis.vectors.at(1).value;
  FFElement want = (FFElement::y(*M) + FFElement::constant(*M, 2)) / FFElement::x(*M);
  log.require(alpha == want, "alpha_1 = " + alpha.to_string());
  log.require(degree(alpha) == 1, "deg alpha_1 = " + std::to_string(degree(alpha)));
  log.require(st.basis.vectors.at(0).value == FFElement::one(*M), "basis does not start with 1");
  StarRepresentative unit = star_representative(FracIdeal::unit(*M), 4, signs);
  log.require(unit.star == FracIdeal::unit(*M), "(1)* != (1)");
  log.notes.push_back("p0* = x^{-1} p0 with alpha_1 = " + alpha.to_string());
  return log.finish("star_representative");
}

CheckResult check_ore_examples(const SuiteOptions& o) {
  Log log;
  const GaloisField& F3 = GaloisField::get(3, 1);
  TwistedPoly<RatFunc> rT = carlitz_rho_T_exact(F3);
  TwistedPoly<RatFunc> g = tw_rgcd(std::vector<TwistedPoly<RatFunc>>{rT, rT * rT});
  log.require(g.degree() == 1 && g.coeff(0) == RatFunc::variable(F3) && g.coeff(1) == RatFunc::constant(F3, 1),
              "rgcd(rho_T, rho_T^2) = " + g.to_string());
  TwistedPoly<RatFunc> one = TwistedPoly<RatFunc>::constant(RatFunc::constant(F3, 1), 1);
  log.require(tw_rgcd(std::vector<TwistedPoly<RatFunc>>{rT, one}).degree() == 0, "rgcd(tau + T, 1) != 1");
  // brute force maximality over F_9 with tau = Frobenius of F_3
  const GaloisField& F9 = GaloisField::get(3, 2);
  std::mt19937_64 rng(o.seed + 2);
  std::uniform_int_distribution<std::uint32_t> el(0, 8);
  auto rand_poly = [&](int deg) {
    std::vector<FqElem> c;
    for (int i = 0; i < deg; ++i) c.emplace_back(F9, el(rng));
    c.emplace_back(F9, 1 + el(rng) % 8);
    return TwistedPoly<FqElem>(c, 1);
  };
  for (int t = 0; t < 6; ++t) {
    TwistedPoly<FqElem> d = rand_poly(1), a = rand_poly(1) * d, b = rand_poly(2) * d;
    TwistedPoly<FqElem> r = tw_rgcd(std::vector<TwistedPoly<FqElem>>{a, b});
    int best = -1;
    for (std::uint32_t code = 0; code < 81 + 9 + 1; ++code) {
      std::vector<FqElem> c;
      int deg = code == 0 ? 0 : code <= 9 ? 1 : 2;
      std::uint32_t k = code == 0 ? 0 : code <= 9 ? code - 1 : code - 10;
      for (int i = 0; i < deg; ++i, k /= 9) c.emplace_back(F9, k % 9);
      c.emplace_back(F9, 1);
      TwistedPoly<FqElem> cand(c, 1);
      if (tw_right_divmod(a, cand).second.is_zero() && tw_right_divmod(b, cand).second.is_zero())
        best = std::max(best, cand.degree());
    }
    log.require(tw_right_divmod(a, r).second.is_zero() && tw_right_divmod(b, r).second.is_zero(),
                "rgcd does not right-divide its inputs");
    log.require(r.degree() == best, "rgcd degree " + std::to_string(r.degree()) + " but a common right divisor of "
                                                                                  "degree " +
                                        std::to_string(best) + " exists");
  }
  log.notes.push_back("rgcd examples over F_3(T); rgcd maximal among monic divisors over F_9");
  return log.finish("ore_examples");
}

CheckResult check_zeta_truncation(const SuiteOptions& o) {
  Log log;
  int compared = 0;
  for (const char* name : {"rational", "elliptic", "inert"}) {
    auto M = CurveModel::create(builtin_fixture(name));
    IdealClassTable T = class_group(*M);
    for (const auto& I : T.representatives()) {
      for (long long n : {1LL, 2LL, 8LL}) {
        ZetaValue a = zeta_partial(I, n, o.prec);
        ZetaOptions more;
        more.extra_truncation = 5;
        ZetaValue b = zeta_partial(I, n, o.prec + 10, more);
        ++compared;
        log.require(!separation(a.value, b.value),
                    std::string(name) + " " + I.to_string() + " n=" + std::to_string(n) + ": unstable at u^" +
                        sep_str(separation(a.value, b.value)));
      }
    }
  }
  log.notes.push_back(std::to_string(compared) + " partial zeta values stable under +10 digits and +5 degrees");
  return log.finish("zeta_truncation");
}

SeriesComparison compare_report_series(const json& a, const json& b) {
  SeriesComparison out;
  std::function<void(const json&, const json&, const std::string&)> walk = [&](const json& x, const json& y,
                                                                               const std::string& path) {
    if (x.is_object() && x.contains("coeffs") && x.contains("prec") && x.contains("start")) {
      if (!(y.is_object() && y.contains("coeffs"))) {
        if (out.ok) out.first_mismatch = path + ": missing in second report";
        out.ok = false;
        return;
      }
      ++out.compared;
      int pa = x["prec"].get<int>(), pb = y["prec"].get<int>();
      int sa = x["start"].get<int>(), sb = y["start"].get<int>();
      int p = std::min(pa, pb);
      for (int k = std::min(sa, sb); k < p; ++k) {
        auto get = [&](const json& s, int st) {
          int i = k - st;
          return i >= 0 && i < static_cast<int>(s["coeffs"].size()) ? s["coeffs"][i] : json(0);
        };
        json ca = get(x, sa), cb = get(y, sb);
        auto is_zero = [](const json& c) {
          if (c.is_number()) return c.get<long long>() == 0;
          for (const auto& d : c)
            if (d.get<long long>() != 0) return false;
          return true;
        };
        if (ca != cb && !(is_zero(ca) && is_zero(cb))) {
          if (out.ok) out.first_mismatch = path + " at u^" + std::to_string(k);
          out.ok = false;
          return;
        }
      }
      return;
    }
    if (x.is_object()) {
      for (auto it = x.begin(); it != x.end(); ++it) {
        if (it.key() == "config" || it.key() == "timing") continue;
        if (y.is_object() && y.contains(it.key())) walk(it.value(), y[it.key()], path + "/" + it.key());
      }
    } else if (x.is_array() && y.is_array()) {
      for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i)
        walk(x[i], y[i], path + "/" + std::to_string(i));
    }
  };
  walk(a, b, "");
  return out;
}

CheckResult check_numerical_hygiene(const SuiteOptions& o) {
  Log log;
  json data;
  int compared = 0;
  for (const char* name : {"elliptic", "inert"}) {
    for (const char* cmd : {"classgroup", "jtable", "drinfeld", "torsion", "star"}) {
      RunConfig base;
      base.command = cmd;
      base.curve = builtin_fixture(name);
      base.prec = o.prec;
      base.seed = o.seed;
      RunConfig finer = base, longer = base;
      finer.prec += 10;
      longer.extra_degrees = 5;
      CommandResult r0 = run_command(base), r1 = run_command(finer), r2 = run_command(longer);
      for (const auto* r : {&r0, &r1, &r2})
        log.require(r->exit_code == ExitCode::Pass, std::string(name) + " " + cmd + ": command failed: " +
                                                        r->report.value("error", json("")).dump());
      SeriesComparison c1 = compare_report_series(r0.report, r1.report);
      SeriesComparison c2 = compare_report_series(r0.report, r2.report);
      compared += c1.compared + c2.compared;
      log.require(c1.ok, std::string(name) + " " + cmd + ": +10 digits changes " + c1.first_mismatch);
      log.require(c2.ok, std::string(name) + " " + cmd + ": +5 degrees changes " + c2.first_mismatch);
      data[name][cmd] = c1.compared;
    }
  }
  log.notes.push_back(std::to_string(compared) + " series comparisons across 5 commands on both fixtures");
  return log.finish("numerical_hygiene", data);
}

std::vector<std::string> suite_names() { return {"all", "zeta", "ideal", "ore", "drinfeld", "hygiene"}; }

std::vector<CheckResult> run_suite(const std::string& suite, const SuiteOptions& o) {
  using Fn = CheckResult (*)(const SuiteOptions&);
  std::vector<std::pair<std::string, Fn>> list;
  auto add = [&](const char* n, Fn f) { list.emplace_back(n, f); };
  bool all = suite == "all";
  if (all || suite == "zeta") {
    add("omega_closed_form", check_omega_closed_form);
    add("zeta_size_law", check_zeta_size_law);
    add("zeta_truncation", check_zeta_truncation);
    add("separation", check_separation);
  }
  if (all || suite == "ideal") {
    add("class_groups", check_class_groups);
    add("star_representative", check_star_representative);
    add("class_invariance", check_class_invariance);
  }
  if (all || suite == "ore") {
    add("ore_examples", check_ore_examples);
    add("torsion", check_torsion);
  }
  if (all || suite == "drinfeld") {
    add("carlitz_pipeline", check_carlitz_pipeline);
    add("homomorphism_star", check_homomorphism_star);
  }
  if (suite == "hygiene") add("numerical_hygiene", check_numerical_hygiene);
  if (list.empty()) throw Error(ErrorCode::ParseError, "unknown suite '" + suite + "'");
  std::vector<CheckResult> out;
  for (const auto& [n, f] : list) out.push_back(timed_check(n, [&, f = f] { return f(o); }));
  return out;
}

}  // namespace drinfeld
