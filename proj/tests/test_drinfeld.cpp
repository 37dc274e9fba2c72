#include "doctest.h"

#include "drinfeld/checks.hpp"
#include "drinfeld/drinfeld.hpp"
#include "drinfeld/parse.hpp"

using namespace drinfeld;

namespace {

ModelPtr fixture(const char* name) { return CurveModel::create(builtin_fixture(name)); }

bool close(const LaurentSeries& a, const LaurentSeries& b, int digits) { return agree_to(a, b, digits); }

LaurentSeries T_at_infinity(const CurveModel& m, int prec) { return embed_at_infinity(FFElement::x(m), prec); }

}  // namespace

TEST_CASE("power sums of F_3[T]") {
  auto R = fixture("rational");
  auto S = lattice_power_sums(FracIdeal::unit(*R), 8, 20);
  CHECK(S[1].is_zero());
  CHECK(S[3].is_zero());
  // S_2 = -zeta(2) = 2 + 2u^6 + ...
  CHECK(S[2].valuation() == 0);
  CHECK(S[2].coeff(0) == 2);
  for (int k = 1; k < 6; ++k) CHECK(S[2].coeff(k) == 0);
  CHECK(S[2].coeff(6) == 2);
  auto c = exponential_from_lattice(S, 3, 2);
  REQUIRE(c.size() == 3);
  CHECK(c[1].agrees_with(S[2]));
  CHECK_THROWS_AS(exponential_from_lattice(S, 3, 3), Error);
}

TEST_CASE("exact Carlitz exponential") {
  const GaloisField& F = GaloisField::get(3, 1);
  auto c = carlitz_exponential_exact(F, 3);
  RatFunc T = RatFunc::variable(F);
  CHECK(c[0] == RatFunc::constant(F, 1));
  CHECK(c[1] == (T.pow(3) - T).inverse());
  CHECK(c[2] == c[1].pow(3) / (T.pow(9) - T));
  // c_1 = 1/(T^3 - T) = u^3 + u^5 + u^7 + ...
  auto R = fixture("rational");
  LaurentSeries c1 = embed_ratfunc(*R, c[1], 20);
  CHECK(c1.valuation() == 3);
  for (int k = 3; k < 20; ++k) CHECK(c1.coeff(k) == (k % 2 ? 1u : 0u));
  // the module recursion recovers the exponential from rho_T = T + tau
  DrinfeldModule ref = carlitz_reference(*R, 20, 3);
  auto back = exponential_from_module(ref.rho_generators[0], FFElement::x(*R), 3);
  for (int n = 0; n <= 3; ++n) CHECK(close(back[n], ref.exp_coeffs[n].value, 20));
}

TEST_CASE("lattice pipeline on F_3[T]") {
  auto R = fixture("rational");
  DrinfeldModule mod = build_module(FracIdeal::unit(*R), 24, 3);
  CHECK(mod.precision >= 24);
  const TwistedSeries& rT = mod.rho_generators.at(0);
  REQUIRE(rT.degree() == 1);
  LaurentSeries T = T_at_infinity(*R, 40);
  CHECK(close(rT.coeff(0), T, 24));
  // g_1 = c_1 (T^3 - T)
  CHECK(close(rT.coeff(1), mod.exp_coeffs[1].value * (T.pow(3) - T), 24));
  CHECK(mod.coefficient_weight(1) == -2);
  SignNormalization sn = sign_normalization_analysis(mod);
  REQUIRE(sn.solvable);
  CHECK(close(sn.normalized_generators[0].coeff(1), LaurentSeries::one(R->inf_field(), 40), 24));
  CHECK(close(sn.normalized_exp_coeffs[1], embed_ratfunc(*R, carlitz_exponential_exact(R->base_field(), 1)[1], 40), 24));
  // w^{(q^d - 1)/(q - 1)} = g_d / sgn(T) with d = 1
  REQUIRE(sn.w.has_value());
  CHECK(close(*sn.w, rT.coeff(1), 24));
}

TEST_CASE("torsion of the Carlitz lattice") {
  auto R = fixture("rational");
  DrinfeldModule mod = build_module(FracIdeal::unit(*R), 24, 2);
  // e(1/T) is a T-torsion point
  TorsionReport t = torsion_check(mod, FracIdeal::principal(FFElement::x(*R)), 20);
  CHECK(t.pass);
  CHECK(t.points.size() == 3);
  CHECK(t.min_digits >= 20);
  LaurentSeries e = exp_evaluate(FracIdeal::unit(*R), FFElement::x(*R).inverse(), 24);
  CHECK_FALSE(e.is_zero());
  CHECK(mod.rho_generators[0](e).is_zero());
  CHECK(exp_evaluate(FracIdeal::unit(*R), FFElement::x(*R), 24).is_zero());
}

TEST_CASE("exp_evaluate against the lattice product") {
  for (const char* name : {"rational", "elliptic"}) {
    auto M = fixture(name);
    SignData s(*M);
    FracIdeal A = FracIdeal::unit(*M);
    FFElement z = FFElement::x(*M).inverse() + FFElement::x(*M).pow(2).inverse();
    const int rel = 8;
    LaurentSeries Z = embed_at_infinity(z, 40);
    // z prod (1 - z/l) over l != 0 of degree <= D; omitted factors are 1 mod u^{D + 1 + v(z)}
    int D = rel + 1;
    DegreeBasis b = degree_basis(A, D, s);
    LaurentSeries prod = Z;
    std::vector<FFElement> pos = positive_elements(b, D, s);
    for (const auto& l : pos)
      for (int c = 1; c < 3; ++c) {
        LaurentSeries L = embed_at_infinity(l.scaled(c), 40);
        prod *= LaurentSeries::one(M->inf_field(), 40) - Z / L;
      }
    LaurentSeries e = exp_evaluate(A, z, rel + 4);
    CHECK_MESSAGE(agree_to(e, prod.truncated(Z.valuation() + rel), rel - 1), name);
  }
}

TEST_CASE("functional equation and homomorphism on the elliptic fixture") {
  auto E = fixture("elliptic");
  DrinfeldModule mod = build_module(FracIdeal::unit(*E), 24, 3);
  FFElement x = FFElement::x(*E), y = FFElement::y(*E);
  for (const auto& a : {x, y, x * y + FFElement::one(*E)}) {
    auto fe = verify_functional_equation(mod, a, 3);
    CHECK(fe.pass);
    CHECK(fe.certified_digits >= 24);
  }
  TwistedSeries lhs = mod.rho(x * y), rhs = mod.rho(x) * mod.rho(y);
  REQUIRE(lhs.degree() == rhs.degree());
  for (int k = 0; k <= lhs.degree(); ++k) CHECK(close(lhs.coeff(k), rhs.coeff(k), 20));
  // rho_x rho_y = rho_y rho_x
  TwistedSeries yx = mod.rho(y) * mod.rho(x);
  for (int k = 0; k <= lhs.degree(); ++k) CHECK(close(yx.coeff(k), rhs.coeff(k), 20));
  CHECK_THROWS_AS(mod.rho(x.inverse()), Error);
}

TEST_CASE("j from the module matches j from zeta values") {
  auto E = fixture("elliptic");
  FracIdeal A = FracIdeal::unit(*E);
  DrinfeldModule mod = build_module(A, 30, 2);
  JValue a = j_from_module(mod, 20), b = j_invariant(A, 20);
  CHECK(close(a.j, b.j, 20));
}

TEST_CASE("star action by a principal ideal on F_3[T]") {
  auto R = fixture("rational");
  DrinfeldModule mod = build_module(FracIdeal::unit(*R), 30, 2);
  StarActionResult st = star_action(mod, FracIdeal::principal(FFElement::x(*R)));
  // rho_(T) is rho_T made monic
  REQUIRE(st.iso.degree() == 1);
  const TwistedSeries& rT = mod.rho_generators[0];
  CHECK(close(st.iso.coeff(0), rT.coeff(0) / rT.coeff(1), 20));
  CHECK(close(st.iso.coeff(1), LaurentSeries::one(R->inf_field(), 40), 20));
  // psi_T rho_(T) = rho_(T) rho_T
  TwistedSeries l = st.image.rho_generators[0] * st.iso, r = st.iso * rT;
  for (int k = 0; k <= l.degree(); ++k) CHECK(close(l.coeff(k), r.coeff(k), 20));
  CHECK(st.remainder_floor >= 20);
  CHECK(st.image.lattice == FracIdeal::principal(FFElement::x(*R)).inverse());
}

TEST_CASE("star action on the elliptic fixture lands in the inverse class") {
  auto E = fixture("elliptic");
  IdealClassTable T = class_group(*E);
  FracIdeal p0 = parse_ideal(*E, "(x, 2 + y)");
  DrinfeldModule mod = build_module(FracIdeal::unit(*E), 36, 2);
  StarActionResult st = star_action(mod, p0);
  CHECK(st.iso.degree() == 1);
  CHECK(T.class_of(st.image.lattice) == T.inverse(T.class_of(p0)));
  JValue jimg = j_from_module(st.image, 20);
  JValue jtarget = j_invariant(st.image.lattice, 20);
  CHECK(close(jimg.j, jtarget.j, 20));
}
