#include <random>

#include "doctest.h"

#include "drinfeld/checks.hpp"
#include "drinfeld/curve.hpp"
#include "drinfeld/error.hpp"

using namespace drinfeld;

namespace {
ModelPtr fixture(const char* name) { return CurveModel::create(builtin_fixture(name)); }
}  // namespace

TEST_CASE("model classification") {
  auto R = fixture("rational");
  CHECK(R->d_inf() == 1);
  CHECK(R->genus() == 0);
  auto E = fixture("elliptic");
  CHECK(E->d_inf() == 1);
  CHECK(E->genus() == 1);
  CHECK(E->inf_field().order() == 3);
  auto I = fixture("inert");
  CHECK(I->d_inf() == 2);
  CHECK(I->genus() == 1);
  CHECK(I->inf_field().order() == 9);
  CHECK(fixture("genus2")->genus() == 2);
}

TEST_CASE("invalid models are rejected") {
  CurveSpec s;
  s.kind = ModelKind::Quadratic;
  s.f = {0, 0, 1};  // y^2 = x^2: singular
  CHECK_THROWS_AS(CurveModel::create(s), Error);
  s.f = {1, 0, 0, 0, 1};  // square leading coefficient: two places at infinity
  try {
    CurveModel::create(s);
    FAIL("split model accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SplitInfinity);
  }
  s.p = 2;
  s.f = {1, 1, 0, 1};
  CHECK_THROWS_AS(CurveModel::create(s), Error);
}

TEST_CASE("embedding at infinity") {
  auto R = fixture("rational");
  LaurentSeries T = embed_at_infinity(FFElement::x(*R), 10);
  CHECK(T.valuation() == -1);
  CHECK(T.relative_precision() >= 10);
  CHECK(T.coeff(-1) == 1);
  for (int k = 0; k < T.precision(); ++k) CHECK(T.coeff(k) == 0);
  auto E = fixture("elliptic");
  LaurentSeries x = embed_at_infinity(FFElement::x(*E), 30), y = embed_at_infinity(FFElement::y(*E), 30);
  CHECK(x.valuation() == -2);
  CHECK(y.valuation() == -3);
  // y^2 = x^3 + x + 1 to precision
  LaurentSeries one = LaurentSeries::one(E->inf_field(), 100);
  CHECK((y * y).agrees_with(x * x * x + x + one));
  // u = x / y
  CHECK(embed_at_infinity(E->uniformizer(), 20).agrees_with(LaurentSeries::monomial(E->inf_field(), 1, 1, 20)));
}

TEST_CASE("embedding is a ring homomorphism") {
  std::mt19937_64 rng(7);
  for (const char* name : {"elliptic", "inert", "genus2"}) {
    auto M = fixture(name);
    std::uniform_int_distribution<int> c(0, 2);
    auto rnd = [&] {
      std::vector<long long> u, v;
      for (int i = 0; i < 4; ++i) u.push_back(c(rng)), v.push_back(c(rng));
      return FFElement(*M, Poly::from_ints(M->base_field(), u), Poly::from_ints(M->base_field(), v));
    };
    for (int t = 0; t < 10; ++t) {
      FFElement a = rnd(), b = rnd();
      if (a.is_zero() || b.is_zero()) continue;
      CHECK(embed_at_infinity(a * b, 25).agrees_with(embed_at_infinity(a, 40) * embed_at_infinity(b, 40)));
      CHECK(embed_at_infinity(a / b, 25).agrees_with(embed_at_infinity(a, 40) / embed_at_infinity(b, 40)));
    }
  }
}

TEST_CASE("degree and valuation") {
  auto R = fixture("rational");
  FFElement a = FFElement::from_poly(*R, Poly::from_ints(R->base_field(), {0, 1, 2}));
  CHECK(degree_valuation(a).v == -2);
  CHECK(degree_valuation(a).deg == 2);
  CHECK(degree_valuation(FFElement::one(*R)).deg == 0);
  auto E = fixture("elliptic");
  CHECK(degree_valuation(FFElement::y(*E)).v == -3);
  CHECK(degree_valuation(FFElement::y(*E)).deg == 3);
  CHECK_THROWS_AS(degree_valuation(FFElement::zero(*E)), Error);
}

TEST_CASE("signs") {
  auto R = fixture("rational");
  FFElement a = FFElement::from_poly(*R, Poly::from_ints(R->base_field(), {0, 1, 2}));
  CHECK(sgn_of(a) == 2);
  CHECK(sgn_of(FFElement::one(*R)) == 1);
  SignData sr(*R);
  CHECK(sr.representatives().size() == 1);
  auto I = fixture("inert");
  const GaloisField& F9 = I->inf_field();
  auto s = sgn_of(FFElement::y(*I));
  CHECK(F9.mul(s, s) == I->constants()(2));
  SignData si(*I);
  CHECK(si.representatives().size() == 4);
  // every nonzero element of F_9 is c * s for exactly one pair
  for (GaloisField::Raw t = 1; t < 9; ++t) {
    int hits = 0;
    for (GaloisField::Raw c = 1; c < 3; ++c)
      if (si.contains(F9.mul(I->constants()(c), t))) ++hits;
    CHECK(hits == 1);
  }
}

TEST_CASE("field arithmetic in K") {
  auto E = fixture("elliptic");
  FFElement y = FFElement::y(*E), x = FFElement::x(*E);
  CHECK(y * y == x * x * x + x + FFElement::one(*E));
  CHECK((y / x) * x == y);
  CHECK(y.conjugate() == -y);
  CHECK(y.norm() == RatFunc(-Poly::from_ints(E->base_field(), {1, 1, 0, 1})));
}
