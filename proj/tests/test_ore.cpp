#include <random>

#include "doctest.h"

#include "drinfeld/ore.hpp"

using namespace drinfeld;

namespace {

const GaloisField& F3() { return GaloisField::get(3, 1); }

using TP = TwistedPoly<Poly>;
using TR = TwistedPoly<RatFunc>;

Poly P(std::vector<long long> c) { return Poly::from_ints(F3(), c); }
TP tp(std::vector<Poly> c) { return TP(std::move(c), 1); }
RatFunc R(std::vector<long long> c) { return RatFunc(P(std::move(c))); }
TR tr(std::vector<RatFunc> c) { return TR(std::move(c), 1); }

// Carlitz rho_a over F_3[T] by Horner in rho_T = T + tau.
TP carlitz(const Poly& a) {
  TP rhoT = tp({P({0, 1}), P({1})});
  TP acc(1);
  for (int i = a.degree(); i >= 0; --i) acc = acc * rhoT + TP::constant(Poly::constant(F3(), a.coeff(i)), 1);
  return acc;
}

}  // namespace

TEST_CASE("twisted product") {
  // (tau + T)(tau + 2T) = tau^2 + (2T^3 + T) tau + 2T^2
  TP a = tp({P({0, 1}), P({1})}), b = tp({P({0, 2}), P({1})});
  TP ab = a * b;
  REQUIRE(ab.degree() == 2);
  CHECK(ab.coeff(0) == P({0, 0, 2}));
  CHECK(ab.coeff(1) == P({0, 1, 0, 2}));
  CHECK(ab.coeff(2) == P({1}));
  CHECK_FALSE(ab.coeffs() == (b * a).coeffs());
}

TEST_CASE("right division") {
  // tau^2 = (tau - T^3)(tau + T) + T^4
  TR f = tr({R({0}), R({0}), R({1})}), g = tr({R({0, 1}), R({1})});
  auto [q, r] = tw_right_divmod(f, g);
  REQUIRE(q.degree() == 1);
  CHECK(q.coeff(0) == R({0, 0, 0, 2}));
  CHECK(q.coeff(1) == R({1}));
  REQUIRE(r.degree() == 0);
  CHECK(r.coeff(0) == R({0, 0, 0, 0, 1}));
}

TEST_CASE("random identities over F_3(T)") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> c(0, 2), deg(0, 3);
  auto rpoly = [&] {
    std::vector<long long> v;
    for (int i = 0; i <= deg(rng); ++i) v.push_back(c(rng));
    v.push_back(1);
    return RatFunc(P(v));
  };
  auto rtw = [&](int d) {
    std::vector<RatFunc> v;
    for (int i = 0; i <= d; ++i) v.push_back(rpoly());
    return tr(v);
  };
  for (int t = 0; t < 20; ++t) {
    TR f = rtw(3), g = rtw(2), h = rtw(1);
    CHECK(((f * g) * h).coeffs() == (f * (g * h)).coeffs());
    CHECK((f * (g + h)).coeffs() == (f * g + f * h).coeffs());
    auto [q, r] = tw_right_divmod(f, g);
    CHECK(r.degree() < g.degree());
    CHECK((q * g + r).coeffs() == f.coeffs());
    // composition
    RatFunc z = rpoly();
    CHECK((f * g)(z) == f(g(z)));
    CHECK(f(z + z) == f(z) + f(z));
    // rgcd(f g, h g) is g up to a left unit when f and h share no right factor
    TR d = tw_rgcd(std::vector<TR>{f * g, h * g});
    TR gm = g.left_scaled(g.lead().inverse());
    if (d.degree() == g.degree()) CHECK(d.coeffs() == gm.coeffs());
    CHECK(tw_right_divmod(d, gm).second.is_zero() == true);
  }
}

TEST_CASE("twisted polynomials over F_9 with q = 3") {
  const GaloisField& F9 = GaloisField::get(3, 2);
  using TF = TwistedPoly<FqElem>;
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<GaloisField::Raw> el(0, 8);
  auto rtw = [&](int d) {
    std::vector<FqElem> v;
    for (int i = 0; i < d; ++i) v.push_back(FqElem(F9, el(rng)));
    v.push_back(FqElem(F9, 1));
    return TF(v, 1);
  };
  for (int t = 0; t < 20; ++t) {
    TF f = rtw(2), g = rtw(2), h = rtw(1);
    CHECK(((f * g) * h).coeffs() == (f * (g * h)).coeffs());
    for (GaloisField::Raw z = 0; z < 9; ++z) CHECK((f * g)(FqElem(F9, z)) == f(g(FqElem(F9, z))));
  }
  // tau w = w^3 tau for w a generator of F_9
  TF tau({FqElem(F9, 0), FqElem(F9, 1)}, 1);
  FqElem w(F9, 3);
  CHECK((tau * TF::constant(w, 1)).coeff(1) == w.pow(3));
}

TEST_CASE("Carlitz reductions") {
  // rho_P mod P = tau^{deg P} for monic irreducible P
  for (int d = 1; d <= 3; ++d)
    for (const Poly& Pp : monic_irreducibles(F3(), d)) {
      Reduction red = tw_reduce_mod(carlitz(Pp), Pp);
      CHECK(red.degree_preserved);
      REQUIRE(red.poly.degree() == d);
      for (int k = 0; k < d; ++k) CHECK(red.poly.coeff(k).is_zero());
      CHECK(red.poly.coeff(d).is_one());
      CHECK(red.residue_field->order() == static_cast<std::uint32_t>(std::pow(3, d)));
    }
  // rho_{T^2+1} itself
  TP r = carlitz(P({1, 0, 1}));
  REQUIRE(r.degree() == 2);
  CHECK(r.coeff(0) == P({1, 0, 1}));
  CHECK(r.coeff(1) == P({0, 1, 0, 1}));  // T^3 + T
  CHECK(r.coeff(2) == P({1}));
  // modulo a linear prime the torsion polynomial stays separable
  Reduction lin = tw_reduce_mod(r, P({1, 1}));
  CHECK_FALSE(lin.poly.coeff(0).is_zero());
}

TEST_CASE("degenerate inputs") {
  TR f = tr({R({1})});
  CHECK_THROWS_AS(tw_right_divmod(f, TR(1)), Error);
  CHECK_THROWS_AS(tw_rgcd(std::vector<TR>{TR(1)}), Error);
  CHECK_THROWS_AS(f + TR({R({1})}, 2), Error);
  CHECK(TR(1).to_string() == "0");
}
