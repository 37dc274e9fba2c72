#include <random>

#include "doctest.h"

#include "drinfeld/error.hpp"
#include "drinfeld/laurent.hpp"

using namespace drinfeld;

namespace {
const GaloisField& F3() { return GaloisField::get(3, 1); }

LaurentSeries S(int start, std::vector<GaloisField::Raw> c, int prec) { return LaurentSeries(F3(), start, c, prec); }

LaurentSeries random_series(std::mt19937_64& rng, int start, int prec) {
  std::uniform_int_distribution<GaloisField::Raw> el(0, 2);
  std::vector<GaloisField::Raw> c{1 + el(rng) % 2};
  for (int k = start + 1; k < prec; ++k) c.push_back(el(rng));
  return S(start, c, prec);
}
}  // namespace

TEST_CASE("geometric series") {
  // 1/(1 - u) = 1 + u + u^2 + ...
  LaurentSeries one_minus_u = S(0, {1, 2}, 20);
  LaurentSeries inv = one_minus_u.inverse();
  CHECK(inv.precision() == 20);
  for (int k = 0; k < 20; ++k) CHECK(inv.coeff(k) == 1);
}

TEST_CASE("precision propagates") {
  LaurentSeries a = S(-2, {1}, 5);  // u^-2 + O(u^5)
  LaurentSeries b = S(0, {1, 1}, 10);
  LaurentSeries p = a * b;
  CHECK(p.valuation() == -2);
  CHECK(p.precision() == 5 + 0);  // min(prec_a + v_b, prec_b + v_a) = min(5, 8)
  CHECK((a + b).precision() == 5);
  // inverse of u^-2 (1 + O(u^7)) is u^2 (1 + O(u^7))
  CHECK(a.inverse().valuation() == 2);
  CHECK(a.inverse().precision() == 9);
}

TEST_CASE("zero to precision") {
  LaurentSeries z(F3(), 7);
  CHECK(z.is_zero());
  CHECK(z.valuation() == 7);
  CHECK_THROWS_AS(z.inverse(), Error);
  LaurentSeries a = S(0, {1, 2, 1}, 8);
  CHECK((a - a).is_zero());
  CHECK((a - a).precision() == 8);
}

TEST_CASE("field identities on random series") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    LaurentSeries a = random_series(rng, -3, 25), b = random_series(rng, 2, 30), c = random_series(rng, 0, 20);
    CHECK((a * (b + c)).agrees_with(a * b + a * c));
    CHECK((a * a.inverse()).agrees_with(LaurentSeries::one(F3(), 40)));
    CHECK(a.pow(5).agrees_with(a * a * a * a * a));
    CHECK(a.pow(-2).agrees_with((a * a).inverse()));
    // Frobenius is the cube map in characteristic 3
    CHECK(a.frobenius(1).agrees_with(a.pow(3)));
    CHECK((a + b).frobenius(1).agrees_with(a.frobenius(1) + b.frobenius(1)));
  }
}

TEST_CASE("shift, scale, truncate") {
  LaurentSeries a = S(1, {1, 2, 0, 1}, 5);
  CHECK(a.shifted(-3).valuation() == -2);
  CHECK(a.shifted(-3).precision() == 2);
  CHECK(a.scaled(2).coeff(2) == 1);
  CHECK(a.truncated(3).precision() == 3);
  CHECK(a.truncated(3).relative_precision() == 2);
  CHECK(a.truncated(1).is_zero());
}

TEST_CASE("extension field coefficients") {
  const GaloisField& F9 = GaloisField::get(3, 2);
  LaurentSeries a(F9, 0, {3, 1, 4}, 12);
  CHECK((a * a.inverse()).agrees_with(LaurentSeries::one(F9, 12)));
  CHECK(a.frobenius(2).agrees_with(a.pow(9)));
  CHECK_THROWS_AS(a + S(0, {1}, 5), Error);
}
