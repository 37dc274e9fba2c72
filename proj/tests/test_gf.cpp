#include <random>

#include "doctest.h"

#include "drinfeld/error.hpp"
#include "drinfeld/gf.hpp"

using namespace drinfeld;

TEST_CASE("prime field arithmetic") {
  const GaloisField& F = GaloisField::get(3, 1);
  CHECK(F.add(2, 2) == 1);
  CHECK(F.pow(2, 2) == 1);
  CHECK(F.from_int(-1) == 2);
  CHECK(F.from_int(7) == 1);
  CHECK(F.mul(2, F.inv(2)) == 1);
  CHECK(&GaloisField::get(3, 1) == &F);
}

TEST_CASE("F_9 modulus and frobenius") {
  const GaloisField& F = GaloisField::get(3, 2);
  CHECK(F.order() == 9);
  CHECK(F.modulus() == std::vector<std::uint32_t>{1, 0, 1});
  const GaloisField::Raw w = 3;  // digits (0, 1)
  CHECK(F.mul(w, w) == F.from_int(-1));
  // w^3 = -w
  CHECK(F.frobenius(w, 1) == F.neg(w));
  CHECK(F.frobenius(w, 2) == w);
  CHECK(F.digits(F.neg(w)) == std::vector<std::uint32_t>{0, 2});
}

TEST_CASE("field axioms by exhaustion") {
  for (auto [p, m] : {std::pair{3u, 2u}, std::pair{3u, 3u}, std::pair{5u, 2u}, std::pair{7u, 1u}}) {
    const GaloisField& F = GaloisField::get(p, m);
    const auto q = F.order();
    for (GaloisField::Raw a = 0; a < q; ++a) {
      CHECK(F.add(a, F.neg(a)) == 0);
      if (a) CHECK(F.mul(a, F.inv(a)) == 1);
      CHECK(F.pow(a, q) == a);
      CHECK(F.from_digits(F.digits(a)) == a);
    }
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<GaloisField::Raw> el(0, q - 1);
    for (int t = 0; t < 300; ++t) {
      auto a = el(rng), b = el(rng), c = el(rng);
      CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
      // frobenius is additive and multiplicative
      CHECK(F.frobenius(F.add(a, b), 1) == F.add(F.frobenius(a, 1), F.frobenius(b, 1)));
      CHECK(F.frobenius(F.mul(a, b), 1) == F.mul(F.frobenius(a, 1), F.frobenius(b, 1)));
    }
  }
}

TEST_CASE("primitive element generates the multiplicative group") {
  const GaloisField& F = GaloisField::get(3, 3);
  auto g = F.primitive_element();
  GaloisField::Raw x = 1;
  std::vector<int> seen(F.order(), 0);
  for (std::uint32_t k = 0; k + 1 < F.order(); ++k) {
    CHECK(seen[x] == 0);
    seen[x] = 1;
    x = F.mul(x, g);
  }
  CHECK(x == 1);
}

TEST_CASE("square roots and squares") {
  const GaloisField& F = GaloisField::get(3, 1);
  CHECK(F.is_square(1));
  CHECK_FALSE(F.is_square(2));
  const GaloisField& F9 = GaloisField::get(3, 2);
  int squares = 0;
  for (GaloisField::Raw a = 0; a < 9; ++a) {
    if (!F9.is_square(a)) {
      CHECK_THROWS_AS(F9.sqrt(a), Error);
      continue;
    }
    ++squares;
    auto r = F9.sqrt(a);
    CHECK(F9.mul(r, r) == a);
  }
  CHECK(squares == 5);
  // F_3 lies in the squares of F_9
  CHECK(F9.is_square(2));
}

TEST_CASE("FqElem wraps the field") {
  const GaloisField& F = GaloisField::get(3, 2);
  FqElem a(F, 4), b(F, 7);
  CHECK((a * b) / b == a);
  CHECK((a + b) - b == a);
  CHECK(a.frobenius(2) == a);
  const GaloisField& G = GaloisField::get(3, 1);
  CHECK_THROWS_AS(a + FqElem(G, 1), Error);
}

TEST_CASE("subfield embedding is a ring homomorphism") {
  const GaloisField& F3 = GaloisField::get(3, 1);
  const GaloisField& F9 = GaloisField::get(3, 2);
  FieldEmbedding e(F3, F9);
  for (GaloisField::Raw a = 0; a < 3; ++a)
    for (GaloisField::Raw b = 0; b < 3; ++b) {
      CHECK(e(F3.add(a, b)) == F9.add(e(a), e(b)));
      CHECK(e(F3.mul(a, b)) == F9.mul(e(a), e(b)));
    }
  for (GaloisField::Raw a = 0; a < 3; ++a) CHECK(e.preimage(e(a)) == a);
  CHECK_FALSE(e.in_image(3));
  // image = fixed points of the 3-Frobenius
  for (GaloisField::Raw b = 0; b < 9; ++b) CHECK(e.in_image(b) == (F9.frobenius(b, 1) == b));
}
