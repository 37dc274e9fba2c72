#include <random>

#include "doctest.h"

#include "drinfeld/poly.hpp"
#include "drinfeld/ratfunc.hpp"

using namespace drinfeld;

namespace {
Poly P(const std::vector<long long>& c) { return Poly::from_ints(GaloisField::get(3, 1), c); }

Poly random_poly(const GaloisField& F, int deg, std::mt19937_64& rng) {
  std::uniform_int_distribution<GaloisField::Raw> el(0, F.order() - 1);
  std::vector<GaloisField::Raw> c;
  for (int i = 0; i <= deg; ++i) c.push_back(el(rng));
  return Poly(F, c);
}
}  // namespace

TEST_CASE("worked examples over F_3") {
  CHECK(P({1, 1}) * P({2, 1}) == P({2, 0, 1}));
  auto [q, r] = P({2, 0, 1}).divmod(P({1, 1}));
  CHECK(q == P({2, 1}));
  CHECK(r.is_zero());
  CHECK(P({1, 1, 0, 1}).eval(1) == 0);
  CHECK(gcd(P({2, 0, 1}), P({1, 1})) == P({1, 1}));
  CHECK(gcd(P({1, 1, 0, 1}), P({1})) == P({1}));
  CHECK(gcd(P({1, 1, 0, 1}), P({-1, 1})) == P({2, 1}));
}

TEST_CASE("division and xgcd identities on random inputs") {
  std::mt19937_64 rng(5);
  for (const GaloisField* F : {&GaloisField::get(3, 1), &GaloisField::get(3, 2), &GaloisField::get(5, 1)}) {
    for (int t = 0; t < 100; ++t) {
      Poly a = random_poly(*F, 7, rng), b = random_poly(*F, 4, rng);
      if (b.is_zero()) continue;
      auto [q, r] = a.divmod(b);
      CHECK(q * b + r == a);
      CHECK(r.degree() < b.degree());
      auto [g, s, u] = xgcd(a, b);
      CHECK(s * a + u * b == g);
      if (!g.is_zero()) {
        CHECK((a % g).is_zero());
        CHECK((b % g).is_zero());
      }
    }
  }
}

TEST_CASE("irreducible counts match the necklace formula") {
  // N(d) = (1/d) sum_{e | d} mu(e) q^{d/e}
  auto mobius = [](int n) {
    int m = 1;
    for (int p = 2; p * p <= n; ++p)
      if (n % p == 0) {
        n /= p;
        if (n % p == 0) return 0;
        m = -m;
      }
    return n > 1 ? -m : m;
  };
  for (std::uint32_t q : {3u, 5u}) {
    const GaloisField& F = GaloisField::get(q, 1);
    for (int d = 1; d <= 4; ++d) {
      long long s = 0;
      for (int e = 1; e <= d; ++e)
        if (d % e == 0) {
          long long pw = 1;
          for (int i = 0; i < d / e; ++i) pw *= q;
          s += mobius(e) * pw;
        }
      auto irr = monic_irreducibles(F, d);
      CHECK(static_cast<long long>(irr.size()) == s / d);
      for (const auto& f : irr) CHECK(roots(f).empty() == (d > 1));
    }
  }
}

TEST_CASE("derivative, frobenius, stretching") {
  const GaloisField& F = GaloisField::get(3, 1);
  CHECK(P({1, 1, 0, 1}).derivative() == P({1}));
  Poly f = P({1, 2, 1});
  // (f)^3 = f(x^3) over F_3
  CHECK(f.pow(3) == f.frobenius_coeffs(1).stretched(3));
  CHECK(Poly::monomial(F, 4, 2).degree() == 4);
}

TEST_CASE("rational functions normalize") {
  const GaloisField& F = GaloisField::get(3, 1);
  RatFunc a(P({2, 0, 1}), P({1, 1}));  // (x^2 + 2)/(x + 1) = x + 2
  CHECK(a == RatFunc(P({2, 1})));
  RatFunc T = RatFunc::variable(F);
  CHECK((T.pow(-2) * T.pow(2)) == RatFunc::constant(F, 1));
  CHECK((T + RatFunc::constant(F, 1)).inverse().degree() == -1);
  CHECK(T.frobenius(1) == T.pow(3));
}
