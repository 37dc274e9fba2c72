#pragma once

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "drinfeld/gf.hpp"

namespace drinfeld {

/// Univariate polynomial over a finite field, lowest degree first.
class Poly {
 public:
  using Raw = GaloisField::Raw;

  explicit Poly(const GaloisField& f) : field_(&f) {}
  Poly(const GaloisField& f, std::vector<Raw> coeffs);
  static Poly constant(const GaloisField& f, Raw c) { return Poly(f, {c}); }
  static Poly monomial(const GaloisField& f, int k, Raw c = 1);
  /// Coefficients given as integers reduced into the prime subfield.
  static Poly from_ints(const GaloisField& f, const std::vector<long long>& c);

  const GaloisField& field() const { return *field_; }
  const std::vector<Raw>& coeffs() const { return c_; }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  Raw coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0; }
  Raw lead() const { return c_.empty() ? 0 : c_.back(); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(Raw c) const;
  Poly shifted(int k) const;  // times x^k
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  /// (q, r) with *this = q*g + r, deg r < deg g.
  std::pair<Poly, Poly> divmod(const Poly& g) const;
  Poly operator/(const Poly& g) const { return divmod(g).first; }
  Poly operator%(const Poly& g) const { return divmod(g).second; }

  Raw eval(Raw x) const;
  Poly monic() const;
  Poly derivative() const;
  Poly pow(unsigned k) const;
  /// Apply a^(p^e) to every coefficient.
  Poly frobenius_coeffs(long e) const;
  /// f(x^k)
  Poly stretched(int k) const;

  bool operator==(const Poly& o) const { return field_ == o.field_ && c_ == o.c_; }
  /// Total order: by degree, then coefficients from the top.
  bool less(const Poly& o) const;
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  void check_same(const Poly& o) const;
  const GaloisField* field_;
  std::vector<Raw> c_;
};

/// Monic gcd; gcd(0, 0) is rejected by callers (returns zero).
Poly gcd(const Poly& a, const Poly& b);
/// (g, s, t) with g = s*a + t*b, g monic.
std::tuple<Poly, Poly, Poly> xgcd(const Poly& a, const Poly& b);
bool is_irreducible(const Poly& f);
/// All monic irreducible polynomials of exact degree d.
std::vector<Poly> monic_irreducibles(const GaloisField& f, int d);
/// Roots in the coefficient field, by exhaustive evaluation.
std::vector<GaloisField::Raw> roots(const Poly& f);

}  // namespace drinfeld
