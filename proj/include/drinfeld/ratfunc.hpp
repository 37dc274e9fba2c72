#pragma once

#include <string>

#include "drinfeld/poly.hpp"

namespace drinfeld {

/// Element of F_q(T) in lowest terms with monic denominator.
class RatFunc {
 public:
  explicit RatFunc(const GaloisField& f) : num_(f), den_(Poly::constant(f, 1)) {}
  RatFunc(Poly num);
  RatFunc(Poly num, Poly den);
  static RatFunc constant(const GaloisField& f, GaloisField::Raw c) { return RatFunc(Poly::constant(f, c)); }
  static RatFunc variable(const GaloisField& f) { return RatFunc(Poly::monomial(f, 1)); }

  const GaloisField& field() const { return num_.field(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  /// deg num - deg den (the T-degree); undefined for zero.
  int degree() const { return num_.degree() - den_.degree(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator-() const { return RatFunc(-num_, den_); }
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const { return *this * o.inverse(); }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc inverse() const;
  RatFunc pow(long k) const;
  /// this^(p^e)
  RatFunc frobenius(long e) const;

  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  std::string to_string(const std::string& var = "T") const;

 private:
  void normalize();
  Poly num_, den_;
};

}  // namespace drinfeld
