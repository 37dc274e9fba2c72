#pragma once

// Truncated Laurent series  sum_{k >= v0} c_k u^k + O(u^prec)  over a
// finite field, with absolute precision tracked through every operation.

#include <string>
#include <vector>

#include "drinfeld/gf.hpp"

namespace drinfeld {

class LaurentSeries {
 public:
  using Raw = GaloisField::Raw;

  /// Zero known to absolute precision prec.
  LaurentSeries(const GaloisField& f, int prec) : field_(&f), v0_(prec), prec_(prec) {}
  /// Coefficients for exponents start, start+1, ..., known up to prec.
  LaurentSeries(const GaloisField& f, int start, std::vector<Raw> coeffs, int prec);
  static LaurentSeries monomial(const GaloisField& f, int k, Raw c, int prec);
  static LaurentSeries one(const GaloisField& f, int prec) { return monomial(f, 0, 1, prec); }

  const GaloisField& field() const { return *field_; }
  /// Valuation when nonzero; equals precision() for zero-to-precision.
  int valuation() const { return v0_; }
  int precision() const { return prec_; }
  /// Number of certified coefficients from the leading one.
  int relative_precision() const { return prec_ - v0_; }
  bool is_zero() const { return coeffs_.empty(); }
  Raw leading() const { return coeffs_.empty() ? 0 : coeffs_[0]; }
  /// Coefficient of u^k for k < precision().
  Raw coeff(int k) const;
  const std::vector<Raw>& coefficients() const { return coeffs_; }

  LaurentSeries operator+(const LaurentSeries& o) const;
  LaurentSeries operator-(const LaurentSeries& o) const;
  LaurentSeries operator-() const;
  LaurentSeries operator*(const LaurentSeries& o) const;
  LaurentSeries operator/(const LaurentSeries& o) const { return *this * o.inverse(); }
  LaurentSeries& operator+=(const LaurentSeries& o);
  LaurentSeries& operator-=(const LaurentSeries& o) { return *this = *this - o; }
  LaurentSeries& operator*=(const LaurentSeries& o) { return *this = *this * o; }
  LaurentSeries scaled(Raw c) const;
  /// Multiply by u^k.
  LaurentSeries shifted(int k) const;
  LaurentSeries inverse() const;
  LaurentSeries pow(long long n) const;
  /// this^(p^e): coefficientwise Frobenius and exponent stretching.
  LaurentSeries frobenius(int e) const;
  /// Lower the absolute precision to at most prec.
  LaurentSeries truncated(int prec) const;

  /// Equality of the known parts on the common precision.
  bool agrees_with(const LaurentSeries& o) const { return (*this - o).is_zero(); }
  std::string to_string(const std::string& var = "u") const;

 private:
  void normalize();
  const GaloisField* field_;
  int v0_;
  int prec_;
  std::vector<Raw> coeffs_;
};

}  // namespace drinfeld
