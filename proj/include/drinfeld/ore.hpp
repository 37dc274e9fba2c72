#pragma once

// Twisted polynomials  sum c_k tau^k  with  tau * a = a^q * tau.
//
// The coefficient domain R is one of FqElem, Poly, RatFunc, LaurentSeries.
// The twist is stored as the p-power exponent e with q = p^e, so the same
// code serves coefficients in F_q and in extensions of F_q.

#include <memory>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "drinfeld/error.hpp"
#include "drinfeld/gf.hpp"
#include "drinfeld/laurent.hpp"
#include "drinfeld/poly.hpp"
#include "drinfeld/ratfunc.hpp"

namespace drinfeld {

template <class R>
struct CoeffTraits;

template <>
struct CoeffTraits<FqElem> {
  static bool is_zero(const FqElem& a) { return a.is_zero(); }
  static FqElem frob(const FqElem& a, long e) { return a.frobenius(e); }
  static FqElem inverse(const FqElem& a) {
    if (a.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    return a.inverse();
  }
  static std::string str(const FqElem& a) { return a.to_string(); }
};

template <>
struct CoeffTraits<Poly> {
  static bool is_zero(const Poly& a) { return a.is_zero(); }
  static Poly frob(const Poly& a, long e) {
    long pe = 1;
    for (long i = 0; i < e; ++i) pe *= a.field().characteristic();
    return a.frobenius_coeffs(e).stretched(static_cast<int>(pe));
  }
  static Poly inverse(const Poly& a) {
    if (a.degree() != 0) throw Error(ErrorCode::DomainMismatch, "polynomial coefficient is not a unit");
    return Poly::constant(a.field(), a.field().inv(a.lead()));
  }
  static std::string str(const Poly& a) { return a.to_string("T"); }
};

template <>
struct CoeffTraits<RatFunc> {
  static bool is_zero(const RatFunc& a) { return a.is_zero(); }
  static RatFunc frob(const RatFunc& a, long e) { return a.frobenius(e); }
  static RatFunc inverse(const RatFunc& a) {
    if (a.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    return a.inverse();
  }
  static std::string str(const RatFunc& a) { return a.to_string("T"); }
};

template <>
struct CoeffTraits<LaurentSeries> {
  /// Minimum relative precision of a leading coefficient used as a divisor.
  static constexpr int kDivisionTolerance = 5;
  static bool is_zero(const LaurentSeries& a) { return a.is_zero(); }
  static LaurentSeries frob(const LaurentSeries& a, long e) { return a.frobenius(static_cast<int>(e)); }
  static LaurentSeries inverse(const LaurentSeries& a) {
    if (a.is_zero()) throw Error(ErrorCode::DivisionByZero, "leading coefficient vanishes to precision");
    if (a.relative_precision() < kDivisionTolerance)
      throw Error(ErrorCode::PrecisionLoss, "leading coefficient known to only " +
                                                std::to_string(a.relative_precision()) + " digits");
    return a.inverse();
  }
  static std::string str(const LaurentSeries& a) { return a.to_string(); }
};

template <class R>
class TwistedPoly {
 public:
  using Traits = CoeffTraits<R>;

  /// Zero polynomial with twist tau a = a^(p^e) tau.
  explicit TwistedPoly(int frob_exp = 1) : e_(frob_exp) {}
  TwistedPoly(std::vector<R> coeffs, int frob_exp) : c_(std::move(coeffs)), e_(frob_exp) { trim(); }
  static TwistedPoly constant(const R& a, int frob_exp) { return TwistedPoly({a}, frob_exp); }
  /// c * tau^k, with zero coefficients below k taken from zero.
  static TwistedPoly monomial(const R& c, const R& zero, int k, int frob_exp) {
    std::vector<R> v(k, zero);
    v.push_back(c);
    return TwistedPoly(std::move(v), frob_exp);
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<R>& coeffs() const { return c_; }
  const R& coeff(int k) const { return c_.at(k); }
  const R& lead() const { return c_.back(); }
  int frobenius_exponent() const { return e_; }

  TwistedPoly operator+(const TwistedPoly& o) const {
    check(o);
    std::vector<R> r;
    std::size_t n = std::max(c_.size(), o.c_.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (i >= c_.size())
        r.push_back(o.c_[i]);
      else if (i >= o.c_.size())
        r.push_back(c_[i]);
      else
        r.push_back(c_[i] + o.c_[i]);
    }
    return TwistedPoly(std::move(r), e_);
  }
  TwistedPoly operator-() const {
    std::vector<R> r;
    for (const auto& a : c_) r.push_back(-a);
    return TwistedPoly(std::move(r), e_);
  }
  TwistedPoly operator-(const TwistedPoly& o) const { return *this + (-o); }

  TwistedPoly operator*(const TwistedPoly& o) const {
    check(o);
    if (is_zero() || o.is_zero()) return TwistedPoly(e_);
    std::vector<std::optional<R>> acc(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j) {
        R t = c_[i] * Traits::frob(o.c_[j], static_cast<long>(e_) * static_cast<long>(i));
        if (acc[i + j])
          *acc[i + j] = *acc[i + j] + t;
        else
          acc[i + j] = std::move(t);
      }
    std::vector<R> r;
    for (auto& a : acc) r.push_back(std::move(*a));
    return TwistedPoly(std::move(r), e_);
  }

  /// a * f (left scalar multiplication).
  TwistedPoly left_scaled(const R& a) const {
    std::vector<R> r;
    for (const auto& c : c_) r.push_back(a * c);
    return TwistedPoly(std::move(r), e_);
  }

  /// f(z) = sum c_k z^(q^k).
  R operator()(const R& z) const {
    if (c_.empty()) return z - z;
    R acc = c_[0] * z;
    R zk = z;
    for (std::size_t k = 1; k < c_.size(); ++k) {
      zk = Traits::frob(zk, e_);
      acc = acc + c_[k] * zk;
    }
    return acc;
  }

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (Traits::is_zero(c_[k])) continue;
      if (!s.empty()) s += " + ";
      s += "(" + Traits::str(c_[k]) + ")";
      if (k == 1) s += "*tau";
      if (k > 1) s += "*tau^" + std::to_string(k);
    }
    return s.empty() ? "0" : s;
  }

  void check(const TwistedPoly& o) const {
    if (e_ != o.e_) throw Error(ErrorCode::DomainMismatch, "twisted polynomials with different twists");
  }

 private:
  void trim() {
    while (!c_.empty() && Traits::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<R> c_;
  int e_;
};

template <class R>
TwistedPoly<R> tw_mul(const TwistedPoly<R>& f, const TwistedPoly<R>& g) {
  return f * g;
}

/// f = quot * g + rem, deg rem < deg g.
template <class R>
std::pair<TwistedPoly<R>, TwistedPoly<R>> tw_right_divmod(const TwistedPoly<R>& f, const TwistedPoly<R>& g) {
  using T = CoeffTraits<R>;
  f.check(g);
  if (g.is_zero()) throw Error(ErrorCode::DivisionByZero, "right division by zero twisted polynomial");
  const int e = g.frobenius_exponent();
  const int dg = g.degree();
  std::vector<R> r = f.coeffs();
  if (f.degree() < dg) return {TwistedPoly<R>(e), f};
  std::vector<std::optional<R>> quot(f.degree() - dg + 1);
  for (int d = f.degree(); d >= dg; --d) {
    // a series coefficient that is only zero to precision still carries
    // its precision into the quotient
    if constexpr (!std::is_same_v<R, LaurentSeries>) {
      if (T::is_zero(r[d])) {
        quot[d - dg] = r[d];
        continue;
      }
    }
    int k = d - dg;
    R c = r[d] * T::inverse(T::frob(g.lead(), static_cast<long>(e) * k));
    // r -= c tau^k g
    for (int i = 0; i < dg; ++i) r[i + k] = r[i + k] - c * T::frob(g.coeff(i), static_cast<long>(e) * k);
    quot[k] = c;
    r[d] = r[d] - r[d];
  }
  r.erase(r.begin() + dg, r.end());
  std::vector<R> q;
  for (auto& x : quot) q.push_back(std::move(*x));
  return {TwistedPoly<R>(std::move(q), e), TwistedPoly<R>(std::move(r), e)};
}

/// Monic generator of the left ideal sum L{tau} f_i.
template <class R>
TwistedPoly<R> tw_rgcd(const std::vector<TwistedPoly<R>>& fs) {
  using T = CoeffTraits<R>;
  std::optional<TwistedPoly<R>> g;
  for (const auto& f : fs) {
    if (f.is_zero()) continue;
    if (!g) {
      g = f;
      continue;
    }
    TwistedPoly<R> a = *g, b = f;
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
      TwistedPoly<R> r = tw_right_divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    g = a;
  }
  if (!g) throw Error(ErrorCode::DivisionByZero, "right gcd of zero polynomials");
  return g->left_scaled(T::inverse(g->lead()));
}

template <class R>
R tw_eval(const TwistedPoly<R>& f, const R& z) {
  return f(z);
}

struct Reduction {
  TwistedPoly<FqElem> poly;
  const GaloisField* residue_field;
  bool degree_preserved;
};

/// Coefficientwise reduction of a twisted polynomial over F_q[T] modulo an
/// irreducible P, landing in F_{q^{deg P}} (T maps to the smallest root of P).
Reduction tw_reduce_mod(const TwistedPoly<Poly>& f, const Poly& P);
Reduction tw_reduce_mod(const TwistedPoly<RatFunc>& f, const Poly& P);

}  // namespace drinfeld
