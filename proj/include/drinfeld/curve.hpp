#pragma once

// The ring A (functions regular away from one place at infinity) and its
// fraction field K, for two plane models:
//
//   rational:   A = F_q[x]
//   quadratic:  A = F_q[x, y] / (y^2 + h(x) y - f(x))
//
// with exactly one place above x = infinity. Completion at infinity is
// F_inf((u)) with the uniformizer
//
//   rational            u = 1/x
//   quadratic ramified  u = x^g / y        (d_inf = 1)
//   quadratic inert     u = 1/x            (d_inf = 2, F_inf = F_{q^2})

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "drinfeld/gf.hpp"
#include "drinfeld/laurent.hpp"
#include "drinfeld/poly.hpp"
#include "drinfeld/ratfunc.hpp"

namespace drinfeld {

enum class ModelKind { Rational, Quadratic };

struct CurveSpec {
  std::uint32_t p = 3;
  std::uint32_t m = 1;
  ModelKind kind = ModelKind::Rational;
  // Coefficients lowest-first; each entry is a packed F_q element.
  std::vector<std::uint32_t> h;
  std::vector<std::uint32_t> f;
  std::string label;
};

class FFElement;

class CurveModel {
 public:
  /// Validates and builds a model (parse_model).
  static std::shared_ptr<const CurveModel> create(const CurveSpec& spec);

  ModelKind kind() const { return kind_; }
  bool is_rational() const { return kind_ == ModelKind::Rational; }
  const std::string& label() const { return label_; }
  const GaloisField& base_field() const { return *fq_; }
  /// Constant field F_inf of the completion.
  const GaloisField& inf_field() const { return *finf_; }
  const FieldEmbedding& constants() const { return *embed_; }
  std::uint32_t q() const { return fq_->order(); }
  int genus() const { return genus_; }
  int d_inf() const { return dinf_; }
  bool ramified_at_infinity() const { return kind_ == ModelKind::Quadratic && dinf_ == 1; }
  const Poly& h() const { return h_; }
  const Poly& f() const { return f_; }
  /// deg(y) (meaningful for quadratic models).
  int y_degree() const { return y_degree_; }
  const CurveSpec& spec() const { return spec_; }

  /// Laurent expansions of x and y in u, to absolute precision >= prec.
  LaurentSeries x_at_infinity(int prec) const;
  LaurentSeries y_at_infinity(int prec) const;

  /// Uniformizer as an element of K.
  FFElement uniformizer() const;

  std::string describe() const;

 private:
  CurveModel() = default;
  void expand_to(int prec) const;

  ModelKind kind_ = ModelKind::Rational;
  std::string label_;
  const GaloisField* fq_ = nullptr;
  const GaloisField* finf_ = nullptr;
  std::unique_ptr<FieldEmbedding> embed_;
  Poly h_{GaloisField::get(3, 1)};
  Poly f_{GaloisField::get(3, 1)};
  int genus_ = 0;
  int dinf_ = 1;
  int y_degree_ = 0;
  CurveSpec spec_;

  // Lazily extended expansions; guarded so shared models stay usable from
  // several threads.
  mutable std::mutex cache_mu_;
  mutable std::optional<LaurentSeries> x_cache_, y_cache_;
  mutable int cache_prec_ = -1;
};

using ModelPtr = std::shared_ptr<const CurveModel>;

/// Element (u(x) + v(x) y) / w(x) of K with w monic and gcd(u, v, w) = 1.
/// The model must outlive the element.
class FFElement {
 public:
  FFElement(const CurveModel& model, Poly u, Poly v, Poly w);
  FFElement(const CurveModel& model, Poly u, Poly v);
  static FFElement zero(const CurveModel& m);
  static FFElement one(const CurveModel& m);
  static FFElement constant(const CurveModel& m, GaloisField::Raw c);
  static FFElement x(const CurveModel& m);
  static FFElement y(const CurveModel& m);
  static FFElement from_poly(const CurveModel& m, const Poly& u);

  const CurveModel& model() const { return *model_; }
  const Poly& u() const { return u_; }
  const Poly& v() const { return v_; }
  const Poly& w() const { return w_; }
  bool is_zero() const { return u_.is_zero() && v_.is_zero(); }
  bool is_integral() const { return w_.is_one(); }

  FFElement operator+(const FFElement& o) const;
  FFElement operator-(const FFElement& o) const;
  FFElement operator-() const;
  FFElement operator*(const FFElement& o) const;
  FFElement operator/(const FFElement& o) const { return *this * o.inverse(); }
  FFElement& operator+=(const FFElement& o) { return *this = *this + o; }
  FFElement& operator*=(const FFElement& o) { return *this = *this * o; }
  FFElement scaled(GaloisField::Raw c) const;
  FFElement inverse() const;
  FFElement pow(long k) const;
  FFElement conjugate() const;
  /// Norm to F_q(x).
  RatFunc norm() const;

  bool operator==(const FFElement& o) const;
  std::string to_string() const;

 private:
  void normalize();
  const CurveModel* model_;
  Poly u_, v_, w_;
};

/// Expansion at infinity; prec is the absolute precision in u (>= 1).
LaurentSeries embed_at_infinity(const FFElement& a, int prec);

struct DegVal {
  int v;
  int deg;
};
/// (v_inf(a), deg a) computed exactly from the norm.
DegVal degree_valuation(const FFElement& a);
int degree(const FFElement& a);

/// Leading coefficient at infinity (a packed F_inf element).
GaloisField::Raw sgn_of(const FFElement& a);
GaloisField::Raw sgn_of(const LaurentSeries& s);

/// Coset representatives S of F_inf^x / F_q^x with 1 in S.
class SignData {
 public:
  explicit SignData(const CurveModel& model, bool alternate = false);
  const std::vector<GaloisField::Raw>& representatives() const { return reps_; }
  bool contains(GaloisField::Raw s) const { return member_[s] != 0; }
  bool is_positive(const FFElement& a) const { return !a.is_zero() && contains(sgn_of(a)); }
  /// Unique (c, s) with sign = c * s, c in F_q^x (packed in F_inf), s in S.
  std::pair<GaloisField::Raw, GaloisField::Raw> decompose(GaloisField::Raw sign) const;
  /// The c in F_q^x (as F_inf element) making c*sign positive.
  GaloisField::Raw positivity_scalar(GaloisField::Raw sign) const;
  const GaloisField& field() const { return *finf_; }

 private:
  const GaloisField* finf_;
  std::vector<GaloisField::Raw> reps_;
  std::vector<GaloisField::Raw> scalars_;  // F_q^x inside F_inf
  std::vector<char> member_;
};

}  // namespace drinfeld
