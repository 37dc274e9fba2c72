#include "drinfeld/curve.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "drinfeld/error.hpp"

namespace drinfeld {

namespace {

Poly poly_from_packed(const GaloisField& F, const std::vector<std::uint32_t>& c) {
  std::vector<GaloisField::Raw> v;
  for (auto x : c) {
    if (x >= F.order()) throw Error(ErrorCode::ParseError, "coefficient out of range for F_" + std::to_string(F.order()));
    v.push_back(x);
  }
  return Poly(F, std::move(v));
}

}  // namespace

std::shared_ptr<const CurveModel> CurveModel::create(const CurveSpec& spec) {
  if (spec.p < 3) throw Error(ErrorCode::UnsupportedCharacteristic, "characteristic 2 (q < 3) is not supported");
  const GaloisField& fq = GaloisField::get(spec.p, spec.m);
  std::shared_ptr<CurveModel> model(new CurveModel());
  model->spec_ = spec;
  model->kind_ = spec.kind;
  model->label_ = spec.label;
  model->fq_ = &fq;
  model->h_ = Poly(fq);
  model->f_ = Poly(fq);

  if (spec.kind == ModelKind::Rational) {
    model->genus_ = 0;
    model->dinf_ = 1;
    model->finf_ = &fq;
    model->embed_ = std::make_unique<FieldEmbedding>(fq, fq);
    return model;
  }

  Poly h = poly_from_packed(fq, spec.h);
  Poly f = poly_from_packed(fq, spec.f);
  // Completing the square (p odd): (2y + h)^2 = h^2 + 4 f.
  Poly disc = h * h + f.scaled(fq.from_int(4));
  if (disc.degree() < 1) throw Error(ErrorCode::SingularCurve, "discriminant h^2 + 4f is constant");
  if (!gcd(disc, disc.derivative()).is_one())
    throw Error(ErrorCode::SingularCurve, "h^2 + 4f is not squarefree: affine model is singular or reducible");

  int dd = disc.degree();
  int genus = 0, dinf = 1;
  if (dd % 2 == 1) {
    genus = (dd - 1) / 2;
    if (h.degree() > genus) throw Error(ErrorCode::UnsupportedModel, "deg h exceeds genus for a ramified model");
  } else {
    if (fq.is_square(disc.lead())) throw Error(ErrorCode::SplitInfinity, "two places above infinity (square leading coefficient)");
    genus = (dd - 2) / 2;
    dinf = 2;
    if (h.degree() > genus + 1) throw Error(ErrorCode::UnsupportedModel, "deg h exceeds g+1 for an inert model");
  }
  model->h_ = h;
  model->f_ = f;
  model->genus_ = genus;
  model->dinf_ = dinf;
  model->y_degree_ = dinf == 1 ? 2 * genus + 1 : 2 * (genus + 1);
  model->finf_ = &GaloisField::get(spec.p, spec.m * dinf);
  model->embed_ = std::make_unique<FieldEmbedding>(fq, *model->finf_);
  return model;
}

std::string CurveModel::describe() const {
  std::ostringstream os;
  if (is_rational()) {
    os << "A = F_" << q() << "[x]";
  } else {
    os << "y^2";
    if (!h_.is_zero()) os << " + (" << h_.to_string() << ")*y";
    os << " = " << f_.to_string() << " over F_" << q() << ", genus " << genus_ << ", d_inf " << dinf_;
  }
  return os.str();
}

void CurveModel::expand_to(int prec) const {
  // caller holds cache_mu_
  if (cache_prec_ >= prec) return;
  int target = std::max(prec, 2 * cache_prec_);
  const GaloisField& F = *finf_;
  auto E = [&](GaloisField::Raw c) { return (*embed_)(c); };

  if (kind_ == ModelKind::Rational || dinf_ == 2) {
    x_cache_ = LaurentSeries::monomial(F, -1, 1, target);
  }
  if (kind_ == ModelKind::Rational) {
    y_cache_ = LaurentSeries(F, target);
    cache_prec_ = target;
    return;
  }

  const int g = genus_;
  // s is a unit power series; X and Y are u-shifts of s (or of s^g).
  const int N = target + 2 * g + 4;
  int maxk = dinf_ == 1 ? 2 * g + 1 : 2;
  std::vector<LaurentSeries> P(maxk + 1, LaurentSeries(F, N));
  auto add_term = [&](int k, int uexp, GaloisField::Raw c) {
    P[k] += LaurentSeries::monomial(F, uexp, c, N);
  };
  if (dinf_ == 1) {
    add_term(2 * g, 0, 1);
    for (int i = 0; i <= h_.degree(); ++i)
      if (h_.coeff(i)) add_term(g + i, 2 * g + 1 - 2 * i, E(h_.coeff(i)));
    for (int i = 0; i <= f_.degree(); ++i)
      if (f_.coeff(i)) add_term(i, 4 * g + 2 - 2 * i, F.neg(E(f_.coeff(i))));
  } else {
    add_term(2, 0, 1);
    for (int i = 0; i <= h_.degree(); ++i)
      if (h_.coeff(i)) add_term(1, g + 1 - i, E(h_.coeff(i)));
    for (int i = 0; i <= f_.degree(); ++i)
      if (f_.coeff(i)) add_term(0, 2 * g + 2 - i, F.neg(E(f_.coeff(i))));
  }

  // Constant term of F(s) at u = 0; pick the smallest nonzero simple root.
  GaloisField::Raw s0 = 0;
  for (GaloisField::Raw t = 1; t < F.order() && s0 == 0; ++t) {
    GaloisField::Raw acc = 0, dacc = 0;
    for (int k = maxk; k >= 0; --k) {
      GaloisField::Raw c = P[k].coeff(0);
      dacc = F.add(F.mul(dacc, t), F.mul(acc, 1));
      acc = F.add(F.mul(acc, t), c);
    }
    if (acc == 0 && dacc != 0) s0 = t;
  }
  if (s0 == 0) throw Error(ErrorCode::SingularCurve, "no simple root for the expansion at infinity");

  LaurentSeries s = LaurentSeries::monomial(F, 0, s0, 1);
  int cur = 1;
  int iterations = static_cast<int>(std::ceil(std::log2(std::max(2, N)))) + 2;
  for (int it = 0; it < iterations && cur < N; ++it) {
    int next = std::min(2 * cur, N);
    LaurentSeries sp = LaurentSeries(F, 0, s.coefficients(), next);
    // pad s with zeros up to next; known digits beyond cur are refined below
    LaurentSeries val(F, next), dval(F, next);
    for (int k = maxk; k >= 0; --k) {
      dval = dval * sp + val;
      val = val * sp + P[k].truncated(next);
    }
    s = (sp - val / dval).truncated(next);
    cur = next;
  }
  if (s.precision() < N) throw Error(ErrorCode::PrecisionLoss, "Newton iteration did not reach precision");

  if (dinf_ == 1) {
    x_cache_ = s.shifted(-2);
    y_cache_ = (g == 0 ? LaurentSeries::one(F, N) : s.pow(g)).shifted(-(2 * g + 1));
  } else {
    y_cache_ = s.shifted(-(g + 1));
  }
  cache_prec_ = std::min(x_cache_->precision(), y_cache_->precision());
}

LaurentSeries CurveModel::x_at_infinity(int prec) const {
  std::lock_guard<std::mutex> lock(cache_mu_);
  expand_to(prec);
  return x_cache_->truncated(std::max(prec, x_cache_->precision()));
}

LaurentSeries CurveModel::y_at_infinity(int prec) const {
  std::lock_guard<std::mutex> lock(cache_mu_);
  expand_to(prec);
  return *y_cache_;
}

FFElement CurveModel::uniformizer() const {
  if (ramified_at_infinity()) return FFElement::x(*this).pow(genus_) / FFElement::y(*this);
  return FFElement::x(*this).inverse();
}

// ---------------------------------------------------------------------------

FFElement::FFElement(const CurveModel& model, Poly u, Poly v, Poly w)
    : model_(&model), u_(std::move(u)), v_(std::move(v)), w_(std::move(w)) {
  if (w_.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  if (model.is_rational() && !v_.is_zero()) throw Error(ErrorCode::DomainMismatch, "y-part in a rational model");
  normalize();
}

FFElement::FFElement(const CurveModel& model, Poly u, Poly v)
    : FFElement(model, std::move(u), std::move(v), Poly::constant(model.base_field(), 1)) {}

FFElement FFElement::zero(const CurveModel& m) {
  const auto& F = m.base_field();
  return FFElement(m, Poly(F), Poly(F));
}
FFElement FFElement::one(const CurveModel& m) { return constant(m, 1); }
FFElement FFElement::constant(const CurveModel& m, GaloisField::Raw c) {
  const auto& F = m.base_field();
  return FFElement(m, Poly::constant(F, c), Poly(F));
}
FFElement FFElement::x(const CurveModel& m) {
  const auto& F = m.base_field();
  return FFElement(m, Poly::monomial(F, 1), Poly(F));
}
FFElement FFElement::y(const CurveModel& m) {
  const auto& F = m.base_field();
  if (m.is_rational()) throw Error(ErrorCode::DomainMismatch, "rational model has no y");
  return FFElement(m, Poly(F), Poly::constant(F, 1));
}
FFElement FFElement::from_poly(const CurveModel& m, const Poly& u) { return FFElement(m, u, Poly(m.base_field())); }

void FFElement::normalize() {
  if (u_.is_zero() && v_.is_zero()) {
    w_ = Poly::constant(w_.field(), 1);
    return;
  }
  Poly g = gcd(gcd(u_, v_), w_);
  if (!g.is_one()) {
    u_ = u_ / g;
    v_ = v_ / g;
    w_ = w_ / g;
  }
  auto lc = w_.lead();
  if (lc != 1) {
    auto inv = w_.field().inv(lc);
    u_ = u_.scaled(inv);
    v_ = v_.scaled(inv);
    w_ = w_.scaled(inv);
  }
}

FFElement FFElement::operator+(const FFElement& o) const {
  if (w_ == o.w_) return FFElement(*model_, u_ + o.u_, v_ + o.v_, w_);
  return FFElement(*model_, u_ * o.w_ + o.u_ * w_, v_ * o.w_ + o.v_ * w_, w_ * o.w_);
}

FFElement FFElement::operator-(const FFElement& o) const { return *this + (-o); }

FFElement FFElement::operator-() const { return FFElement(*model_, -u_, -v_, w_); }

FFElement FFElement::operator*(const FFElement& o) const {
  // y^2 = f - h y
  Poly vv = v_ * o.v_;
  Poly u = u_ * o.u_ + vv * model_->f();
  Poly v = u_ * o.v_ + o.u_ * v_ - vv * model_->h();
  return FFElement(*model_, std::move(u), std::move(v), w_ * o.w_);
}

FFElement FFElement::scaled(GaloisField::Raw c) const {
  return FFElement(*model_, u_.scaled(c), v_.scaled(c), w_);
}

FFElement FFElement::conjugate() const {
  // y -> -h - y
  return FFElement(*model_, u_ - v_ * model_->h(), -v_, w_);
}

RatFunc FFElement::norm() const {
  Poly n = u_ * u_ - u_ * v_ * model_->h() - v_ * v_ * model_->f();
  return RatFunc(n, w_ * w_);
}

FFElement FFElement::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero element");
  Poly n = u_ * u_ - u_ * v_ * model_->h() - v_ * v_ * model_->f();
  FFElement c = conjugate();
  return FFElement(*model_, c.u_ * w_ * w_, c.v_ * w_ * w_, n * c.w_);
}

FFElement FFElement::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  FFElement r = one(*model_), b = *this;
  while (k) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

bool FFElement::operator==(const FFElement& o) const {
  return model_ == o.model_ && u_ == o.u_ && v_ == o.v_ && w_ == o.w_;
}

namespace {

int term_count(const Poly& p) {
  int n = 0;
  for (auto c : p.coeffs()) n += c != 0;
  return n;
}

}  // namespace

std::string FFElement::to_string() const {
  std::string vy;
  if (!v_.is_zero()) {
    if (v_.is_one())
      vy = "y";
    else if (term_count(v_) == 1)
      vy = v_.to_string() + "*y";
    else
      vy = "(" + v_.to_string() + ")*y";
  }
  std::string s;
  if (v_.is_zero())
    s = u_.to_string();
  else if (u_.is_zero())
    s = vy;
  else
    s = u_.to_string() + " + " + vy;
  if (!w_.is_one()) {
    bool simple = u_.is_zero() ? term_count(v_) <= 1 : v_.is_zero() && term_count(u_) == 1;
    if (!simple) s = "(" + s + ")";
    s += "/" + (term_count(w_) == 1 ? w_.to_string() : "(" + w_.to_string() + ")");
  }
  return s;
}

// ---------------------------------------------------------------------------

namespace {

LaurentSeries horner(const Poly& p, const LaurentSeries& X, const FieldEmbedding& E, int exact_prec) {
  const GaloisField& F = X.field();
  LaurentSeries acc(F, exact_prec);
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * X;
    if (p.coeff(i)) acc += LaurentSeries::monomial(F, 0, E(p.coeff(i)), exact_prec);
  }
  return acc;
}

}  // namespace

LaurentSeries embed_at_infinity(const FFElement& a, int prec) {
  const CurveModel& M = a.model();
  const GaloisField& F = M.inf_field();
  if (a.is_zero()) return LaurentSeries(F, prec);
  if (prec < 1) return embed_at_infinity(a, 1).truncated(prec);
  const FieldEmbedding& E = M.constants();
  int span = a.u().degree() + std::max(0, a.v().degree()) + a.w().degree() + M.y_degree() + 2;
  int W = prec + 2 * span + 4;
  for (int attempt = 0; attempt < 8; ++attempt) {
    LaurentSeries X = M.x_at_infinity(W);
    int exact = W + 8 * span + 16;
    LaurentSeries r = horner(a.u(), X, E, exact);
    if (!a.v().is_zero()) r += horner(a.v(), X, E, exact) * M.y_at_infinity(W);
    if (!a.w().is_one()) r = r / horner(a.w(), X, E, exact);
    if (r.precision() >= prec) return r.truncated(prec);
    W += (prec - r.precision()) + 8;
  }
  throw Error(ErrorCode::PrecisionUnreachable, "embedding did not reach requested precision");
}

DegVal degree_valuation(const FFElement& a) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroElement, "degree of zero");
  const CurveModel& M = a.model();
  int deg;
  if (M.is_rational()) {
    deg = a.u().degree() - a.w().degree();
  } else {
    RatFunc n = a.norm();
    deg = n.degree();
  }
  return {-deg / M.d_inf(), deg};
}

int degree(const FFElement& a) { return degree_valuation(a).deg; }

GaloisField::Raw sgn_of(const LaurentSeries& s) {
  if (s.is_zero()) throw Error(ErrorCode::ZeroElement, "sign of a series that is zero to precision");
  return s.leading();
}

GaloisField::Raw sgn_of(const FFElement& a) {
  auto dv = degree_valuation(a);
  LaurentSeries s = embed_at_infinity(a, std::max(1, dv.v + 1));
  return sgn_of(s);
}

// ---------------------------------------------------------------------------

SignData::SignData(const CurveModel& model, bool alternate) : finf_(&model.inf_field()) {
  const GaloisField& F = *finf_;
  const FieldEmbedding& E = model.constants();
  for (GaloisField::Raw c = 1; c < model.base_field().order(); ++c) scalars_.push_back(E(c));
  member_.assign(F.order(), 0);
  std::vector<char> covered(F.order(), 0);
  for (GaloisField::Raw s = 1; s < F.order(); ++s) {
    if (covered[s]) continue;
    GaloisField::Raw rep = s;
    std::vector<GaloisField::Raw> coset;
    for (auto c : scalars_) coset.push_back(F.mul(c, s));
    for (auto t : coset) covered[t] = 1;
    if (alternate && s != 1) rep = *std::max_element(coset.begin(), coset.end());
    reps_.push_back(rep);
    member_[rep] = 1;
  }
}

std::pair<GaloisField::Raw, GaloisField::Raw> SignData::decompose(GaloisField::Raw sign) const {
  for (auto c : scalars_) {
    GaloisField::Raw s = finf_->div(sign, c);
    if (member_[s]) return {c, s};
  }
  throw Error(ErrorCode::ZeroElement, "sign zero has no decomposition");
}

GaloisField::Raw SignData::positivity_scalar(GaloisField::Raw sign) const {
  return finf_->inv(decompose(sign).first);
}

}  // namespace drinfeld
