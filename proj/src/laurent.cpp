#include "drinfeld/laurent.hpp"

#include <algorithm>

#include "drinfeld/error.hpp"

namespace drinfeld {

LaurentSeries::LaurentSeries(const GaloisField& f, int start, std::vector<Raw> coeffs, int prec)
    : field_(&f), v0_(start), prec_(prec), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) > prec_ - v0_) coeffs_.resize(std::max(0, prec_ - v0_));
  normalize();
}

LaurentSeries LaurentSeries::monomial(const GaloisField& f, int k, Raw c, int prec) {
  return LaurentSeries(f, k, {c}, prec);
}

void LaurentSeries::normalize() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    v0_ = prec_;
    return;
  }
  if (lead) coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
  v0_ += static_cast<int>(lead);
  // pad to full known length
  coeffs_.resize(prec_ - v0_, 0);
}

LaurentSeries::Raw LaurentSeries::coeff(int k) const {
  if (k >= prec_) throw Error(ErrorCode::PrecisionLoss, "coefficient beyond precision");
  if (k < v0_) return 0;
  return coeffs_[k - v0_];
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
  LaurentSeries r = *this;
  r += o;
  return r;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& o) {
  if (field_ != o.field_) throw Error(ErrorCode::FieldMismatch, "series over different fields");
  int prec = std::min(prec_, o.prec_);
  int v = std::min(v0_, o.v0_);
  if (v >= prec) {
    *this = LaurentSeries(*field_, prec);
    return *this;
  }
  std::vector<Raw> c(prec - v, 0);
  for (int k = v; k < prec; ++k) {
    Raw a = (k >= v0_ && k < prec_) ? coeffs_[k - v0_] : 0;
    Raw b = (k >= o.v0_ && k < o.prec_) ? o.coeffs_[k - o.v0_] : 0;
    c[k - v] = field_->add(a, b);
  }
  v0_ = v;
  prec_ = prec;
  coeffs_ = std::move(c);
  normalize();
  return *this;
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r = *this;
  for (auto& c : r.coeffs_) c = field_->neg(c);
  return r;
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const { return *this + (-o); }

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
  if (field_ != o.field_) throw Error(ErrorCode::FieldMismatch, "series over different fields");
  int prec = std::min(prec_ + o.v0_, o.prec_ + v0_);
  if (is_zero() || o.is_zero()) return LaurentSeries(*field_, prec);
  int v = v0_ + o.v0_;
  int len = prec - v;
  std::vector<Raw> c(len, 0);
  const GaloisField& F = *field_;
  int na = std::min<int>(len, static_cast<int>(coeffs_.size()));
  int nb = std::min<int>(len, static_cast<int>(o.coeffs_.size()));
  for (int i = 0; i < na; ++i) {
    Raw a = coeffs_[i];
    if (a == 0) continue;
    int lim = std::min(nb, len - i);
    for (int j = 0; j < lim; ++j) {
      Raw b = o.coeffs_[j];
      if (b) c[i + j] = F.add(c[i + j], F.mul(a, b));
    }
  }
  return LaurentSeries(F, v, std::move(c), prec);
}

LaurentSeries LaurentSeries::scaled(Raw s) const {
  if (s == 0) return LaurentSeries(*field_, prec_);
  LaurentSeries r = *this;
  for (auto& c : r.coeffs_) c = field_->mul(c, s);
  return r;
}

LaurentSeries LaurentSeries::shifted(int k) const {
  LaurentSeries r = *this;
  r.v0_ += k;
  r.prec_ += k;
  return r;
}

LaurentSeries LaurentSeries::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of a series that is zero to precision");
  const GaloisField& F = *field_;
  int len = static_cast<int>(coeffs_.size());
  std::vector<Raw> b(len, 0);
  Raw inv0 = F.inv(coeffs_[0]);
  Raw ninv0 = F.neg(inv0);
  b[0] = inv0;
  for (int k = 1; k < len; ++k) {
    Raw acc = 0;
    for (int j = 1; j <= k; ++j) {
      Raw a = coeffs_[j];
      if (a) acc = F.add(acc, F.mul(a, b[k - j]));
    }
    b[k] = F.mul(acc, ninv0);
  }
  return LaurentSeries(F, -v0_, std::move(b), -v0_ + len);
}

LaurentSeries LaurentSeries::frobenius(int e) const {
  long long pe = 1;
  for (int i = 0; i < e; ++i) pe *= field_->characteristic();
  int step = static_cast<int>(pe);
  if (is_zero()) return LaurentSeries(*field_, prec_ * step);
  std::vector<Raw> c((coeffs_.size() - 1) * step + 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i * step] = field_->frobenius(coeffs_[i], e);
  return LaurentSeries(*field_, v0_ * step, std::move(c), prec_ * step);
}

LaurentSeries LaurentSeries::pow(long long n) const {
  if (n < 0) return inverse().pow(-n);
  if (n == 0) {
    if (is_zero()) throw Error(ErrorCode::PrecisionLoss, "0^0 of unknown series");
    return one(*field_, relative_precision());
  }
  // n = sum d_i p^i  =>  s^n = prod_i frob_i(s^{d_i})
  const long long p = field_->characteristic();
  LaurentSeries result = one(*field_, 0);
  bool first = true;
  LaurentSeries base = *this;
  int e = 0;
  while (n) {
    long long d = n % p;
    if (d) {
      LaurentSeries t = base;
      for (long long k = 1; k < d; ++k) t = t * base;
      t = t.frobenius(e);
      result = first ? t : result * t;
      first = false;
    }
    n /= p;
    ++e;
  }
  return result;
}

LaurentSeries LaurentSeries::truncated(int prec) const {
  if (prec >= prec_) return *this;
  LaurentSeries r = *this;
  r.prec_ = prec;
  if (r.v0_ >= prec) {
    r.coeffs_.clear();
    r.v0_ = prec;
  } else {
    r.coeffs_.resize(prec - r.v0_);
    r.normalize();
  }
  return r;
}

std::string LaurentSeries::to_string(const std::string& var) const {
  std::string s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!s.empty()) s += " + ";
    s += field_->to_string(coeffs_[i]) + "*" + var + "^" + std::to_string(v0_ + static_cast<int>(i));
  }
  if (s.empty()) s = "0";
  return s + " + O(" + var + "^" + std::to_string(prec_) + ")";
}

}  // namespace drinfeld
