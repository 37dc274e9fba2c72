#include "drinfeld/poly.hpp"

#include <algorithm>

#include "drinfeld/error.hpp"

namespace drinfeld {

Poly::Poly(const GaloisField& f, std::vector<Raw> coeffs) : field_(&f), c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const GaloisField& f, int k, Raw c) {
  std::vector<Raw> v(k + 1, 0);
  v[k] = c;
  return Poly(f, std::move(v));
}

Poly Poly::from_ints(const GaloisField& f, const std::vector<long long>& c) {
  std::vector<Raw> v;
  v.reserve(c.size());
  for (auto x : c) v.push_back(f.from_int(x));
  return Poly(f, std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Poly::check_same(const Poly& o) const {
  if (field_ != o.field_) throw Error(ErrorCode::FieldMismatch, "polynomials over different fields");
}

Poly Poly::operator+(const Poly& o) const {
  check_same(o);
  std::vector<Raw> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_->add(coeff(i), o.coeff(i));
  return Poly(*field_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
  check_same(o);
  std::vector<Raw> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_->sub(coeff(i), o.coeff(i));
  return Poly(*field_, std::move(r));
}

Poly Poly::operator-() const {
  std::vector<Raw> r(c_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_->neg(c_[i]);
  return Poly(*field_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  check_same(o);
  if (c_.empty() || o.c_.empty()) return Poly(*field_);
  std::vector<Raw> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      r[i + j] = field_->add(r[i + j], field_->mul(c_[i], o.c_[j]));
  }
  return Poly(*field_, std::move(r));
}

Poly Poly::scaled(Raw c) const {
  std::vector<Raw> r(c_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_->mul(c_[i], c);
  return Poly(*field_, std::move(r));
}

Poly Poly::shifted(int k) const {
  if (c_.empty()) return *this;
  std::vector<Raw> r(k, 0);
  r.insert(r.end(), c_.begin(), c_.end());
  return Poly(*field_, std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& g) const {
  check_same(g);
  if (g.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  std::vector<Raw> r = c_;
  int dg = g.degree();
  if (degree() < dg) return {Poly(*field_), *this};
  std::vector<Raw> q(degree() - dg + 1, 0);
  Raw inv = field_->inv(g.lead());
  for (int i = degree(); i >= dg; --i) {
    Raw c = field_->mul(r[i], inv);
    q[i - dg] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dg; ++j) r[i - dg + j] = field_->sub(r[i - dg + j], field_->mul(c, g.c_[j]));
  }
  return {Poly(*field_, std::move(q)), Poly(*field_, std::move(r))};
}

GaloisField::Raw Poly::eval(Raw x) const {
  Raw acc = 0;
  for (int i = degree(); i >= 0; --i) acc = field_->add(field_->mul(acc, x), c_[i]);
  return acc;
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  return scaled(field_->inv(lead()));
}

Poly Poly::derivative() const {
  std::vector<Raw> r;
  for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(field_->mul(c_[i], field_->from_int(static_cast<long long>(i))));
  return Poly(*field_, std::move(r));
}

Poly Poly::pow(unsigned k) const {
  Poly result = constant(*field_, 1), base = *this;
  while (k) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

Poly Poly::frobenius_coeffs(long e) const {
  std::vector<Raw> r(c_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_->frobenius(c_[i], e);
  return Poly(*field_, std::move(r));
}

Poly Poly::stretched(int k) const {
  if (c_.empty()) return *this;
  std::vector<Raw> r((c_.size() - 1) * k + 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r[i * k] = c_[i];
  return Poly(*field_, std::move(r));
}

bool Poly::less(const Poly& o) const {
  if (degree() != o.degree()) return degree() < o.degree();
  for (int i = degree(); i >= 0; --i)
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  return false;
}

std::string Poly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i] == 0) continue;
    if (!s.empty()) s += " + ";
    std::string c = field_->to_string(c_[i]);
    if (i == 0) {
      s += c;
    } else {
      if (c_[i] != 1) s += c + "*";
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::tuple<Poly, Poly, Poly> xgcd(const Poly& a, const Poly& b) {
  const GaloisField& f = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(f, 1), s1(f);
  Poly t0(f), t1 = Poly::constant(f, 1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  auto inv = f.inv(r0.lead());
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

bool is_irreducible(const Poly& f) {
  int n = f.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  // x^(q^k) mod f; f is irreducible iff gcd(x^(q^k) - x, f) = 1 for k <= n/2
  // and x^(q^n) = x mod f.
  const GaloisField& F = f.field();
  Poly x = Poly::monomial(F, 1);
  Poly cur = x;
  auto powmod = [&](const Poly& b, unsigned long long e) {
    Poly res = Poly::constant(F, 1), base = b % f;
    while (e) {
      if (e & 1) res = (res * base) % f;
      base = (base * base) % f;
      e >>= 1;
    }
    return res;
  };
  for (int k = 1; k <= n / 2; ++k) {
    cur = powmod(cur, F.order());
    if (!gcd(cur - x, f).is_one()) return false;
  }
  return true;
}

std::vector<Poly> monic_irreducibles(const GaloisField& f, int d) {
  std::vector<Poly> out;
  unsigned long long count = 1;
  for (int i = 0; i < d; ++i) count *= f.order();
  for (unsigned long long code = 0; code < count; ++code) {
    std::vector<GaloisField::Raw> c(d + 1, 0);
    unsigned long long k = code;
    for (int i = 0; i < d; ++i) {
      c[i] = static_cast<GaloisField::Raw>(k % f.order());
      k /= f.order();
    }
    c[d] = 1;
    Poly p(f, std::move(c));
    if (is_irreducible(p)) out.push_back(std::move(p));
  }
  return out;
}

std::vector<GaloisField::Raw> roots(const Poly& f) {
  std::vector<GaloisField::Raw> out;
  for (GaloisField::Raw a = 0; a < f.field().order(); ++a)
    if (f.eval(a) == 0) out.push_back(a);
  return out;
}

}  // namespace drinfeld
