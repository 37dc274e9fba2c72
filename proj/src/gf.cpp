#include "drinfeld/gf.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "drinfeld/error.hpp"

namespace drinfeld {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::SingularCurve: return "SingularCurve";
    case ErrorCode::SplitInfinity: return "SplitInfinity";
    case ErrorCode::UnsupportedCharacteristic: return "UnsupportedCharacteristic";
    case ErrorCode::UnsupportedModel: return "UnsupportedModel";
    case ErrorCode::PrecisionTooLow: return "PrecisionTooLow";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::ZeroIdeal: return "ZeroIdeal";
    case ErrorCode::ZeroModulus: return "ZeroModulus";
    case ErrorCode::BoundTooSmall: return "BoundTooSmall";
    case ErrorCode::BasisTooShort: return "BasisTooShort";
    case ErrorCode::PrecisionUnreachable: return "PrecisionUnreachable";
    case ErrorCode::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorCode::PrecisionLoss: return "PrecisionLoss";
    case ErrorCode::InconsistentSeries: return "InconsistentSeries";
    case ErrorCode::InsufficientCoefficients: return "InsufficientCoefficients";
    case ErrorCode::RemainderNotZero: return "RemainderNotZero";
    case ErrorCode::NonIntegralCoefficient: return "NonIntegralCoefficient";
    case ErrorCode::UnsupportedInfinitePlace: return "UnsupportedInfinitePlace";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

using Vec = std::vector<std::uint32_t>;

// Dense polynomials over F_p used only while building a field.
void trim(Vec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Vec mulmod_p(const Vec& a, const Vec& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Vec r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  trim(r);
  return r;
}

// Remainder of a by monic-or-not b.
Vec rem_p(Vec a, const Vec& b, std::uint32_t p) {
  trim(a);
  std::uint32_t lead = b.back();
  std::uint32_t inv = 1;
  for (std::uint32_t k = 1; k < p; ++k)
    if ((lead * k) % p == 1) inv = k;
  while (a.size() >= b.size()) {
    std::uint32_t c = (a.back() * inv) % p;
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = (a[shift + i] + p * p - c * b[i] % p) % p;
    trim(a);
  }
  return a;
}

Vec unpack(std::uint64_t code, std::uint32_t p, std::uint32_t len) {
  Vec d(len, 0);
  for (std::uint32_t i = 0; i < len; ++i) {
    d[i] = code % p;
    code /= p;
  }
  return d;
}

bool irreducible_p(const Vec& f, std::uint32_t p) {
  std::uint32_t m = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; 2 * d <= m; ++d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Vec g = unpack(code, p, d);
      g.push_back(1);
      if (rem_p(f, g, p).empty()) return false;
    }
  }
  return true;
}

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

GaloisField::GaloisField(std::uint32_t p, std::uint32_t m) : p_(p), m_(m) {
  if (!is_prime(p)) throw Error(ErrorCode::UnsupportedCharacteristic, "p must be prime");
  if (m == 0) throw Error(ErrorCode::UnsupportedCharacteristic, "m must be >= 1");
  std::uint64_t ord = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    ord *= p;
    if (ord > kMaxOrder) throw Error(ErrorCode::UnsupportedCharacteristic, "field too large");
  }
  order_ = static_cast<std::uint32_t>(ord);

  // Lowest lexicographic monic irreducible: scan lower coefficients as a
  // packed base-p integer in increasing order.
  if (m == 1) {
    modulus_ = {0, 1};
  } else {
    for (std::uint64_t code = 0; code < ord; ++code) {
      Vec f = unpack(code, p, m);
      f.push_back(1);
      if (irreducible_p(f, p)) {
        modulus_ = f;
        break;
      }
    }
  }

  auto pack = [&](const Vec& v) {
    Raw r = 0, scale = 1;
    for (std::size_t i = 0; i < v.size(); ++i) {
      r += v[i] * scale;
      scale *= p;
    }
    return r;
  };
  auto mul_raw = [&](Raw a, Raw b) {
    Vec r = mulmod_p(unpack(a, p, m), unpack(b, p, m), p);
    if (m > 1) r = rem_p(r, modulus_, p);
    else if (!r.empty()) r.resize(1);
    return pack(r);
  };

  // Primitive element: smallest packed value of multiplicative order q-1.
  std::uint32_t n = order_ - 1;
  for (Raw g = 1; g < order_; ++g) {
    Raw x = 1;
    std::uint32_t k = 0;
    do {
      x = mul_raw(x, g);
      ++k;
    } while (x != 1);
    if (k == n) {
      exp_.assign(2 * n + 2, 0);
      log_.assign(order_, 0);
      Raw y = 1;
      for (std::uint32_t i = 0; i < n; ++i) {
        exp_[i] = y;
        log_[y] = i;
        y = mul_raw(y, g);
      }
      for (std::uint32_t i = n; i < exp_.size(); ++i) exp_[i] = exp_[i - n];
      break;
    }
  }

  neg_.resize(order_);
  for (Raw a = 0; a < order_; ++a) {
    Vec d = unpack(a, p, m);
    for (auto& c : d) c = (p - c) % p;
    neg_[a] = pack(d);
  }
  if (static_cast<std::uint64_t>(order_) * order_ <= (1u << 20)) {
    add_table_.resize(static_cast<std::size_t>(order_) * order_);
    for (Raw a = 0; a < order_; ++a)
      for (Raw b = 0; b < order_; ++b) add_table_[a * order_ + b] = add_digits(a, b);
  }
}

const GaloisField& GaloisField::get(std::uint32_t p, std::uint32_t m) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::unique_ptr<GaloisField>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = registry[{p, m}];
  if (!slot) slot.reset(new GaloisField(p, m));
  return *slot;
}

GaloisField::Raw GaloisField::add_digits(Raw a, Raw b) const {
  Raw r = 0, scale = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

GaloisField::Raw GaloisField::inv(Raw a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero in F_" + std::to_string(order_));
  std::uint32_t n = order_ - 1;
  return exp_[(n - log_[a]) % n];
}

GaloisField::Raw GaloisField::pow(Raw a, std::int64_t k) const {
  if (k == 0) return 1;
  if (a == 0) {
    if (k < 0) throw Error(ErrorCode::DivisionByZero, "negative power of zero");
    return 0;
  }
  std::int64_t n = order_ - 1;
  std::int64_t e = (static_cast<std::int64_t>(log_[a]) * (k % n)) % n;
  if (e < 0) e += n;
  return exp_[e];
}

GaloisField::Raw GaloisField::frobenius(Raw a, std::int64_t e) const {
  if (a == 0) return 0;
  std::int64_t n = order_ - 1;
  std::int64_t pe = 1;
  std::int64_t ee = e % m_;
  if (ee < 0) ee += m_;
  for (std::int64_t i = 0; i < ee; ++i) pe = (pe * p_) % n;
  if (n == 1) return a;
  return exp_[(static_cast<std::int64_t>(log_[a]) * pe) % n];
}

GaloisField::Raw GaloisField::from_int(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Raw>(r);
}

GaloisField::Raw GaloisField::sqrt(Raw a) const {
  for (Raw r = 0; r < order_; ++r)
    if (mul(r, r) == a) return r;
  throw Error(ErrorCode::DomainMismatch, "not a square: " + to_string(a));
}

std::vector<std::uint32_t> GaloisField::digits(Raw a) const { return unpack(a, p_, m_); }

GaloisField::Raw GaloisField::from_digits(const std::vector<std::uint32_t>& d) const {
  Raw r = 0, scale = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    r += (i < d.size() ? d[i] % p_ : 0) * scale;
    scale *= p_;
  }
  return r;
}

std::string GaloisField::to_string(Raw a) const {
  if (m_ == 1) return std::to_string(a);
  auto d = digits(a);
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(d[i]);
  }
  return s + ")";
}

void FqElem::check_same(const FqElem& o) const {
  if (field_ != o.field_) throw Error(ErrorCode::FieldMismatch, "operands in different fields");
}
FqElem FqElem::operator+(const FqElem& o) const {
  check_same(o);
  return {*field_, field_->add(v_, o.v_)};
}
FqElem FqElem::operator-(const FqElem& o) const {
  check_same(o);
  return {*field_, field_->sub(v_, o.v_)};
}
FqElem FqElem::operator*(const FqElem& o) const {
  check_same(o);
  return {*field_, field_->mul(v_, o.v_)};
}
FqElem FqElem::operator/(const FqElem& o) const {
  check_same(o);
  return {*field_, field_->div(v_, o.v_)};
}
FqElem FqElem::inverse() const { return {*field_, field_->inv(v_)}; }

FieldEmbedding::FieldEmbedding(const GaloisField& sub, const GaloisField& super)
    : sub_(&sub), super_(&super) {
  if (sub.characteristic() != super.characteristic() || super.degree() % sub.degree() != 0)
    throw Error(ErrorCode::FieldMismatch, "not a subfield");
  image_.assign(sub.order(), 0);
  if (sub.degree() == 1) {
    for (GaloisField::Raw a = 0; a < sub.order(); ++a) image_[a] = a;
    return;
  }
  // Find the smallest root of sub's modulus in super.
  const auto& mod = sub.modulus();
  GaloisField::Raw root = 0;
  bool found = false;
  for (GaloisField::Raw r = 1; r < super.order() && !found; ++r) {
    GaloisField::Raw acc = 0, pw = 1;
    for (auto c : mod) {
      acc = super.add(acc, super.mul(super.from_int(c), pw));
      pw = super.mul(pw, r);
    }
    if (acc == 0) {
      root = r;
      found = true;
    }
  }
  for (GaloisField::Raw a = 0; a < sub.order(); ++a) {
    auto d = sub.digits(a);
    GaloisField::Raw acc = 0, pw = 1;
    for (auto c : d) {
      acc = super.add(acc, super.mul(super.from_int(c), pw));
      pw = super.mul(pw, root);
    }
    image_[a] = acc;
  }
}

bool FieldEmbedding::in_image(GaloisField::Raw b) const {
  for (auto v : image_)
    if (v == b) return true;
  return false;
}

GaloisField::Raw FieldEmbedding::preimage(GaloisField::Raw b) const {
  for (GaloisField::Raw a = 0; a < image_.size(); ++a)
    if (image_[a] == b) return a;
  throw Error(ErrorCode::FieldMismatch, "element not in subfield");
}

}  // namespace drinfeld
