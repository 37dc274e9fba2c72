#pragma once

// Finite fields F_{p^m} in a polynomial basis over F_p.
//
// An element is packed into a 32-bit integer whose base-p digits are the
// coefficients of 1, w, w^2, ... where w is a root of the field modulus.
// Fields are interned: GaloisField::get(p, m) always returns the same
// object, so descriptor identity is pointer identity.

#include <cstdint>
#include <string>
#include <vector>

namespace drinfeld {

class GaloisField {
 public:
  using Raw = std::uint32_t;

  /// Largest supported field order (tables are built eagerly).
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  static const GaloisField& get(std::uint32_t p, std::uint32_t m);
  GaloisField(const GaloisField&) = delete;
  GaloisField& operator=(const GaloisField&) = delete;

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return m_; }
  std::uint32_t order() const { return order_; }
  /// Monic modulus, lowest degree first (length degree()+1).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  Raw primitive_element() const { return exp_[1]; }

  Raw add(Raw a, Raw b) const {
    return add_table_.empty() ? add_digits(a, b) : add_table_[a * order_ + b];
  }
  Raw neg(Raw a) const { return neg_[a]; }
  Raw sub(Raw a, Raw b) const { return add(a, neg_[b]); }
  Raw mul(Raw a, Raw b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Raw inv(Raw a) const;
  Raw div(Raw a, Raw b) const { return mul(a, inv(b)); }
  Raw pow(Raw a, std::int64_t k) const;
  /// a^(p^e)
  Raw frobenius(Raw a, std::int64_t e) const;
  /// Discrete log base primitive_element(); a != 0.
  std::uint32_t log(Raw a) const { return log_[a]; }
  Raw from_int(std::int64_t n) const;
  bool is_square(Raw a) const { return a == 0 || log_[a] % 2 == 0 || order_ % 2 == 0; }
  /// Square root if a is a square (smallest packed value), otherwise throws.
  Raw sqrt(Raw a) const;

  std::vector<std::uint32_t> digits(Raw a) const;
  Raw from_digits(const std::vector<std::uint32_t>& d) const;
  std::string to_string(Raw a) const;

 private:
  GaloisField(std::uint32_t p, std::uint32_t m);
  Raw add_digits(Raw a, Raw b) const;

  std::uint32_t p_, m_, order_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Raw> exp_;             // size 2*(order-1)
  std::vector<std::uint32_t> log_;   // log_[0] unused
  std::vector<Raw> neg_;
  std::vector<Raw> add_table_;       // order*order when small
};

/// Element of a finite field, carrying its field descriptor.
class FqElem {
 public:
  FqElem() = default;
  FqElem(const GaloisField& f, GaloisField::Raw v) : field_(&f), v_(v) {}
  static FqElem from_int(const GaloisField& f, std::int64_t n) { return {f, f.from_int(n)}; }

  const GaloisField& field() const { return *field_; }
  GaloisField::Raw raw() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  FqElem operator+(const FqElem& o) const;
  FqElem operator-(const FqElem& o) const;
  FqElem operator-() const { return {*field_, field_->neg(v_)}; }
  FqElem operator*(const FqElem& o) const;
  FqElem operator/(const FqElem& o) const;
  FqElem& operator+=(const FqElem& o) { return *this = *this + o; }
  FqElem& operator-=(const FqElem& o) { return *this = *this - o; }
  FqElem& operator*=(const FqElem& o) { return *this = *this * o; }
  FqElem inverse() const;
  FqElem pow(std::int64_t k) const { return {*field_, field_->pow(v_, k)}; }
  FqElem frobenius(std::int64_t e) const { return {*field_, field_->frobenius(v_, e)}; }

  bool operator==(const FqElem& o) const { return field_ == o.field_ && v_ == o.v_; }
  std::string to_string() const { return field_->to_string(v_); }

 private:
  void check_same(const FqElem& o) const;
  const GaloisField* field_ = nullptr;
  GaloisField::Raw v_ = 0;
};

/// Embedding of a subfield F_{p^m} into F_{p^M} (m | M), sending the
/// subfield generator to the smallest root of its modulus.
class FieldEmbedding {
 public:
  FieldEmbedding(const GaloisField& sub, const GaloisField& super);
  const GaloisField& sub() const { return *sub_; }
  const GaloisField& super() const { return *super_; }
  GaloisField::Raw operator()(GaloisField::Raw a) const { return image_[a]; }
  /// Inverse map on the image; throws if b is not in the subfield.
  GaloisField::Raw preimage(GaloisField::Raw b) const;
  bool in_image(GaloisField::Raw b) const;

 private:
  const GaloisField* sub_;
  const GaloisField* super_;
  std::vector<GaloisField::Raw> image_;
};

}  // namespace drinfeld
