#pragma once

// Fractional ideals of A as F_q[x]-lattices in Hermite normal form.
//
// Quadratic model: the ideal is  d^{-1} * span_{F_q[x]}{ a, b + c*y }
// with a, c, d monic, c | a, c | b, deg b < deg a and gcd(c, d) = 1.
// Rational model: the ideal is (a / d) with a, d monic coprime.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "drinfeld/curve.hpp"

namespace drinfeld {

class FracIdeal {
 public:
  static FracIdeal unit(const CurveModel& m);
  /// A-module generated by gens (ideal_from_generators).
  static FracIdeal from_generators(const std::vector<FFElement>& gens);
  static FracIdeal principal(const FFElement& g) { return from_generators({g}); }

  const CurveModel& model() const { return *model_; }
  const Poly& a() const { return a_; }
  const Poly& b() const { return b_; }
  const Poly& c() const { return c_; }
  const Poly& denominator() const { return d_; }
  bool is_integral() const { return d_.is_one(); }

  /// F_q[x]-basis as elements of K (one element for the rational model).
  std::vector<FFElement> lattice_basis() const;
  /// Ideal norm as an element of F_q(x) (a monic generator of N(ideal)).
  RatFunc norm() const;
  /// deg of the norm: log_q #(A / ideal) for integral ideals.
  int norm_degree() const;

  FracIdeal operator*(const FracIdeal& o) const;
  FracIdeal operator*(const FFElement& alpha) const;
  FracIdeal inverse() const;
  FracIdeal conjugate() const;
  FracIdeal pow(int k) const;
  bool contains(const FFElement& z) const;
  bool operator==(const FracIdeal& o) const;
  bool operator!=(const FracIdeal& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  explicit FracIdeal(const CurveModel& m);
  static FracIdeal from_lattice_vectors(const CurveModel& m, std::vector<FFElement> vecs);

  const CurveModel* model_;
  Poly a_, b_, c_, d_;
};

/// One basis vector of the degree filtration of an ideal.
struct BasisVector {
  FFElement value;
  int degree;
  GaloisField::Raw sign;  // sgn(value) in F_inf
};

/// F_q-basis of {z in ideal : deg z <= max_degree}, sorted by degree. For
/// d_inf = 1 degrees are strictly increasing and every vector is positive.
struct DegreeBasis {
  FracIdeal ideal;
  int max_degree;
  std::vector<BasisVector> vectors;

  /// Indices [begin, end) of the vectors of degree exactly d.
  std::pair<std::size_t, std::size_t> block(int d) const;
  std::vector<int> realized_degrees() const;
};

DegreeBasis degree_basis(const FracIdeal& ideal, int max_degree, const SignData& signs);

/// Generator if the ideal is principal (positive with respect to signs).
std::optional<FFElement> is_principal(const FracIdeal& ideal, const SignData& signs);

struct StarRepresentative {
  FFElement g;          // positive element of minimal degree in the ideal
  FracIdeal star;       // g^{-1} * ideal
  DegreeBasis basis;    // basis of star, starting with 1
};

StarRepresentative star_representative(const FracIdeal& ideal, int max_degree, const SignData& signs);

/// Positive elements of degree <= max_degree (max_degree <= basis.max_degree),
/// visited block by block in increasing degree.
void for_each_positive(const DegreeBasis& basis, int max_degree, const SignData& signs,
                       const std::function<void(const FFElement&)>& visit);
std::vector<FFElement> positive_elements(const DegreeBasis& basis, int max_degree, const SignData& signs);

/// Coset representatives of m^{-1} a / a (0 first).
std::vector<FFElement> torsion_representatives(const FracIdeal& a, const FracIdeal& m);

/// Coordinates of an integral element in the monomial basis x^i, x^i y,
/// keyed so that keys are totally ordered compatibly with degree.
int monomial_key_degree(const CurveModel& m, int key);

}  // namespace drinfeld
