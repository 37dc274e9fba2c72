#pragma once

// Ideal class group of A by closure of small primes under multiplication.

#include <cstdint>
#include <vector>

#include "drinfeld/ideal.hpp"

namespace drinfeld {

/// Primes of A lying over the monic irreducible P in F_q[x].
std::vector<FracIdeal> primes_above(const CurveModel& m, const Poly& P);

/// #Pic^0 of the smooth projective model, from point counts over F_{q^k},
/// k <= genus.
std::int64_t picard_degree_zero_order(const CurveModel& m);

class IdealClassTable {
 public:
  const CurveModel& model() const { return *model_; }
  std::size_t order() const { return reps_.size(); }
  const std::vector<FracIdeal>& representatives() const { return reps_; }
  const FracIdeal& representative(std::size_t i) const { return reps_.at(i); }
  std::size_t multiply(std::size_t i, std::size_t j) const { return table_.at(i).at(j); }
  std::size_t inverse(std::size_t i) const;
  std::size_t element_order(std::size_t i) const;
  /// Class index of an arbitrary fractional ideal.
  std::size_t class_of(const FracIdeal& I) const;
  /// Invariant factors n_1 | n_2 | ... (empty for the trivial group).
  const std::vector<std::int64_t>& invariant_factors() const { return invariants_; }
  std::int64_t expected_order() const { return expected_; }
  /// h_A^1 = h_A (q^{d_inf} - 1) / (q - 1).
  std::int64_t narrow_order() const;
  int degree_bound() const { return bound_; }

 private:
  friend IdealClassTable class_group(const CurveModel&, int);
  explicit IdealClassTable(const CurveModel& m) : model_(&m), signs_(m) {}

  const CurveModel* model_;
  SignData signs_;
  std::vector<FracIdeal> reps_;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::int64_t> invariants_;
  std::int64_t expected_ = 1;
  int bound_ = 0;
};

/// degree_bound < 0 selects the default 2g + 2.
IdealClassTable class_group(const CurveModel& m, int degree_bound = -1);

/// Ideal in the same class with small norm degree.
FracIdeal reduce_ideal(const FracIdeal& I);

}  // namespace drinfeld
