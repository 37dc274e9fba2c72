#include "drinfeld/class_group.hpp"

#include <map>
#include <numeric>

#include "drinfeld/error.hpp"

namespace drinfeld {

using Raw = GaloisField::Raw;

std::vector<FracIdeal> primes_above(const CurveModel& m, const Poly& P) {
  if (m.is_rational()) return {FracIdeal::principal(FFElement::from_poly(m, P))};
  const GaloisField& F = m.base_field();
  // (P, b + y) is an ideal iff P | b^2 - b h - f.
  Poly target = m.f();
  std::vector<FracIdeal> out;
  int k = P.degree();
  std::uint64_t total = 1;
  for (int i = 0; i < k; ++i) total *= F.order();
  for (std::uint64_t code = 0; code < total && out.size() < 2; ++code) {
    std::vector<Raw> c(k);
    std::uint64_t t = code;
    for (int i = 0; i < k; ++i) {
      c[i] = static_cast<Raw>(t % F.order());
      t /= F.order();
    }
    Poly b(F, c);
    if (!((b * b - b * m.h() - target) % P).is_zero()) continue;
    out.push_back(FracIdeal::from_generators({FFElement::from_poly(m, P), FFElement::from_poly(m, b) + FFElement::y(m)}));
  }
  if (out.empty()) out.push_back(FracIdeal::principal(FFElement::from_poly(m, P)));
  return out;
}

std::int64_t picard_degree_zero_order(const CurveModel& m) {
  int g = m.genus();
  if (m.is_rational() || g == 0) return 1;
  const GaloisField& F = m.base_field();
  std::int64_t q = F.order();
  Poly D = m.h() * m.h() + m.f().scaled(F.from_int(4));
  // a_k = q^k + 1 - N_k = sum of k-th powers of Frobenius eigenvalues.
  std::vector<std::int64_t> s(g + 1, 0);
  for (int k = 1; k <= g; ++k) {
    const GaloisField& E = GaloisField::get(F.characteristic(), F.degree() * k);
    FieldEmbedding emb(F, E);
    std::int64_t qk = E.order();
    std::int64_t N = 0;
    for (std::uint32_t x = 0; x < E.order(); ++x) {
      Raw v = 0;
      for (int i = D.degree(); i >= 0; --i) v = E.add(E.mul(v, x), emb(D.coeff(i)));
      N += v == 0 ? 1 : (E.is_square(v) ? 2 : 0);
    }
    N += m.d_inf() == 1 ? 1 : (k % 2 == 0 ? 2 : 0);
    s[k] = qk + 1 - N;
  }
  // L(t) = 1 + c_1 t + ... ; Newton: k c_k = -sum_{i=1}^{k} s_i c_{k-i}.
  std::vector<std::int64_t> c(2 * g + 1, 0);
  c[0] = 1;
  for (int k = 1; k <= g; ++k) {
    std::int64_t acc = 0;
    for (int i = 1; i <= k; ++i) acc += s[i] * c[k - i];
    c[k] = -acc / k;
  }
  for (int i = 0; i < g; ++i) {
    std::int64_t qp = 1;
    for (int j = 0; j < g - i; ++j) qp *= q;
    c[2 * g - i] = qp * c[i];
  }
  return std::accumulate(c.begin(), c.end(), std::int64_t{0});
}

FracIdeal reduce_ideal(const FracIdeal& I) {
  const CurveModel& m = I.model();
  SignData signs(m);
  FracIdeal inv = I.inverse();
  int lo = inv.norm_degree();
  for (int B = lo; B <= lo + 2 * m.genus() + 2 * m.d_inf() + 2; ++B) {
    DegreeBasis db = degree_basis(inv, B, signs);
    if (!db.vectors.empty()) return I * db.vectors.front().value;
  }
  return I;
}

namespace {

std::vector<std::int64_t> invariant_factors_from_orders(const std::vector<std::size_t>& orders) {
  std::int64_t n = static_cast<std::int64_t>(orders.size());
  if (n <= 1) return {};
  // For each prime l | n, the l-primary part is determined by
  // #{x : l^k x = 0} = prod_i l^{min(k, e_i)}.
  std::map<std::int64_t, std::vector<int>> parts;  // prime -> exponents (descending)
  std::int64_t rest = n;
  for (std::int64_t l = 2; l <= rest; ++l) {
    if (rest % l) continue;
    int e = 0;
    while (rest % l == 0) {
      rest /= l;
      ++e;
    }
    std::vector<int> logcount(e + 2, 0);
    for (int k = 0; k <= e + 1; ++k) {
      std::int64_t lk = 1;
      for (int i = 0; i < k; ++i) lk *= l;
      std::int64_t cnt = 0;
      for (auto o : orders)
        if (lk % static_cast<std::int64_t>(o) == 0) ++cnt;
      int lg = 0;
      while (cnt > 1) {
        cnt /= l;
        ++lg;
      }
      logcount[k] = lg;
    }
    // number of e_i >= k equals logcount[k] - logcount[k-1]
    std::vector<int> exps;
    for (int k = e + 1; k >= 1; --k) {
      int ge = logcount[k] - logcount[k - 1];
      int gt = k <= e ? (logcount[k + 1] - logcount[k]) : 0;
      for (int i = 0; i < ge - gt; ++i) exps.push_back(k);
    }
    parts[l] = exps;
  }
  std::size_t len = 0;
  for (auto& [l, ex] : parts) len = std::max(len, ex.size());
  std::vector<std::int64_t> inv(len, 1);
  for (auto& [l, ex] : parts)
    for (std::size_t i = 0; i < ex.size(); ++i)
      for (int k = 0; k < ex[i]; ++k) inv[len - 1 - i] *= l;
  return inv;
}

}  // namespace

std::size_t IdealClassTable::class_of(const FracIdeal& I) const {
  for (std::size_t i = 0; i < reps_.size(); ++i)
    if (is_principal(I * reps_[i].inverse(), signs_)) return i;
  throw Error(ErrorCode::BoundTooSmall, "ideal class not present in table");
}

std::size_t IdealClassTable::inverse(std::size_t i) const {
  for (std::size_t j = 0; j < order(); ++j)
    if (table_[i][j] == 0) return j;
  throw Error(ErrorCode::BoundTooSmall, "class without inverse");
}

std::size_t IdealClassTable::element_order(std::size_t i) const {
  std::size_t k = 1, x = i;
  while (x != 0) {
    x = table_[x][i];
    ++k;
  }
  return k;
}

std::int64_t IdealClassTable::narrow_order() const {
  std::int64_t q = model_->q(), qd = 1;
  for (int i = 0; i < model_->d_inf(); ++i) qd *= q;
  return static_cast<std::int64_t>(order()) * (qd - 1) / (q - 1);
}

IdealClassTable class_group(const CurveModel& m, int degree_bound) {
  IdealClassTable T(m);
  T.bound_ = degree_bound < 0 ? 2 * m.genus() + 2 : degree_bound;
  T.expected_ = picard_degree_zero_order(m) * (m.is_rational() ? 1 : m.d_inf());
  T.reps_.push_back(FracIdeal::unit(m));
  auto find = [&](const FracIdeal& I) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < T.reps_.size(); ++i)
      if (is_principal(I * T.reps_[i].inverse(), T.signs_)) return i;
    return std::nullopt;
  };
  for (int d = 1; d <= T.bound_ && static_cast<std::int64_t>(T.reps_.size()) < T.expected_; ++d) {
    for (const Poly& P : monic_irreducibles(m.base_field(), d)) {
      for (const FracIdeal& pr : primes_above(m, P)) {
        // close the group under multiplication by pr
        for (std::size_t i = 0; i < T.reps_.size(); ++i) {
          FracIdeal prod = reduce_ideal(T.reps_[i] * pr);
          if (!find(prod)) T.reps_.push_back(prod);
        }
      }
      if (static_cast<std::int64_t>(T.reps_.size()) >= T.expected_) break;
    }
  }
  if (static_cast<std::int64_t>(T.reps_.size()) != T.expected_)
    throw Error(ErrorCode::BoundTooSmall, "primes of degree <= " + std::to_string(T.bound_) + " reach " +
                                              std::to_string(T.reps_.size()) + " classes, expected " +
                                              std::to_string(T.expected_));
  std::size_t h = T.reps_.size();
  T.table_.assign(h, std::vector<std::size_t>(h, 0));
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = i; j < h; ++j) {
      auto k = find(T.reps_[i] * T.reps_[j]);
      if (!k) throw Error(ErrorCode::BoundTooSmall, "class table not closed");
      T.table_[i][j] = T.table_[j][i] = *k;
    }
  std::vector<std::size_t> orders(h);
  for (std::size_t i = 0; i < h; ++i) orders[i] = T.element_order(i);
  T.invariants_ = invariant_factors_from_orders(orders);
  return T;
}

}  // namespace drinfeld
