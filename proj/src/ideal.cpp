#include "drinfeld/ideal.hpp"

#include <algorithm>
#include <map>

#include "drinfeld/error.hpp"

namespace drinfeld {

namespace {

using Raw = GaloisField::Raw;

Poly lcm(const Poly& a, const Poly& b) { return (a * b / gcd(a, b)).monic(); }

int x_degree_weight(const CurveModel& m) { return m.is_rational() ? 1 : 2; }

// span{(a,0), (b,c)} of the F_q[x]-module generated by (u_i, v_i).
struct Hnf {
  Poly a, b, c;
};

Hnf hnf2(const GaloisField& F, const std::vector<std::pair<Poly, Poly>>& vecs) {
  Poly a(F), b(F), c(F);
  for (const auto& [u, v] : vecs) {
    if (v.is_zero()) {
      a = gcd(a, u);
      continue;
    }
    if (c.is_zero()) {
      b = u;
      c = v;
      continue;
    }
    auto [g, s, t] = xgcd(c, v);
    Poly vg = v / g, cg = c / g;
    Poly other = vg * b - cg * u;
    Poly nb = s * b + t * u;
    b = nb;
    c = g;
    a = gcd(a, other);
  }
  if (!c.is_zero() && c.lead() != 1) {
    Raw inv = F.inv(c.lead());
    b = b.scaled(inv);
    c = c.scaled(inv);
  }
  if (!a.is_zero()) b = b % a;
  return {a, b, c};
}

}  // namespace

FracIdeal::FracIdeal(const CurveModel& m)
    : model_(&m),
      a_(Poly::constant(m.base_field(), 1)),
      b_(m.base_field()),
      c_(Poly::constant(m.base_field(), 1)),
      d_(Poly::constant(m.base_field(), 1)) {
  if (m.is_rational()) c_ = Poly(m.base_field());
}

FracIdeal FracIdeal::unit(const CurveModel& m) { return FracIdeal(m); }

FracIdeal FracIdeal::from_lattice_vectors(const CurveModel& m, std::vector<FFElement> vecs) {
  const GaloisField& F = m.base_field();
  Poly D = Poly::constant(F, 1);
  bool any = false;
  for (const auto& z : vecs) {
    if (z.is_zero()) continue;
    any = true;
    D = lcm(D, z.w());
  }
  if (!any) throw Error(ErrorCode::ZeroIdeal, "ideal generated by zero");
  std::vector<std::pair<Poly, Poly>> rows;
  for (const auto& z : vecs) {
    if (z.is_zero()) continue;
    Poly k = D / z.w();
    rows.emplace_back(z.u() * k, z.v() * k);
  }
  FracIdeal I(m);
  if (m.is_rational()) {
    Poly a(F);
    for (const auto& r : rows) a = gcd(a, r.first);
    Poly g = gcd(a, D);
    I.a_ = a / g;
    I.d_ = (D / g).monic();
    I.a_ = I.a_.monic();
    return I;
  }
  Hnf h = hnf2(F, rows);
  if (h.a.is_zero() || h.c.is_zero()) throw Error(ErrorCode::ZeroIdeal, "lattice does not have rank 2");
  Poly g = gcd(gcd(gcd(h.a, h.b), h.c), D);
  if (!g.is_one()) {
    h.a = h.a / g;
    h.b = h.b / g;
    h.c = h.c / g;
    D = D / g;
  }
  I.a_ = h.a.monic();
  I.b_ = h.b % I.a_;
  I.c_ = h.c;
  I.d_ = D.monic();
  return I;
}

FracIdeal FracIdeal::from_generators(const std::vector<FFElement>& gens) {
  if (gens.empty()) throw Error(ErrorCode::ZeroIdeal, "no generators");
  const CurveModel& m = gens.front().model();
  std::vector<FFElement> vecs;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    vecs.push_back(g);
    if (!m.is_rational()) vecs.push_back(g * FFElement::y(m));
  }
  return from_lattice_vectors(m, std::move(vecs));
}

std::vector<FFElement> FracIdeal::lattice_basis() const {
  const GaloisField& F = model_->base_field();
  if (model_->is_rational()) return {FFElement(*model_, a_, Poly(F), d_)};
  return {FFElement(*model_, a_, Poly(F), d_), FFElement(*model_, b_, c_, d_)};
}

RatFunc FracIdeal::norm() const {
  if (model_->is_rational()) return RatFunc(a_, d_);
  return RatFunc(a_ * c_, d_ * d_);
}

int FracIdeal::norm_degree() const { return norm().degree(); }

FracIdeal FracIdeal::operator*(const FracIdeal& o) const {
  std::vector<FFElement> vecs;
  for (const auto& e : lattice_basis())
    for (const auto& f : o.lattice_basis()) vecs.push_back(e * f);
  return from_lattice_vectors(*model_, std::move(vecs));
}

FracIdeal FracIdeal::operator*(const FFElement& alpha) const {
  if (alpha.is_zero()) throw Error(ErrorCode::ZeroIdeal, "scaling by zero");
  std::vector<FFElement> vecs;
  for (const auto& e : lattice_basis()) vecs.push_back(e * alpha);
  return from_lattice_vectors(*model_, std::move(vecs));
}

FracIdeal FracIdeal::conjugate() const {
  std::vector<FFElement> vecs;
  for (const auto& e : lattice_basis()) vecs.push_back(e.conjugate());
  return from_lattice_vectors(*model_, std::move(vecs));
}

FracIdeal FracIdeal::inverse() const {
  RatFunc n = norm();
  FFElement ninv(*model_, n.den(), Poly(model_->base_field()), n.num());
  if (model_->is_rational()) return principal(ninv);
  return conjugate() * ninv;
}

FracIdeal FracIdeal::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  FracIdeal r = unit(*model_), b = *this;
  while (k) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

bool FracIdeal::contains(const FFElement& z) const {
  if (z.is_zero()) return true;
  FFElement s = z * FFElement::from_poly(*model_, d_);
  if (!s.is_integral()) return false;
  if (model_->is_rational()) return (s.u() % a_).is_zero();
  auto [p2, r2] = s.v().divmod(c_);
  if (!r2.is_zero()) return false;
  return ((s.u() - p2 * b_) % a_).is_zero();
}

bool FracIdeal::operator==(const FracIdeal& o) const {
  return model_ == o.model_ && a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
}

std::string FracIdeal::to_string() const {
  std::string s;
  if (model_->is_rational()) {
    s = "(" + a_.to_string() + ")";
  } else {
    s = "(" + a_.to_string() + ", " + FFElement(*model_, b_, c_).to_string() + ")";
  }
  if (!d_.is_one()) s += "/(" + d_.to_string() + ")";
  return s;
}

// ---------------------------------------------------------------------------
// Monomial coordinates: key = 2*deg(monomial) + [monomial has y].

int monomial_key_degree(const CurveModel&, int key) { return key / 2; }

namespace {

struct Coords {
  std::vector<Raw> c;
  int pivot = -1;  // highest nonzero key
};

int key_of_x(const CurveModel& m, int i) { return 2 * i * x_degree_weight(m); }
int key_of_xy(const CurveModel& m, int i) { return 2 * (2 * i + m.y_degree()) + 1; }

Coords to_coords(const CurveModel& m, const Poly& u, const Poly& v, int nkeys) {
  Coords r;
  r.c.assign(nkeys, 0);
  for (int i = 0; i <= u.degree(); ++i)
    if (u.coeff(i)) r.c.at(key_of_x(m, i)) = u.coeff(i);
  for (int i = 0; i <= v.degree(); ++i)
    if (v.coeff(i)) r.c.at(key_of_xy(m, i)) = v.coeff(i);
  for (int k = nkeys - 1; k >= 0; --k)
    if (r.c[k]) {
      r.pivot = k;
      break;
    }
  return r;
}

std::pair<Poly, Poly> from_coords(const CurveModel& m, const Coords& r) {
  const GaloisField& F = m.base_field();
  std::vector<Raw> u, v;
  for (int k = 0; k < static_cast<int>(r.c.size()); ++k) {
    if (!r.c[k]) continue;
    if (k % 2 == 0) {
      int i = k / 2 / x_degree_weight(m);
      if (static_cast<int>(u.size()) <= i) u.resize(i + 1, 0);
      u[i] = r.c[k];
    } else {
      int i = ((k - 1) / 2 - m.y_degree()) / 2;
      if (static_cast<int>(v.size()) <= i) v.resize(i + 1, 0);
      v[i] = r.c[k];
    }
  }
  return {Poly(F, u), Poly(F, v)};
}

// Reduced row echelon form (pivot = highest key), rows sorted by pivot.
class Echelon {
 public:
  explicit Echelon(const GaloisField& F) : F_(F) {}

  // Returns true when v was independent (and inserted).
  bool insert(Coords v) {
    reduce(v);
    if (v.pivot < 0) return false;
    Raw inv = F_.inv(v.c[v.pivot]);
    for (auto& x : v.c) x = F_.mul(x, inv);
    for (auto& row : rows_) {
      Raw t = row.c[v.pivot];
      if (!t) continue;
      for (std::size_t k = 0; k < row.c.size(); ++k) row.c[k] = F_.sub(row.c[k], F_.mul(t, v.c[k]));
    }
    auto pos = std::lower_bound(rows_.begin(), rows_.end(), v.pivot,
                                [](const Coords& r, int p) { return r.pivot < p; });
    rows_.insert(pos, std::move(v));
    return true;
  }

  void reduce(Coords& v) const {
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
      Raw t = v.c[it->pivot];
      if (!t) continue;
      for (std::size_t k = 0; k < v.c.size(); ++k) v.c[k] = F_.sub(v.c[k], F_.mul(t, it->c[k]));
    }
    v.pivot = -1;
    for (int k = static_cast<int>(v.c.size()) - 1; k >= 0; --k)
      if (v.c[k]) {
        v.pivot = k;
        break;
      }
  }

  const std::vector<Coords>& rows() const { return rows_; }

 private:
  const GaloisField& F_;
  std::vector<Coords> rows_;
};

// Echelon basis of {z in L : deg z <= bound} for the integral lattice
// L = span{a, b + c y} (rational model: span{a}).
struct LatticeWindow {
  int nkeys;
  Echelon ech;
};

LatticeWindow lattice_window(const CurveModel& m, const Poly& a, const Poly& b, const Poly& c, int bound) {
  const GaloisField& F = m.base_field();
  std::vector<std::pair<Poly, Poly>> gens;
  int maxdeg = std::max(bound, 0);
  if (m.is_rational()) {
    for (int j = 0; j <= bound - a.degree(); ++j) gens.emplace_back(a.shifted(j), Poly(F));
  } else {
    int ydeg = m.y_degree();
    int P2 = (bound - ydeg) >= 0 ? (bound - ydeg) / 2 - c.degree() : -1;
    int P1 = std::max(bound >= 0 ? bound / 2 : -1, P2 >= 0 ? P2 + std::max(0, b.degree()) : -1) - a.degree();
    for (int j = 0; j <= P1; ++j) gens.emplace_back(a.shifted(j), Poly(F));
    for (int i = 0; i <= P2; ++i) gens.emplace_back(b.shifted(i), c.shifted(i));
    for (const auto& [u, v] : gens)
      maxdeg = std::max({maxdeg, 2 * u.degree(), v.is_zero() ? 0 : 2 * v.degree() + ydeg});
  }
  if (m.is_rational())
    for (const auto& g : gens) maxdeg = std::max(maxdeg, g.first.degree());
  LatticeWindow w{2 * maxdeg + 2, Echelon(F)};
  for (const auto& [u, v] : gens) w.ech.insert(to_coords(m, u, v, w.nkeys));
  return w;
}

int poly_element_degree(const CurveModel& m, const Poly& d) { return d.degree() * x_degree_weight(m); }

struct SignCache {
  Raw sx, sy;
  const GaloisField* F;
  Raw monomial(const CurveModel& m, int key) const {
    if (key % 2 == 0) return F->pow(sx, key / 2 / x_degree_weight(m));
    int i = ((key - 1) / 2 - m.y_degree()) / 2;
    return F->mul(F->pow(sx, i), sy);
  }
};

SignCache sign_cache(const CurveModel& m) {
  SignCache s{};
  s.F = &m.inf_field();
  s.sx = sgn_of(FFElement::x(m));
  s.sy = m.is_rational() ? 1 : sgn_of(FFElement::y(m));
  return s;
}

}  // namespace

std::pair<std::size_t, std::size_t> DegreeBasis::block(int d) const {
  std::size_t b = 0;
  while (b < vectors.size() && vectors[b].degree < d) ++b;
  std::size_t e = b;
  while (e < vectors.size() && vectors[e].degree == d) ++e;
  return {b, e};
}

std::vector<int> DegreeBasis::realized_degrees() const {
  std::vector<int> out;
  for (const auto& v : vectors)
    if (out.empty() || out.back() != v.degree) out.push_back(v.degree);
  return out;
}

DegreeBasis degree_basis(const FracIdeal& ideal, int max_degree, const SignData& signs) {
  const CurveModel& m = ideal.model();
  const GaloisField& Finf = m.inf_field();
  const FieldEmbedding& E = m.constants();
  int ddeg = poly_element_degree(m, ideal.denominator());
  int bound = max_degree + ddeg;
  DegreeBasis out{ideal, max_degree, {}};
  if (bound < 0) return out;
  LatticeWindow win = lattice_window(m, ideal.a(), ideal.b(), ideal.c(), bound);
  SignCache sc = sign_cache(m);
  Raw sd = Finf.pow(sc.sx, ideal.denominator().degree());
  for (const auto& row : win.ech.rows()) {
    int deg = row.pivot / 2;
    if (deg > bound) break;
    auto [u, v] = from_coords(m, row);
    Raw sign = Finf.div(sc.monomial(m, row.pivot), sd);
    out.vectors.push_back({FFElement(m, u, v, ideal.denominator()), deg - ddeg, sign});
  }
  // Scale lone vectors of a degree to be positive.
  for (std::size_t i = 0; i < out.vectors.size(); ++i) {
    bool alone = (i == 0 || out.vectors[i - 1].degree != out.vectors[i].degree) &&
                 (i + 1 == out.vectors.size() || out.vectors[i + 1].degree != out.vectors[i].degree);
    if (!alone) continue;
    Raw c = signs.positivity_scalar(out.vectors[i].sign);
    if (c != 1) {
      out.vectors[i].value = out.vectors[i].value.scaled(E.preimage(c));
      out.vectors[i].sign = Finf.mul(out.vectors[i].sign, c);
    }
  }
  return out;
}

std::optional<FFElement> is_principal(const FracIdeal& ideal, const SignData& signs) {
  int D = ideal.norm_degree();
  DegreeBasis basis = degree_basis(ideal, D, signs);
  for (const auto& v : basis.vectors)
    if (v.degree == D) {
      Raw c = signs.positivity_scalar(v.sign);
      return v.value.scaled(ideal.model().constants().preimage(c));
    }
  return std::nullopt;
}

namespace {

// All nonzero coefficient vectors over F_q of length k whose combined sign
// sum t_j * sign_j lies in S.
std::vector<std::vector<Raw>> positive_top_combinations(const std::vector<BasisVector>& top, const SignData& signs,
                                                        const CurveModel& m) {
  const GaloisField& Fq = m.base_field();
  const GaloisField& Finf = m.inf_field();
  const FieldEmbedding& E = m.constants();
  std::vector<std::vector<Raw>> out;
  std::size_t k = top.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= Fq.order();
  for (std::size_t code = 1; code < total; ++code) {
    std::vector<Raw> t(k);
    std::size_t c = code;
    Raw sign = 0;
    for (std::size_t i = 0; i < k; ++i) {
      t[i] = static_cast<Raw>(c % Fq.order());
      c /= Fq.order();
      sign = Finf.add(sign, Finf.mul(E(t[i]), top[i].sign));
    }
    if (sign != 0 && signs.contains(sign)) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

void for_each_positive(const DegreeBasis& basis, int max_degree, const SignData& signs,
                       const std::function<void(const FFElement&)>& visit) {
  const CurveModel& m = basis.ideal.model();
  const GaloisField& Fq = m.base_field();
  if (max_degree > basis.max_degree) throw Error(ErrorCode::BasisTooShort, "basis does not reach the requested degree");
  for (int d : basis.realized_degrees()) {
    if (d > max_degree) break;
    auto [b, e] = basis.block(d);
    std::vector<BasisVector> top(basis.vectors.begin() + static_cast<long>(b), basis.vectors.begin() + static_cast<long>(e));
    for (const auto& t : positive_top_combinations(top, signs, m)) {
      FFElement head = FFElement::zero(m);
      for (std::size_t i = 0; i < top.size(); ++i)
        if (t[i]) head = head + top[i].value.scaled(t[i]);
      // odometer over the lower vectors
      std::vector<Raw> c(b, 0);
      while (true) {
        FFElement x = head;
        for (std::size_t i = 0; i < b; ++i)
          if (c[i]) x = x + basis.vectors[i].value.scaled(c[i]);
        visit(x);
        std::size_t i = 0;
        while (i < b && ++c[i] == Fq.order()) c[i++] = 0;
        if (i == b) break;
      }
    }
  }
}

std::vector<FFElement> positive_elements(const DegreeBasis& basis, int max_degree, const SignData& signs) {
  std::vector<FFElement> out;
  for_each_positive(basis, max_degree, signs, [&](const FFElement& x) { out.push_back(x); });
  return out;
}

StarRepresentative star_representative(const FracIdeal& ideal, int max_degree, const SignData& signs) {
  const CurveModel& m = ideal.model();
  int start = ideal.norm_degree();
  std::optional<FFElement> g;
  for (int B = start; B <= start + 2 * m.genus() + 2 * m.d_inf() + 2 && !g; ++B) {
    DegreeBasis db = degree_basis(ideal, B, signs);
    if (db.vectors.empty()) continue;
    int d0 = db.vectors.front().degree;
    auto [b, e] = db.block(d0);
    std::vector<BasisVector> top(db.vectors.begin() + static_cast<long>(b), db.vectors.begin() + static_cast<long>(e));
    // smallest coefficient tuple among positive minimal-degree elements
    for (const auto& t : positive_top_combinations(top, signs, m)) {
      FFElement cand = FFElement::zero(m);
      for (std::size_t i = 0; i < top.size(); ++i)
        if (t[i]) cand = cand + top[i].value.scaled(t[i]);
      auto key = [](const FFElement& z) {
        return std::make_pair(z.u().coeffs(), z.v().coeffs());
      };
      if (!g || key(cand) < key(*g)) g = cand;
    }
  }
  if (!g) throw Error(ErrorCode::BasisTooShort, "no positive element found in ideal");
  FracIdeal star = ideal * g->inverse();
  return {*g, star, degree_basis(star, max_degree, signs)};
}

std::vector<FFElement> torsion_representatives(const FracIdeal& a, const FracIdeal& mod) {
  const CurveModel& m = a.model();
  if (!mod.is_integral()) throw Error(ErrorCode::ZeroModulus, "modulus must be an integral ideal");
  const GaloisField& Fq = m.base_field();
  int dim = mod.norm_degree();
  FracIdeal big = mod.inverse() * a;
  Poly D = lcm(big.denominator(), a.denominator());
  Poly kb = D / big.denominator(), ka = D / a.denominator();
  int Dd = poly_element_degree(m, D);
  int bound = std::max(0, a.norm_degree() + Dd) + dim + 2 * m.genus() + 2;
  for (int attempt = 0; attempt < 64; ++attempt, ++bound) {
    LatticeWindow wb = lattice_window(m, big.a() * kb, big.b() * kb, big.c() * kb, bound);
    LatticeWindow ws = lattice_window(m, a.a() * ka, a.b() * ka, a.c() * ka, bound);
    auto count_upto = [&](const Echelon& e) {
      int n = 0;
      for (const auto& r : e.rows())
        if (r.pivot / 2 <= bound) ++n;
      return n;
    };
    if (count_upto(wb.ech) - count_upto(ws.ech) != dim) continue;
    int nkeys = std::max(wb.nkeys, ws.nkeys);
    Echelon acc(Fq);
    for (const auto& r : ws.ech.rows()) {
      if (r.pivot / 2 > bound) continue;
      Coords c = r;
      c.c.resize(nkeys, 0);
      acc.insert(c);
    }
    std::vector<FFElement> complement;
    for (const auto& r : wb.ech.rows()) {
      if (r.pivot / 2 > bound) continue;
      Coords c = r;
      c.c.resize(nkeys, 0);
      Coords orig = c;
      if (acc.insert(c)) {
        auto [u, v] = from_coords(m, orig);
        complement.push_back(FFElement(m, u, v, D));
      }
    }
    std::vector<FFElement> reps;
    std::size_t total = 1;
    for (int i = 0; i < dim; ++i) total *= Fq.order();
    for (std::size_t code = 0; code < total; ++code) {
      FFElement x = FFElement::zero(m);
      std::size_t k = code;
      for (int i = 0; i < dim; ++i) {
        Raw t = static_cast<Raw>(k % Fq.order());
        k /= Fq.order();
        if (t) x = x + complement[i].scaled(t);
      }
      reps.push_back(x);
    }
    return reps;
  }
  throw Error(ErrorCode::BoundTooSmall, "could not complete torsion quotient basis");
}

}  // namespace drinfeld
