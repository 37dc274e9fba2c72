#include "drinfeld/ore.hpp"

namespace drinfeld {

namespace {

struct ResidueMap {
  const GaloisField* F;
  std::unique_ptr<FieldEmbedding> emb;
  GaloisField::Raw theta;

  GaloisField::Raw operator()(const Poly& c) const {
    GaloisField::Raw v = 0;
    for (int i = c.degree(); i >= 0; --i) v = F->add(F->mul(v, theta), (*emb)(c.coeff(i)));
    return v;
  }
};

ResidueMap residue_map(const Poly& P) {
  if (P.degree() < 1 || !is_irreducible(P)) throw Error(ErrorCode::ZeroModulus, "reduction needs an irreducible modulus");
  const GaloisField& Fq = P.field();
  const GaloisField& E = GaloisField::get(Fq.characteristic(), Fq.degree() * P.degree());
  ResidueMap m{&E, std::make_unique<FieldEmbedding>(Fq, E), 0};
  for (GaloisField::Raw t = 0; t < E.order(); ++t) {
    m.theta = t;
    if (m(P) == 0) return m;
  }
  throw Error(ErrorCode::ZeroModulus, "modulus has no root in the residue field");
}

}  // namespace

Reduction tw_reduce_mod(const TwistedPoly<Poly>& f, const Poly& P) {
  ResidueMap m = residue_map(P);
  std::vector<FqElem> c;
  for (const auto& a : f.coeffs()) c.emplace_back(*m.F, m(a % P));
  TwistedPoly<FqElem> r(std::move(c), f.frobenius_exponent());
  return {r, m.F, r.degree() == f.degree()};
}

Reduction tw_reduce_mod(const TwistedPoly<RatFunc>& f, const Poly& P) {
  ResidueMap m = residue_map(P);
  std::vector<FqElem> out;
  for (const auto& a : f.coeffs()) {
    if (!(a.den() % P).is_zero()) {
      GaloisField::Raw num = m(a.num() % P), den = m(a.den() % P);
      out.emplace_back(*m.F, m.F->div(num, den));
    } else {
      throw Error(ErrorCode::NonIntegralCoefficient, "coefficient " + a.to_string() + " is not integral at the prime");
    }
  }
  TwistedPoly<FqElem> r(std::move(out), f.frobenius_exponent());
  return {r, m.F, r.degree() == f.degree()};
}

}  // namespace drinfeld
