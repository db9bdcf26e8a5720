#include "rings.hpp"

namespace regula::detail {

FractionRep PolyRingOracle::to_fraction(const RatFunc& f) const {
  return FractionRep{RatFunc(f.num()), RatFunc(f.den()), RingId::PolyRing};
}

Search<BezoutSolution> PolyRingOracle::bezout(const RatFunc& u, const RatFunc& v, const RatFunc& w,
                                              DegreeBudget) const {
  const Poly& pu = u.num();
  const Poly& pv = v.num();
  const Poly& pw = w.num();
  const auto [g, s, t] = ext_gcd(pu, pv);
  if (!divides(g, pw)) return Search<BezoutSolution>::unsolvable();
  const Poly scale = exact_div(pw, g);
  Poly alpha = s * scale;
  Poly beta = -(t * scale);
  if (!pv.is_zero()) {
    // Minimal-degree representative of the coset alpha + (v/g)*Q[x].
    alpha = alpha % exact_div(pv, g);
    beta = exact_div(alpha * pu - pw, pv);
  }
  return Search<BezoutSolution>::found({RatFunc(alpha), RatFunc(beta)});
}

CoprimenessVerdict PolyRingOracle::weakly_coprime(const FractionRep& rep, DegreeBudget) const {
  CoprimenessVerdict out;
  const Poly g = gcd(rep.gamma.num(), rep.theta.num());
  if (g.degree() == 0) {
    out.status = CoprimenessVerdict::Status::WeaklyCoprime;
  } else {
    out.status = CoprimenessVerdict::Status::NotWeaklyCoprime;
    out.k = RatFunc(g).inverse();
  }
  return out;
}

std::vector<RatFunc> PolyRingOracle::basis(int max_degree, const std::string& var) const {
  std::vector<RatFunc> out;
  for (int j = 0; j <= max_degree; ++j) out.emplace_back(Poly::monomial(Rat(1), j, var));
  return out;
}

}  // namespace regula::detail
