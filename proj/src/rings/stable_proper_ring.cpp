#include <algorithm>

#include "regula/errors.hpp"
#include "rings.hpp"

namespace regula::detail {

namespace {

Poly s_plus_one(const std::string& var) { return Poly(std::vector<Rat>{Rat(1), Rat(1)}, var); }

/// deg den - deg num; the order of the zero at infinity.
int relative_degree(const RatFunc& f) { return f.den().degree() - f.num().degree(); }

}  // namespace

bool StableProperOracle::is_stable(const RatFunc& f) const { return f.is_proper() && routh_hurwitz(f.den()); }

FractionRep StableProperOracle::to_fraction(const RatFunc& f) const {
  if (f.is_zero()) return FractionRep{RatFunc(0), RatFunc(1), RingId::StableProper};
  const std::string var = f.var();
  const int k = std::max(f.num().degree(), f.den().degree());
  const Poly base = s_plus_one(var).pow(static_cast<unsigned>(k));
  return FractionRep{RatFunc::normalize(f.num(), base), RatFunc::normalize(f.den(), base), RingId::StableProper};
}

// Work in Q[s] localized at Hurwitz polynomials, then restore properness.
// With g = gcd(nu, nv) and h = g / gcd(g, nw), the equation is solvable iff
// h is Hurwitz (common unstable zeros of u, v are zeros of w) and the zero
// at infinity of w is at least that of u or of v. A polynomial solution of
//   nu*X - nv*Y = nw*h*(s+1)^m
// gives alpha = X*du / (h*dw*(s+1)^m), beta = Y*dv / (h*dw*(s+1)^m); for m
// large enough one of the two minimal-degree normalizations is proper.
Search<BezoutSolution> StableProperOracle::bezout(const RatFunc& u, const RatFunc& v, const RatFunc& w,
                                                  DegreeBudget) const {
  using Result = Search<BezoutSolution>;
  if (w.is_zero()) return Result::found({RatFunc(0), RatFunc(0)});
  if (v.is_zero()) {
    const RatFunc alpha = w / u;
    return is_stable(alpha) ? Result::found({alpha, RatFunc(0)}) : Result::unsolvable();
  }
  if (u.is_zero()) {
    const RatFunc beta = -(w / v);
    return is_stable(beta) ? Result::found({RatFunc(0), beta}) : Result::unsolvable();
  }

  const std::string var = common_variable({&u, &v, &w}, "s");
  const Poly &nu = u.num(), &du = u.den();
  const Poly &nv = v.num(), &dv = v.den();
  const Poly &nw = w.num(), &dw = w.den();

  const auto [g, cu, cv] = ext_gcd(nu, nv);
  const Poly h = exact_div(g, gcd(g, nw));
  if (!routh_hurwitz(h)) return Result::unsolvable();
  const bool reduce_alpha = relative_degree(v) <= relative_degree(w);
  const bool reduce_beta = relative_degree(u) <= relative_degree(w);
  if (!reduce_alpha && !reduce_beta) return Result::unsolvable();

  const Poly nu_g = exact_div(nu, g);
  const Poly nv_g = exact_div(nv, g);
  const int max_m = nu.degree() + nv.degree() + du.degree() + dv.degree() + nw.degree() + dw.degree() + 2;
  Poly power = Poly::constant(Rat(1), var);
  for (int m = 0; m <= max_m; ++m, power *= s_plus_one(var)) {
    const Poly rhs = nw * h * power;
    const Poly scale = exact_div(rhs, g);
    const RatFunc den_common = RatFunc(h * dw * power).inverse();
    auto try_pair = [&](const Poly& x, const Poly& y) -> std::optional<BezoutSolution> {
      BezoutSolution sol{RatFunc(x * du) * den_common, RatFunc(y * dv) * den_common};
      if (is_stable(sol.alpha) && is_stable(sol.beta)) return sol;
      return std::nullopt;
    };
    if (reduce_alpha) {
      const Poly x = (cu * scale) % nv_g;
      const Poly y = exact_div(nu * x - rhs, nv);
      if (auto sol = try_pair(x, y)) return Result::found(*sol);
    }
    if (reduce_beta) {
      const Poly y = (-(cv * scale)) % nu_g;
      const Poly x = exact_div(rhs + nv * y, nu);
      if (auto sol = try_pair(x, y)) return Result::found(*sol);
    }
  }
  throw Error("internal: stable-proper bezout failed to reach a proper solution");
}

CoprimenessVerdict StableProperOracle::weakly_coprime(const FractionRep& rep, DegreeBudget) const {
  using S = CoprimenessVerdict::Status;
  CoprimenessVerdict out;
  const std::string var = common_variable({&rep.gamma, &rep.theta}, "s");
  const Poly g = gcd(rep.gamma.num(), rep.theta.num());
  if (!routh_hurwitz(g)) {
    out.status = S::NotWeaklyCoprime;
    out.k = RatFunc::normalize(s_plus_one(var).pow(static_cast<unsigned>(g.degree())), g);
    return out;
  }
  const bool gamma_strict = rep.gamma.is_zero() || relative_degree(rep.gamma) > 0;
  const bool theta_strict = relative_degree(rep.theta) > 0;
  if (gamma_strict && theta_strict) {
    out.status = S::NotWeaklyCoprime;
    out.k = RatFunc(s_plus_one(var));
    return out;
  }
  out.status = S::WeaklyCoprime;
  return out;
}

std::vector<RatFunc> StableProperOracle::basis(int max_degree, const std::string& var) const {
  std::vector<RatFunc> out;
  RatFunc e(1);
  const RatFunc step = RatFunc(s_plus_one(var)).inverse();
  for (int j = 0; j <= max_degree; ++j, e *= step) out.push_back(e);
  return out;
}

}  // namespace regula::detail
