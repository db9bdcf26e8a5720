#include <algorithm>

#include "regula/linear_solve.hpp"
#include "rings.hpp"

namespace regula::detail {

namespace {

bool in_subring(const Poly& p) { return p.coeff(1).is_zero(); }

/// Exponents an element of Q[x^2, x^3] of degree <= d may use.
std::vector<int> subring_exponents(int d) {
  std::vector<int> out;
  for (int e = 0; e <= d; ++e)
    if (e != 1) out.push_back(e);
  return out;
}

Poly assemble(const RatVector& sol, std::size_t offset, const std::vector<int>& exps, const std::string& var) {
  std::vector<Rat> coeffs(exps.empty() ? 0 : static_cast<std::size_t>(exps.back()) + 1);
  for (std::size_t i = 0; i < exps.size(); ++i) coeffs[static_cast<std::size_t>(exps[i])] = sol[offset + i];
  return Poly(std::move(coeffs), var);
}

}  // namespace

bool NoLinearOracle::is_stable(const RatFunc& f) const { return f.is_polynomial() && in_subring(f.num()); }

FractionRep NoLinearOracle::to_fraction(const RatFunc& f) const {
  if (in_subring(f.num()) && in_subring(f.den()))
    return FractionRep{RatFunc(f.num()), RatFunc(f.den()), RingId::NoLinearSubring};
  // x^2 * p has no x^1 term for any polynomial p.
  const Poly x2 = Poly::monomial(Rat(1), 2, f.var());
  return FractionRep{RatFunc(x2 * f.num()), RatFunc(x2 * f.den()), RingId::NoLinearSubring};
}

Search<BezoutSolution> NoLinearOracle::bezout(const RatFunc& u, const RatFunc& v, const RatFunc& w,
                                              DegreeBudget budget) const {
  using Result = Search<BezoutSolution>;
  const Poly& pu = u.num();
  const Poly& pv = v.num();
  const Poly& pw = w.num();
  const std::string var = common_variable({&u, &v, &w});

  // A solution in A is a solution in the PID Q[x], so this test is sound.
  if (!divides(gcd(pu, pv), pw)) return Result::unsolvable();
  if (pw.is_zero()) return Result::found({RatFunc(0), RatFunc(0)});
  // With one side zero the remaining unknown is determined uniquely in F.
  if (pv.is_zero()) {
    const RatFunc alpha = w / u;
    return is_stable(alpha) ? Result::found({alpha, RatFunc(0)}) : Result::unsolvable();
  }
  if (pu.is_zero()) {
    const RatFunc beta = -(w / v);
    return is_stable(beta) ? Result::found({RatFunc(0), beta}) : Result::unsolvable();
  }

  for (int d = 0; d <= budget.degree; ++d) {
    if (d == 1) continue;  // same unknowns as d = 0
    const auto exps = subring_exponents(d);
    const int top = std::max(pu.degree(), pv.degree()) + d;
    if (pw.degree() > top) continue;
    const std::size_t n = exps.size();
    RatMatrix a(static_cast<std::size_t>(top) + 1, RatVector(2 * n));
    RatVector b(static_cast<std::size_t>(top) + 1);
    for (int k = 0; k <= top; ++k) {
      auto& row = a[static_cast<std::size_t>(k)];
      for (std::size_t i = 0; i < n; ++i) {
        row[i] = pu.coeff(k - exps[i]);
        row[n + i] = -pv.coeff(k - exps[i]);
      }
      b[static_cast<std::size_t>(k)] = pw.coeff(k);
    }
    const auto sol = solve_linear(a, b, 2 * n);
    if (!sol) continue;
    return Result::found({RatFunc(assemble(sol->particular, 0, exps, var)),
                          RatFunc(assemble(sol->particular, n, exps, var))});
  }
  return Result::unknown();
}

// Any k with k*gamma, k*theta in Q[x] is m/g for g = gcd(gamma, theta) and
// some m in Q[x]. The two membership constraints only read off the x^1
// coefficients of m*P and m*Q, which are linear in m.
CoprimenessVerdict NoLinearOracle::weakly_coprime(const FractionRep& rep, DegreeBudget budget) const {
  using S = CoprimenessVerdict::Status;
  CoprimenessVerdict out;
  const Poly& gamma = rep.gamma.num();
  const Poly& theta = rep.theta.num();
  const std::string var = rep.theta.var();
  const Poly g = gcd(gamma, theta);
  const Poly pg = exact_div(gamma, g);
  const Poly pt = exact_div(theta, g);
  const int top = g.degree() + std::max(budget.degree, 0);
  const auto columns = static_cast<std::size_t>(top) + 1;

  RatMatrix a(2, RatVector(columns));
  for (std::size_t i = 0; i < columns; ++i) {
    const int e = static_cast<int>(i);
    a[0][i] = pg.coeff(1 - e);  // x^1 coefficient of x^e * pg
    a[1][i] = pt.coeff(1 - e);
  }
  const auto sol = solve_linear(a, RatVector(2), columns);
  // The constraint set is homogeneous, so it is always consistent.
  const RatFunc inv_g = RatFunc(g).inverse();
  for (const auto& basis_vec : sol->nullspace) {
    const RatFunc k = RatFunc(Poly(basis_vec, var)) * inv_g;
    if (!is_stable(k)) {
      out.status = S::NotWeaklyCoprime;
      out.k = k;
      return out;
    }
  }
  // If any falsifier exists, one exists with deg m <= max(2, deg g + 1)
  // (x^2/g, x^(e+1)/x^e, or a linear m when g = 1), so a budget of 2 or more
  // makes the search exhaustive.
  out.status = budget.degree >= 2 ? S::WeaklyCoprime : S::UnknownUpToBound;
  return out;
}

std::vector<RatFunc> NoLinearOracle::basis(int max_degree, const std::string& var) const {
  std::vector<RatFunc> out;
  for (int e : subring_exponents(max_degree)) out.emplace_back(Poly::monomial(Rat(1), e, var));
  return out;
}

}  // namespace regula::detail
