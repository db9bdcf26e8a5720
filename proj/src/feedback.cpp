#include "regula/feedback.hpp"

#include <algorithm>

#include "regula/errors.hpp"
#include "regula/linear_solve.hpp"

namespace regula {

ClosedLoopMatrix closed_loop(const RatFunc& p, const RatFunc& c) {
  const RatFunc sensitivity = RatFunc(1) - p * c;
  if (sensitivity.is_zero()) throw SingularLoop();
  const RatFunc h = sensitivity.inverse();
  return {h, p * h, c * h, h};
}

std::string first_unstable_entry(RingId ring, const RatFunc& p, const RatFunc& c) {
  const auto h = closed_loop(p, c);
  const auto& oracle = ring_oracle(ring);
  if (!oracle.is_stable(h.h11)) return "h11";
  if (!oracle.is_stable(h.h12)) return "h12";
  if (!oracle.is_stable(h.h21)) return "h21";
  if (!oracle.is_stable(h.h22)) return "h22";
  return {};
}

bool stabilizes(RingId ring, const RatFunc& p, const RatFunc& c) { return first_unstable_entry(ring, p, c).empty(); }

StabilizingPair pair_from_controller(RingId ring, const RatFunc& p, const RatFunc& c) {
  const auto h = closed_loop(p, c);
  if (!stabilizes(ring, p, c)) throw PreconditionError("controller does not stabilize the plant");
  return {h.h11, h.h21, ring};
}

bool check_pair(RingId ring, const RatFunc& p, const RatFunc& a, const RatFunc& b) {
  const auto& oracle = ring_oracle(ring);
  if (a.is_zero()) return false;
  return oracle.is_stable(a) && oracle.is_stable(b) && (a - p * b).is_one() && oracle.is_stable(p * a);
}

RatFunc parametrize_stabilizing(RingId ring, const RatFunc& p, const StabilizingPair& pair, const RatFunc& q1,
                                const RatFunc& q2) {
  const auto& oracle = ring_oracle(ring);
  if (!oracle.is_stable(q1) || !oracle.is_stable(q2))
    throw PreconditionError("parametrization requires stable q1, q2");
  const RatFunc a2 = pair.a * pair.a;
  const RatFunc b2 = pair.b * pair.b;
  const RatFunc den = pair.a + q1 * p * a2 + q2 * p * b2;
  if (den.is_zero()) throw PreconditionError("parametrization denominator vanishes for this (q1, q2)");
  return (pair.b + q1 * a2 + q2 * b2) / den;
}

namespace {

Search<StabilizingDesign> design(RingId ring, const RatFunc& p, RatFunc a, RatFunc b) {
  StabilizingPair pair{std::move(a), std::move(b), ring};
  if (!check_pair(ring, p, pair.a, pair.b)) throw Error("internal: synthesized pair fails check_pair");
  RatFunc c = pair.controller();
  return Search<StabilizingDesign>::found({std::move(c), std::move(pair)});
}

// x*d - y*n = 1 in Q[x]; a = x*d, b = y*d.
Search<StabilizingDesign> synthesize_poly(const RatFunc& p) {
  const Poly& n = p.num();
  const Poly& d = p.den();
  const auto [g, u, v] = ext_gcd(d, n);
  Poly x = u, y = -v;
  if (x.is_zero()) {
    x += n;
    y += d;
  }
  return design(RingId::PolyRing, p, RatFunc(x * d), RatFunc(y * d));
}

// x*d - y*n = (s+1)^m, a = x*d/(s+1)^m, b = y*d/(s+1)^m. Minimal y for proper
// plants and minimal x for improper ones; m grows until a, b, p*a are proper.
Search<StabilizingDesign> synthesize_stable_proper(const RatFunc& p) {
  const Poly& n = p.num();
  const Poly& d = p.den();
  const std::string var = p.var();
  const auto [g, u, v] = ext_gcd(d, n);
  const Poly step(std::vector<Rat>{Rat(1), Rat(1)}, var);
  const bool proper = n.degree() <= d.degree();
  Poly power = Poly::constant(Rat(1), var);
  const int max_m = 2 * (n.degree() + d.degree()) + 2;
  for (int m = 0; m <= max_m; ++m, power *= step) {
    Poly x, y;
    if (proper) {
      y = (-(v * power)) % d;
      x = exact_div(power + y * n, d);
    } else {
      x = (u * power) % n;
      y = exact_div(x * d - power, n);
    }
    if (x.is_zero()) continue;
    const RatFunc scale = RatFunc(power).inverse();
    RatFunc a = RatFunc(x * d) * scale;
    RatFunc b = RatFunc(y * d) * scale;
    if (check_pair(RingId::StableProper, p, a, b)) return design(RingId::StableProper, p, std::move(a), std::move(b));
  }
  throw Error("internal: stable-proper synthesis did not converge");
}

std::vector<int> subring_exponents(int d) {
  std::vector<int> out;
  for (int e = 0; e <= d; ++e)
    if (e != 1) out.push_back(e);
  return out;
}

// Unknown a, b, s in Q[x^2, x^3] of degree <= d with
//   a*theta - b*gamma = theta,   a*gamma - s*theta = 0.
Search<StabilizingDesign> synthesize_no_linear(const RatFunc& p, DegreeBudget budget) {
  const auto rep = to_ring_fraction(RingId::NoLinearSubring, p);
  const Poly& gamma = rep.gamma.num();
  const Poly& theta = rep.theta.num();
  const std::string var = p.var();
  for (int d = 0; d <= budget.degree; ++d) {
    if (d == 1) continue;
    const auto exps = subring_exponents(d);
    const std::size_t n = exps.size();
    const int top = std::max(gamma.degree(), theta.degree()) + d;
    const auto rows_per_eq = static_cast<std::size_t>(top) + 1;
    RatMatrix a(2 * rows_per_eq, RatVector(3 * n));
    RatVector rhs(2 * rows_per_eq);
    for (int k = 0; k <= top; ++k) {
      auto& r1 = a[static_cast<std::size_t>(k)];
      auto& r2 = a[rows_per_eq + static_cast<std::size_t>(k)];
      for (std::size_t i = 0; i < n; ++i) {
        r1[i] = theta.coeff(k - exps[i]);
        r1[n + i] = -gamma.coeff(k - exps[i]);
        r2[i] = gamma.coeff(k - exps[i]);
        r2[2 * n + i] = -theta.coeff(k - exps[i]);
      }
      rhs[static_cast<std::size_t>(k)] = theta.coeff(k);
    }
    const auto sol = solve_linear(a, rhs, 3 * n);
    if (!sol) continue;
    auto build = [&](const RatVector& vec, std::size_t block) {
      std::vector<Rat> coeffs(static_cast<std::size_t>(exps.back()) + 1);
      for (std::size_t i = 0; i < n; ++i) coeffs[static_cast<std::size_t>(exps[i])] = vec[block * n + i];
      return RatFunc(Poly(std::move(coeffs), var));
    };
    // a = 0 is excluded; shift along the solution space if the particular
    // solution lands there.
    std::vector<RatVector> candidates{sol->particular};
    for (const auto& null : sol->nullspace) {
      RatVector shifted = sol->particular;
      for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += null[i];
      candidates.push_back(std::move(shifted));
    }
    for (const auto& cand : candidates) {
      RatFunc pa = build(cand, 0);
      RatFunc pb = build(cand, 1);
      if (check_pair(RingId::NoLinearSubring, p, pa, pb))
        return design(RingId::NoLinearSubring, p, std::move(pa), std::move(pb));
    }
  }
  return Search<StabilizingDesign>::unknown();
}

}  // namespace

Search<StabilizingDesign> synthesize_stabilizing(RingId ring, const RatFunc& p, DegreeBudget budget) {
  if (is_stable(ring, p)) return design(ring, p, RatFunc(1), RatFunc(0));
  switch (ring) {
    case RingId::PolyRing: return synthesize_poly(p);
    case RingId::StableProper: return synthesize_stable_proper(p);
    case RingId::NoLinearSubring: return synthesize_no_linear(p, budget);
  }
  throw PreconditionError("unknown ring");
}

}  // namespace regula
