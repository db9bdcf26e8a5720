#include "regula/regulation.hpp"

#include "regula/errors.hpp"

namespace regula {

Generator Generator::make(RingId ring, const RatFunc& value, DegreeBudget budget) {
  return from_rep(to_ring_fraction(ring, value), budget);
}

Generator Generator::from_rep(FractionRep rep, DegreeBudget budget) {
  Generator g;
  g.value = rep.value();
  g.weak_coprime_status = is_weakly_coprime(rep, budget);
  g.rep = std::move(rep);
  return g;
}

bool is_regulating(RingId ring, const RatFunc& p, const RatFunc& c, const Generator& gen) {
  const auto h = closed_loop(p, c);
  const auto& oracle = ring_oracle(ring);
  return oracle.is_stable(gen.value * h.h11) && oracle.is_stable(gen.value * h.h12);
}

bool is_robustly_regulating(RingId ring, const RatFunc& p, const RatFunc& c, const Generator& gen) {
  return stabilizes(ring, p, c) && is_regulating(ring, p, c, gen);
}

RegulationCertificate regulation_witness(RingId ring, const RatFunc& p, const RatFunc& c, const Generator& gen) {
  if (!is_robustly_regulating(ring, p, c, gen))
    throw PreconditionError("controller is not robustly regulating");
  const auto h = closed_loop(p, c);
  RegulationCertificate cert;
  cert.kind = RegulationCertificate::Kind::InternalModel;
  cert.alpha = gen.value * h.h11;
  cert.beta = -(gen.value * h.h12);
  if (!(cert.alpha + cert.beta * c == gen.value)) throw Error("internal: regulation witness identity fails");
  return cert;
}

Search<RegulationCertificate> internal_model_witness(RingId ring, const RatFunc& c, const Generator& gen,
                                                     DegreeBudget budget) {
  const auto crep = to_ring_fraction(ring, c);
  const RatFunc& gg = gen.rep.gamma;
  const RatFunc& tg = gen.rep.theta;
  // alpha*theta_c*theta_g + beta*gamma_c*theta_g = gamma_g*theta_c
  const auto sol = bezout_solve(ring, crep.theta * tg, -(crep.gamma * tg), gg * crep.theta, budget);
  if (!sol.ok()) return {sol.status, std::nullopt};
  RegulationCertificate cert{RegulationCertificate::Kind::InternalModel, sol->alpha, sol->beta, {}, {}};
  if (!(cert.alpha + cert.beta * c == gen.value)) throw Error("internal: internal-model witness identity fails");
  return Search<RegulationCertificate>::found(std::move(cert));
}

Search<RegulationCertificate> check_denominator_model(RingId ring, const RatFunc& c, const RatFunc& theta,
                                                      DegreeBudget budget) {
  const auto& oracle = ring_oracle(ring);
  if (theta.is_zero() || !oracle.is_stable(theta)) throw PreconditionError("theta must be a nonzero stable element");
  using Kind = RegulationCertificate::Kind;
  if (oracle.is_unit(theta)) return Search<RegulationCertificate>::found({Kind::DenominatorModel, theta.inverse(), 0, {}, {}});
  const auto crep = to_ring_fraction(ring, c);
  // alpha*theta*theta_c + beta*theta*gamma_c = theta_c
  const auto sol = bezout_solve(ring, theta * crep.theta, -(theta * crep.gamma), crep.theta, budget);
  if (!sol.ok()) return {sol.status, std::nullopt};
  RegulationCertificate cert{Kind::DenominatorModel, sol->alpha, sol->beta, {}, {}};
  if (!(theta * (cert.alpha + cert.beta * c)).is_one()) throw Error("internal: denominator-model identity fails");
  return Search<RegulationCertificate>::found(std::move(cert));
}

StablePlantDesign controller_from_stable_witness(RingId ring, const RatFunc& p_stable, const Generator& gen,
                                                 const RatFunc& alpha, const RatFunc& beta) {
  const auto& oracle = ring_oracle(ring);
  if (!oracle.is_stable(p_stable)) throw PreconditionError("plant is not stable");
  if (!oracle.is_stable(alpha) || !oracle.is_stable(beta)) throw PreconditionError("witnesses must be stable");
  if (!(alpha / gen.value - beta * p_stable).is_one())
    throw PreconditionError("witnesses do not satisfy alpha/Theta - beta*p = 1");
  StablePlantDesign out{RatFunc(), alpha, beta};
  if (out.alpha.is_zero()) {
    // beta*p = -1 here, so (gamma, (1 - theta)*beta) satisfies the identity too
    out.alpha = gen.rep.gamma;
    out.beta = (RatFunc(1) - gen.rep.theta) * beta;
  }
  out.controller = out.beta / out.alpha * gen.value;
  if (!is_robustly_regulating(ring, p_stable, out.controller, gen))
    throw Error("internal: stable-plant regulator is not robustly regulating");
  return out;
}

Search<StablePlantDesign> solve_stable_plant(RingId ring, const RatFunc& p_stable, const Generator& gen,
                                             DegreeBudget budget) {
  if (!is_stable(ring, p_stable)) throw PreconditionError("plant is not stable");
  if (is_stable(ring, gen.value))
    return Search<StablePlantDesign>::found({RatFunc(0), gen.value, RatFunc(0)});
  // alpha*theta - beta*p*gamma = gamma
  const auto sol = bezout_solve(ring, gen.rep.theta, p_stable * gen.rep.gamma, gen.rep.gamma, budget);
  if (!sol.ok()) return {sol.status, std::nullopt};
  return Search<StablePlantDesign>::found(controller_from_stable_witness(ring, p_stable, gen, sol->alpha, sol->beta));
}

RatFunc compose_regulator(RingId ring, const RatFunc& p, const RatFunc& c, const StabilizingPair& pair,
                          const RatFunc& c_i) {
  if (!check_pair(ring, p, pair.a, pair.b) || !(pair.controller() == c))
    throw PreconditionError("pair does not belong to the controller");
  if (!stabilizes(ring, pair.b * p, c_i)) throw PreconditionError("inner controller does not stabilize b*p");
  return c * (RatFunc(1) + c_i);
}

RatFunc subparametrize(RingId ring, const RatFunc& p, const StabilizingPair& pair, const RatFunc& q) {
  if (!is_stable(ring, q)) throw PreconditionError("q must be stable");
  const RatFunc den = RatFunc(1) + pair.b * p * q;
  if (den.is_zero()) throw PreconditionError("1 + b*p*q vanishes");
  return pair.controller() * (RatFunc(1) + q / den);
}

std::string_view to_string(SolvabilityVerdict::Status status) {
  switch (status) {
    case SolvabilityVerdict::Status::Solvable: return "solvable";
    case SolvabilityVerdict::Status::NotSolvable: return "not-solvable";
    case SolvabilityVerdict::Status::NotStabilizable: return "not-stabilizable";
    case SolvabilityVerdict::Status::UnknownWithinBudget: return "unknown-within-budget";
  }
  return "?";
}

namespace {

RatFunc shifted_b(const StabilizingPair& pair, const RatFunc& q1, const RatFunc& q2) {
  return pair.b + q1 * pair.a * pair.a + q2 * pair.b * pair.b;
}

// alpha/Theta - beta*b'*p = 1 for fixed q1, q2, cleared to
// alpha*theta - beta*(b'*p*gamma) = gamma.
Search<BezoutSolution> solve_for_q(RingId ring, const RatFunc& p, const Generator& gen, const StabilizingPair& pair,
                                   const RatFunc& q1, const RatFunc& q2, DegreeBudget budget) {
  const RatFunc pb = shifted_b(pair, q1, q2) * p;
  return bezout_solve(ring, gen.rep.theta, pb * gen.rep.gamma, gen.rep.gamma, budget);
}

bool parametrization_defined(const RatFunc& p, const StabilizingPair& pair, const RatFunc& q1, const RatFunc& q2) {
  return !(pair.a + q1 * p * pair.a * pair.a + q2 * p * pair.b * pair.b).is_zero();
}

}  // namespace

bool reverify(RingId ring, const RatFunc& p, const Generator& gen, const SolvabilityWitness& w) {
  const auto& oracle = ring_oracle(ring);
  if (!check_pair(ring, p, w.pair.a, w.pair.b)) return false;
  if (!oracle.is_stable(w.q1) || !oracle.is_stable(w.q2)) return false;
  if (!oracle.is_stable(w.alpha) || !oracle.is_stable(w.beta)) return false;
  return (w.alpha / gen.value - w.beta * shifted_b(w.pair, w.q1, w.q2) * p).is_one();
}

SolvabilityVerdict solvability(RingId ring, const RatFunc& p, const Generator& gen, DegreeBudget budget, int sweep) {
  using Status = SolvabilityVerdict::Status;
  SolvabilityVerdict out;
  const auto stab = synthesize_stabilizing(ring, p, budget);
  if (!stab.ok()) {
    out.status = stab.status == SearchStatus::Unsolvable ? Status::NotStabilizable : Status::UnknownWithinBudget;
    out.notes.emplace_back(stab.status == SearchStatus::Unsolvable ? "plant is not stabilizable"
                                                                   : "no stabilizing controller found within budget");
    return out;
  }
  const StabilizingPair& pair = stab->pair;
  auto accept = [&](RatFunc q1, RatFunc q2, RatFunc alpha, RatFunc beta, std::string note) {
    SolvabilityWitness w{pair, std::move(q1), std::move(q2), std::move(alpha), std::move(beta)};
    if (!reverify(ring, p, gen, w)) throw Error("internal: solvability witness fails re-verification");
    out.status = Status::Solvable;
    out.witness = std::move(w);
    out.notes.push_back(std::move(note));
    return out;
  };

  if (is_stable(ring, gen.value)) return accept(0, 0, gen.value, 0, "generator is stable");

  const auto base = solve_for_q(ring, p, gen, pair, 0, 0, budget);
  if (base.ok()) return accept(0, 0, base->alpha, base->beta, "solved with q1 = q2 = 0");

  if (gen.weakly_coprime()) {
    // alpha*theta - beta*p = 1, cleared over p = gamma_p/theta_p
    const auto prep = to_ring_fraction(ring, p);
    const auto red = bezout_solve(ring, gen.rep.theta * prep.theta, prep.gamma, prep.theta, budget);
    if (red.status == SearchStatus::Unsolvable) {
      out.status = Status::NotSolvable;
      out.notes.emplace_back("generator is weakly coprime and alpha*theta - beta*p = 1 has no solution");
      return out;
    }
    if (red.ok()) {
      RatFunc alpha = red->alpha;
      RatFunc beta = red->beta;
      // c(q1, q2) below has denominator a*alpha*theta
      if (alpha.is_zero()) {
        alpha += prep.gamma;
        beta += gen.rep.theta * prep.theta;
      }
      RatFunc q1 = (RatFunc(1) - p * pair.b) * beta;
      RatFunc q2 = beta * p * pair.a * p;
      return accept(std::move(q1), std::move(q2), alpha * pair.a * gen.rep.gamma, 1,
                    "built from alpha*theta - beta*p = 1");
    }
  }

  std::vector<RatFunc> grid{RatFunc(0)};
  for (const auto& e : ring_oracle(ring).basis(sweep, common_variable({&p, &gen.value}, default_variable(ring)))) {
    grid.push_back(e);
    grid.push_back(-e);
  }
  for (const auto& q1 : grid) {
    for (const auto& q2 : grid) {
      if (q1.is_zero() && q2.is_zero()) continue;
      if (!parametrization_defined(p, pair, q1, q2)) continue;
      const auto sol = solve_for_q(ring, p, gen, pair, q1, q2, budget);
      if (sol.ok()) return accept(q1, q2, sol->alpha, sol->beta, "found by (q1, q2) sweep");
    }
  }
  out.status = Status::UnknownWithinBudget;
  out.notes.emplace_back("no witness found within degree budget and sweep");
  return out;
}

Search<WeaklyCoprimeDesign> solvability_weakly_coprime(RingId ring, const RatFunc& p, const Generator& gen,
                                                       DegreeBudget budget) {
  if (!gen.weakly_coprime()) throw PreconditionError("generator representation is not known to be weakly coprime");
  const auto stab = synthesize_stabilizing(ring, p, budget);
  if (!stab.ok()) return {stab.status, std::nullopt};
  const StabilizingPair& pair = stab->pair;
  const auto& oracle = ring_oracle(ring);
  const RatFunc& theta = gen.rep.theta;

  RatFunc alpha, beta;
  if (oracle.is_unit(theta)) {
    alpha = theta.inverse();
  } else {
    const auto prep = to_ring_fraction(ring, p);
    const RatFunc u = theta * prep.theta;
    const RatFunc v = prep.gamma;
    const auto sol = bezout_solve(ring, u, v, prep.theta, budget);
    if (!sol.ok()) return {sol.status, std::nullopt};
    alpha = sol->alpha;
    beta = sol->beta;
    if (alpha.is_zero()) {
      alpha += v;
      beta += u;
    }
  }
  if (!(alpha * theta - beta * p).is_one()) throw Error("internal: alpha*theta - beta*p = 1 fails");
  RatFunc c = (beta + alpha * theta * pair.b) / (alpha * theta * pair.a);
  if (!is_robustly_regulating(ring, p, c, gen))
    throw Error("internal: weakly coprime construction is not robustly regulating");
  return Search<WeaklyCoprimeDesign>::found({std::move(alpha), std::move(beta), pair, std::move(c)});
}

RobustSynthesis synthesize_robust(RingId ring, const RatFunc& p, const Generator& gen, DegreeBudget budget, int sweep) {
  using Status = SolvabilityVerdict::Status;
  RobustSynthesis out;
  out.verdict = solvability(ring, p, gen, budget, sweep);
  switch (out.verdict.status) {
    case Status::Solvable: break;
    case Status::NotSolvable:
    case Status::NotStabilizable: out.design = Search<RobustDesign>::unsolvable(); return out;
    case Status::UnknownWithinBudget: out.design = Search<RobustDesign>::unknown(); return out;
  }
  const SolvabilityWitness& w = *out.verdict.witness;
  const RatFunc c = parametrize_stabilizing(ring, p, w.pair, w.q1, w.q2);
  StabilizingPair pair = pair_from_controller(ring, p, c);
  const auto inner = controller_from_stable_witness(ring, pair.b * p, gen, w.alpha, w.beta);
  RatFunc c_r = compose_regulator(ring, p, c, pair, inner.controller);
  if (!is_robustly_regulating(ring, p, c_r, gen)) throw Error("internal: synthesized regulator fails verification");
  out.design = Search<RobustDesign>::found({std::move(c_r), w, std::move(pair), inner.controller});
  return out;
}

CoprimeLoopVerdict coprime_internal_model_check(const FractionRep& p_rep, const FractionRep& c_rep,
                                                const Generator& gen, DegreeBudget budget) {
  using S = CoprimenessVerdict::Status;
  if (is_coprime_factorization(p_rep, budget).status != S::Coprime ||
      is_coprime_factorization(c_rep, budget).status != S::Coprime)
    throw PreconditionError("representations are not known to be coprime");
  const RingId ring = p_rep.ring;
  const auto& oracle = ring_oracle(ring);
  const RatFunc& n = p_rep.gamma;
  const RatFunc& d = p_rep.theta;
  const RatFunc& y = c_rep.gamma;
  const RatFunc& x = c_rep.theta;
  CoprimeLoopVerdict out;
  out.unit = d * x - n * y;
  if (!oracle.is_unit(out.unit)) throw PreconditionError("d*x - n*y is not a unit");
  const RatFunc z = x * gen.value;
  out.robust = oracle.is_stable(z);
  if (!out.robust) return out;
  out.z = z;
  if (is_coprime_factorization(gen.rep, budget).status == S::Coprime) {
    RatFunc delta = x / gen.rep.theta;
    if (!oracle.is_stable(delta)) throw Error("internal: x is not a multiple of theta");
    out.delta = std::move(delta);
  }
  return out;
}

LiftLowerResult lift_lower(RingId ring, const RatFunc& controller, const RatFunc& theta, LiftDirection direction,
                           const RatFunc& p) {
  const auto& oracle = ring_oracle(ring);
  if (theta.is_zero() || !oracle.is_stable(theta)) throw PreconditionError("theta must be a nonzero stable element");
  LiftLowerResult out;
  if (direction == LiftDirection::Lower) {
    out.controller = theta * controller;
    out.failing_entry = first_unstable_entry(ring, p / theta, out.controller);
  } else {
    out.controller = controller / theta;
    out.failing_entry = first_unstable_entry(ring, p, out.controller);
    if (out.failing_entry.empty()) {
      const auto h = closed_loop(p, out.controller);
      const RatFunc inv = theta.inverse();
      if (!oracle.is_stable(inv * h.h11))
        out.failing_entry = "h11/theta";
      else if (!oracle.is_stable(inv * h.h12))
        out.failing_entry = "h12/theta";
    }
  }
  out.ok = out.failing_entry.empty();
  return out;
}

RatFunc parametrize_all_robust(RingId ring, const RatFunc& p, const RatFunc& c_robust, const Generator& gen,
                               const RatFunc& q1, const RatFunc& q2) {
  if (!gen.weakly_coprime()) throw PreconditionError("generator representation is not known to be weakly coprime");
  if (!is_robustly_regulating(ring, p, c_robust, gen)) throw PreconditionError("controller is not robustly regulating");
  if (!is_stable(ring, q1) || !is_stable(ring, q2)) throw PreconditionError("q1, q2 must be stable");
  const auto h = closed_loop(p, c_robust);
  const RatFunc a = h.h11;
  const RatFunc b = gen.rep.theta * h.h21;
  const RatFunc a2 = a * a;
  const RatFunc b2 = b * b;
  const RatFunc den = gen.rep.theta * a + q1 * a2 * p + q2 * b2 * p;
  if (den.is_zero()) throw PreconditionError("parametrization denominator vanishes for this (q1, q2)");
  return (b + q1 * a2 + q2 * b2) / den;
}

}  // namespace regula
