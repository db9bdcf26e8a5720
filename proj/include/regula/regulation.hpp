#ifndef REGULA_REGULATION_HPP
#define REGULA_REGULATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "regula/feedback.hpp"

namespace regula {

/// Signal generator Theta: references and disturbances are Theta * (stable).
struct Generator {
  RatFunc value;
  FractionRep rep;
  CoprimenessVerdict weak_coprime_status;

  /// Uses to_ring_fraction(value) as the representation.
  static Generator make(RingId ring, const RatFunc& value, DegreeBudget budget = {});
  static Generator from_rep(FractionRep rep, DegreeBudget budget = {});

  RingId ring() const noexcept { return rep.ring; }
  bool weakly_coprime() const noexcept {
    return weak_coprime_status.status == CoprimenessVerdict::Status::WeaklyCoprime;
  }
};

struct RegulationCertificate {
  enum class Kind {
    InternalModel,     // Theta = alpha + beta*c
    DenominatorModel,  // theta*(alpha + beta*c) = 1
    Solvability,       // alpha/Theta - beta*(b + q1 a^2 + q2 b^2)*p = 1
  };

  Kind kind = Kind::InternalModel;
  RatFunc alpha;
  RatFunc beta;
  std::optional<RatFunc> q1;
  std::optional<RatFunc> q2;
};

/// Theta/(1 - pc) and Theta*p/(1 - pc) are both stable. Stability of the loop
/// is not checked. Throws SingularLoop.
bool is_regulating(RingId ring, const RatFunc& p, const RatFunc& c, const Generator& gen);

/// Stabilizing and regulating. For SISO loops this already implies that c
/// regulates every plant it stabilizes.
bool is_robustly_regulating(RingId ring, const RatFunc& p, const RatFunc& c, const Generator& gen);

/// alpha = Theta/(1 - pc), beta = -Theta*p/(1 - pc), so Theta = alpha + beta*c.
/// Only exposed for robustly regulating controllers, although stabilizing
/// and regulating is mathematically enough. Throws PreconditionError.
RegulationCertificate regulation_witness(RingId ring, const RatFunc& p, const RatFunc& c, const Generator& gen);

/// Searches alpha, beta in A with Theta = alpha + beta*c directly as a Bezout
/// problem, without looking at the closed loop.
Search<RegulationCertificate> internal_model_witness(RingId ring, const RatFunc& c, const Generator& gen,
                                                     DegreeBudget budget = {});

/// alpha, beta in A with theta*(alpha + beta*c) = 1.
Search<RegulationCertificate> check_denominator_model(RingId ring, const RatFunc& c, const RatFunc& theta,
                                                      DegreeBudget budget = {});

struct StablePlantDesign {
  RatFunc controller;  // (beta/alpha)*Theta
  RatFunc alpha;
  RatFunc beta;
};

/// Builds the regulator of a stable plant from alpha/Theta - beta*p = 1. An
/// alpha of zero is replaced by gamma (the generator numerator) and beta by
/// (1 - theta)*beta. Throws PreconditionError if the identity fails.
StablePlantDesign controller_from_stable_witness(RingId ring, const RatFunc& p_stable, const Generator& gen,
                                                 const RatFunc& alpha, const RatFunc& beta);

/// Robust regulation of a stable plant: searches the witnesses, then
/// applies controller_from_stable_witness.
Search<StablePlantDesign> solve_stable_plant(RingId ring, const RatFunc& p_stable, const Generator& gen,
                                             DegreeBudget budget = {});

/// c_r = c*(1 + c_i), where c = b/a and c_i stabilizes b*p.
RatFunc compose_regulator(RingId ring, const RatFunc& p, const RatFunc& c, const StabilizingPair& pair,
                          const RatFunc& c_i);

/// c(q) = c*(1 + q/(1 + b*p*q)) for stable q; always stabilizes p.
RatFunc subparametrize(RingId ring, const RatFunc& p, const StabilizingPair& pair, const RatFunc& q);

struct SolvabilityWitness {
  StabilizingPair pair;
  RatFunc q1;
  RatFunc q2;
  RatFunc alpha;
  RatFunc beta;
};

struct SolvabilityVerdict {
  enum class Status { Solvable, NotSolvable, NotStabilizable, UnknownWithinBudget };

  Status status = Status::UnknownWithinBudget;
  std::optional<SolvabilityWitness> witness;
  std::vector<std::string> notes;
};

std::string_view to_string(SolvabilityVerdict::Status status);

/// Default half-width of the (q1, q2) grid: basis elements up to this degree.
inline constexpr int kDefaultSweep = 4;

/// Decides or searches alpha/Theta - beta*(b + q1 a^2 + q2 b^2)*p = 1. Tries
/// q1 = q2 = 0, then (for a weakly coprime generator) the reduction to
/// alpha*theta - beta*p = 1, then a grid of q1, q2 in {0, +-basis element}.
SolvabilityVerdict solvability(RingId ring, const RatFunc& p, const Generator& gen, DegreeBudget budget = {},
                               int sweep = kDefaultSweep);

/// Re-checks every identity a Solvable verdict carries.
bool reverify(RingId ring, const RatFunc& p, const Generator& gen, const SolvabilityWitness& w);

struct WeaklyCoprimeDesign {
  RatFunc alpha;  // alpha*theta - beta*p = 1
  RatFunc beta;
  StabilizingPair pair;
  RatFunc controller;  // (beta + alpha*theta*b) / (alpha*theta*a)
};

/// Requires gen.weakly_coprime(); throws PreconditionError otherwise.
Search<WeaklyCoprimeDesign> solvability_weakly_coprime(RingId ring, const RatFunc& p, const Generator& gen,
                                                       DegreeBudget budget = {});

struct RobustDesign {
  RatFunc controller;
  SolvabilityWitness witness;
  StabilizingPair stabilizing_pair;  // pair of c(q1, q2)
  RatFunc inner_controller;          // c_i, regulating b'*p
};

/// solvability -> c(q1, q2) -> stable-plant regulator of b'*p -> c*(1 + c_i).
/// The returned status is Unsolvable for proven non-solvability and
/// UnknownWithinBudget when the search gave up; `verdict` carries the details.
struct RobustSynthesis {
  Search<RobustDesign> design;
  SolvabilityVerdict verdict;
};
RobustSynthesis synthesize_robust(RingId ring, const RatFunc& p, const Generator& gen, DegreeBudget budget = {},
                                  int sweep = kDefaultSweep);

struct CoprimeLoopVerdict {
  bool robust = false;
  RatFunc unit;                  // d*x - n*y
  std::optional<RatFunc> z;      // x*Theta when robust
  std::optional<RatFunc> delta;  // x = delta*theta when the generator rep is coprime
};

/// For coprime p = n/d and c = y/x with d*x - n*y a unit: c is robustly
/// regulating iff x*Theta is stable. Throws PreconditionError when a
/// representation is not (provably) coprime or the unit condition fails.
CoprimeLoopVerdict coprime_internal_model_check(const FractionRep& p_rep, const FractionRep& c_rep,
                                                const Generator& gen, DegreeBudget budget = {});

enum class LiftDirection { Lift, Lower };

struct LiftLowerResult {
  RatFunc controller;
  bool ok = false;
  std::string failing_entry;  // closed-loop entry that is not stable
};

/// Lower: c0 = theta*c, checked to stabilize p/theta. Lift: c = c0/theta,
/// checked to be robustly regulating for p with generator 1/theta.
LiftLowerResult lift_lower(RingId ring, const RatFunc& controller, const RatFunc& theta, LiftDirection direction,
                           const RatFunc& p);

/// (b + q1 a^2 + q2 b^2) / (theta a + q1 a^2 p + q2 b^2 p) with
/// a = 1/(1 - pc), b = theta*c/(1 - pc). Requires a weakly coprime generator
/// and a robustly regulating c.
RatFunc parametrize_all_robust(RingId ring, const RatFunc& p, const RatFunc& c_robust, const Generator& gen,
                               const RatFunc& q1, const RatFunc& q2);

}  // namespace regula

#endif  // REGULA_REGULATION_HPP
