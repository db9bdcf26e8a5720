#ifndef REGULA_FEEDBACK_HPP
#define REGULA_FEEDBACK_HPP

#include "regula/ring.hpp"

namespace regula {

/// Transfer matrix from (y_r, d) to (e, u) of the positive-feedback loop.
struct ClosedLoopMatrix {
  RatFunc h11;  // 1/(1 - pc)
  RatFunc h12;  // p/(1 - pc)
  RatFunc h21;  // c/(1 - pc)
  RatFunc h22;  // 1/(1 - pc)
};

/// Throws SingularLoop when 1 - p*c = 0.
ClosedLoopMatrix closed_loop(const RatFunc& p, const RatFunc& c);

/// All four closed-loop entries lie in A.
bool stabilizes(RingId ring, const RatFunc& p, const RatFunc& c);

/// Name of the first closed-loop entry that is not stable, or empty.
std::string first_unstable_entry(RingId ring, const RatFunc& p, const RatFunc& c);

/// a, b in A with a - p*b = 1 and p*a in A; the controller is b/a.
struct StabilizingPair {
  RatFunc a;
  RatFunc b;
  RingId ring = RingId::PolyRing;

  RatFunc controller() const { return b / a; }
};

/// a = 1/(1 - pc), b = c/(1 - pc). Throws PreconditionError if c does not
/// stabilize p.
StabilizingPair pair_from_controller(RingId ring, const RatFunc& p, const RatFunc& c);

/// a, b stable, a != 0, a - p*b = 1 exactly, p*a stable.
bool check_pair(RingId ring, const RatFunc& p, const RatFunc& a, const RatFunc& b);

/// c(q1, q2) = (b + q1 a^2 + q2 b^2) / (a + q1 p a^2 + q2 p b^2).
/// Throws PreconditionError for unstable q1, q2 or a vanishing denominator.
RatFunc parametrize_stabilizing(RingId ring, const RatFunc& p, const StabilizingPair& pair, const RatFunc& q1,
                                const RatFunc& q2);

struct StabilizingDesign {
  RatFunc controller;
  StabilizingPair pair;
};

/// Finds some stabilizing controller. Complete for PolyRing and StableProper;
/// a bounded search in NoLinearSubring.
Search<StabilizingDesign> synthesize_stabilizing(RingId ring, const RatFunc& p, DegreeBudget budget = {});

}  // namespace regula

#endif  // REGULA_FEEDBACK_HPP
