#include "regula/ring.hpp"

#include "regula/errors.hpp"
#include "rings/rings.hpp"

namespace regula {

std::string_view ring_name(RingId ring) {
  switch (ring) {
    case RingId::PolyRing: return "poly";
    case RingId::NoLinearSubring: return "no-linear";
    case RingId::StableProper: return "stable-proper";
  }
  return "?";
}

std::optional<RingId> parse_ring(std::string_view name) {
  if (name == "poly") return RingId::PolyRing;
  if (name == "no-linear") return RingId::NoLinearSubring;
  if (name == "stable-proper") return RingId::StableProper;
  return std::nullopt;
}

std::string default_variable(RingId ring) { return ring == RingId::StableProper ? "s" : "x"; }

std::string_view to_string(CoprimenessVerdict::Status status) {
  using S = CoprimenessVerdict::Status;
  switch (status) {
    case S::Coprime: return "coprime";
    case S::NotCoprime: return "not coprime";
    case S::WeaklyCoprime: return "weakly coprime";
    case S::NotWeaklyCoprime: return "not weakly coprime";
    case S::UnknownUpToBound: return "unknown-within-budget";
  }
  return "?";
}

bool StabilityRing::is_unit(const RatFunc& f) const {
  return !f.is_zero() && is_stable(f) && is_stable(f.inverse());
}

const StabilityRing& ring_oracle(RingId ring) {
  static const detail::PolyRingOracle poly;
  static const detail::NoLinearOracle no_linear;
  static const detail::StableProperOracle stable_proper;
  switch (ring) {
    case RingId::PolyRing: return poly;
    case RingId::NoLinearSubring: return no_linear;
    case RingId::StableProper: return stable_proper;
  }
  throw PreconditionError("unknown ring");
}

bool is_stable(RingId ring, const RatFunc& f) { return ring_oracle(ring).is_stable(f); }

FractionRep FractionRep::make(RingId ring, RatFunc gamma, RatFunc theta) {
  if (theta.is_zero()) throw PreconditionError("fractional representation with zero denominator");
  if (!is_stable(ring, gamma) || !is_stable(ring, theta))
    throw PreconditionError("fractional representation components must be stable");
  return FractionRep{std::move(gamma), std::move(theta), ring};
}

FractionRep to_ring_fraction(RingId ring, const RatFunc& f) { return ring_oracle(ring).to_fraction(f); }

Search<BezoutSolution> bezout_solve(RingId ring, const RatFunc& u, const RatFunc& v, const RatFunc& w,
                                    DegreeBudget budget) {
  const auto& oracle = ring_oracle(ring);
  if (!oracle.is_stable(u) || !oracle.is_stable(v) || !oracle.is_stable(w))
    throw PreconditionError("bezout_solve: u, v, w must be stable");
  if (u.is_zero() && v.is_zero()) throw PreconditionError("bezout_solve: u and v are both zero");
  auto result = oracle.bezout(u, v, w, budget);
  if (result.ok()) {
    // Every oracle answer is re-checked here, independently of how it was found.
    const auto& s = *result;
    if (!oracle.is_stable(s.alpha) || !oracle.is_stable(s.beta) || s.alpha * u - s.beta * v != w)
      throw Error("internal: bezout oracle returned an invalid witness");
  }
  return result;
}

CoprimenessVerdict is_coprime_factorization(const FractionRep& rep, DegreeBudget budget) {
  using S = CoprimenessVerdict::Status;
  CoprimenessVerdict out;
  out.bound = budget.degree;
  const auto r = bezout_solve(rep.ring, rep.gamma, rep.theta, RatFunc(1), budget);
  switch (r.status) {
    case SearchStatus::Found:
      out.status = S::Coprime;
      out.alpha = r->alpha;
      out.beta = r->beta;
      break;
    case SearchStatus::Unsolvable: out.status = S::NotCoprime; break;
    case SearchStatus::UnknownWithinBudget: out.status = S::UnknownUpToBound; break;
  }
  return out;
}

CoprimenessVerdict is_weakly_coprime(const FractionRep& rep, DegreeBudget budget) {
  const auto& oracle = ring_oracle(rep.ring);
  auto verdict = oracle.weakly_coprime(rep, budget);
  verdict.bound = budget.degree;
  if (verdict.status == CoprimenessVerdict::Status::NotWeaklyCoprime && !reverify(rep, verdict))
    throw Error("internal: weak coprimeness oracle returned an invalid falsifier");
  return verdict;
}

bool reverify(const FractionRep& rep, const CoprimenessVerdict& verdict) {
  using S = CoprimenessVerdict::Status;
  const auto& oracle = ring_oracle(rep.ring);
  switch (verdict.status) {
    case S::Coprime:
      return verdict.alpha && verdict.beta && oracle.is_stable(*verdict.alpha) && oracle.is_stable(*verdict.beta) &&
             (*verdict.alpha * rep.gamma - *verdict.beta * rep.theta).is_one();
    case S::NotWeaklyCoprime:
      return verdict.k && oracle.is_stable(*verdict.k * rep.gamma) && oracle.is_stable(*verdict.k * rep.theta) &&
             !oracle.is_stable(*verdict.k);
    default: return true;
  }
}

}  // namespace regula
