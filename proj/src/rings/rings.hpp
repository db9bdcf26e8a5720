// Concrete oracles behind ring_oracle(). Internal to the library.
#ifndef REGULA_SRC_RINGS_HPP
#define REGULA_SRC_RINGS_HPP

#include "regula/ring.hpp"

namespace regula::detail {

class PolyRingOracle final : public StabilityRing {
 public:
  RingId id() const override { return RingId::PolyRing; }
  bool is_stable(const RatFunc& f) const override { return f.is_polynomial(); }
  FractionRep to_fraction(const RatFunc& f) const override;
  Search<BezoutSolution> bezout(const RatFunc& u, const RatFunc& v, const RatFunc& w,
                                DegreeBudget budget) const override;
  CoprimenessVerdict weakly_coprime(const FractionRep& rep, DegreeBudget budget) const override;
  bool bezout_is_complete() const override { return true; }
  std::vector<RatFunc> basis(int max_degree, const std::string& var) const override;
};

class NoLinearOracle final : public StabilityRing {
 public:
  RingId id() const override { return RingId::NoLinearSubring; }
  bool is_stable(const RatFunc& f) const override;
  FractionRep to_fraction(const RatFunc& f) const override;
  Search<BezoutSolution> bezout(const RatFunc& u, const RatFunc& v, const RatFunc& w,
                                DegreeBudget budget) const override;
  CoprimenessVerdict weakly_coprime(const FractionRep& rep, DegreeBudget budget) const override;
  bool bezout_is_complete() const override { return false; }
  std::vector<RatFunc> basis(int max_degree, const std::string& var) const override;
};

class StableProperOracle final : public StabilityRing {
 public:
  RingId id() const override { return RingId::StableProper; }
  bool is_stable(const RatFunc& f) const override;
  FractionRep to_fraction(const RatFunc& f) const override;
  Search<BezoutSolution> bezout(const RatFunc& u, const RatFunc& v, const RatFunc& w,
                                DegreeBudget budget) const override;
  CoprimenessVerdict weakly_coprime(const FractionRep& rep, DegreeBudget budget) const override;
  bool bezout_is_complete() const override { return true; }
  std::vector<RatFunc> basis(int max_degree, const std::string& var) const override;
};

}  // namespace regula::detail

#endif  // REGULA_SRC_RINGS_HPP
