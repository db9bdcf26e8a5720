#include "regula/robustness.hpp"

#include "regula/errors.hpp"

namespace regula {

RatFunc random_stable(RingId ring, std::mt19937_64& rng, int max_degree, const std::string& var, int coeff_range) {
  const auto basis = ring_oracle(ring).basis(max_degree, var);
  std::uniform_int_distribution<int> coeff(-coeff_range, coeff_range);
  RatFunc out;
  for (const auto& e : basis) out += RatFunc(Rat(coeff(rng))) * e;
  return out;
}

std::vector<PerturbedPlant> perturbed_plants(RingId ring, const RatFunc& p, const RatFunc& c, int count,
                                             std::mt19937_64& rng) {
  constexpr int kAdditiveAttempts = 50;
  const std::string var = common_variable({&p, &c}, default_variable(ring));
  // a - c*b = 1 with a = 1/(1 - cp), b = p/(1 - cp): the plants c stabilizes
  // are the controllers of this pair's parametrization.
  const auto h = closed_loop(p, c);
  const StabilizingPair dual{h.h11, h.h12, ring};
  std::uniform_int_distribution<int> shift(1, 6);
  std::vector<PerturbedPlant> out;
  while (static_cast<int>(out.size()) < count) {
    bool done = false;
    for (int attempt = 0; attempt < kAdditiveAttempts && !done; ++attempt) {
      const RatFunc s = random_stable(ring, rng, 3, var);
      if (s.is_zero()) continue;
      const RatFunc eps(Rat(1, 1L << shift(rng)));
      RatFunc candidate = p + eps * s;
      try {
        if (stabilizes(ring, candidate, c)) {
          out.push_back({std::move(candidate), true});
          done = true;
        }
      } catch (const SingularLoop&) {
      }
    }
    while (!done) {
      const RatFunc q1 = random_stable(ring, rng, 2, var, 2);
      const RatFunc q2 = random_stable(ring, rng, 2, var, 2);
      if (q1.is_zero() && q2.is_zero()) continue;
      try {
        RatFunc candidate = parametrize_stabilizing(ring, c, dual, q1, q2);
        out.push_back({std::move(candidate), false});
        done = true;
      } catch (const PreconditionError&) {
      }
    }
  }
  return out;
}

RobustnessReport robustness_spot_check(RingId ring, const RatFunc& p, const RatFunc& c, const Generator& gen,
                                       int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  RobustnessReport report;
  for (auto& pp : perturbed_plants(ring, p, c, count, rng)) {
    ++report.sampled;
    if (pp.additive) ++report.additive;
    if (is_robustly_regulating(ring, pp.plant, c, gen))
      ++report.regulated;
    else
      report.failures.push_back(std::move(pp.plant));
  }
  return report;
}

}  // namespace regula
