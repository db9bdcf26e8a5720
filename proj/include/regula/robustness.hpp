#ifndef REGULA_ROBUSTNESS_HPP
#define REGULA_ROBUSTNESS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "regula/regulation.hpp"

namespace regula {

/// Random element of A: a combination of ring basis elements of degree at
/// most max_degree with integer coefficients in [-coeff_range, coeff_range].
RatFunc random_stable(RingId ring, std::mt19937_64& rng, int max_degree, const std::string& var,
                      int coeff_range = 3);

struct PerturbedPlant {
  RatFunc plant;
  bool additive = false;  // p + eps*s; otherwise drawn from the plants c stabilizes
};

/// Up to `count` plants that c still stabilizes. Additive perturbations are
/// tried first (50 attempts per plant); when those keep failing the plant is
/// drawn from the parametrization of all plants stabilized by c.
std::vector<PerturbedPlant> perturbed_plants(RingId ring, const RatFunc& p, const RatFunc& c, int count,
                                             std::mt19937_64& rng);

struct RobustnessReport {
  int sampled = 0;
  int additive = 0;
  int regulated = 0;
  std::vector<RatFunc> failures;
};

/// Samples perturbed plants and checks that c still regulates each of them.
RobustnessReport robustness_spot_check(RingId ring, const RatFunc& p, const RatFunc& c, const Generator& gen,
                                       int count, std::uint64_t seed);

}  // namespace regula

#endif  // REGULA_ROBUSTNESS_HPP
