#ifndef REGULA_TESTS_SUPPORT_HPP
#define REGULA_TESTS_SUPPORT_HPP

#include <random>
#include <string>

#include "regula/expr.hpp"
#include "regula/ratfunc.hpp"

namespace regula::test {

inline RatFunc X(const std::string& src) { return parse_expr(src, "x"); }
inline RatFunc S(const std::string& src) { return parse_expr(src, "s"); }

inline Poly px(const std::string& src) { return X(src).num(); }

/// Random polynomial of exactly the given degree with small integer coefficients.
inline Poly random_poly(std::mt19937_64& rng, int degree, const std::string& var = "x", int range = 5) {
  std::uniform_int_distribution<int> coeff(-range, range);
  std::vector<Rat> c(static_cast<std::size_t>(degree) + 1);
  for (auto& v : c) v = Rat(coeff(rng));
  while (c.back().is_zero()) c.back() = Rat(coeff(rng));
  return Poly(std::move(c), var);
}

}  // namespace regula::test

#endif  // REGULA_TESTS_SUPPORT_HPP
