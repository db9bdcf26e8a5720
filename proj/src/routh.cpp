#include <vector>

#include "regula/errors.hpp"
#include "regula/ring.hpp"

namespace regula {

namespace {

using Row = std::vector<mpz_class>;

void remove_content(Row& row) {
  mpz_class g = 0;
  for (const auto& v : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (g > 1)
    for (auto& v : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

mpz_class at(const Row& row, std::size_t i) { return i < row.size() ? row[i] : mpz_class(0); }

}  // namespace

bool routh_hurwitz(const Poly& d) {
  if (d.is_zero()) throw AlgebraError("routh_hurwitz of the zero polynomial");
  const int n = d.degree();
  if (n == 0) return true;

  // Integer coefficients with positive leading term.
  const Poly prim = primitive_part(d);
  std::vector<mpz_class> a;  // a[k] multiplies s^k
  for (const auto& c : prim.coeffs()) a.push_back(c.numerator());
  for (const auto& c : a)
    if (sgn(c) <= 0) return false;

  Row upper, lower;
  for (int k = n; k >= 0; k -= 2) upper.push_back(a[static_cast<std::size_t>(k)]);
  for (int k = n - 1; k >= 0; k -= 2) lower.push_back(a[static_cast<std::size_t>(k)]);

  // Row i+1 = lower[0]*upper[j+1] - upper[0]*lower[j+1]; lower[0] > 0 at every
  // step, so multiplying through by it keeps the first-column signs.
  for (int i = 2; i <= n; ++i) {
    const std::size_t len = upper.size() > 1 ? upper.size() - 1 : 1;
    Row next(len);
    for (std::size_t j = 0; j < len; ++j) next[j] = lower[0] * at(upper, j + 1) - upper[0] * at(lower, j + 1);
    if (sgn(next[0]) <= 0) return false;
    remove_content(next);
    upper = std::move(lower);
    lower = std::move(next);
  }
  return true;
}

}  // namespace regula
