#ifndef REGULA_POLY_HPP
#define REGULA_POLY_HPP

#include <climits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "regula/rational.hpp"

namespace regula {

/// Dense univariate polynomial over Q. coeffs()[i] multiplies var^i; the
/// zero polynomial has no coefficients and degree kZeroDegree.
///
/// Polynomials of degree <= 0 are not tied to an indeterminate: combining a
/// constant with a polynomial in `s` yields a polynomial in `s`. Combining
/// two non-constant polynomials in different indeterminates throws
/// VariableMismatch.
class Poly {
 public:
  static constexpr int kZeroDegree = INT_MIN;

  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs, std::string variable = "x");

  static Poly constant(const Rat& c, std::string variable = "x");
  static Poly monomial(const Rat& c, int power, std::string variable = "x");
  static Poly identity(std::string variable = "x");

  int degree() const noexcept {
    return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1;
  }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  bool is_one() const;

  /// Coefficient of var^i; zero beyond the degree.
  Rat coeff(int i) const;
  const Rat& lead() const;
  std::span<const Rat> coeffs() const noexcept { return coeffs_; }
  const std::string& variable() const noexcept { return var_; }
  Poly with_variable(std::string variable) const;

  Poly monic() const;
  Poly operator-() const;
  Rat eval(const Rat& at) const;
  Poly pow(unsigned exponent) const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rat& rhs);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(Poly lhs, const Poly& rhs) { return lhs *= rhs; }
  friend Poly operator*(Poly lhs, const Rat& rhs) { return lhs *= rhs; }
  friend Poly operator*(const Rat& lhs, Poly rhs) { return rhs *= lhs; }

  /// Structural equality; the indeterminate only matters for non-constants.
  friend bool operator==(const Poly& lhs, const Poly& rhs);

 private:
  void trim();

  std::vector<Rat> coeffs_;
  std::string var_ = "x";
};

/// Shared indeterminate of two operands, honouring the constant rule above.
std::string unify_variable(const Poly& lhs, const Poly& rhs);

struct DivMod {
  Poly quotient;
  Poly remainder;
};

/// Euclidean division; throws AlgebraError when `divisor` is zero.
DivMod divmod(const Poly& dividend, const Poly& divisor);
Poly operator%(const Poly& dividend, const Poly& divisor);
/// Quotient of an exact division; throws AlgebraError on a nonzero remainder.
Poly exact_div(const Poly& dividend, const Poly& divisor);
bool divides(const Poly& divisor, const Poly& dividend);

/// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b.
Poly pseudo_remainder(const Poly& a, const Poly& b);

/// Integer polynomial with coprime coefficients and positive leading
/// coefficient that is a rational multiple of `p` (zero stays zero).
Poly primitive_part(const Poly& p);

/// Monic greatest common divisor, computed by a subresultant remainder
/// sequence over Z. gcd(0, 0) = 0.
Poly gcd(const Poly& p, const Poly& q);

struct ExtGcd {
  Poly g;
  Poly u;
  Poly v;
};

/// u*p + v*q = g with g = gcd(p, q). When q != 0 the cofactor u is reduced
/// modulo q/g, so deg u < deg q - deg g and deg v < deg p - deg g.
ExtGcd ext_gcd(const Poly& p, const Poly& q);

}  // namespace regula

#endif  // REGULA_POLY_HPP
