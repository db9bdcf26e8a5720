#ifndef REGULA_RATFUNC_HPP
#define REGULA_RATFUNC_HPP

#include <initializer_list>
#include <string>

#include "regula/poly.hpp"

namespace regula {

/// Element of Q(var) held in canonical form: gcd(num, den) = 1 and den
/// monic. Two values are equal exactly when their canonical forms are.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Poly::constant(Rat(1))) {}
  RatFunc(const Rat& c);    // NOLINT(google-explicit-constructor)
  RatFunc(long c) : RatFunc(Rat(c)) {}  // NOLINT(google-explicit-constructor)
  explicit RatFunc(Poly p);

  /// Canonical representative of num/den; throws AlgebraError if den = 0.
  static RatFunc normalize(const Poly& num, const Poly& den);
  static RatFunc variable(std::string name);

  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }
  std::string var() const { return unify_variable(num_, den_); }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.degree() == 0; }
  bool is_constant() const noexcept { return is_polynomial() && num_.is_constant(); }
  bool is_one() const { return is_polynomial() && num_.is_one(); }
  bool is_proper() const { return num_.degree() <= den_.degree(); }

  RatFunc inverse() const;
  RatFunc pow(int exponent) const;
  RatFunc operator-() const;

  RatFunc& operator+=(const RatFunc& rhs);
  RatFunc& operator-=(const RatFunc& rhs);
  RatFunc& operator*=(const RatFunc& rhs);
  RatFunc& operator/=(const RatFunc& rhs);

  friend RatFunc operator+(RatFunc lhs, const RatFunc& rhs) { return lhs += rhs; }
  friend RatFunc operator-(RatFunc lhs, const RatFunc& rhs) { return lhs -= rhs; }
  friend RatFunc operator*(RatFunc lhs, const RatFunc& rhs) { return lhs *= rhs; }
  friend RatFunc operator/(RatFunc lhs, const RatFunc& rhs) { return lhs /= rhs; }
  friend bool operator==(const RatFunc& lhs, const RatFunc& rhs) {
    return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  }

 private:
  RatFunc(Poly num, Poly den, int) : num_(std::move(num)), den_(std::move(den)) {}

  Poly num_;
  Poly den_;
};

/// Indeterminate shared by the non-constant arguments, `fallback` if none.
/// Throws VariableMismatch on disagreement.
std::string common_variable(std::initializer_list<const RatFunc*> fs, std::string fallback = "x");

enum class FieldOp { Add, Sub, Mul, Div };

/// Exact field arithmetic on canonical forms.
RatFunc rf_field_op(const RatFunc& lhs, const RatFunc& rhs, FieldOp op);

}  // namespace regula

#endif  // REGULA_RATFUNC_HPP
