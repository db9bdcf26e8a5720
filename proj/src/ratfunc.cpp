#include "regula/ratfunc.hpp"

#include <optional>

#include "regula/errors.hpp"

namespace regula {

RatFunc::RatFunc(const Rat& c) : num_(Poly::constant(c)), den_(Poly::constant(Rat(1))) {}

RatFunc::RatFunc(Poly p) : num_(std::move(p)), den_(Poly::constant(Rat(1), num_.variable())) {}

RatFunc RatFunc::normalize(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw AlgebraError("rational function with zero denominator");
  const std::string var = unify_variable(num, den);
  if (num.is_zero()) return RatFunc(Poly({}, var), Poly::constant(Rat(1), var), 0);
  const Poly g = gcd(num, den);
  Poly n = exact_div(num, g).with_variable(var);
  Poly d = exact_div(den, g).with_variable(var);
  const Rat inv = d.lead().inverse();
  n *= inv;
  d *= inv;
  return RatFunc(std::move(n), std::move(d), 0);
}

RatFunc RatFunc::variable(std::string name) { return RatFunc(Poly::identity(std::move(name))); }

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw AlgebraError("division by zero");
  return normalize(den_, num_);
}

RatFunc RatFunc::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  const auto e = static_cast<unsigned>(exponent);
  return RatFunc(num_.pow(e), den_.pow(e), 0);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, 0); }

RatFunc& RatFunc::operator+=(const RatFunc& rhs) {
  if (den_ == rhs.den_) return *this = normalize(num_ + rhs.num_, den_);
  return *this = normalize(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

RatFunc& RatFunc::operator-=(const RatFunc& rhs) {
  if (den_ == rhs.den_) return *this = normalize(num_ - rhs.num_, den_);
  return *this = normalize(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
}

RatFunc& RatFunc::operator*=(const RatFunc& rhs) {
  // Cross-cancel first so the products stay reduced.
  const Poly g1 = gcd(num_, rhs.den_);
  const Poly g2 = gcd(rhs.num_, den_);
  if (num_.is_zero() || rhs.num_.is_zero()) {
    const std::string var = unify_variable(num_, rhs.num_);
    return *this = RatFunc(Poly({}, var));
  }
  return *this = normalize(exact_div(num_, g1) * exact_div(rhs.num_, g2),
                           exact_div(den_, g2) * exact_div(rhs.den_, g1));
}

RatFunc& RatFunc::operator/=(const RatFunc& rhs) {
  if (rhs.is_zero()) throw AlgebraError("division by zero");
  return *this *= rhs.inverse();
}

std::string common_variable(std::initializer_list<const RatFunc*> fs, std::string fallback) {
  std::optional<std::string> var;
  for (const RatFunc* f : fs) {
    if (f->is_constant()) continue;
    std::string v = f->var();
    if (var && *var != v) throw VariableMismatch("variable mismatch: '" + *var + "' vs '" + v + "'");
    var = std::move(v);
  }
  return var.value_or(std::move(fallback));
}

RatFunc rf_field_op(const RatFunc& lhs, const RatFunc& rhs, FieldOp op) {
  switch (op) {
    case FieldOp::Add: return lhs + rhs;
    case FieldOp::Sub: return lhs - rhs;
    case FieldOp::Mul: return lhs * rhs;
    case FieldOp::Div: return lhs / rhs;
  }
  throw PreconditionError("unknown field operation");
}

}  // namespace regula
