#include "regula/rational.hpp"

#include <cctype>

#include "regula/errors.hpp"

namespace regula {

Rat::Rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw AlgebraError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw AlgebraError("empty rational literal");
  const auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    const std::size_t scale = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+") throw AlgebraError("bad decimal literal '" + s + "'");
    mpz_class num;
    if (num.set_str(digits, 10) != 0) throw AlgebraError("bad decimal literal '" + s + "'");
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, scale);
    return Rat(num, den);
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw AlgebraError("bad rational literal '" + s + "'");
  if (q.get_den() == 0) throw AlgebraError("rational with zero denominator");
  return Rat(q);
}

Rat Rat::abs() const {
  Rat r;
  r.v_ = ::abs(v_);
  return r;
}

Rat Rat::inverse() const {
  if (is_zero()) throw AlgebraError("division by zero");
  Rat r;
  r.v_ = 1 / v_;
  r.v_.canonicalize();
  return r;
}

Rat Rat::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Rat result(1);
  Rat base = *this;
  for (unsigned e = static_cast<unsigned>(exponent); e != 0; e >>= 1) {
    if (e & 1u) result *= base;
    if (e > 1) base *= base;
  }
  return result;
}

Rat Rat::operator-() const {
  Rat r;
  r.v_ = -v_;
  return r;
}

Rat& Rat::operator+=(const Rat& rhs) {
  v_ += rhs.v_;
  return *this;
}

Rat& Rat::operator-=(const Rat& rhs) {
  v_ -= rhs.v_;
  return *this;
}

Rat& Rat::operator*=(const Rat& rhs) {
  v_ *= rhs.v_;
  return *this;
}

Rat& Rat::operator/=(const Rat& rhs) {
  if (rhs.is_zero()) throw AlgebraError("division by zero");
  v_ /= rhs.v_;
  return *this;
}

}  // namespace regula
