#ifndef REGULA_RATIONAL_HPP
#define REGULA_RATIONAL_HPP

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace regula {

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator (zero is 0/1).
class Rat {
 public:
  Rat() = default;
  Rat(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rat(const mpz_class& integer) : v_(integer) {}
  Rat(const mpz_class& num, const mpz_class& den);
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// Parses "12", "-3/4" or a decimal literal such as "0.125".
  static Rat parse(std::string_view text);

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  const mpq_class& value() const noexcept { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  Rat abs() const;
  Rat inverse() const;
  Rat pow(int exponent) const;

  std::string to_string() const { return v_.get_str(); }

  Rat operator-() const;
  Rat& operator+=(const Rat& rhs);
  Rat& operator-=(const Rat& rhs);
  Rat& operator*=(const Rat& rhs);
  Rat& operator/=(const Rat& rhs);

  friend Rat operator+(Rat lhs, const Rat& rhs) { return lhs += rhs; }
  friend Rat operator-(Rat lhs, const Rat& rhs) { return lhs -= rhs; }
  friend Rat operator*(Rat lhs, const Rat& rhs) { return lhs *= rhs; }
  friend Rat operator/(Rat lhs, const Rat& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rat& lhs, const Rat& rhs) { return cmp(lhs.v_, rhs.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& lhs, const Rat& rhs) {
    const int c = cmp(lhs.v_, rhs.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

}  // namespace regula

#endif  // REGULA_RATIONAL_HPP
