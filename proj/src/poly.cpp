#include "regula/poly.hpp"

#include <algorithm>

#include "regula/errors.hpp"

namespace regula {

Poly::Poly(std::vector<Rat> coeffs, std::string variable)
    : coeffs_(std::move(coeffs)), var_(std::move(variable)) {
  trim();
}

Poly Poly::constant(const Rat& c, std::string variable) {
  return Poly(std::vector<Rat>{c}, std::move(variable));
}

Poly Poly::monomial(const Rat& c, int power, std::string variable) {
  if (power < 0) throw AlgebraError("negative monomial power");
  std::vector<Rat> coeffs(static_cast<std::size_t>(power) + 1);
  coeffs.back() = c;
  return Poly(std::move(coeffs), std::move(variable));
}

Poly Poly::identity(std::string variable) { return monomial(Rat(1), 1, std::move(variable)); }

bool Poly::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == Rat(1); }

Rat Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rat();
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rat& Poly::lead() const {
  if (coeffs_.empty()) throw AlgebraError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Poly Poly::with_variable(std::string variable) const {
  Poly r = *this;
  r.var_ = std::move(variable);
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly r = *this;
  r *= lead().inverse();
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Rat Poly::eval(const Rat& at) const {
  Rat acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Poly Poly::pow(unsigned exponent) const {
  Poly result = constant(Rat(1), var_);
  Poly base = *this;
  for (unsigned e = exponent; e != 0; e >>= 1) {
    if (e & 1u) result *= base;
    if (e > 1) base *= base;
  }
  return result;
}

std::string unify_variable(const Poly& lhs, const Poly& rhs) {
  if (lhs.is_constant()) return rhs.variable();
  if (!rhs.is_constant() && lhs.variable() != rhs.variable())
    throw VariableMismatch("variable mismatch: '" + lhs.variable() + "' vs '" + rhs.variable() + "'");
  return lhs.variable();
}

Poly& Poly::operator+=(const Poly& rhs) {
  var_ = unify_variable(*this, rhs);
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  var_ = unify_variable(*this, rhs);
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
  var_ = unify_variable(*this, rhs);
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rat> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rat& rhs) {
  if (rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

bool operator==(const Poly& lhs, const Poly& rhs) {
  if (lhs.coeffs_ != rhs.coeffs_) return false;
  return lhs.is_constant() || lhs.var_ == rhs.var_;
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

DivMod divmod(const Poly& dividend, const Poly& divisor) {
  if (divisor.is_zero()) throw AlgebraError("polynomial division by zero");
  const std::string var = unify_variable(dividend, divisor);
  const int dd = divisor.degree();
  if (dividend.degree() < dd) return {Poly({}, var), dividend.with_variable(var)};

  std::vector<Rat> rem(dividend.coeffs().begin(), dividend.coeffs().end());
  std::vector<Rat> quo(static_cast<std::size_t>(dividend.degree() - dd) + 1);
  const Rat inv_lead = divisor.lead().inverse();
  const auto dc = divisor.coeffs();
  for (int k = dividend.degree(); k >= dd; --k) {
    const Rat factor = rem[static_cast<std::size_t>(k)] * inv_lead;
    if (factor.is_zero()) continue;
    quo[static_cast<std::size_t>(k - dd)] = factor;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k - dd + j)] -= factor * dc[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {Poly(std::move(quo), var), Poly(std::move(rem), var)};
}

Poly operator%(const Poly& dividend, const Poly& divisor) { return divmod(dividend, divisor).remainder; }

Poly exact_div(const Poly& dividend, const Poly& divisor) {
  auto [q, r] = divmod(dividend, divisor);
  if (!r.is_zero()) throw AlgebraError("polynomial division is not exact");
  return q;
}

bool divides(const Poly& divisor, const Poly& dividend) {
  if (divisor.is_zero()) return dividend.is_zero();
  return (dividend % divisor).is_zero();
}

Poly pseudo_remainder(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw AlgebraError("pseudo-remainder by zero");
  if (a.degree() < b.degree()) return a;
  const int delta = a.degree() - b.degree();
  return (a * b.lead().pow(delta + 1)) % b;
}

Poly primitive_part(const Poly& p) {
  if (p.is_zero()) return p;
  mpz_class den = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.denominator().get_mpz_t());
  std::vector<mpz_class> ints;
  ints.reserve(p.coeffs().size());
  mpz_class content = 0;
  for (const auto& c : p.coeffs()) {
    mpz_class v = c.numerator() * (den / c.denominator());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  if (sgn(ints.back()) < 0) content = -content;
  std::vector<Rat> out;
  out.reserve(ints.size());
  for (const auto& v : ints) out.emplace_back(mpz_class(v / content));
  return Poly(std::move(out), p.variable());
}

Poly gcd(const Poly& p, const Poly& q) {
  const std::string var = unify_variable(p, q);
  if (p.is_zero()) return q.monic().with_variable(var);
  if (q.is_zero()) return p.monic().with_variable(var);

  Poly a = primitive_part(p);
  Poly b = primitive_part(q);
  if (a.degree() < b.degree()) std::swap(a, b);
  if (b.degree() == 0) return Poly::constant(Rat(1), var);

  // Subresultant PRS (Collins/Brown): every division below is exact over Z.
  Rat g(1);
  Rat h(1);
  while (true) {
    const int delta = a.degree() - b.degree();
    Poly r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    if (r.degree() == 0) return Poly::constant(Rat(1), var);
    a = std::move(b);
    b = r * (g * h.pow(delta)).inverse();
    g = a.lead();
    h = delta == 0 ? h : g.pow(delta) / h.pow(delta - 1);
  }
  return primitive_part(b).monic().with_variable(var);
}

ExtGcd ext_gcd(const Poly& p, const Poly& q) {
  const std::string var = unify_variable(p, q);
  if (p.is_zero() && q.is_zero()) throw AlgebraError("extended gcd of two zero polynomials");

  Poly r0 = p.with_variable(var), r1 = q.with_variable(var);
  Poly s0 = Poly::constant(Rat(1), var), s1({}, var);
  Poly t0({}, var), t1 = Poly::constant(Rat(1), var);
  while (!r1.is_zero()) {
    auto [quo, rem] = divmod(r0, r1);
    r0 = std::exchange(r1, std::move(rem));
    s0 = std::exchange(s1, s0 - quo * s1);
    t0 = std::exchange(t1, t0 - quo * t1);
  }
  const Rat inv = r0.lead().inverse();
  ExtGcd out{r0 * inv, s0 * inv, t0 * inv};
  if (!q.is_zero() && !p.is_zero()) {
    const Poly q_red = exact_div(q, out.g);
    out.u = out.u % q_red;
    out.v = exact_div(out.g - out.u * p, q);
  }
  return out;
}

}  // namespace regula
