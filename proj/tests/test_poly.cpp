#include <doctest.h>

#include "regula/errors.hpp"
#include "support.hpp"

using namespace regula;
using regula::test::px;
using regula::test::random_poly;

TEST_CASE("polynomial basics") {
  const Poly p = px("2*x^3 - x + 5");
  CHECK(p.degree() == 3);
  CHECK(p.lead() == Rat(2));
  CHECK(p.coeff(1) == Rat(-1));
  CHECK(p.coeff(7) == Rat(0));
  CHECK(p.eval(Rat(2)) == Rat(19));
  CHECK(Poly().degree() == Poly::kZeroDegree);
  CHECK((p - p).is_zero());
  CHECK(p.monic().lead() == Rat(1));
  CHECK(px("x+1").pow(3) == px("x^3+3*x^2+3*x+1"));
}

TEST_CASE("constants combine with any indeterminate") {
  const Poly s = Poly::identity("s");
  const Poly two = Poly::constant(Rat(2));
  CHECK((s + two).variable() == "s");
  CHECK((two * s).variable() == "s");
  CHECK_THROWS_AS(s + Poly::identity("x"), VariableMismatch);
}

TEST_CASE("division with remainder") {
  const auto [q, r] = divmod(px("x^3-1"), px("x^2-1"));
  CHECK(q == px("x"));
  CHECK(r == px("x-1"));
  CHECK_THROWS_AS(divmod(px("x"), Poly()), AlgebraError);
  CHECK(exact_div(px("x^2-1"), px("x+1")) == px("x-1"));
  CHECK_THROWS_AS(exact_div(px("x^2+1"), px("x+1")), AlgebraError);
  CHECK(divides(px("x-1"), px("x^3-1")));
  CHECK_FALSE(divides(px("x+2"), px("x^3-1")));
}

TEST_CASE("gcd examples") {
  CHECK(gcd(px("x^2-1"), px("x^3-1")) == px("x-1"));
  CHECK(gcd(px("3*x^2+6"), Poly()) == px("x^2+2"));
  CHECK(gcd(Poly::constant(Rat(1)), px("x^4+x")) == px("1"));
  CHECK(gcd(Poly(), Poly()).is_zero());
}

TEST_CASE("extended gcd examples") {
  {
    const auto [g, u, v] = ext_gcd(px("x+1"), px("x^2+x+1"));
    CHECK(g == px("1"));
    CHECK(u == px("-x"));
    CHECK(v == px("1"));
  }
  {
    const auto [g, u, v] = ext_gcd(px("2*x+4"), Poly());
    CHECK(g == px("x+2"));
    CHECK(u == Poly::constant(Rat(mpz_class(1), mpz_class(2))));
    CHECK(v.is_zero());
  }
  {
    const Poly p = px("x^2-1"), q = px("x^3-1");
    const auto [g, u, v] = ext_gcd(p, q);
    CHECK(g == px("x-1"));
    CHECK(u * p + v * q == g);
  }
}

TEST_CASE("property: divmod reconstructs the dividend") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const Poly a = random_poly(rng, static_cast<int>(rng() % 7));
    const Poly b = random_poly(rng, static_cast<int>(rng() % 4));
    const auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    CHECK((r.is_zero() || r.degree() < b.degree()));
  }
}

TEST_CASE("property: gcd recovers a planted common factor") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) {
    const Poly c = random_poly(rng, 1 + static_cast<int>(rng() % 3));
    const Poly a = random_poly(rng, static_cast<int>(rng() % 4)) * c;
    const Poly b = random_poly(rng, static_cast<int>(rng() % 4)) * c;
    const Poly g = gcd(a, b);
    CHECK(g.lead() == Rat(1));
    CHECK(divides(g, a));
    CHECK(divides(g, b));
    CHECK(divides(c, g));
    // the cofactors are coprime
    CHECK(gcd(exact_div(a, g), exact_div(b, g)).is_one());
  }
}

TEST_CASE("property: extended gcd identity and degree bound") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    const Poly p = random_poly(rng, static_cast<int>(rng() % 6));
    const Poly q = random_poly(rng, 1 + static_cast<int>(rng() % 5));
    const auto [g, u, v] = ext_gcd(p, q);
    CHECK(u * p + v * q == g);
    CHECK(g == gcd(p, q));
    if (!u.is_zero() && q.degree() - g.degree() > 0) CHECK(u.degree() < q.degree() - g.degree());
  }
}

TEST_CASE("pseudo remainder and primitive part") {
  const Poly a = px("x^3+2*x+1");
  const Poly b = px("3*x+1");
  const Poly prem = pseudo_remainder(a, b);
  // lc(b)^(deg a - deg b + 1) * a = q*b + prem
  const auto [q, r] = divmod(Rat(27) * a, b);
  CHECK(prem == r);
  CHECK(primitive_part(px("6*x^2+4*x-2")) == px("3*x^2+2*x-1"));
}
