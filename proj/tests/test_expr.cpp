#include <doctest.h>

#include "regula/errors.hpp"
#include "support.hpp"

using namespace regula;
using regula::test::px;
using regula::test::X;

TEST_CASE("parsing") {
  CHECK(X("(x^3-1)/(x^2-1)") == RatFunc::normalize(px("x^2+x+1"), px("x+1")));
  CHECK(X("0").is_zero());
  CHECK(X("0").den().is_one());
  CHECK(X("1/2*x^2 + x") == RatFunc::normalize(px("x^2+2*x"), px("2")));
  CHECK(X("-x^2") == RatFunc(-1) * X("x*x"));
  CHECK(X("(-x)^2") == X("x^2"));
  CHECK(X("2^-1") == X("1/2"));
  CHECK(X("x^-2") == X("1/(x*x)"));
  CHECK(X("0.25*x") == X("x/4"));
  CHECK(X("2*3^2") == RatFunc(18));
  CHECK(X("1/2/3") == X("1/6"));
  CHECK(X("1 - 2 - 3") == RatFunc(-4));
  CHECK(X(" ( x + 1 ) * ( x - 1 ) ") == X("x^2-1"));
  CHECK(parse_expr("s/(s+1)", "s").var() == "s");
}

TEST_CASE("parse errors carry positions") {
  auto position = [](const std::string& src) {
    try {
      X(src);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1L;
  };
  CHECK(position("x +") == 3);
  CHECK(position("(x+1") == 4);
  CHECK(position("x ^ y") == 4);
  CHECK(position("2*y") == 2);
  CHECK(position("x)") == 1);
  CHECK(position("") == 0);
  CHECK(position("x^1.5") == 3);
  CHECK_THROWS_AS(X("1/(x-x)"), AlgebraError);
  CHECK_THROWS_AS(X("0^-1"), AlgebraError);
  CHECK_THROWS_AS(parse_expr("x+1", "s"), ParseError);
}

TEST_CASE("printing") {
  CHECK(print_expr(X("(x^2-1)*(x^5+x^2+2)/((x^3+1)*(x^5-x^2+2))")) ==
        "(x^6-x^5+x^3-x^2+2*x-2)/(x^7-x^6+x^5-x^4+x^3+x^2-2*x+2)");
  CHECK(print_expr(RatFunc(0)) == "0");
  CHECK(print_expr(X("1/(x+1)")) == "1/(x+1)");
  CHECK(print_expr(X("1/2*x^2+x")) == "1/2*x^2+x");
  CHECK(print_expr(X("-x/(x+1)")) == "-x/(x+1)");
  CHECK(print_expr(X("3/x^2")) == "3/x^2");
  CHECK(print_expr(X("-1/3")) == "-1/3");
  CHECK(print_expr(X("(2*x-4)/(3*x+1)")) == "(2/3*x-4/3)/(x+1/3)");
  CHECK(print_poly(px("x^3-x")) == "x^3-x");
}

TEST_CASE("property: print then parse is the identity") {
  std::mt19937_64 rng(51);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 4);
  auto poly = [&](int degree) {
    std::vector<Rat> c(static_cast<std::size_t>(degree) + 1);
    for (auto& v : c) v = Rat(mpz_class(num(rng)), mpz_class(den(rng)));
    return Poly(std::move(c));
  };
  for (int i = 0; i < 500; ++i) {
    Poly d = poly(static_cast<int>(rng() % 5));
    if (d.is_zero()) d = Poly::constant(Rat(1));
    const RatFunc f = RatFunc::normalize(poly(static_cast<int>(rng() % 5)), d);
    const std::string text = print_expr(f);
    CHECK_MESSAGE(X(text) == f, text);
    CHECK(print_expr(X(text)) == text);
  }
}
