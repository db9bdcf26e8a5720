#include <doctest.h>

#include "regula/errors.hpp"
#include "regula/feedback.hpp"
#include "support.hpp"

using namespace regula;
using regula::test::random_poly;
using regula::test::S;
using regula::test::X;

namespace {

constexpr RingId kPoly = RingId::PolyRing;
constexpr RingId kNoLin = RingId::NoLinearSubring;
constexpr RingId kSP = RingId::StableProper;

const RatFunc& ex_plant() {
  static const RatFunc p = X("(x^3-1)/(x^2-1)");
  return p;
}
const RatFunc& ex_controller() {
  static const RatFunc c = X("(x^2-1)/(x^3+1)");
  return c;
}

}  // namespace

TEST_CASE("closed loop entries") {
  {
    const auto h = closed_loop(ex_plant(), ex_controller());
    CHECK(h.h11 == X("(x^3+1)/2"));
    CHECK(h.h22 == h.h11);
    CHECK(h.h12 == X("(x^4+x^2+1)/2"));
    CHECK(h.h21 == X("(x^2-1)/2"));
  }
  {
    const auto h = closed_loop(RatFunc(0), RatFunc(0));
    CHECK(h.h11.is_one());
    CHECK(h.h22.is_one());
    CHECK(h.h12.is_zero());
    CHECK(h.h21.is_zero());
  }
  {
    const auto h = closed_loop(S("1/(s+1)"), S("-(s+1)/s"));
    CHECK(h.h11 == S("s/(s+1)"));
    CHECK(h.h12 == S("s/(s+1)^2"));
    CHECK(h.h21 == S("-1"));
  }
  CHECK(closed_loop(RatFunc(1), S("-(s+1)/s")).h11 == S("s/(2*s+1)"));
  CHECK_THROWS_AS(closed_loop(X("x"), X("1/x")), SingularLoop);
}

TEST_CASE("stabilization") {
  CHECK(stabilizes(kNoLin, ex_plant(), ex_controller()));
  CHECK_FALSE(stabilizes(kPoly, X("1/(x-1)"), RatFunc(0)));
  CHECK(first_unstable_entry(kPoly, X("1/(x-1)"), RatFunc(0)) == "h12");
  CHECK(stabilizes(kSP, S("1/(s+1)"), S("-(s+1)/s")));
  CHECK(stabilizes(kPoly, X("x"), RatFunc(0)));
  // p*c = 1/2 gives constant entries but h21 = 2c/(..) keeps the pole of c
  CHECK_FALSE(stabilizes(kSP, S("(s-1)/(s+1)"), S("(s+1)/(2*(s-1))")));
}

TEST_CASE("stabilizing pairs") {
  {
    const auto pair = pair_from_controller(kNoLin, ex_plant(), ex_controller());
    CHECK(pair.a == X("(x^3+1)/2"));
    CHECK(pair.b == X("(x^2-1)/2"));
    CHECK(pair.controller() == ex_controller());
    CHECK(check_pair(kNoLin, ex_plant(), pair.a, pair.b));
  }
  {
    const auto pair = pair_from_controller(kSP, S("1/(s+1)"), RatFunc(0));
    CHECK(pair.a.is_one());
    CHECK(pair.b.is_zero());
  }
  {
    const auto pair = pair_from_controller(kSP, S("1/(s+1)"), S("-(s+1)/s"));
    CHECK(pair.a == S("s/(s+1)"));
    CHECK(pair.b == S("-1"));
  }
  CHECK_THROWS_AS(pair_from_controller(kPoly, X("1/(x-1)"), RatFunc(0)), PreconditionError);
  CHECK(check_pair(kPoly, X("x^2"), RatFunc(1), RatFunc(0)));
  CHECK_FALSE(check_pair(kPoly, X("x"), RatFunc(0), X("-1/x")));
  // printed pair of the lowered problem: a - p*b is not 1
  const RatFunc p0 = ex_plant() / X("x^5-x^2+2");
  CHECK_FALSE(check_pair(kNoLin, p0, X("(x^3+1)/2"), X("(x^2-1)/2")));
  CHECK(check_pair(kNoLin, p0, X("(x^3+1)*(x^5-x^2+2)/4"), X("(x^2-1)*(x^5+x^2+2)*(x^5-x^2+2)/4")));
}

TEST_CASE("parametrization of stabilizing controllers") {
  const auto pair = pair_from_controller(kNoLin, ex_plant(), ex_controller());
  CHECK(parametrize_stabilizing(kNoLin, ex_plant(), pair, 0, 0) == ex_controller());
  const RatFunc c1 = parametrize_stabilizing(kNoLin, ex_plant(), pair, 1, 0);
  CHECK(c1 == X("(x^6+2*x^3+2*x^2-1)/((x^3+1)*(x^4+x^2+3))"));
  CHECK(stabilizes(kNoLin, ex_plant(), c1));
  CHECK_THROWS_AS(parametrize_stabilizing(kNoLin, ex_plant(), pair, X("x"), 0), PreconditionError);
  // a + q1*p*a^2 = 0 for q1 = -1/(p*a)
  CHECK_THROWS_AS(parametrize_stabilizing(kPoly, X("x"), {RatFunc(1), RatFunc(0), kPoly}, X("-1/x"), 0),
                  PreconditionError);
  CHECK_THROWS_AS(parametrize_stabilizing(kPoly, RatFunc(1), {RatFunc(1), RatFunc(0), kPoly}, RatFunc(-1), 0),
                  PreconditionError);
}

TEST_CASE("synthesis examples") {
  {
    const auto s = synthesize_stabilizing(kPoly, X("1/(x-1)"));
    REQUIRE(s.ok());
    CHECK(stabilizes(kPoly, X("1/(x-1)"), s->controller));
    CHECK_FALSE(s->pair.a.is_zero());
  }
  {
    const auto s = synthesize_stabilizing(kNoLin, ex_plant());
    REQUIRE(s.ok());
    CHECK(s->pair.a == X("(x^3+1)/2"));
    CHECK(s->pair.b == X("(x^2-1)/2"));
  }
  for (RingId ring : {kPoly, kNoLin}) {
    const auto s = synthesize_stabilizing(ring, X("x^2+3"));
    REQUIRE(s.ok());
    CHECK(s->controller.is_zero());
    CHECK(s->pair.a.is_one());
  }
  {
    const auto s = synthesize_stabilizing(kSP, S("(s+2)/((s-1)*(s-3))"));
    REQUIRE(s.ok());
    CHECK(stabilizes(kSP, S("(s+2)/((s-1)*(s-3))"), s->controller));
  }
  {
    const auto s = synthesize_stabilizing(kSP, S("s^2/(s-1)"));
    REQUIRE(s.ok());
    CHECK(stabilizes(kSP, S("s^2/(s-1)"), s->controller));
  }
}

TEST_CASE("property: synthesized controllers stabilize random plants") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 60; ++i) {
    const RatFunc p = RatFunc::normalize(random_poly(rng, static_cast<int>(rng() % 5)),
                                         random_poly(rng, static_cast<int>(rng() % 5)));
    const auto s = synthesize_stabilizing(kPoly, p);
    REQUIRE(s.ok());
    CHECK(check_pair(kPoly, p, s->pair.a, s->pair.b));
    CHECK(stabilizes(kPoly, p, s->controller));

    const RatFunc ps = RatFunc::normalize(random_poly(rng, static_cast<int>(rng() % 4), "s"),
                                          random_poly(rng, static_cast<int>(rng() % 4), "s"));
    const auto t = synthesize_stabilizing(kSP, ps);
    REQUIRE(t.ok());
    CHECK(check_pair(kSP, ps, t->pair.a, t->pair.b));
    CHECK(stabilizes(kSP, ps, t->controller));
  }
}

TEST_CASE("property: every parametrized controller stabilizes") {
  std::mt19937_64 rng(42);
  const auto& basis = ring_oracle(kSP).basis(3, "s");
  const RatFunc p = S("(s-2)/((s-1)*(s+3))");
  const auto s = synthesize_stabilizing(kSP, p);
  REQUIRE(s.ok());
  for (int i = 0; i < 40; ++i) {
    const RatFunc q1 = RatFunc(Rat(static_cast<long>(rng() % 5) - 2)) * basis[rng() % basis.size()];
    const RatFunc q2 = RatFunc(Rat(static_cast<long>(rng() % 5) - 2)) * basis[rng() % basis.size()];
    try {
      const RatFunc c = parametrize_stabilizing(kSP, p, s->pair, q1, q2);
      CHECK(stabilizes(kSP, p, c));
    } catch (const PreconditionError&) {
      // excluded (q1, q2) with a vanishing denominator
    }
  }
}
