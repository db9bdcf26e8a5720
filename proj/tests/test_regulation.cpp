#include <doctest.h>

#include "regula/errors.hpp"
#include "regula/regulation.hpp"
#include "support.hpp"

using namespace regula;
using regula::test::S;
using regula::test::X;

namespace {

constexpr RingId kPoly = RingId::PolyRing;
constexpr RingId kNoLin = RingId::NoLinearSubring;
constexpr RingId kSP = RingId::StableProper;

struct Example {
  RatFunc p = X("(x^3-1)/(x^2-1)");
  RatFunc c = X("(x^2-1)/(x^3+1)");
  RatFunc theta = X("x^5-x^2+2");
  RatFunc c_r = X("(x^2-1)*(x^5+x^2+2)/((x^3+1)*(x^5-x^2+2))");
  Generator gen = Generator::make(kNoLin, X("1/(x^5-x^2+2)"));
  StabilizingPair pair{X("(x^3+1)/2"), X("(x^2-1)/2"), kNoLin};
};

const Example& ex() {
  static const Example e;
  return e;
}

}  // namespace

TEST_CASE("generator representations") {
  CHECK(ex().gen.rep.gamma.is_one());
  CHECK(ex().gen.rep.theta == ex().theta);
  CHECK(ex().gen.weakly_coprime());
  const auto g = Generator::from_rep(FractionRep::make(kNoLin, X("x^3-1"), X("x^2-1")));
  CHECK_FALSE(g.weakly_coprime());
  CHECK(g.value == X("(x^2+x+1)/(x+1)"));
}

TEST_CASE("regulation predicates") {
  const auto& e = ex();
  CHECK(is_regulating(kNoLin, e.p, e.c_r, e.gen));
  const auto h = closed_loop(e.p, e.c_r);
  CHECK(e.gen.value * h.h11 == X("(x^3+1)/4"));
  CHECK(e.gen.value * h.h12 == X("(x^4+x^2+1)/4"));
  CHECK(is_robustly_regulating(kNoLin, e.p, e.c_r, e.gen));
  CHECK_FALSE(is_regulating(kNoLin, e.p, e.c, e.gen));
  CHECK_FALSE(is_robustly_regulating(kNoLin, e.p, e.c, e.gen));
  const Generator stable = Generator::make(kNoLin, X("x^2+1"));
  CHECK(is_regulating(kNoLin, e.p, e.c, stable));
  CHECK_FALSE(is_robustly_regulating(kPoly, X("x"), RatFunc(0), Generator::make(kPoly, X("1/(x+2)"))));
}

TEST_CASE("regulation witness") {
  const auto& e = ex();
  const auto w = regulation_witness(kNoLin, e.p, e.c_r, e.gen);
  CHECK(w.alpha == X("(x^3+1)/4"));
  CHECK(w.beta == X("-(x^4+x^2+1)/4"));
  CHECK(w.alpha + w.beta * e.c_r == e.gen.value);
  CHECK_THROWS_AS(regulation_witness(kNoLin, e.p, e.c, e.gen), PreconditionError);
  const Generator stable = Generator::make(kNoLin, X("x^2"));
  const auto t = regulation_witness(kNoLin, e.p, e.c, stable);
  CHECK(t.alpha == X("x^2*(x^3+1)/2"));
}

TEST_CASE("internal model by direct search") {
  const auto& e = ex();
  const auto w = internal_model_witness(kNoLin, e.c_r, e.gen);
  REQUIRE(w.ok());
  CHECK(w->alpha + w->beta * e.c_r == e.gen.value);
  CHECK(internal_model_witness(kNoLin, e.c, e.gen).status != SearchStatus::Found);
}

TEST_CASE("denominator model") {
  const auto& e = ex();
  {
    const auto d = check_denominator_model(kNoLin, e.c_r, e.theta);
    REQUIRE(d.ok());
    CHECK(d->alpha == X("(x^3+1)/4"));
    CHECK(d->beta == X("-(x^4+x^2+1)/4"));
  }
  {
    const auto d = check_denominator_model(kNoLin, e.c, RatFunc(1));
    REQUIRE(d.ok());
    CHECK(d->alpha.is_one());
    CHECK(d->beta.is_zero());
  }
  {
    const RatFunc theta = S("s/(s+1)");
    const RatFunc c = S("-(s+1)/s");
    const auto d = check_denominator_model(kSP, c, theta);
    REQUIRE(d.ok());
    CHECK((theta * (d->alpha + d->beta * c)).is_one());
  }
  CHECK(check_denominator_model(kNoLin, e.c, e.theta).status != SearchStatus::Found);
  CHECK_THROWS_AS(check_denominator_model(kNoLin, e.c, X("x")), PreconditionError);
}

TEST_CASE("stable plants") {
  const auto& e = ex();
  const RatFunc bp = e.pair.b * e.p;
  CHECK(bp == X("(x^3-1)/2"));
  const auto d = controller_from_stable_witness(kNoLin, bp, e.gen, X("1/2"), X("x^2"));
  CHECK(d.controller == X("2*x^2/(x^5-x^2+2)"));
  {
    const auto s = solve_stable_plant(kNoLin, bp, e.gen);
    REQUIRE(s.ok());
    CHECK(is_robustly_regulating(kNoLin, bp, s->controller, e.gen));
  }
  CHECK(solve_stable_plant(kPoly, RatFunc(0), Generator::make(kPoly, X("1/(x+1)"))).status ==
        SearchStatus::Unsolvable);
  {
    const auto s = solve_stable_plant(kPoly, X("x"), Generator::make(kPoly, X("x+1")));
    REQUIRE(s.ok());
    CHECK(s->controller.is_zero());
  }
  // an alpha of zero is repaired: beta*p = -1 with p = -1
  {
    const Generator g = Generator::make(kSP, S("1/s"));
    const auto d = controller_from_stable_witness(kSP, RatFunc(-1), g, RatFunc(0), RatFunc(1));
    CHECK_FALSE(d.alpha.is_zero());
    CHECK(is_robustly_regulating(kSP, RatFunc(-1), d.controller, g));
  }
  CHECK_THROWS_AS(controller_from_stable_witness(kNoLin, bp, e.gen, X("1"), X("x^2")), PreconditionError);
  CHECK_THROWS_AS(solve_stable_plant(kNoLin, e.p, e.gen), PreconditionError);
}

TEST_CASE("composition and sub-parametrization") {
  const auto& e = ex();
  const RatFunc c_i = X("2*x^2/(x^5-x^2+2)");
  CHECK(compose_regulator(kNoLin, e.p, e.c, e.pair, c_i) == e.c_r);
  CHECK(compose_regulator(kNoLin, e.p, e.c, e.pair, 0) == e.c);
  CHECK_THROWS_AS(compose_regulator(kNoLin, e.p, X("x^2"), e.pair, c_i), PreconditionError);
  const RatFunc ct = subparametrize(kNoLin, e.p, e.pair, 1);
  CHECK(stabilizes(kNoLin, e.p, ct));
  CHECK(closed_loop(e.p, ct).h11 == e.pair.a * (RatFunc(1) + e.pair.b * e.p));
  CHECK(closed_loop(e.p, ct).h11 == X("(x+1)^2*(x^2-x+1)^2/4"));
  for (int k = -3; k <= 3; ++k) {
    const RatFunc q = RatFunc(k) * X("x^3+x^2");
    const RatFunc cq = subparametrize(kNoLin, e.p, e.pair, q);
    CHECK(stabilizes(kNoLin, e.p, cq));
    CHECK(closed_loop(e.p, cq).h11 == e.pair.a * (RatFunc(1) + e.pair.b * e.p * q));
  }
}

TEST_CASE("solvability") {
  const auto& e = ex();
  {
    const auto v = solvability(kNoLin, e.p, e.gen);
    REQUIRE(v.status == SolvabilityVerdict::Status::Solvable);
    CHECK(v.witness->q1.is_zero());
    CHECK(v.witness->q2.is_zero());
    CHECK(v.witness->alpha == X("1/2"));
    CHECK(v.witness->beta == X("x^2"));
    CHECK(reverify(kNoLin, e.p, e.gen, *v.witness));
  }
  {
    const auto v = solvability(kPoly, X("x"), Generator::make(kPoly, X("x^2")));
    CHECK(v.status == SolvabilityVerdict::Status::Solvable);
  }
  {
    const auto v = solvability(kPoly, RatFunc(0), Generator::make(kPoly, X("1/(x^2+1)")));
    CHECK(v.status == SolvabilityVerdict::Status::NotSolvable);
  }
  {
    // the plant has a zero where the generator has a pole
    const auto v = solvability(kPoly, X("x/(x+1)"), Generator::make(kPoly, X("1/x")));
    CHECK(v.status == SolvabilityVerdict::Status::NotSolvable);
  }
  {
    const auto v = solvability(kSP, S("1/(s+1)"), Generator::make(kSP, S("1/s")));
    REQUIRE(v.status == SolvabilityVerdict::Status::Solvable);
    CHECK(reverify(kSP, S("1/(s+1)"), Generator::make(kSP, S("1/s")), *v.witness));
  }
}

TEST_CASE("solvability with a weakly coprime generator") {
  {
    const RatFunc p = S("1/(s+1)");
    const Generator g = Generator::make(kSP, S("1/s"));
    CHECK(g.rep.gamma == S("1/(s+1)"));
    CHECK(g.rep.theta == S("s/(s+1)"));
    const auto d = solvability_weakly_coprime(kSP, p, g);
    REQUIRE(d.ok());
    CHECK(d->alpha.is_one());
    CHECK(d->beta == RatFunc(-1));
    CHECK(d->controller == S("-(s+1)/s"));
    CHECK(is_robustly_regulating(kSP, p, d->controller, g));
  }
  {
    const Generator g = Generator::make(kPoly, X("3"));
    const auto d = solvability_weakly_coprime(kPoly, X("1/(x-1)"), g);
    REQUIRE(d.ok());
    CHECK(d->beta.is_zero());
    CHECK(stabilizes(kPoly, X("1/(x-1)"), d->controller));
  }
  {
    const Generator g = Generator::from_rep(FractionRep::make(kPoly, X("1"), X("x-1")));
    const auto d = solvability_weakly_coprime(kPoly, X("1/(x-1)"), g);
    REQUIRE(d.ok());
    CHECK((d->alpha * X("x-1") - d->beta * X("1/(x-1)")).is_one());
    CHECK(is_robustly_regulating(kPoly, X("1/(x-1)"), d->controller, g));
  }
  CHECK(solvability_weakly_coprime(kPoly, X("x/(x+1)"), Generator::make(kPoly, X("1/x"))).status ==
        SearchStatus::Unsolvable);
  CHECK_THROWS_AS(solvability_weakly_coprime(
                      kNoLin, ex().p, Generator::from_rep(FractionRep::make(kNoLin, X("x^3-1"), X("x^2-1")))),
                  PreconditionError);
}

TEST_CASE("robust synthesis") {
  const auto& e = ex();
  {
    const auto r = synthesize_robust(kNoLin, e.p, e.gen);
    REQUIRE(r.design.ok());
    CHECK(r.design->controller == e.c_r);
    CHECK(r.design->inner_controller == X("2*x^2/(x^5-x^2+2)"));
  }
  {
    const RatFunc p = S("1/(s+1)");
    const Generator g = Generator::make(kSP, S("1/s"));
    const auto r = synthesize_robust(kSP, p, g);
    REQUIRE(r.design.ok());
    CHECK(divides(S("s").num(), r.design->controller.den()));
    CHECK(is_robustly_regulating(kSP, p, r.design->controller, g));
  }
  {
    const auto r = synthesize_robust(kPoly, X("1/(x-2)"), Generator::make(kPoly, X("x+7")));
    REQUIRE(r.design.ok());
    CHECK(stabilizes(kPoly, X("1/(x-2)"), r.design->controller));
  }
  {
    // sinusoid generator 1/(s^2+4) on a plant with no zero at +-2i
    const RatFunc p = S("(s+3)/((s-1)*(s+2))");
    const Generator g = Generator::make(kSP, S("1/(s^2+4)"));
    const auto r = synthesize_robust(kSP, p, g);
    REQUIRE(r.design.ok());
    CHECK(is_robustly_regulating(kSP, p, r.design->controller, g));
    CHECK(divides(S("s^2+4").num(), r.design->controller.den()));
  }
  CHECK(synthesize_robust(kPoly, X("x/(x+1)"), Generator::make(kPoly, X("1/x"))).design.status ==
        SearchStatus::Unsolvable);
}

TEST_CASE("coprime internal model check") {
  {
    const auto p_rep = FractionRep::make(kSP, RatFunc(1), RatFunc(1));
    const auto c_rep = FractionRep::make(kSP, S("-1/(s+1)"), S("s/(s+1)"));
    const auto v = coprime_internal_model_check(p_rep, c_rep, Generator::make(kSP, S("1/s")));
    CHECK(v.robust);
    CHECK(v.unit.is_one());
    CHECK(*v.z == S("1/(s+1)"));
    CHECK(v.delta->is_one());
  }
  {
    const auto p_rep = FractionRep::make(kSP, RatFunc(1), RatFunc(1));
    const auto c_rep = FractionRep::make(kSP, RatFunc(3), RatFunc(1));
    const auto v = coprime_internal_model_check(p_rep, c_rep, Generator::make(kSP, S("1/s")));
    CHECK_FALSE(v.robust);
    CHECK(v.unit == RatFunc(-2));
  }
  {
    const auto p_rep = FractionRep::make(kPoly, X("1"), X("x-1"));
    const auto c_rep = FractionRep::make(kPoly, X("x-2"), X("1"));
    const auto v = coprime_internal_model_check(p_rep, c_rep, Generator::make(kPoly, X("x^2")));
    CHECK(v.robust);
    CHECK(*v.z == X("x^2"));
  }
  CHECK_THROWS_AS(coprime_internal_model_check(FractionRep::make(kPoly, X("x"), X("x")),
                                               FractionRep::make(kPoly, X("1"), X("1")),
                                               Generator::make(kPoly, X("1"))),
                  PreconditionError);
  // d*x - n*y = 0 is no unit
  CHECK_THROWS_AS(coprime_internal_model_check(FractionRep::make(kPoly, X("1"), X("1")),
                                               FractionRep::make(kPoly, X("1"), X("1")),
                                               Generator::make(kPoly, X("1"))),
                  PreconditionError);
}

TEST_CASE("lift and lower") {
  const auto& e = ex();
  const auto lo = lift_lower(kNoLin, e.c_r, e.theta, LiftDirection::Lower, e.p);
  CHECK(lo.ok);
  CHECK(lo.controller == X("(x^2-1)*(x^5+x^2+2)/(x^3+1)"));
  const auto up = lift_lower(kNoLin, lo.controller, e.theta, LiftDirection::Lift, e.p);
  CHECK(up.ok);
  CHECK(up.controller == e.c_r);
  // lifting the base controller gives no regulation
  const auto bad = lift_lower(kNoLin, e.c * e.theta, e.theta, LiftDirection::Lift, e.p);
  CHECK(bad.controller == e.c);
  CHECK_FALSE(bad.ok);
  CHECK(bad.failing_entry == "h11/theta");
  const auto bad_low = lift_lower(kNoLin, e.c, e.theta, LiftDirection::Lower, e.p);
  CHECK_FALSE(bad_low.ok);
}

TEST_CASE("parametrization of robust regulators") {
  const auto& e = ex();
  CHECK(parametrize_all_robust(kNoLin, e.p, e.c_r, e.gen, 0, 0) == e.c_r);
  const RatFunc c1 = parametrize_all_robust(kNoLin, e.p, e.c_r, e.gen, 1, 0);
  CHECK(is_robustly_regulating(kNoLin, e.p, c1, e.gen));
  CHECK_FALSE(c1 == e.c_r);
  CHECK_THROWS_AS(parametrize_all_robust(kNoLin, e.p, e.c, e.gen, 0, 0), PreconditionError);
  CHECK_THROWS_AS(parametrize_all_robust(
                      kNoLin, e.p, e.c_r, Generator::from_rep(FractionRep::make(kNoLin, X("x^3-1"), X("x^2-1"))), 0, 0),
                  PreconditionError);
}
