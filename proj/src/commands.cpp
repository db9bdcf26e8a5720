#include "regula/commands.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <future>

#include "regula/errors.hpp"
#include "regula/expr.hpp"
#include "regula/regulation.hpp"

namespace regula {

namespace {

const std::string kEq8 = "alpha/Theta - beta*(b + q1*a^2 + q2*b^2)*p - 1";

struct Context {
  const Problem& problem;
  DegreeBudget budget;
  int sweep;
  Report& report;

  RingId ring() const { return problem.ring; }

  RatFunc input(const std::optional<std::string>& field, const char* name) const {
    RatFunc f = problem.require(field, name);
    report.inputs.push_back({name, *field, print_expr(f)});
    return f;
  }

  Generator generator() const {
    if (problem.generator_rep) {
      const RatFunc gamma = input(problem.generator_rep->first, "generator_rep.gamma");
      const RatFunc theta = input(problem.generator_rep->second, "generator_rep.theta");
      return Generator::from_rep(FractionRep::make(ring(), gamma, theta), budget);
    }
    return Generator::make(ring(), input(problem.generator, "generator"), budget);
  }

  std::optional<RatFunc> witness(const std::string& name) const {
    auto w = problem.witness(name);
    if (w) report.inputs.push_back({"witnesses." + name, problem.witnesses.at(name), print_expr(*w)});
    return w;
  }
};

void certify_pair(Report& r, const RatFunc& p, const StabilizingPair& pair, const std::string& suffix = "") {
  r.certify("a" + suffix, pair.a);
  r.certify("b" + suffix, pair.b);
  r.residual("a" + suffix + " - p*b" + suffix + " - 1", pair.a - p * pair.b - RatFunc(1));
}

// Regulation certificates of a robustly regulating controller.
void certify_regulation(Context& ctx, const RatFunc& p, const RatFunc& c, const Generator& gen,
                        const std::string& cname) {
  Report& r = ctx.report;
  const auto w = regulation_witness(ctx.ring(), p, c, gen);
  r.certify("alpha_r", w.alpha);
  r.certify("beta_r", w.beta);
  r.residual("Theta - alpha_r - beta_r*" + cname, gen.value - w.alpha - w.beta * c);
  if (!gen.weakly_coprime()) {
    r.notes.emplace_back("generator representation not known to be weakly coprime; denominator model not checked");
    return;
  }
  const auto dm = check_denominator_model(ctx.ring(), c, gen.rep.theta, ctx.budget);
  if (!dm.ok()) {
    r.notes.emplace_back("no denominator-model witness found within budget");
    return;
  }
  r.certify("alpha_d", dm->alpha);
  r.certify("beta_d", dm->beta);
  r.residual("theta*(alpha_d + beta_d*" + cname + ") - 1", gen.rep.theta * (dm->alpha + dm->beta * c) - RatFunc(1));
}

std::string search_verdict(SearchStatus s, const char* found, const char* unsolvable) {
  switch (s) {
    case SearchStatus::Found: return found;
    case SearchStatus::Unsolvable: return unsolvable;
    case SearchStatus::UnknownWithinBudget: return "unknown-within-budget";
  }
  return "unknown-within-budget";
}

void cmd_check_stability(Context& ctx) {
  Report& r = ctx.report;
  const RatFunc p = ctx.input(ctx.problem.plant, "plant");
  RatFunc c;
  if (ctx.problem.controller) {
    c = ctx.input(ctx.problem.controller, "controller");
  } else {
    const auto s = synthesize_stabilizing(ctx.ring(), p, ctx.budget);
    if (!s.ok()) {
      r.verdict = search_verdict(s.status, "", "not-stabilizable");
      r.notes.emplace_back("no controller given and none synthesized");
      return;
    }
    c = s->controller;
    r.notes.emplace_back("no controller given; a stabilizing controller was synthesized");
  }
  const auto h = closed_loop(p, c);
  r.certify("controller", c);
  r.certify("h11", h.h11);
  r.certify("h12", h.h12);
  r.certify("h21", h.h21);
  r.certify("h22", h.h22);
  const std::string bad = first_unstable_entry(ctx.ring(), p, c);
  if (!bad.empty()) {
    r.verdict = "unstable loop";
    r.notes.push_back(bad + " is not stable");
    return;
  }
  r.verdict = "stable loop";
  certify_pair(r, p, {h.h11, h.h21, ctx.ring()});
}

void cmd_verify_pair(Context& ctx) {
  Report& r = ctx.report;
  const RatFunc p = ctx.input(ctx.problem.plant, "plant");
  auto a = ctx.witness("a");
  auto b = ctx.witness("b");
  if (!a || !b) {
    if (!ctx.problem.controller) throw InputError("verify-pair needs witnesses a and b, or a controller");
    const RatFunc c = ctx.input(ctx.problem.controller, "controller");
    const auto h = closed_loop(p, c);
    a = h.h11;
    b = h.h21;
    r.notes.emplace_back("pair derived from the controller: a = 1/(1 - p*c), b = c/(1 - p*c)");
  }
  r.certify("a", *a);
  r.certify("b", *b);
  r.certify("p*a", p * *a);
  r.residual("a - p*b - 1", *a - p * *b - RatFunc(1));
  const auto& oracle = ring_oracle(ctx.ring());
  bool ok = true;
  auto need = [&](bool cond, const char* what) {
    if (!cond) {
      ok = false;
      r.notes.emplace_back(what);
    }
  };
  need(!a->is_zero(), "a is zero");
  need(oracle.is_stable(*a), "a is not stable");
  need(oracle.is_stable(*b), "b is not stable");
  need(oracle.is_stable(p * *a), "p*a is not stable");
  need((*a - p * *b).is_one(), "a - p*b - 1 is not zero");
  if (ok && !a->is_zero()) r.certify("c", *b / *a);
  r.verdict = ok ? "accepted" : "rejected";
  if (!ok && ctx.problem.known_discrepancy) r.notes.push_back("known discrepancy: " + *ctx.problem.known_discrepancy);
}

void cmd_verify_regulation(Context& ctx) {
  Report& r = ctx.report;
  const RatFunc p = ctx.input(ctx.problem.plant, "plant");
  const RatFunc c = ctx.input(ctx.problem.controller, "controller");
  const Generator gen = ctx.generator();
  const auto h = closed_loop(p, c);
  r.certify("Theta*h11", gen.value * h.h11);
  r.certify("Theta*h12", gen.value * h.h12);
  const std::string bad = first_unstable_entry(ctx.ring(), p, c);
  if (!bad.empty()) r.notes.push_back("does not stabilize: " + bad + " is not stable");
  const bool regulating = is_regulating(ctx.ring(), p, c, gen);
  if (!regulating) r.notes.emplace_back("Theta/(1 - p*c) or Theta*p/(1 - p*c) is not stable");
  if (!bad.empty() || !regulating) {
    r.verdict = "rejected";
    return;
  }
  r.verdict = "accepted";
  certify_regulation(ctx, p, c, gen, "c");
}

void cmd_check_factorization(Context& ctx) {
  Report& r = ctx.report;
  FractionRep rep;
  if (ctx.problem.generator_rep) {
    rep = ctx.generator().rep;
    r.notes.emplace_back("checking generator_rep");
  } else if (ctx.problem.generator) {
    rep = ctx.generator().rep;
    r.notes.emplace_back("checking the canonical representation of the generator");
  } else {
    rep = to_ring_fraction(ctx.ring(), ctx.input(ctx.problem.plant, "plant"));
    r.notes.emplace_back("checking the canonical representation of the plant");
  }
  r.certify("gamma", rep.gamma);
  r.certify("theta", rep.theta);
  using S = CoprimenessVerdict::Status;
  const auto cv = is_coprime_factorization(rep, ctx.budget);
  if (cv.status == S::Coprime) {
    r.verdict = "coprime";
    r.certify("alpha", *cv.alpha);
    r.certify("beta", *cv.beta);
    r.residual("alpha*gamma - beta*theta - 1", *cv.alpha * rep.gamma - *cv.beta * rep.theta - RatFunc(1));
    return;
  }
  if (cv.status == S::NotCoprime)
    r.notes.emplace_back("not coprime: no alpha, beta in A satisfy alpha*gamma - beta*theta = 1");
  else
    r.notes.emplace_back("coprimeness undecided within degree budget " + std::to_string(cv.bound));
  const auto wv = is_weakly_coprime(rep, ctx.budget);
  switch (wv.status) {
    case S::WeaklyCoprime: r.verdict = "weakly-coprime"; break;
    case S::NotWeaklyCoprime:
      r.verdict = "not-weakly-coprime";
      r.certify("k", *wv.k);
      r.certify("k*gamma", *wv.k * rep.gamma);
      r.certify("k*theta", *wv.k * rep.theta);
      r.notes.emplace_back("k*gamma and k*theta are stable, k is not");
      break;
    default:
      r.verdict = "unknown-within-budget";
      r.notes.emplace_back("weak coprimeness undecided within degree budget " + std::to_string(wv.bound));
  }
}

void certify_solvability(Report& r, const RatFunc& p, const Generator& gen, const SolvabilityWitness& w) {
  certify_pair(r, p, w.pair);
  r.certify("q1", w.q1);
  r.certify("q2", w.q2);
  r.certify("alpha", w.alpha);
  r.certify("beta", w.beta);
  const RatFunc bq = w.pair.b + w.q1 * w.pair.a * w.pair.a + w.q2 * w.pair.b * w.pair.b;
  r.residual(kEq8, w.alpha / gen.value - w.beta * bq * p - RatFunc(1));
}

void cmd_solvability(Context& ctx) {
  Report& r = ctx.report;
  const RatFunc p = ctx.input(ctx.problem.plant, "plant");
  const Generator gen = ctx.generator();
  auto v = solvability(ctx.ring(), p, gen, ctx.budget, ctx.sweep);
  r.verdict = std::string(to_string(v.status));
  for (auto& n : v.notes) r.notes.push_back(std::move(n));
  if (v.witness) certify_solvability(r, p, gen, *v.witness);
}

void cmd_synthesize(Context& ctx) {
  Report& r = ctx.report;
  const RatFunc p = ctx.input(ctx.problem.plant, "plant");
  const Generator gen = ctx.generator();
  auto rs = synthesize_robust(ctx.ring(), p, gen, ctx.budget, ctx.sweep);
  r.verdict = std::string(to_string(rs.verdict.status));
  for (auto& n : rs.verdict.notes) r.notes.push_back(std::move(n));
  if (!rs.design.ok()) return;
  const RobustDesign& d = *rs.design;
  r.certify("controller", d.controller);
  certify_solvability(r, p, gen, d.witness);
  r.certify("c", d.stabilizing_pair.controller());
  certify_pair(r, p, d.stabilizing_pair, "_q");
  r.certify("c_i", d.inner_controller);
  r.residual("controller - c*(1 + c_i)",
             d.controller - d.stabilizing_pair.controller() * (RatFunc(1) + d.inner_controller));
  certify_regulation(ctx, p, d.controller, gen, "controller");
}

void cmd_parametrize(Context& ctx) {
  Report& r = ctx.report;
  const RatFunc p = ctx.input(ctx.problem.plant, "plant");
  const RatFunc q1 = ctx.witness("q1").value_or(RatFunc(0));
  const RatFunc q2 = ctx.witness("q2").value_or(RatFunc(0));
  RatFunc out;
  bool ok = false;
  if (ctx.problem.generator || ctx.problem.generator_rep) {
    const RatFunc c = ctx.input(ctx.problem.controller, "controller");
    const Generator gen = ctx.generator();
    out = parametrize_all_robust(ctx.ring(), p, c, gen, q1, q2);
    ok = is_robustly_regulating(ctx.ring(), p, out, gen);
    r.notes.emplace_back("robustly regulating parametrization around the given controller");
  } else {
    StabilizingPair pair;
    const auto a = ctx.witness("a");
    const auto b = ctx.witness("b");
    if (a && b) {
      pair = {*a, *b, ctx.ring()};
      if (!check_pair(ctx.ring(), p, pair.a, pair.b)) throw PreconditionError("witnesses a, b are not a stabilizing pair");
    } else if (ctx.problem.controller) {
      pair = pair_from_controller(ctx.ring(), p, ctx.input(ctx.problem.controller, "controller"));
    } else {
      const auto s = synthesize_stabilizing(ctx.ring(), p, ctx.budget);
      if (!s.ok()) {
        r.verdict = search_verdict(s.status, "", "not-stabilizable");
        return;
      }
      pair = s->pair;
      r.notes.emplace_back("stabilizing pair synthesized");
    }
    out = parametrize_stabilizing(ctx.ring(), p, pair, q1, q2);
    ok = stabilizes(ctx.ring(), p, out);
  }
  r.certify("controller", out);
  if (ok) {
    const auto h = closed_loop(p, out);
    certify_pair(r, p, {h.h11, h.h21, ctx.ring()}, "_q");
  }
  r.verdict = ok ? "accepted" : "rejected";
}

RatFunc lift_theta(const Context& ctx) {
  if (ctx.problem.generator_rep) return ctx.input(ctx.problem.generator_rep->second, "generator_rep.theta");
  return to_ring_fraction(ctx.ring(), ctx.input(ctx.problem.generator, "generator")).theta;
}

LiftDirection lift_direction(const Problem& problem) {
  const std::string dir = problem.direction.value_or("lift");
  if (dir == "lift") return LiftDirection::Lift;
  if (dir == "lower") return LiftDirection::Lower;
  throw InputError("options.direction must be 'lift' or 'lower'");
}

void cmd_lift_lower(Context& ctx) {
  Report& r = ctx.report;
  const RatFunc p = ctx.input(ctx.problem.plant, "plant");
  const RatFunc c = ctx.input(ctx.problem.controller, "controller");
  const RatFunc theta = lift_theta(ctx);
  const LiftDirection dir = lift_direction(ctx.problem);
  const auto res = lift_lower(ctx.ring(), c, theta, dir, p);
  r.certify("theta", theta);
  r.certify("controller", res.controller);
  if (dir == LiftDirection::Lower)
    r.residual("controller - theta*c", res.controller - theta * c);
  else
    r.residual("theta*controller - c", theta * res.controller - c);
  r.verdict = res.ok ? "accepted" : "rejected";
  if (!res.ok) r.notes.push_back(res.failing_entry + " is not stable");
}

using Handler = void (*)(Context&);

const std::vector<std::pair<std::string, Handler>>& handlers() {
  static const std::vector<std::pair<std::string, Handler>> table{
      {"check-stability", cmd_check_stability},
      {"verify-pair", cmd_verify_pair},
      {"verify-regulation", cmd_verify_regulation},
      {"check-factorization", cmd_check_factorization},
      {"solvability", cmd_solvability},
      {"synthesize", cmd_synthesize},
      {"parametrize", cmd_parametrize},
      {"lift-lower", cmd_lift_lower},
  };
  return table;
}

Report run_once(Handler h, const std::string& command, const Problem& problem, int degree, int sweep) {
  Report r;
  r.command = command;
  Context ctx{problem, DegreeBudget{degree}, sweep, r};
  try {
    h(ctx);
  } catch (const Error& e) {
    Report err;
    err.command = command;
    err.verdict = "input-error";
    err.inputs = std::move(r.inputs);
    err.notes.emplace_back(e.what());
    return err;
  }
  return r;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, h] : handlers()) out.push_back(name);
    return out;
  }();
  return names;
}

Report run_command(const std::string& command, const Problem& problem, const RunOptions& options) {
  const auto& table = handlers();
  const auto it = std::find_if(table.begin(), table.end(), [&](const auto& e) { return e.first == command; });
  if (it == table.end()) {
    Report r;
    r.command = command;
    r.verdict = "input-error";
    r.notes.push_back("unknown command '" + command + "'");
    return r;
  }
  const int degree = options.degree_bound.value_or(problem.degree_bound.value_or(kDefaultDegreeBudget));
  const int sweep = options.sweep.value_or(problem.sweep.value_or(kDefaultSweep));
  Report r = run_once(it->second, command, problem, degree, sweep);
  if (!options.escalate) return r;
  for (const int rung : kBudgetLadder) {
    if (r.verdict != "unknown-within-budget") break;
    if (rung <= degree) continue;
    r = run_once(it->second, command, problem, rung, sweep);
    r.notes.push_back("degree budget escalated to " + std::to_string(rung));
  }
  return r;
}

namespace {

struct Replay {
  const Problem& problem;
  const Report& source;
  Report& out;
  bool ok = true;
  int checks = 0;

  RingId ring() const { return problem.ring; }

  std::optional<RatFunc> cert(const std::string& name) const {
    const auto v = source.certificate(name);
    if (!v) return std::nullopt;
    return problem.expr(*v);
  }

  RatFunc need(const std::string& name) const {
    auto v = cert(name);
    if (!v) throw InputError("report lacks certificate '" + name + "'");
    return *v;
  }

  bool has(std::initializer_list<const char*> names) const {
    for (const char* n : names)
      if (!source.certificate(n)) return false;
    return true;
  }

  void check(bool cond, const std::string& what) {
    ++checks;
    if (!cond) ok = false;
    out.notes.push_back((cond ? "ok: " : "failed: ") + what);
  }

  void pair(const RatFunc& p, const std::string& suffix) {
    if (!has({("a" + suffix).c_str(), ("b" + suffix).c_str()})) return;
    check(check_pair(ring(), p, need("a" + suffix), need("b" + suffix)),
          "(a" + suffix + ", b" + suffix + ") is a stabilizing pair");
  }

  Generator generator() const {
    if (problem.generator_rep)
      return Generator::from_rep(FractionRep::make(ring(), problem.expr(problem.generator_rep->first),
                                                   problem.expr(problem.generator_rep->second)));
    return Generator::make(ring(), problem.require(problem.generator, "generator"));
  }

  void regulation(const RatFunc& p, const RatFunc& c, const Generator& gen) {
    check(is_robustly_regulating(ring(), p, c, gen), "controller is robustly regulating");
    if (has({"alpha_r", "beta_r"})) {
      const RatFunc a = need("alpha_r"), b = need("beta_r");
      check(is_stable(ring(), a) && is_stable(ring(), b) && gen.value == a + b * c, "Theta = alpha_r + beta_r*c");
    }
    if (has({"alpha_d", "beta_d"})) {
      const RatFunc a = need("alpha_d"), b = need("beta_d");
      check(is_stable(ring(), a) && is_stable(ring(), b) && (gen.rep.theta * (a + b * c)).is_one(),
            "theta*(alpha_d + beta_d*c) = 1");
    }
  }

  void solvability_identity(const RatFunc& p, const Generator& gen) {
    if (!has({"a", "b", "q1", "q2", "alpha", "beta"})) return;
    const SolvabilityWitness w{{need("a"), need("b"), ring()}, need("q1"), need("q2"), need("alpha"), need("beta")};
    check(reverify(ring(), p, gen, w), kEq8 + " = 0 with stable witnesses");
  }

  void run() {
    const std::string& cmd = source.command;
    const auto plant = problem.plant ? std::optional<RatFunc>(problem.expr(*problem.plant)) : std::nullopt;
    auto p = [&]() -> const RatFunc& {
      if (!plant) throw InputError("missing field 'plant'");
      return *plant;
    };
    if (cmd == "check-stability") {
      const RatFunc c = need("controller");
      const auto h = closed_loop(p(), c);
      check(stabilizes(ring(), p(), c), "controller stabilizes the plant");
      if (has({"h11", "h12", "h21", "h22"}))
        check(need("h11") == h.h11 && need("h12") == h.h12 && need("h21") == h.h21 && need("h22") == h.h22,
              "closed-loop entries match");
      pair(p(), "");
    } else if (cmd == "verify-pair") {
      pair(p(), "");
    } else if (cmd == "verify-regulation") {
      regulation(p(), problem.require(problem.controller, "controller"), generator());
    } else if (cmd == "check-factorization") {
      const FractionRep rep{need("gamma"), need("theta"), ring()};
      if (has({"alpha", "beta"})) {
        const RatFunc a = need("alpha"), b = need("beta");
        check(is_stable(ring(), a) && is_stable(ring(), b) && (a * rep.gamma - b * rep.theta).is_one(),
              "alpha*gamma - beta*theta = 1");
      }
      if (has({"k"})) {
        const RatFunc k = need("k");
        check(is_stable(ring(), k * rep.gamma), "k*gamma is stable");
        check(is_stable(ring(), k * rep.theta), "k*theta is stable");
        check(!is_stable(ring(), k), "k is not stable");
      }
    } else if (cmd == "solvability") {
      solvability_identity(p(), generator());
    } else if (cmd == "synthesize") {
      const Generator gen = generator();
      solvability_identity(p(), gen);
      const RatFunc c = need("c");
      check(c == parametrize_stabilizing(ring(), p(), {need("a"), need("b"), ring()}, need("q1"), need("q2")),
            "c = c(q1, q2)");
      pair(p(), "_q");
      check(need("b_q") / need("a_q") == c, "c = b_q/a_q");
      const RatFunc ci = need("c_i");
      check(stabilizes(ring(), need("b_q") * p(), ci), "c_i stabilizes b_q*p");
      const RatFunc cr = need("controller");
      check(cr == c * (RatFunc(1) + ci), "controller = c*(1 + c_i)");
      regulation(p(), cr, gen);
    } else if (cmd == "parametrize") {
      const RatFunc c = need("controller");
      if (problem.generator || problem.generator_rep)
        check(is_robustly_regulating(ring(), p(), c, generator()), "controller is robustly regulating");
      else
        check(stabilizes(ring(), p(), c), "controller stabilizes the plant");
      pair(p(), "_q");
    } else if (cmd == "lift-lower") {
      const RatFunc theta = need("theta");
      const RatFunc c = need("controller");
      if (lift_direction(problem) == LiftDirection::Lower) {
        check(stabilizes(ring(), p() / theta, c), "controller stabilizes p/theta");
      } else {
        const Generator gen = Generator::from_rep(FractionRep::make(ring(), RatFunc(1), theta));
        check(is_robustly_regulating(ring(), p(), c, gen), "controller is robustly regulating for 1/theta");
      }
    } else {
      throw InputError("cannot replay reports of command '" + cmd + "'");
    }
  }
};

}  // namespace

Report replay_report(const Problem& problem, const Report& report) {
  Report out;
  out.command = "verify";
  Replay rp{problem, report, out};
  try {
    rp.run();
  } catch (const Error& e) {
    out.verdict = "input-error";
    out.notes.emplace_back(e.what());
    return out;
  }
  if (rp.checks == 0) {
    out.verdict = "rejected";
    out.notes.emplace_back("report carries no certificates to verify");
  } else {
    out.verdict = rp.ok ? "accepted" : "rejected";
  }
  return out;
}

std::vector<CorpusResult> run_corpus(const std::string& dir, const RunOptions& options) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());

  auto run_file = [options](const fs::path& path) {
    CorpusResult res;
    res.file = path.filename().string();
    Problem problem;
    try {
      problem = load_problem(path.string());
    } catch (const Error& e) {
      res.report.verdict = "input-error";
      res.report.notes.emplace_back(e.what());
      return res;
    }
    if (!problem.command) {
      res.report.verdict = "input-error";
      res.report.notes.emplace_back("problem names no command");
      return res;
    }
    res.command = *problem.command;
    res.expected = problem.expect;
    res.report = run_command(res.command, problem, options);
    const int code = exit_code(res.report.verdict);
    if (code == 0 && !res.report.certificates.empty()) res.replay = replay_report(problem, res.report);
    res.passed = (!res.expected || *res.expected == res.report.verdict) &&
                 (!res.replay || res.replay->verdict == "accepted");
    return res;
  };

  std::vector<std::future<CorpusResult>> jobs;
  jobs.reserve(files.size());
  for (const auto& f : files) jobs.push_back(std::async(std::launch::async, run_file, f));
  std::vector<CorpusResult> out;
  out.reserve(jobs.size());
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace regula
