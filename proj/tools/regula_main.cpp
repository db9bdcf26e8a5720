// regula: command-line front end for the regulator design engine.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "regula/commands.hpp"
#include "regula/errors.hpp"

namespace {

void emit(const regula::Report& r, bool text) {
  if (text)
    std::cout << regula::report_to_text(r);
  else
    std::cout << regula::report_to_json(r).dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact internal-model regulator design over stability rings"};
  app.require_subcommand(1);

  std::string problem_path;
  std::string report_path;
  std::string corpus_dir;
  std::optional<int> degree;
  std::optional<int> sweep;
  bool json = false;
  bool text = false;
  bool escalate = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--degree-bound", degree, "Degree budget for bounded searches")->check(CLI::NonNegativeNumber);
    sub->add_option("--sweep", sweep, "Largest basis degree in the (q1, q2) grid")->check(CLI::NonNegativeNumber);
    sub->add_flag("--json", json, "JSON report (default)");
    sub->add_flag("--text", text, "Human-readable report");
    sub->add_flag("--escalate", escalate, "Retry unknown verdicts with degree budgets 16 and 32");
  };

  for (const auto& name : regula::command_names()) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--problem", problem_path, "Problem file (JSON)")->required();
    add_common(sub);
  }
  auto* verify = app.add_subcommand("verify", "Re-check the certificates of a report");
  verify->add_option("--problem", problem_path, "Problem file the report was produced from")->required();
  verify->add_option("--report", report_path, "Report file (JSON)")->required();
  add_common(verify);
  auto* corpus = app.add_subcommand("corpus", "Run every problem file in a directory");
  corpus->add_option("--dir", corpus_dir, "Directory of problem files")->required();
  add_common(corpus);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }
  if (json && text) {
    std::cerr << "--json and --text are exclusive\n";
    return 3;
  }
  const regula::RunOptions options{degree, sweep, escalate};
  auto* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();

  try {
    if (command == "corpus") {
      const auto results = regula::run_corpus(corpus_dir, options);
      int worst = 0;
      for (const auto& r : results) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.file << "  " << r.command << " -> " << r.report.verdict;
        if (r.expected && *r.expected != r.report.verdict) std::cout << " (expected " << *r.expected << ")";
        if (r.replay) std::cout << "  replay " << r.replay->verdict;
        std::cout << '\n';
        if (!r.passed) worst = 1;
        if (text)
          for (const auto& n : r.report.notes) std::cout << "    note: " << n << '\n';
      }
      return worst;
    }
    const regula::Problem problem = regula::load_problem(problem_path);
    regula::Report report;
    if (command == "verify") {
      std::ifstream in(report_path);
      if (!in) throw regula::InputError("cannot open " + report_path);
      nlohmann::json j;
      try {
        in >> j;
      } catch (const nlohmann::json::exception& e) {
        throw regula::InputError(report_path + ": " + e.what());
      }
      report = regula::replay_report(problem, regula::report_from_json(j));
    } else {
      report = regula::run_command(command, problem, options);
    }
    emit(report, text);
    return regula::exit_code(report.verdict);
  } catch (const regula::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
