#ifndef REGULA_COMMANDS_HPP
#define REGULA_COMMANDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "regula/problem.hpp"

namespace regula {

struct RunOptions {
  std::optional<int> degree_bound;  // overrides the problem's options
  std::optional<int> sweep;
  bool escalate = false;  // retry unknown verdicts with larger budgets
};

const std::vector<std::string>& command_names();

/// Runs one engine command. Never throws for bad input: errors become the
/// verdict "input-error" with the message in the notes.
Report run_command(const std::string& command, const Problem& problem, const RunOptions& options = {});

/// Re-checks every certificate of `report` against `problem` from scratch.
/// Verdict "accepted" when all checks pass.
Report replay_report(const Problem& problem, const Report& report);

struct CorpusResult {
  std::string file;
  std::string command;
  Report report;
  std::optional<std::string> expected;
  std::optional<Report> replay;  // positive verdicts only
  bool passed = false;
};

/// Runs every *.json problem in `dir` that names a "command", concurrently.
/// Sorted by file name.
std::vector<CorpusResult> run_corpus(const std::string& dir, const RunOptions& options = {});

}  // namespace regula

#endif  // REGULA_COMMANDS_HPP
