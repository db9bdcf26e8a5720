#ifndef REGULA_PROBLEM_HPP
#define REGULA_PROBLEM_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "regula/errors.hpp"
#include "regula/ring.hpp"

namespace regula {

/// Missing or malformed problem fields.
class InputError : public Error {
 public:
  using Error::Error;
};

struct Problem {
  RingId ring = RingId::PolyRing;
  std::string variable;
  std::optional<std::string> plant;
  std::optional<std::string> generator;
  std::optional<std::pair<std::string, std::string>> generator_rep;  // gamma, theta
  std::optional<std::string> controller;
  std::map<std::string, std::string> witnesses;
  std::optional<int> degree_bound;
  std::optional<int> sweep;
  std::optional<std::string> direction;  // lift-lower: "lift" or "lower"

  // Batch-mode fields.
  std::optional<std::string> command;
  std::optional<std::string> expect;
  std::optional<std::string> known_discrepancy;

  /// Parses an expression in the problem's variable.
  RatFunc expr(const std::string& src) const;
  /// Parses a required field; throws InputError naming the field if absent.
  RatFunc require(const std::optional<std::string>& field, const char* name) const;
  std::optional<RatFunc> witness(const std::string& name) const;
};

/// Throws InputError or ParseError. Every expression is parsed once so that
/// syntax errors and variable clashes surface before any command runs.
Problem parse_problem(const nlohmann::json& j);
Problem load_problem(const std::string& path);

struct Residual {
  std::string identity;
  std::string residual;  // canonical print of the exact difference; "0" when it holds
};

struct InputEcho {
  std::string name;
  std::string given;
  std::string canonical;
};

struct Report {
  std::string command;
  std::string verdict;
  std::vector<std::pair<std::string, std::string>> certificates;
  std::vector<Residual> residuals;
  std::vector<std::string> notes;
  std::vector<InputEcho> inputs;

  void certify(const std::string& name, const RatFunc& value);
  void residual(const std::string& identity, const RatFunc& difference);
  std::optional<std::string> certificate(const std::string& name) const;
  bool residuals_zero() const;
};

nlohmann::ordered_json report_to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);
std::string report_to_text(const Report& r);

/// 0 accepted/solvable, 1 rejected/not-solvable, 2 unknown within budget,
/// 3 input error.
int exit_code(const std::string& verdict);

}  // namespace regula

#endif  // REGULA_PROBLEM_HPP
