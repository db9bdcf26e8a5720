#include "regula/problem.hpp"

#include <fstream>
#include <sstream>

#include "regula/errors.hpp"
#include "regula/expr.hpp"

namespace regula {

RatFunc Problem::expr(const std::string& src) const { return parse_expr(src, variable); }

RatFunc Problem::require(const std::optional<std::string>& field, const char* name) const {
  if (!field) throw InputError(std::string("missing field '") + name + "'");
  return expr(*field);
}

std::optional<RatFunc> Problem::witness(const std::string& name) const {
  const auto it = witnesses.find(name);
  if (it == witnesses.end()) return std::nullopt;
  return expr(it->second);
}

namespace {

std::optional<std::string> opt_string(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  if (!j[key].is_string()) throw InputError(std::string("field '") + key + "' must be a string");
  return j[key].get<std::string>();
}

std::optional<int> opt_int(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  if (!j[key].is_number_integer()) throw InputError(std::string("field '") + key + "' must be an integer");
  return j[key].get<int>();
}

}  // namespace

Problem parse_problem(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("problem must be a JSON object");
  Problem p;
  const auto ring = opt_string(j, "ring");
  if (!ring) throw InputError("missing field 'ring'");
  const auto id = parse_ring(*ring);
  if (!id) throw InputError("unknown ring '" + *ring + "'");
  p.ring = *id;
  p.variable = opt_string(j, "variable").value_or(default_variable(p.ring));
  p.plant = opt_string(j, "plant");
  p.generator = opt_string(j, "generator");
  p.controller = opt_string(j, "controller");
  if (j.contains("generator_rep")) {
    const auto& g = j["generator_rep"];
    const auto gamma = opt_string(g, "gamma");
    const auto theta = opt_string(g, "theta");
    if (!gamma || !theta) throw InputError("generator_rep needs 'gamma' and 'theta'");
    p.generator_rep = {*gamma, *theta};
  }
  if (j.contains("witnesses")) {
    if (!j["witnesses"].is_object()) throw InputError("field 'witnesses' must be an object");
    for (const auto& [k, v] : j["witnesses"].items()) {
      if (!v.is_string()) throw InputError("witness '" + k + "' must be a string");
      p.witnesses[k] = v.get<std::string>();
    }
  }
  if (j.contains("options")) {
    const auto& o = j["options"];
    p.degree_bound = opt_int(o, "degree_bound");
    p.sweep = opt_int(o, "sweep");
    p.direction = opt_string(o, "direction");
  }
  p.command = opt_string(j, "command");
  p.expect = opt_string(j, "expect");
  p.known_discrepancy = opt_string(j, "known_discrepancy");

  std::vector<RatFunc> all;
  for (const auto* f : {&p.plant, &p.generator, &p.controller})
    if (*f) all.push_back(p.expr(**f));
  if (p.generator_rep) {
    all.push_back(p.expr(p.generator_rep->first));
    all.push_back(p.expr(p.generator_rep->second));
  }
  for (const auto& [k, v] : p.witnesses) all.push_back(p.expr(v));
  for (const auto& f : all)
    if (!f.is_constant() && f.var() != p.variable) throw InputError("expression not in variable " + p.variable);
  return p;
}

Problem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
  return parse_problem(j);
}

void Report::certify(const std::string& name, const RatFunc& value) { certificates.emplace_back(name, print_expr(value)); }

void Report::residual(const std::string& identity, const RatFunc& difference) {
  residuals.push_back({identity, print_expr(difference)});
}

std::optional<std::string> Report::certificate(const std::string& name) const {
  for (const auto& [k, v] : certificates)
    if (k == name) return v;
  return std::nullopt;
}

bool Report::residuals_zero() const {
  for (const auto& r : residuals)
    if (r.residual != "0") return false;
  return true;
}

nlohmann::ordered_json report_to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["command"] = r.command;
  j["verdict"] = r.verdict;
  j["certificates"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.certificates) j["certificates"][k] = v;
  j["residuals"] = nlohmann::ordered_json::array();
  for (const auto& res : r.residuals) j["residuals"].push_back({{"identity", res.identity}, {"residual", res.residual}});
  j["notes"] = r.notes;
  j["inputs"] = nlohmann::ordered_json::array();
  for (const auto& in : r.inputs) {
    nlohmann::ordered_json e{{"name", in.name}, {"canonical", in.canonical}};
    if (in.given != in.canonical) e["given"] = in.given;
    j["inputs"].push_back(std::move(e));
  }
  return j;
}

Report report_from_json(const nlohmann::json& j) {
  Report r;
  try {
    r.command = j.at("command").get<std::string>();
    r.verdict = j.at("verdict").get<std::string>();
    if (j.contains("certificates"))
      for (const auto& [k, v] : j["certificates"].items()) r.certificates.emplace_back(k, v.get<std::string>());
    if (j.contains("residuals"))
      for (const auto& e : j["residuals"])
        r.residuals.push_back({e.at("identity").get<std::string>(), e.at("residual").get<std::string>()});
    if (j.contains("notes")) r.notes = j["notes"].get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
  return r;
}

std::string report_to_text(const Report& r) {
  std::ostringstream out;
  out << r.command << ": " << r.verdict << '\n';
  for (const auto& in : r.inputs) {
    out << "  input " << in.name << " = " << in.canonical;
    if (in.given != in.canonical) out << "   (given " << in.given << ")";
    out << '\n';
  }
  for (const auto& [k, v] : r.certificates) out << "  " << k << " = " << v << '\n';
  for (const auto& res : r.residuals) out << "  [" << (res.residual == "0" ? "ok" : "FAIL") << "] " << res.identity
                                          << " = " << res.residual << '\n';
  for (const auto& n : r.notes) out << "  note: " << n << '\n';
  return out.str();
}

int exit_code(const std::string& verdict) {
  if (verdict == "accepted" || verdict == "solvable" || verdict == "stable loop" || verdict == "coprime" ||
      verdict == "weakly-coprime")
    return 0;
  if (verdict == "unknown-within-budget") return 2;
  if (verdict == "input-error") return 3;
  return 1;
}

}  // namespace regula
