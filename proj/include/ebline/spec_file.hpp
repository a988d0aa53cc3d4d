#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ebline/errors.hpp"
#include "ebline/line.hpp"
#include "ebline/simulate.hpp"

namespace ebline {

/// One named line-evaluation case from a spec file.
struct CaseSpec {
  std::string name;
  std::vector<double> production;
  std::vector<int> buffers;
  Policy policy = Policy::EB;
  double epsilon = 1e-4;
  SimConfig sim;

  LineSpec line() const { return LineSpec(production, buffers, policy); }
};

namespace detail {

using json = nlohmann::json;

inline int line_of_byte(const std::string& text, std::size_t byte) {
  int line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

inline void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                                const std::string& where) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* key : allowed)
      if (item.key() == key) known = true;
    if (!known) throw SpecParseError(where + ": unknown key \"" + item.key() + "\"");
  }
}

inline CaseSpec parse_case(const json& obj, const std::string& where) {
  if (!obj.is_object()) throw SpecParseError(where + ": case must be an object");
  reject_unknown_keys(obj, {"name", "machines", "p", "buffers", "policy", "epsilon", "sim"}, where);

  CaseSpec cs;
  try {
    cs.name = obj.value("name", where);
    if (!obj.contains("machines") || !obj.contains("p") || !obj.contains("buffers"))
      throw SpecParseError(where + ": keys machines, p, buffers are required");
    const int machines = obj.at("machines").get<int>();
    cs.production = obj.at("p").get<std::vector<double>>();
    cs.buffers = obj.at("buffers").get<std::vector<int>>();
    if (static_cast<int>(cs.production.size()) != machines)
      throw SpecParseError(where + ": p must list exactly `machines` probabilities");
    if (static_cast<int>(cs.buffers.size()) != machines - 1)
      throw SpecParseError(where + ": buffers must list exactly machines-1 capacities");
    const std::string policy = obj.value("policy", "eb");
    if (policy == "eb")
      cs.policy = Policy::EB;
    else if (policy == "ib")
      cs.policy = Policy::IB;
    else
      throw SpecParseError(where + ": policy must be \"eb\" or \"ib\"");
    cs.epsilon = obj.value("epsilon", 1e-4);
    if (!(cs.epsilon > 0.0)) throw SpecParseError(where + ": epsilon must be positive");
    if (obj.contains("sim")) {
      const json& sim = obj.at("sim");
      reject_unknown_keys(sim, {"replications", "horizon", "seed", "warmup"}, where + ".sim");
      cs.sim.replications = sim.value("replications", cs.sim.replications);
      cs.sim.horizon = sim.value("horizon", cs.sim.horizon);
      cs.sim.base_seed = sim.value("seed", cs.sim.base_seed);
      cs.sim.warmup = sim.value("warmup", cs.sim.warmup);
      cs.sim.validate();
    }
    cs.line();  // run LineSpec validation now so errors carry the case label
  } catch (const json::exception& e) {
    throw SpecParseError(where + ": " + e.what());
  } catch (const ValidationError& e) {
    throw SpecParseError(where + ": " + e.what());
  }
  return cs;
}

}  // namespace detail

/// Parse a spec document: either a single case object or a batch array of
/// named cases (bare array or under a "cases" key). Unknown keys are rejected.
inline std::vector<CaseSpec> parse_spec(const std::string& text) {
  detail::json doc;
  try {
    doc = detail::json::parse(text);
  } catch (const detail::json::parse_error& e) {
    throw SpecParseError("line " + std::to_string(detail::line_of_byte(text, e.byte)) + ": " +
                             e.what(),
                         detail::line_of_byte(text, e.byte));
  }

  std::vector<CaseSpec> cases;
  const detail::json* list = nullptr;
  if (doc.is_array()) {
    list = &doc;
  } else if (doc.is_object() && doc.contains("cases")) {
    detail::reject_unknown_keys(doc, {"cases"}, "top level");
    if (!doc.at("cases").is_array()) throw SpecParseError("\"cases\" must be an array");
    list = &doc.at("cases");
  }

  if (list) {
    for (std::size_t i = 0; i < list->size(); ++i)
      cases.push_back(detail::parse_case((*list)[i], "case " + std::to_string(i + 1)));
  } else {
    cases.push_back(detail::parse_case(doc, "case 1"));
  }
  return cases;
}

inline std::vector<CaseSpec> load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecParseError("cannot open spec file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_spec(buffer.str());
}

}  // namespace ebline
