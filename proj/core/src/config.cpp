#include "vdwx/config.hpp"

#include <json.hpp>

#include <set>
#include <string>
#include <vector>

#include "vdwx/media.hpp"

namespace vdwx {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

double require_number(const json& obj, const std::string& path,
                      const char* key) {
  if (!obj.contains(key)) {
    throw SchemaError(path + key, "missing required key");
  }
  const json& v = obj.at(key);
  if (!v.is_number()) throw SchemaError(path + key, "must be a number");
  return v.get<double>();
}

int require_int(const json& obj, const std::string& path, const char* key) {
  if (!obj.contains(key)) {
    throw SchemaError(path + key, "missing required key");
  }
  const json& v = obj.at(key);
  if (!v.is_number_integer()) {
    throw SchemaError(path + key, "must be an integer");
  }
  return v.get<int>();
}

std::string require_string(const json& obj, const std::string& path,
                           const char* key) {
  if (!obj.contains(key)) {
    throw SchemaError(path + key, "missing required key");
  }
  const json& v = obj.at(key);
  if (!v.is_string()) throw SchemaError(path + key, "must be a string");
  return v.get<std::string>();
}

void check_keys(const json& obj, const std::string& path,
                const std::set<std::string>& allowed,
                const std::set<std::string>& global) {
  for (const auto& item : obj.items()) {
    if (allowed.count(item.key())) continue;
    if (global.count(item.key())) {
      throw SchemaError(path + item.key(),
                        "not applicable to the selected problem");
    }
    throw SchemaError(path + item.key(), "unknown key");
  }
}

TwoLevelAtom parse_atom(const json& root, const std::string& key) {
  if (!root.contains(key)) throw SchemaError(key, "missing required key");
  const json& obj = root.at(key);
  if (!obj.is_object()) throw SchemaError(key, "must be an object");
  const std::string path = key + ".";
  check_keys(obj, path, {"omega", "gamma", "d2"}, {});
  const double omega = require_number(obj, path, "omega");
  const double gamma = require_number(obj, path, "gamma");
  const double d2 = require_number(obj, path, "d2");
  if (!(omega > 0.0)) throw SchemaError(path + "omega", "must be > 0");
  if (!(gamma >= 0.0)) throw SchemaError(path + "gamma", "must be >= 0");
  if (!(d2 > 0.0)) throw SchemaError(path + "d2", "must be > 0");
  return TwoLevelAtom(omega, gamma, d2);
}

AtomState parse_state(const json& root, const std::string& key) {
  const std::string s = require_string(root, "", key.c_str());
  if (s == "g") return AtomState::ground;
  if (s == "e") return AtomState::excited;
  throw SchemaError(key, "must be \"g\" or \"e\"");
}

MediumSpec parse_medium(const json& root, const std::string& key) {
  if (!root.contains(key)) throw SchemaError(key, "missing required key");
  const json& obj = root.at(key);
  if (!obj.is_object()) throw SchemaError(key, "must be an object");
  const std::string path = key + ".";

  const bool direct = obj.contains("n_g") || obj.contains("n_e");
  const bool thermal = obj.contains("n_total") || obj.contains("temperature");
  if (direct && thermal) {
    throw SchemaError(key, "give either n_g/n_e or n_total/temperature");
  }

  MediumSpec spec;
  if (thermal) {
    check_keys(obj, path, {"n_total", "temperature"}, {});
    spec.thermal = true;
    spec.n_total = require_number(obj, path, "n_total");
    spec.temperature = require_number(obj, path, "temperature");
    if (!(spec.n_total > 0.0)) {
      throw SchemaError(path + "n_total", "must be > 0");
    }
    if (!(spec.temperature > 0.0)) {
      throw SchemaError(path + "temperature", "must be > 0");
    }
  } else {
    check_keys(obj, path, {"n_g", "n_e"}, {});
    spec.n_g = require_number(obj, path, "n_g");
    spec.n_e = obj.contains("n_e") ? require_number(obj, path, "n_e") : 0.0;
    if (!(spec.n_g >= 0.0)) throw SchemaError(path + "n_g", "must be >= 0");
    if (!(spec.n_e >= 0.0)) throw SchemaError(path + "n_e", "must be >= 0");
    if (!(spec.n_g + spec.n_e > 0.0)) {
      throw SchemaError(key, "total density must be > 0");
    }
  }
  return spec;
}

SweepSpec parse_sweep(const json& root, bool has_thermal_medium) {
  const json& obj = root.at("sweep");
  if (!obj.is_object()) throw SchemaError("sweep", "must be an object");
  const std::string path = "sweep.";
  check_keys(obj, path, {"axis", "min", "max", "points", "scale"}, {});

  SweepSpec spec;
  spec.axis = require_string(obj, path, "axis");
  static const std::set<std::string> axes = {"geometry", "omega_a", "omega_b",
                                             "gamma_b", "temperature"};
  if (!axes.count(spec.axis)) {
    throw SchemaError(path + "axis",
                      "must be one of geometry, omega_a, omega_b, gamma_b, "
                      "temperature");
  }
  if (spec.axis == "temperature" && !has_thermal_medium) {
    throw SchemaError(path + "axis",
                      "temperature sweep requires a thermal medium");
  }

  spec.min = require_number(obj, path, "min");
  spec.max = require_number(obj, path, "max");
  spec.points = require_int(obj, path, "points");
  if (obj.contains("scale")) {
    const std::string scale = require_string(obj, path, "scale");
    if (scale == "log") {
      spec.log_scale = true;
    } else if (scale != "lin") {
      throw SchemaError(path + "scale", "must be \"lin\" or \"log\"");
    }
  }

  if (spec.points < 2) throw SchemaError(path + "points", "must be >= 2");
  if (!(spec.min < spec.max)) {
    throw SchemaError(path + "min", "must be < max");
  }
  const bool positive_axis = spec.axis != "gamma_b";
  if (positive_axis && !(spec.min > 0.0)) {
    throw SchemaError(path + "min", "must be > 0 for this axis");
  }
  if (spec.log_scale && !(spec.min > 0.0)) {
    throw SchemaError(path + "min", "must be > 0 for log spacing");
  }
  if (!(spec.min >= 0.0)) {
    throw SchemaError(path + "min", "must be >= 0");
  }
  return spec;
}

const char* state_key(AtomState s) {
  return s == AtomState::ground ? "g" : "e";
}

ordered_json atom_json(const TwoLevelAtom& a) {
  ordered_json j;
  j["omega"] = a.omega();
  j["gamma"] = a.gamma();
  j["d2"] = a.d2();
  return j;
}

ordered_json medium_json(const MediumSpec& m) {
  ordered_json j;
  if (m.thermal) {
    j["n_total"] = m.n_total;
    j["temperature"] = m.temperature;
  } else {
    j["n_g"] = m.n_g;
    j["n_e"] = m.n_e;
  }
  return j;
}

}  // namespace

const char* to_string(ProblemKind p) {
  switch (p) {
    case ProblemKind::pair: return "pair";
    case ProblemKind::surface: return "surface";
    case ProblemKind::media: return "media";
    case ProblemKind::lifshitz: return "lifshitz";
  }
  return "?";
}

const char* to_string(OutputFormat f) {
  return f == OutputFormat::csv ? "csv" : "json";
}

RunConfig parse_config(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!root.is_object()) throw SchemaError("$", "top level must be an object");

  const std::string problem_name = require_string(root, "", "problem");
  ProblemKind problem;
  if (problem_name == "pair") {
    problem = ProblemKind::pair;
  } else if (problem_name == "surface") {
    problem = ProblemKind::surface;
  } else if (problem_name == "media") {
    problem = ProblemKind::media;
  } else if (problem_name == "lifshitz") {
    problem = ProblemKind::lifshitz;
  } else {
    throw SchemaError("problem",
                      "must be one of pair, surface, media, lifshitz");
  }

  static const std::set<std::string> global_keys = {
      "problem", "atom_a", "atom_b", "state_a", "state_b",
      "medium_a", "medium_b", "geometry", "sweep", "output"};
  std::set<std::string> allowed = {"problem", "atom_a", "atom_b", "geometry",
                                   "sweep", "output"};
  if (problem == ProblemKind::pair) {
    allowed.insert({"state_a", "state_b"});
  } else if (problem == ProblemKind::surface) {
    allowed.insert({"state_a", "medium_b"});
  } else {
    allowed.insert({"medium_a", "medium_b"});
  }
  check_keys(root, "", allowed, global_keys);

  const TwoLevelAtom atom_a = parse_atom(root, "atom_a");
  const TwoLevelAtom atom_b = parse_atom(root, "atom_b");

  RunConfig cfg{problem, atom_a, atom_b};
  if (problem == ProblemKind::pair) {
    if (!root.contains("state_a")) {
      throw SchemaError("state_a", "missing required key");
    }
    if (!root.contains("state_b")) {
      throw SchemaError("state_b", "missing required key");
    }
    cfg.state_a = parse_state(root, "state_a");
    cfg.state_b = parse_state(root, "state_b");
  } else if (problem == ProblemKind::surface) {
    if (!root.contains("state_a")) {
      throw SchemaError("state_a", "missing required key");
    }
    cfg.state_a = parse_state(root, "state_a");
    cfg.medium_b = parse_medium(root, "medium_b");
  } else {
    cfg.medium_a = parse_medium(root, "medium_a");
    cfg.medium_b = parse_medium(root, "medium_b");
  }

  if (!root.contains("geometry")) {
    throw SchemaError("geometry", "missing required key");
  }
  if (!root.at("geometry").is_number()) {
    throw SchemaError("geometry", "must be a number");
  }
  cfg.geometry = root.at("geometry").get<double>();
  if (!(cfg.geometry > 0.0)) {
    throw SchemaError("geometry", "geometry must be > 0");
  }

  const bool has_thermal =
      (cfg.medium_a && cfg.medium_a->thermal) ||
      (cfg.medium_b && cfg.medium_b->thermal);
  if (root.contains("sweep")) {
    cfg.sweep = parse_sweep(root, has_thermal);
  }

  if (root.contains("output")) {
    const std::string fmt = require_string(root, "", "output");
    if (fmt == "csv") {
      cfg.output = OutputFormat::csv;
    } else if (fmt == "json") {
      cfg.output = OutputFormat::json;
    } else {
      throw SchemaError("output", "must be \"csv\" or \"json\"");
    }
  }
  return cfg;
}

std::string serialize_config(const RunConfig& config) {
  ordered_json j;
  j["problem"] = to_string(config.problem);
  j["atom_a"] = atom_json(config.atom_a);
  if (config.problem == ProblemKind::pair ||
      config.problem == ProblemKind::surface) {
    j["state_a"] = state_key(config.state_a);
  }
  j["atom_b"] = atom_json(config.atom_b);
  if (config.problem == ProblemKind::pair) {
    j["state_b"] = state_key(config.state_b);
  }
  if (config.medium_a) j["medium_a"] = medium_json(*config.medium_a);
  if (config.medium_b) j["medium_b"] = medium_json(*config.medium_b);
  j["geometry"] = config.geometry;
  if (config.sweep) {
    ordered_json s;
    s["axis"] = config.sweep->axis;
    s["min"] = config.sweep->min;
    s["max"] = config.sweep->max;
    s["points"] = config.sweep->points;
    s["scale"] = config.sweep->log_scale ? "log" : "lin";
    j["sweep"] = s;
  }
  j["output"] = to_string(config.output);
  return j.dump();
}

MediumState resolve_medium(const TwoLevelAtom& species,
                           const MediumSpec& spec) {
  if (spec.thermal) {
    return boltzmann_populations(species, spec.n_total, spec.temperature);
  }
  return MediumState(species, spec.n_g, spec.n_e);
}

}  // namespace vdwx
