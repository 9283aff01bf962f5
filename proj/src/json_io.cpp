#include "ontoprob/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace ontoprob::io {

namespace {

const Json& require(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key))
    throw std::invalid_argument(std::string(what) + ": missing \"" + key + "\"");
  return j.at(key);
}

int require_n(const Json& j, const char* what, int max) {
  const Json& n = require(j, "n", what);
  if (!n.is_number_integer() || n.get<int>() < 1 || n.get<int>() > max)
    throw std::invalid_argument(std::string(what) + ": \"n\" must be an integer in [1, " +
                                std::to_string(max) + "]");
  return n.get<int>();
}

// Shared loader skeleton: label decoding differs, everything else is the
// same.  Sum tolerance on load is 1e-9; weights are then renormalized so
// the in-memory invariant (1e-12) always holds.
template <typename CellFn>
std::vector<double> read_weights(const Json& j, const char* what, std::size_t cells,
                                 CellFn to_cell) {
  const Json& weights = require(j, "weights", what);
  if (!weights.is_object())
    throw std::invalid_argument(std::string(what) + ": \"weights\" must be an object");
  std::vector<double> w(cells, 0.0);
  double sum = 0.0;
  for (const auto& [label, value] : weights.items()) {
    if (!value.is_number())
      throw std::invalid_argument(std::string(what) + ": weight \"" + label +
                                  "\" is not a number");
    double v = value.template get<double>();
    if (v < 0.0)
      throw std::invalid_argument(std::string(what) + ": weight \"" + label + "\" is negative");
    w[to_cell(label)] = v;
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw std::invalid_argument(std::string(what) + ": weights sum to " + std::to_string(sum) +
                                ", expected 1 within 1e-9");
  for (double& v : w) v /= sum;
  return w;
}

}  // namespace

Json to_json(const ClassicalJoint& joint) {
  Json weights = Json::object();
  for (std::uint32_t cell = 0; cell < joint.size(); ++cell)
    weights[classical_label(cell, joint.n())] = joint.weight(cell);
  return Json{{"n", joint.n()}, {"weights", std::move(weights)}};
}

Json to_json(const TfuJoint& joint) {
  Json weights = Json::object();
  for (std::size_t cell = 0; cell < joint.size(); ++cell)
    weights[tfu_label(cell, joint.n())] = joint.weight(cell);
  return Json{{"n", joint.n()}, {"weights", std::move(weights)}};
}

Json to_json(const StateVector& s) {
  return Json{{"dim", s.dim()}, {"labels", s.labels()}, {"components", s.components()}};
}

ClassicalJoint classical_joint_from_json(const Json& j) {
  int n = require_n(j, "two-valued joint", kMaxClassicalPropositions);
  auto w = read_weights(j, "two-valued joint", pow2(n),
                        [n](const std::string& label) { return classical_cell(label, n); });
  return ClassicalJoint(n, std::move(w));
}

TfuJoint tfu_joint_from_json(const Json& j) {
  int n = require_n(j, "three-valued joint", kMaxTfuPropositions);
  auto w = read_weights(j, "three-valued joint", pow3(n),
                        [n](const std::string& label) { return tfu_cell(label, n); });
  return TfuJoint(n, std::move(w));
}

Json to_json(const sim::WorldSpec& spec) {
  Json dynamics;
  if (const auto* table = std::get_if<sim::TableDynamics>(&spec.dynamics)) {
    dynamics = Json{{"kind", "table"}, {"joint", to_json(table->joint)}};
  } else {
    Json entities = Json::array();
    for (const auto& d : std::get<sim::IndependentDynamics>(spec.dynamics).entities) {
      if (const auto* coin = std::get_if<sim::CoinDynamics>(&d))
        entities.push_back(Json{{"kind", "coin"}, {"bias", coin->bias}});
      else {
        const auto& cyc = std::get<sim::PeriodicDynamics>(d);
        entities.push_back(Json{{"kind", "periodic"},
                                {"pattern", cyc.pattern},
                                {"offset", cyc.offset},
                                {"fresh_phase", cyc.fresh_phase}});
      }
    }
    dynamics = Json{{"kind", "independent"}, {"entities", std::move(entities)}};
  }
  Json shields = Json::array();
  for (const auto& s : spec.shields) {
    if (std::holds_alternative<sim::AlwaysObservable>(s))
      shields.push_back(Json{{"kind", "always"}});
    else if (const auto* rb = std::get_if<sim::RandomBlock>(&s))
      shields.push_back(Json{{"kind", "random_block"}, {"block", rb->block}});
    else {
      const auto& sd = std::get<sim::StateDependentBlock>(s);
      Json by = Json::object();
      for (const auto& [label, p] : sd.block_by_assignment) by[label] = p;
      shields.push_back(Json{{"kind", "state_dependent"}, {"block_by_assignment", std::move(by)}});
    }
  }
  return Json{{"n_entities", spec.n_entities},
              {"seed", spec.seed},
              {"dynamics", std::move(dynamics)},
              {"shields", std::move(shields)}};
}

namespace {

double read_probability(const Json& j, const char* key, const char* what) {
  const Json& v = require(j, key, what);
  if (!v.is_number())
    throw std::invalid_argument(std::string(what) + ": \"" + key + "\" is not a number");
  double p = v.get<double>();
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument(std::string(what) + ": \"" + key + "\" outside [0, 1]");
  return p;
}

std::string read_kind(const Json& j, const char* what) {
  const Json& k = require(j, "kind", what);
  if (!k.is_string())
    throw std::invalid_argument(std::string(what) + ": \"kind\" is not a string");
  return k.get<std::string>();
}

}  // namespace

sim::WorldSpec world_spec_from_json(const Json& j) {
  sim::WorldSpec spec;
  const Json& n = require(j, "n_entities", "world");
  if (!n.is_number_integer() || n.get<int>() < 1)
    throw std::invalid_argument("world: \"n_entities\" must be a positive integer");
  spec.n_entities = n.get<int>();
  spec.seed = j.value("seed", std::uint64_t{0});

  const Json& dyn = require(j, "dynamics", "world");
  std::string kind = read_kind(dyn, "dynamics");
  if (kind == "table") {
    spec.dynamics = sim::TableDynamics{classical_joint_from_json(require(dyn, "joint", "dynamics"))};
  } else if (kind == "independent") {
    const Json& entities = require(dyn, "entities", "dynamics");
    if (!entities.is_array())
      throw std::invalid_argument("dynamics: \"entities\" must be an array");
    sim::IndependentDynamics indep;
    for (const Json& d : entities) {
      std::string dk = read_kind(d, "entity process");
      if (dk == "coin") {
        indep.entities.push_back(sim::CoinDynamics{read_probability(d, "bias", "coin")});
      } else if (dk == "periodic") {
        sim::PeriodicDynamics cyc;
        const Json& pattern = require(d, "pattern", "periodic process");
        if (!pattern.is_string())
          throw std::invalid_argument("periodic process: \"pattern\" is not a string");
        cyc.pattern = pattern.get<std::string>();
        cyc.offset = d.value("offset", 0);
        cyc.fresh_phase = d.value("fresh_phase", false);
        indep.entities.push_back(std::move(cyc));
      } else {
        throw std::invalid_argument("entity process: unknown kind \"" + dk + "\"");
      }
    }
    spec.dynamics = std::move(indep);
  } else {
    throw std::invalid_argument("dynamics: unknown kind \"" + kind + "\"");
  }

  const Json& shields = require(j, "shields", "world");
  if (!shields.is_array()) throw std::invalid_argument("world: \"shields\" must be an array");
  for (const Json& s : shields) {
    std::string sk = read_kind(s, "shield");
    if (sk == "always") {
      spec.shields.push_back(sim::AlwaysObservable{});
    } else if (sk == "random_block") {
      spec.shields.push_back(sim::RandomBlock{read_probability(s, "block", "shield")});
    } else if (sk == "state_dependent") {
      const Json& by = require(s, "block_by_assignment", "shield");
      if (!by.is_object())
        throw std::invalid_argument("shield: \"block_by_assignment\" must be an object");
      sim::StateDependentBlock sd;
      for (const auto& [label, value] : by.items()) {
        if (!value.is_number() || !(value.get<double>() >= 0.0 && value.get<double>() <= 1.0))
          throw std::invalid_argument("shield: block probability for \"" + label +
                                      "\" outside [0, 1]");
        sd.block_by_assignment[label] = value.get<double>();
      }
      spec.shields.push_back(std::move(sd));
    } else {
      throw std::invalid_argument("shield: unknown kind \"" + sk + "\"");
    }
  }
  spec.validate();
  return spec;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << j.dump(2) << '\n';
  if (!out) throw std::runtime_error("failed writing " + path);
}

ClassicalJoint load_classical_joint(const std::string& path) {
  return classical_joint_from_json(read_json_file(path));
}

TfuJoint load_tfu_joint(const std::string& path) {
  return tfu_joint_from_json(read_json_file(path));
}

sim::WorldSpec load_world_spec(const std::string& path) {
  return world_spec_from_json(read_json_file(path));
}

}  // namespace ontoprob::io
