#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "ontoprob/event_parse.hpp"
#include "ontoprob/json_io.hpp"

using namespace ontoprob;
using io::Json;

namespace {

// Unique temp path per test binary run.
std::string temp_path(const char* stem) {
  return std::string("format_test_") + stem + ".json";
}

}  // namespace

TEST_CASE("two-valued joints round-trip and list every outcome in order") {
  ClassicalJoint joint(2, {0.2, 0.4, 0.1, 0.3});
  Json j = io::to_json(joint);
  CHECK(j["n"] == 2);
  // Canonical order makes the serialization byte-stable.
  CHECK(j["weights"].dump() == R"({"TT":0.2,"TF":0.4,"FT":0.1,"FF":0.3})");
  ClassicalJoint back = io::classical_joint_from_json(j);
  for (std::uint32_t cell = 0; cell < 4; ++cell) CHECK(back.weight(cell) == joint.weight(cell));
}

TEST_CASE("three-valued joints round-trip with zero cells written explicitly") {
  std::vector<double> w(9, 0.0);
  w[tfu_cell("TT", 2)] = 0.5;
  w[tfu_cell("UU", 2)] = 0.5;
  TfuJoint joint(2, std::move(w));
  Json j = io::to_json(joint);
  CHECK(j["weights"].size() == 9);
  TfuJoint back = io::tfu_joint_from_json(j);
  for (std::size_t cell = 0; cell < 9; ++cell) CHECK(back.weight(cell) == joint.weight(cell));
}

TEST_CASE("omitted outcomes load as zero") {
  Json j = Json::parse(R"({"n": 2, "weights": {"TT": 0.5, "FF": 0.5}})");
  ClassicalJoint joint = io::classical_joint_from_json(j);
  CHECK(joint.weight(classical_cell("TT", 2)) == 0.5);
  CHECK(joint.weight(classical_cell("TF", 2)) == 0.0);

  Json t = Json::parse(R"({"n": 1, "weights": {"U": 1.0}})");
  CHECK(io::tfu_joint_from_json(t).weight(tfu_cell("U", 1)) == 1.0);
}

TEST_CASE("weight tables that nearly sum to one are renormalized") {
  Json j = Json::parse(R"({"n": 1, "weights": {"T": 0.6, "F": 0.4000000001}})");
  ClassicalJoint joint = io::classical_joint_from_json(j);
  double sum = joint.weight(0) + joint.weight(1);
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("malformed joint documents are rejected with the reason") {
  auto load = [](const char* text) { return io::classical_joint_from_json(Json::parse(text)); };
  CHECK_THROWS_AS(load(R"({"weights": {"T": 1.0}})"), std::invalid_argument);       // no n
  CHECK_THROWS_AS(load(R"({"n": 0, "weights": {}})"), std::invalid_argument);       // bad n
  CHECK_THROWS_AS(load(R"({"n": 1, "weights": []})"), std::invalid_argument);       // not object
  CHECK_THROWS_AS(load(R"({"n": 1, "weights": {"X": 1.0}})"), std::invalid_argument);
  CHECK_THROWS_AS(load(R"({"n": 1, "weights": {"TT": 1.0}})"), std::invalid_argument);
  CHECK_THROWS_AS(load(R"({"n": 1, "weights": {"T": -0.2, "F": 1.2}})"), std::invalid_argument);
  CHECK_THROWS_AS(load(R"({"n": 1, "weights": {"T": 0.6, "F": 0.5}})"), std::invalid_argument);
  CHECK_THROWS_AS(load(R"({"n": 1, "weights": {"T": "x"}})"), std::invalid_argument);
  // U labels belong to the three-valued loader only.
  CHECK_THROWS_AS(load(R"({"n": 1, "weights": {"U": 1.0}})"), std::invalid_argument);
}

TEST_CASE("world specs round-trip through JSON for every dynamics and shield kind") {
  sim::WorldSpec w;
  w.n_entities = 3;
  w.seed = 77;
  w.dynamics = sim::IndependentDynamics{{
      sim::CoinDynamics{0.25},
      sim::PeriodicDynamics{"TFF", 1, true},
      sim::CoinDynamics{0.5},
  }};
  w.shields = {sim::AlwaysObservable{}, sim::RandomBlock{0.125},
               sim::StateDependentBlock{{{"TTT", 0.5}, {"FFF", 1.0}}}};
  Json j = io::to_json(w);
  sim::WorldSpec back = io::world_spec_from_json(j);
  back.validate();
  CHECK(back.n_entities == 3);
  CHECK(back.seed == 77);
  CHECK(io::to_json(back).dump() == j.dump());

  sim::WorldSpec table = sim::white_black_world(5);
  sim::WorldSpec table_back = io::world_spec_from_json(io::to_json(table));
  table_back.validate();
  CHECK(io::to_json(table_back).dump() == io::to_json(table).dump());
}

TEST_CASE("world documents with unknown kinds or bad shapes are rejected") {
  auto load = [](const char* text) { return io::world_spec_from_json(Json::parse(text)); };
  CHECK_THROWS_AS(load(R"({"n_entities": 1, "dynamics": {"kind": "magic"}, "shields": [{"kind": "always"}]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(load(R"({"n_entities": 1, "dynamics": {"kind": "independent", "entities": [{"kind": "coin", "bias": 0.5}]}, "shields": [{"kind": "wat"}]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(load(R"({"dynamics": {"kind": "independent", "entities": []}, "shields": []})"),
                  std::invalid_argument);
  // Seed is optional and defaults to zero.
  sim::WorldSpec w = load(R"({"n_entities": 1, "dynamics": {"kind": "independent", "entities": [{"kind": "coin", "bias": 0.5}]}, "shields": [{"kind": "always"}]})");
  CHECK(w.seed == 0);
}

TEST_CASE("state vectors serialize components with labels") {
  StateVector s = lift_classical(ClassicalJoint(1, {0.25, 0.75}));
  Json j = io::to_json(s);
  CHECK(j["labels"] == Json::array({"T", "F"}));
  CHECK(j["components"].size() == 2);
  CHECK(j["components"][0].get<double>() == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("files round-trip and missing or broken files raise distinct errors") {
  std::string path = temp_path("roundtrip");
  ClassicalJoint joint(1, {0.25, 0.75});
  io::write_json_file(path, io::to_json(joint));
  ClassicalJoint back = io::load_classical_joint(path);
  CHECK(back.weight(0) == 0.25);

  CHECK_THROWS_AS(io::read_json_file("does_not_exist.json"), std::runtime_error);
  std::ofstream(path) << "{ not json";
  CHECK_THROWS_AS(io::read_json_file(path), std::invalid_argument);
  std::remove(path.c_str());
}

TEST_CASE("tfu and world loaders reuse the file layer") {
  std::string path = temp_path("tfu");
  std::vector<double> w(3, 0.0);
  w[2] = 1.0;
  io::write_json_file(path, io::to_json(TfuJoint(1, std::move(w))));
  TfuJoint t = io::load_tfu_joint(path);
  CHECK(t.weight(2) == 1.0);
  std::remove(path.c_str());

  std::string wpath = temp_path("world");
  io::write_json_file(wpath, io::to_json(sim::white_black_world(3)));
  sim::WorldSpec spec = io::load_world_spec(wpath);
  CHECK(spec.seed == 3);
  CHECK(spec.n_entities == 2);
  std::remove(wpath.c_str());
}

TEST_CASE("literal conjunction parser accepts the documented grammar") {
  RelEvent e = parse_rel_event("p0 & !p2");
  REQUIRE(e.literals().size() == 2);
  CHECK(e.literals()[0] == std::pair<PropositionId, bool>{0, true});
  CHECK(e.literals()[1] == std::pair<PropositionId, bool>{2, false});
  CHECK(parse_rel_event("  !p1  ").literals().size() == 1);
  CHECK(parse_rel_event("").literals().empty());
  CHECK(parse_rel_event("   ").literals().empty());
}

TEST_CASE("literal conjunction parser rejects what the grammar excludes") {
  CHECK_THROWS_AS(parse_rel_event("p0 & p0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rel_event("p0 | p1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rel_event("p0 &"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rel_event("& p0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rel_event("p0 p1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rel_event("!!p0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rel_event("p99"), std::invalid_argument);  // above the cap
}
