#pragma once

/**
 * Wire formats.
 *
 * Joint tables:   {"n": 2, "weights": {"TT": 0.2, "TF": 0.4, ...}}
 *   Keys are outcome labels over {T,F} (two-valued) or {T,F,U}
 *   (three-valued) of length n; omitted outcomes carry weight zero; the
 *   weights must sum to 1 within 1e-9 on load and are renormalized exactly.
 *   Writers emit every outcome in canonical order so output is byte-stable.
 *
 * Worlds: {"n_entities": 2, "seed": 0, "dynamics": {...}, "shields": [...]}
 *   dynamics is {"kind": "table", "joint": <two-valued joint>} or
 *   {"kind": "independent", "entities": [<process>...]} with processes
 *   {"kind": "coin", "bias": 0.5} or {"kind": "periodic", "pattern": "TF",
 *   "offset": 0, "fresh_phase": false}.  Each shield is {"kind": "always"},
 *   {"kind": "random_block", "block": 0.25}, or {"kind": "state_dependent",
 *   "block_by_assignment": {"TT": 0.3333, ...}}.
 */

#include <string>

#include <json.hpp>

#include "ontoprob/geometry.hpp"
#include "ontoprob/prob_core.hpp"
#include "ontoprob/shield_sim.hpp"
#include "ontoprob/tfu_algebra.hpp"

namespace ontoprob::io {

using Json = nlohmann::ordered_json;

Json to_json(const ClassicalJoint& joint);
Json to_json(const TfuJoint& joint);
Json to_json(const StateVector& s);
Json to_json(const sim::WorldSpec& spec);

ClassicalJoint classical_joint_from_json(const Json& j);
TfuJoint tfu_joint_from_json(const Json& j);
sim::WorldSpec world_spec_from_json(const Json& j);

// File helpers; throw std::runtime_error when the file cannot be read or
// written, std::invalid_argument on malformed content.
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

ClassicalJoint load_classical_joint(const std::string& path);
TfuJoint load_tfu_joint(const std::string& path);
sim::WorldSpec load_world_spec(const std::string& path);

}  // namespace ontoprob::io
