#pragma once

/**
 * Monte Carlo worlds with two-valued underlying dynamics and a per-entity
 * observability shield.
 *
 * Each trial draws an underlying T/F assignment for every entity (a shared
 * table draw, or independent per-entity processes), then the shield decides
 * per entity whether that trial's value reaches the observer.  A blocked
 * entity is recorded as U.  The empirical three-valued frequency table is
 * what a shielded observer could actually tabulate, so its relative
 * frequencies converge to the relative probabilities of the corresponding
 * three-valued joint.
 *
 * Determinism: every random decision draws from a stream addressed by
 * (seed, channel, entity, trial) — see rng.hpp — so runs are bit-exact for
 * a fixed spec and replay identically under any evaluation order.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ontoprob/basis.hpp"
#include "ontoprob/errors.hpp"
#include "ontoprob/prob_core.hpp"
#include "ontoprob/rng.hpp"
#include "ontoprob/tfu_algebra.hpp"

namespace ontoprob::sim {

// --- dynamics -------------------------------------------------------------

// One shared draw per trial from a joint over all entities.
struct TableDynamics {
  ClassicalJoint joint;
};

// Independent-per-entity process: biased coin.
struct CoinDynamics {
  double bias = 0.5;  // probability of T
};

// Independent-per-entity process: a T/F cycle.  With persistent phase the
// value at trial t is pattern[(offset + t) mod len] — fully deterministic;
// with fresh phase the position is drawn uniformly each trial.
struct PeriodicDynamics {
  std::string pattern;  // nonempty string over {T, F}
  int offset = 0;
  bool fresh_phase = false;
};

using EntityDynamics = std::variant<CoinDynamics, PeriodicDynamics>;

struct IndependentDynamics {
  std::vector<EntityDynamics> entities;  // one per entity
};

using Dynamics = std::variant<IndependentDynamics, TableDynamics>;

// --- shields ----------------------------------------------------------------

struct AlwaysObservable {};

// Blocks with a fixed probability each trial.
struct RandomBlock {
  double block = 0.0;
};

// Block probability depends on the full underlying assignment (label over
// {T,F} of length n); unlisted assignments never block.
struct StateDependentBlock {
  std::map<std::string, double> block_by_assignment;
};

using Shield = std::variant<AlwaysObservable, RandomBlock, StateDependentBlock>;

// --- world -----------------------------------------------------------------

struct WorldSpec {
  int n_entities = 1;
  Dynamics dynamics;
  std::vector<Shield> shields;  // one per entity
  std::uint64_t seed = 0;

  void validate() const;  // throws std::invalid_argument on bad shape
};

// Observed three-valued outcome counts.
class EmpiricalJoint {
 public:
  EmpiricalJoint(int n, std::vector<std::uint64_t> counts);

  int n() const { return n_; }
  std::uint64_t trials() const { return trials_; }
  std::uint64_t count(std::size_t cell) const { return counts_.at(cell); }
  const std::vector<std::uint64_t>& counts() const { return counts_; }

  // Frequency table counts/trials; requires at least one trial.
  TfuJoint to_joint() const;

 private:
  int n_;
  std::vector<std::uint64_t> counts_;
  std::uint64_t trials_;
};

// Runs `trials` independent trials of the world.  Deterministic for a fixed
// spec; trial t of entity e depends only on (seed, channel, e, t).
EmpiricalJoint run(const WorldSpec& spec, std::uint64_t trials);

// Plug-in estimates of relative probability / relative conditional from
// counts.  Throws InsufficientData when the observed reference class is
// empty (and ConditioningOnNull when the restriction never occurred).
double empirical_relative(const EmpiricalJoint& sample, const RelEvent& e);
double empirical_relative(const EmpiricalJoint& sample, const RelEvent& e, const RelEvent& given);

// The worked two-entity example used across the test-suites: underlying
// table TT:0.3, TF:0.3, FT:0.2, FF:0.2 with entity 1 shielded one third of
// the time when the underlying assignment is TT.
WorldSpec white_black_world(std::uint64_t seed);

// The three-valued joint that world induces (exact weights).
TfuJoint white_black_expected();

}  // namespace ontoprob::sim
