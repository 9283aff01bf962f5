#include "ontoprob/shield_sim.hpp"

#include <algorithm>
#include <cmath>

namespace ontoprob::sim {

namespace {

void validate_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument(std::string(what) + " must lie in [0, 1]");
}

}  // namespace

void WorldSpec::validate() const {
  if (n_entities < 1 || n_entities > kMaxTfuPropositions)
    throw std::invalid_argument("world: entity count outside [1, " +
                                std::to_string(kMaxTfuPropositions) + "]");
  if (static_cast<int>(shields.size()) != n_entities)
    throw std::invalid_argument("world: expected " + std::to_string(n_entities) +
                                " shields, got " + std::to_string(shields.size()));
  if (const auto* table = std::get_if<TableDynamics>(&dynamics)) {
    if (table->joint.n() != n_entities)
      throw std::invalid_argument("world: table joint has " + std::to_string(table->joint.n()) +
                                  " propositions for " + std::to_string(n_entities) + " entities");
  } else {
    const auto& indep = std::get<IndependentDynamics>(dynamics);
    if (static_cast<int>(indep.entities.size()) != n_entities)
      throw std::invalid_argument("world: expected " + std::to_string(n_entities) +
                                  " entity processes, got " +
                                  std::to_string(indep.entities.size()));
    for (const EntityDynamics& d : indep.entities) {
      if (const auto* coin = std::get_if<CoinDynamics>(&d)) {
        validate_probability(coin->bias, "coin bias");
      } else {
        const auto& cyc = std::get<PeriodicDynamics>(d);
        if (cyc.pattern.empty()) throw std::invalid_argument("periodic pattern must be nonempty");
        if (cyc.pattern.find_first_not_of("TF") != std::string::npos)
          throw std::invalid_argument("periodic pattern must use only T and F");
        if (cyc.offset < 0) throw std::invalid_argument("periodic offset must be nonnegative");
      }
    }
  }
  for (const Shield& s : shields) {
    if (const auto* rb = std::get_if<RandomBlock>(&s)) {
      validate_probability(rb->block, "shield block probability");
    } else if (const auto* sd = std::get_if<StateDependentBlock>(&s)) {
      for (const auto& [label, p] : sd->block_by_assignment) {
        if (static_cast<int>(label.size()) != n_entities ||
            label.find_first_not_of("TF") != std::string::npos)
          throw std::invalid_argument("shield assignment key '" + label +
                                      "' is not a T/F string of length " +
                                      std::to_string(n_entities));
        validate_probability(p, "shield block probability");
      }
    }
  }
}

EmpiricalJoint::EmpiricalJoint(int n, std::vector<std::uint64_t> counts)
    : n_(n), counts_(std::move(counts)), trials_(0) {
  if (n < 1 || n > kMaxTfuPropositions)
    throw std::invalid_argument("empirical joint: entity count out of range");
  if (counts_.size() != pow3(n_))
    throw std::invalid_argument("empirical joint: expected " + std::to_string(pow3(n_)) +
                                " counts, got " + std::to_string(counts_.size()));
  for (std::uint64_t c : counts_) trials_ += c;
}

TfuJoint EmpiricalJoint::to_joint() const {
  if (trials_ == 0) throw InsufficientData("empirical joint: no trials recorded");
  std::vector<double> w(counts_.size());
  for (std::size_t i = 0; i < counts_.size(); ++i)
    w[i] = static_cast<double>(counts_[i]) / static_cast<double>(trials_);
  return TfuJoint(n_, std::move(w));
}

namespace {

// Underlying T/F assignment for one trial, as a vector of truth bits.
std::vector<bool> draw_assignment(const WorldSpec& spec, std::uint64_t trial) {
  std::vector<bool> truth(spec.n_entities);
  if (const auto* table = std::get_if<TableDynamics>(&spec.dynamics)) {
    // Single shared draw; entity slot 0 of the dynamics channel.
    RandomStream rng(spec.seed, StreamChannel::kDynamics, 0, trial);
    double u = rng.next_unit();
    const auto& weights = table->joint.weights();
    double acc = 0.0;
    std::uint32_t cell = static_cast<std::uint32_t>(weights.size()) - 1;
    for (std::uint32_t i = 0; i < weights.size(); ++i) {
      acc += weights[i];
      if (u < acc) {
        cell = i;
        break;
      }
    }
    for (int k = 0; k < spec.n_entities; ++k)
      truth[k] = classical_truth(cell, spec.n_entities, k);
    return truth;
  }
  const auto& indep = std::get<IndependentDynamics>(spec.dynamics);
  for (int k = 0; k < spec.n_entities; ++k) {
    const EntityDynamics& d = indep.entities[k];
    if (const auto* coin = std::get_if<CoinDynamics>(&d)) {
      RandomStream rng(spec.seed, StreamChannel::kDynamics, static_cast<std::uint64_t>(k), trial);
      truth[k] = rng.next_bool(coin->bias);
    } else {
      const auto& cyc = std::get<PeriodicDynamics>(d);
      std::uint64_t len = cyc.pattern.size();
      std::uint64_t pos;
      if (cyc.fresh_phase) {
        RandomStream rng(spec.seed, StreamChannel::kDynamics, static_cast<std::uint64_t>(k),
                         trial);
        pos = (static_cast<std::uint64_t>(cyc.offset) + rng.next_below(len)) % len;
      } else {
        pos = (static_cast<std::uint64_t>(cyc.offset) + trial) % len;
      }
      truth[k] = cyc.pattern[pos] == 'T';
    }
  }
  return truth;
}

bool shield_blocks(const Shield& shield, const WorldSpec& spec, const std::vector<bool>& truth,
                   int entity, std::uint64_t trial) {
  double block;
  if (std::holds_alternative<AlwaysObservable>(shield)) {
    return false;
  } else if (const auto* rb = std::get_if<RandomBlock>(&shield)) {
    block = rb->block;
  } else {
    std::string label(truth.size(), 'F');
    for (std::size_t i = 0; i < truth.size(); ++i)
      if (truth[i]) label[i] = 'T';
    const auto& by = std::get<StateDependentBlock>(shield).block_by_assignment;
    auto it = by.find(label);
    if (it == by.end()) return false;
    block = it->second;
  }
  RandomStream rng(spec.seed, StreamChannel::kShield, static_cast<std::uint64_t>(entity), trial);
  return rng.next_bool(block);
}

}  // namespace

EmpiricalJoint run(const WorldSpec& spec, std::uint64_t trials) {
  spec.validate();
  if (trials < 1) throw std::invalid_argument("run: need at least one trial");
  std::vector<std::uint64_t> counts(pow3(spec.n_entities), 0);
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::vector<bool> truth = draw_assignment(spec, t);
    std::size_t cell = 0;
    for (int k = 0; k < spec.n_entities; ++k) {
      Tfu digit;
      if (shield_blocks(spec.shields[k], spec, truth, k, t))
        digit = Tfu::U;
      else
        digit = truth[k] ? Tfu::T : Tfu::F;
      cell = cell * 3 + static_cast<std::size_t>(digit);
    }
    counts[cell] += 1;
  }
  return EmpiricalJoint(spec.n_entities, std::move(counts));
}

namespace {

void check_entities(const RelEvent& e, int n) {
  for (const auto& [p, v] : e.literals()) {
    (void)v;
    if (p >= n)
      throw UnknownProposition("empirical_relative: event mentions entity " + std::to_string(p) +
                               " but the sample has only " + std::to_string(n));
  }
}

}  // namespace

double empirical_relative(const EmpiricalJoint& sample, const RelEvent& e) {
  check_entities(e, sample.n());
  std::uint64_t num = 0, den = 0;
  for (std::size_t cell = 0; cell < sample.counts().size(); ++cell) {
    std::uint64_t c = sample.count(cell);
    if (c == 0 || !e.observable(cell, sample.n())) continue;
    den += c;
    if (e.holds(cell, sample.n())) num += c;
  }
  if (den == 0)
    throw InsufficientData("empirical_relative: no trials where " + e.to_string() +
                           " was observable");
  return static_cast<double>(num) / static_cast<double>(den);
}

double empirical_relative(const EmpiricalJoint& sample, const RelEvent& e, const RelEvent& given) {
  check_entities(e, sample.n());
  check_entities(given, sample.n());
  std::uint64_t restriction = 0, num = 0, den = 0;
  for (std::size_t cell = 0; cell < sample.counts().size(); ++cell) {
    std::uint64_t c = sample.count(cell);
    if (c == 0 || !given.holds(cell, sample.n())) continue;
    restriction += c;
    if (!e.observable(cell, sample.n())) continue;
    den += c;
    if (e.holds(cell, sample.n())) num += c;
  }
  if (restriction == 0)
    throw ConditioningOnNull("empirical_relative: no trials where " + given.to_string() +
                             " held");
  if (den == 0)
    throw InsufficientData("empirical_relative: no trials where " + e.to_string() +
                           " was observable inside the restriction");
  return static_cast<double>(num) / static_cast<double>(den);
}

WorldSpec white_black_world(std::uint64_t seed) {
  WorldSpec spec;
  spec.n_entities = 2;
  spec.dynamics = TableDynamics{ClassicalJoint(2, {0.3, 0.3, 0.2, 0.2})};
  spec.shields = {AlwaysObservable{},
                  StateDependentBlock{{{"TT", 1.0 / 3.0}}}};
  spec.seed = seed;
  return spec;
}

TfuJoint white_black_expected() {
  // Entity 1's third of the TT mass moves to TU; everything else is direct.
  std::vector<double> w(9, 0.0);
  w[tfu_cell("TT", 2)] = 0.2;
  w[tfu_cell("TU", 2)] = 0.1;
  w[tfu_cell("TF", 2)] = 0.3;
  w[tfu_cell("FT", 2)] = 0.2;
  w[tfu_cell("FF", 2)] = 0.2;
  return TfuJoint(2, std::move(w));
}

}  // namespace ontoprob::sim
