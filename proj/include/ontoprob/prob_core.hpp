#pragma once

/**
 * Finite joint distributions over n two-valued propositions, Boolean event
 * trees over those propositions, and the inequality
 *
 *     p(a AND b) + p(NOT b AND c) >= p(a AND c)
 *
 * both as a weight computation on a joint and as the underlying set
 * inclusion (a AND b) OR (NOT b AND c) >= (a AND c) on an explicit universe.
 *
 * BasicJoint is templated on the weight type so the same code runs with
 * doubles and with exact rationals (see exact.hpp).
 */

#include <cmath>
#include <cstdint>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "ontoprob/basis.hpp"
#include "ontoprob/errors.hpp"

namespace ontoprob {

template <typename W>
class BasicJoint {
 public:
  // Weights must be in canonical outcome order (see basis.hpp), none
  // negative, and sum to one (within 1e-12 for floating-point weights,
  // exactly otherwise).
  BasicJoint(int n, std::vector<W> weights) : n_(n), w_(std::move(weights)) {
    if (n < 1 || n > kMaxClassicalPropositions)
      throw std::invalid_argument("joint: proposition count " + std::to_string(n) +
                                  " outside [1, " + std::to_string(kMaxClassicalPropositions) + "]");
    if (w_.size() != pow2(n_))
      throw std::invalid_argument("joint: expected " + std::to_string(pow2(n_)) +
                                  " weights, got " + std::to_string(w_.size()));
    W sum{0};
    for (const W& w : w_) {
      if (w < W{0}) throw std::invalid_argument("joint: negative weight");
      sum += w;
    }
    if constexpr (std::is_floating_point_v<W>) {
      if (std::abs(sum - W{1}) > W{1e-12})
        throw std::invalid_argument("joint: weights sum to " + std::to_string(sum) + ", not 1");
    } else {
      if (sum != W{1}) throw std::invalid_argument("joint: weights do not sum to 1 exactly");
    }
  }

  static BasicJoint uniform(int n) {
    std::vector<W> w(pow2(n), W{1} / W(static_cast<int>(pow2(n))));
    return BasicJoint(n, std::move(w));
  }

  static BasicJoint point_mass(int n, std::uint32_t cell) {
    if (n < 1 || n > kMaxClassicalPropositions || cell >= pow2(n))
      throw std::invalid_argument("point_mass: outcome index out of range");
    std::vector<W> w(pow2(n), W{0});
    w[cell] = W{1};
    return BasicJoint(n, std::move(w));
  }

  int n() const { return n_; }
  std::size_t size() const { return w_.size(); }
  const W& weight(std::uint32_t cell) const { return w_.at(cell); }
  const std::vector<W>& weights() const { return w_; }

 private:
  int n_;
  std::vector<W> w_;
};

using ClassicalJoint = BasicJoint<double>;

// Boolean formula over propositions; immutable, cheap to copy.
class Event {
 public:
  static Event atom(PropositionId id);
  static Event negation(Event e);
  static Event conjunction(Event a, Event b);
  static Event disjunction(Event a, Event b);

  // Truth under a two-valued outcome with n propositions.  Throws
  // UnknownProposition if the event mentions an index >= n.
  bool eval(std::uint32_t cell, int n) const;

  // Largest proposition index mentioned.
  PropositionId max_proposition() const;

  // Infix rendering with minimal parentheses, e.g. "!(p0 & p1) | p2".
  std::string to_string() const;

  struct Node;  // defined in the implementation file

 private:
  explicit Event(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
  std::shared_ptr<const Node> root_;
};

inline Event operator!(Event e) { return Event::negation(std::move(e)); }
inline Event operator&(Event a, Event b) { return Event::conjunction(std::move(a), std::move(b)); }
inline Event operator|(Event a, Event b) { return Event::disjunction(std::move(a), std::move(b)); }

// Total weight of outcomes satisfying e.
template <typename W>
W probability(const BasicJoint<W>& joint, const Event& e) {
  W sum{0};
  for (std::uint32_t cell = 0; cell < joint.size(); ++cell)
    if (e.eval(cell, joint.n())) sum += joint.weight(cell);
  return sum;
}

// p(e | given); throws ConditioningOnNull when p(given) is zero.
template <typename W>
W conditional(const BasicJoint<W>& joint, const Event& e, const Event& given) {
  W num{0}, den{0};
  for (std::uint32_t cell = 0; cell < joint.size(); ++cell) {
    if (!given.eval(cell, joint.n())) continue;
    den += joint.weight(cell);
    if (e.eval(cell, joint.n())) num += joint.weight(cell);
  }
  if (den == W{0}) throw ConditioningOnNull("conditional: conditioning event has zero weight");
  return num / den;
}

// p(a AND b) + p(NOT b AND c) - p(a AND c); never negative for a
// well-formed joint (up to rounding), which the tests exercise.
template <typename W>
W we_inequality_slack(const BasicJoint<W>& joint, const Event& a, const Event& b, const Event& c) {
  return probability(joint, a & b) + probability(joint, !b & c) - probability(joint, a & c);
}

// Set form of the same inequality on a universe of `universe_size` points
// (bitmask subsets, universe_size <= 64): checks
// (a AND b) OR (NOT b AND c) contains (a AND c).
bool we_set_inclusion_check(int universe_size, std::uint64_t a, std::uint64_t b, std::uint64_t c);

}  // namespace ontoprob
