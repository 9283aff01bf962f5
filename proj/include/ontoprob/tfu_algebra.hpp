#pragma once

/**
 * Joint distributions over three-valued propositions (true / false /
 * unobservable) and the relative-probability algebra on them.
 *
 * The relative probability of a conjunction of literals is the weight where
 * every mentioned proposition is observable AND the literals hold, divided
 * by the weight where every mentioned proposition is observable at all.
 * Unmentioned propositions are marginalized in both halves.  With no
 * unobservable mass the algebra collapses to ordinary probability; with it,
 * familiar identities deform: p(p)p(q|p) = p(q)p(p|q) no longer holds (see
 * commutation_gap), and the conjunction inequality
 * [a & b] + [!b & c] >= [a & c] acquires counterexamples (see
 * strengthened_we_slack and search_we_violation).
 */

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ontoprob/basis.hpp"
#include "ontoprob/errors.hpp"
#include "ontoprob/prob_core.hpp"

namespace ontoprob {

class TfuJoint {
 public:
  // Weights in canonical three-valued order (basis.hpp): none negative,
  // summing to one within 1e-12.
  TfuJoint(int n, std::vector<double> weights);

  static TfuJoint uniform(int n);
  static TfuJoint point_mass(int n, std::size_t cell);

  int n() const { return n_; }
  std::size_t size() const { return w_.size(); }
  double weight(std::size_t cell) const { return w_.at(cell); }
  const std::vector<double>& weights() const { return w_; }

  // Any weight on an outcome containing a U digit?
  bool has_unobservable_mass() const;

 private:
  int n_;
  std::vector<double> w_;
};

// Embed a two-valued joint (no unobservable mass anywhere).
TfuJoint tfu_from_classical(const ClassicalJoint& joint);

// Project back; throws std::invalid_argument if any U cell carries weight.
ClassicalJoint classical_from_tfu(const TfuJoint& joint);

// Conjunction of literals, at most one per proposition.  The empty
// conjunction is allowed and mentions nothing.
class RelEvent {
 public:
  RelEvent() = default;
  // Pairs of (proposition, asserted truth value); true means the
  // proposition is asserted true.  Throws on a repeated proposition.
  explicit RelEvent(std::vector<std::pair<PropositionId, bool>> literals);

  static RelEvent is_true(PropositionId p) { return RelEvent({{p, true}}); }
  static RelEvent is_false(PropositionId p) { return RelEvent({{p, false}}); }

  // Literals sorted by proposition index.
  const std::vector<std::pair<PropositionId, bool>>& literals() const { return lits_; }
  bool mentions(PropositionId p) const;
  std::string to_string() const;  // e.g. "p0 & !p2"

  // True in `cell` iff every mentioned proposition is observable and has
  // the asserted value.
  bool holds(std::size_t cell, int n) const;
  // True iff every mentioned proposition is observable (digit != U).
  bool observable(std::size_t cell, int n) const;

 private:
  std::vector<std::pair<PropositionId, bool>> lits_;
};

// Conjunction; throws std::invalid_argument when the two sides assert
// different values for the same proposition.
RelEvent operator&(const RelEvent& a, const RelEvent& b);

// [e] = weight(e holds) / weight(all mentioned propositions observable).
// Throws UndefinedRelativeProbability when the denominator is zero and
// UnknownProposition when e mentions an index outside the joint.
double relative_probability(const TfuJoint& joint, const RelEvent& e);

// [e | given]: restrict to outcomes where `given` holds, then take the
// relative probability of e there.  Throws ConditioningOnNull when the
// restriction is empty, UndefinedRelativeProbability when e's reference
// class inside it is.
double relative_conditional(const TfuJoint& joint, const RelEvent& e, const RelEvent& given);

// The two orders of the product rule, which agree in ordinary probability
// and need not agree here.
struct CommutationGap {
  double left;   // [p] * [q | p]
  double right;  // [q] * [p | q]
  double gap() const { return left - right; }
};
CommutationGap commutation_gap(const TfuJoint& joint, const RelEvent& p, const RelEvent& q);

// [a & b] + [!b & c] - [a & c] for distinct proposition atoms a, b, c.
// Negative slack means the two-valued theorem fails on this joint.
double strengthened_we_slack(const TfuJoint& joint, PropositionId a, PropositionId b,
                             PropositionId c);

struct WeViolation {
  TfuJoint joint;
  double slack;            // strengthened_we_slack(joint, 0, 1, 2), < 0
  std::vector<int> units;  // grid units per outcome cell, summing to the resolution
  int resolution;
};

struct SearchOptions {
  // Restrict the grid to joints with no unobservable mass at all.  The
  // two-valued theorem guarantees the restricted search comes back empty,
  // which makes the flag a built-in control run.
  bool u_free_only = false;
  std::uint64_t seed = 0;  // reserved for randomized strategies; the
                           // exhaustive sweep ignores it
};

// Exhaustive sweep of three-proposition joints with weights k/resolution on
// the three-valued grid, returning the most negative slack found (ties
// broken toward the canonically first joint).  The result is independent of
// traversal order.  Empty when the grid holds no violation.
std::optional<WeViolation> search_we_violation(int resolution, const SearchOptions& opts = {});

}  // namespace ontoprob
