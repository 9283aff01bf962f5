#pragma once

/**
 * Square-root geometrization of finite joints.
 *
 * A weight table lifts to a unit vector whose components are signed square
 * roots of the weights, in the canonical outcome order.  Events become 0/1
 * diagonal projectors, probability becomes the quadratic form <s|P|s>, and
 * the Boolean connectives become the operator identities
 *
 *     not P = I - P,   P and Q = PQ,   P or Q = P + Q - PQ,
 *
 * computed in exact integer arithmetic.  Over the three-valued basis the
 * relative probability of an event is the ratio of two such forms
 * (truth mass over observability mass) — a ratio, not a quadratic form,
 * which is what relative_born_ratio exposes.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "ontoprob/basis.hpp"
#include "ontoprob/errors.hpp"
#include "ontoprob/prob_core.hpp"
#include "ontoprob/tfu_algebra.hpp"

namespace ontoprob {

class StateVector {
 public:
  // Components must form a unit vector (within 1e-12); one label per
  // component in canonical order.
  StateVector(std::vector<double> components, std::vector<std::string> labels);

  std::size_t dim() const { return comps_.size(); }
  const std::vector<double>& components() const { return comps_; }
  const std::vector<std::string>& labels() const { return labels_; }
  double operator[](std::size_t i) const { return comps_.at(i); }

 private:
  std::vector<double> comps_;
  std::vector<std::string> labels_;
};

// Components are +/-sqrt(weight); bit k of `signs` (counting from the
// least significant bit = component 0) flips component k's sign.  The
// default is all positive.  Sign choices never change any Born value.
StateVector lift_classical(const ClassicalJoint& joint, std::uint64_t signs = 0);
StateVector lift_tfu(const TfuJoint& joint, std::uint64_t signs = 0);

class DiagonalProjector {
 public:
  explicit DiagonalProjector(std::vector<std::uint8_t> mask);  // entries must be 0 or 1

  static DiagonalProjector zeros(std::size_t dim);
  static DiagonalProjector identity(std::size_t dim);
  // Mask from the bits of `bits`: component i selected iff bit i is set.
  static DiagonalProjector from_bits(std::size_t dim, std::uint64_t bits);

  std::size_t dim() const { return mask_.size(); }
  const std::vector<std::uint8_t>& mask() const { return mask_; }
  bool selects(std::size_t i) const { return mask_.at(i) != 0; }

  bool operator==(const DiagonalProjector&) const = default;

 private:
  std::vector<std::uint8_t> mask_;
};

// The projector selecting exactly the outcomes where the event holds.
DiagonalProjector projector_for_event(int n, const Event& e);

// Three-valued events: the projector for "all literals hold" (truth) and
// for "all mentioned propositions observable" (reference class).  The first
// is entrywise <= the second.
DiagonalProjector truth_projector(int n, const RelEvent& e);
DiagonalProjector observability_projector(int n, const RelEvent& e);

// <s|P|s>; throws std::invalid_argument on dimension mismatch.
double born_rule(const StateVector& s, const DiagonalProjector& p);

struct BooleanOps {
  DiagonalProjector not_p, p_and_q, p_or_q;
};
// The operator connectives above, exact on the 0/1 masks.
BooleanOps boolean_ops(const DiagonalProjector& p, const DiagonalProjector& q);

// <s|truth|s> / <s|reference|s>.  Requires truth <= reference entrywise;
// throws UndefinedRelativeProbability when the denominator is zero.
double relative_born_ratio(const StateVector& s, const DiagonalProjector& truth,
                           const DiagonalProjector& reference);

}  // namespace ontoprob
