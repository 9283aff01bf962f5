#include "ontoprob/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace ontoprob {

StateVector::StateVector(std::vector<double> components, std::vector<std::string> labels)
    : comps_(std::move(components)), labels_(std::move(labels)) {
  if (comps_.empty()) throw std::invalid_argument("state vector: empty");
  if (labels_.size() != comps_.size())
    throw std::invalid_argument("state vector: " + std::to_string(labels_.size()) +
                                " labels for " + std::to_string(comps_.size()) + " components");
  double norm2 = 0.0;
  for (double c : comps_) norm2 += c * c;
  if (std::abs(norm2 - 1.0) > 1e-12)
    throw std::invalid_argument("state vector: squared norm is " + std::to_string(norm2) +
                                ", not 1");
}

namespace {

std::vector<double> signed_roots(const std::vector<double>& weights, std::uint64_t signs) {
  std::vector<double> comps(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) {
    double r = std::sqrt(weights[i]);
    comps[i] = ((signs >> i) & 1u) ? -r : r;
  }
  return comps;
}

}  // namespace

StateVector lift_classical(const ClassicalJoint& joint, std::uint64_t signs) {
  std::vector<std::string> labels(joint.size());
  for (std::uint32_t i = 0; i < joint.size(); ++i) labels[i] = classical_label(i, joint.n());
  return StateVector(signed_roots(joint.weights(), signs), std::move(labels));
}

StateVector lift_tfu(const TfuJoint& joint, std::uint64_t signs) {
  std::vector<std::string> labels(joint.size());
  for (std::size_t i = 0; i < joint.size(); ++i) labels[i] = tfu_label(i, joint.n());
  return StateVector(signed_roots(joint.weights(), signs), std::move(labels));
}

DiagonalProjector::DiagonalProjector(std::vector<std::uint8_t> mask) : mask_(std::move(mask)) {
  if (mask_.empty()) throw std::invalid_argument("projector: empty mask");
  for (std::uint8_t m : mask_)
    if (m > 1) throw std::invalid_argument("projector: mask entries must be 0 or 1");
}

DiagonalProjector DiagonalProjector::zeros(std::size_t dim) {
  return DiagonalProjector(std::vector<std::uint8_t>(dim, 0));
}

DiagonalProjector DiagonalProjector::identity(std::size_t dim) {
  return DiagonalProjector(std::vector<std::uint8_t>(dim, 1));
}

DiagonalProjector DiagonalProjector::from_bits(std::size_t dim, std::uint64_t bits) {
  if (dim > 64) throw std::invalid_argument("from_bits: dimension exceeds 64");
  std::vector<std::uint8_t> mask(dim, 0);
  for (std::size_t i = 0; i < dim; ++i) mask[i] = (bits >> i) & 1u;
  return DiagonalProjector(std::move(mask));
}

DiagonalProjector projector_for_event(int n, const Event& e) {
  std::vector<std::uint8_t> mask(pow2(n), 0);
  for (std::uint32_t cell = 0; cell < mask.size(); ++cell) mask[cell] = e.eval(cell, n) ? 1 : 0;
  return DiagonalProjector(std::move(mask));
}

DiagonalProjector truth_projector(int n, const RelEvent& e) {
  std::vector<std::uint8_t> mask(pow3(n), 0);
  for (std::size_t cell = 0; cell < mask.size(); ++cell) mask[cell] = e.holds(cell, n) ? 1 : 0;
  return DiagonalProjector(std::move(mask));
}

DiagonalProjector observability_projector(int n, const RelEvent& e) {
  std::vector<std::uint8_t> mask(pow3(n), 0);
  for (std::size_t cell = 0; cell < mask.size(); ++cell)
    mask[cell] = e.observable(cell, n) ? 1 : 0;
  return DiagonalProjector(std::move(mask));
}

double born_rule(const StateVector& s, const DiagonalProjector& p) {
  if (s.dim() != p.dim())
    throw std::invalid_argument("born_rule: state has dim " + std::to_string(s.dim()) +
                                ", projector " + std::to_string(p.dim()));
  double sum = 0.0;
  for (std::size_t i = 0; i < s.dim(); ++i)
    if (p.selects(i)) sum += s[i] * s[i];
  return sum;
}

BooleanOps boolean_ops(const DiagonalProjector& p, const DiagonalProjector& q) {
  if (p.dim() != q.dim())
    throw std::invalid_argument("boolean_ops: projector dims " + std::to_string(p.dim()) +
                                " and " + std::to_string(q.dim()) + " differ");
  std::size_t dim = p.dim();
  std::vector<std::uint8_t> not_p(dim), p_and_q(dim), p_or_q(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    int a = p.mask()[i], b = q.mask()[i];
    not_p[i] = static_cast<std::uint8_t>(1 - a);
    p_and_q[i] = static_cast<std::uint8_t>(a * b);
    p_or_q[i] = static_cast<std::uint8_t>(a + b - a * b);
  }
  return BooleanOps{DiagonalProjector(std::move(not_p)), DiagonalProjector(std::move(p_and_q)),
                    DiagonalProjector(std::move(p_or_q))};
}

double relative_born_ratio(const StateVector& s, const DiagonalProjector& truth,
                           const DiagonalProjector& reference) {
  if (truth.dim() != reference.dim() || truth.dim() != s.dim())
    throw std::invalid_argument("relative_born_ratio: dimension mismatch");
  for (std::size_t i = 0; i < truth.dim(); ++i)
    if (truth.mask()[i] > reference.mask()[i])
      throw std::invalid_argument(
          "relative_born_ratio: truth projector selects a component outside the reference class");
  double den = born_rule(s, reference);
  if (den == 0.0)
    throw UndefinedRelativeProbability("relative_born_ratio: reference class carries no weight");
  return born_rule(s, truth) / den;
}

}  // namespace ontoprob
