#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "ontoprob/geometry.hpp"
#include "ontoprob/rng.hpp"

using namespace ontoprob;

namespace {

TfuJoint joint2(const std::map<std::string, double>& cells) {
  std::vector<double> w(9, 0.0);
  for (const auto& [label, weight] : cells) w[tfu_cell(label, 2)] = weight;
  return TfuJoint(2, std::move(w));
}

std::vector<double> random_simplex(RandomStream& rng, int k) {
  std::vector<double> w(k);
  double sum = 0.0;
  for (int i = 0; i < k; ++i) {
    double u;
    do {
      u = rng.next_unit();
    } while (u == 0.0);
    w[i] = -std::log(u);
    sum += w[i];
  }
  for (double& v : w) v /= sum;
  return w;
}

}  // namespace

TEST_CASE("lifting takes square roots and keeps the canonical labels") {
  ClassicalJoint joint(2, {0.2, 0.4, 0.1, 0.3});
  StateVector s = lift_classical(joint);
  REQUIRE(s.dim() == 4);
  CHECK(s[0] == doctest::Approx(std::sqrt(0.2)).epsilon(1e-15));
  CHECK(s[1] == doctest::Approx(std::sqrt(0.4)).epsilon(1e-15));
  CHECK(s[2] == doctest::Approx(std::sqrt(0.1)).epsilon(1e-15));
  CHECK(s[3] == doctest::Approx(std::sqrt(0.3)).epsilon(1e-15));
  CHECK(s.labels() == std::vector<std::string>{"TT", "TF", "FT", "FF"});

  double norm_sq = 0.0;
  for (std::size_t i = 0; i < s.dim(); ++i) norm_sq += s[i] * s[i];
  CHECK(norm_sq == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("sign bits flip individual components") {
  ClassicalJoint joint = ClassicalJoint::uniform(1);
  StateVector s = lift_classical(joint, 0b10);
  CHECK(s[0] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  CHECK(s[1] == doctest::Approx(-std::sqrt(0.5)).epsilon(1e-15));
}

TEST_CASE("state vectors must be unit length with matching labels") {
  CHECK_THROWS_AS(StateVector({0.5, 0.5}, {"T", "F"}), std::invalid_argument);
  CHECK_THROWS_AS(StateVector({1.0}, {"T", "F"}), std::invalid_argument);
  CHECK_NOTHROW(StateVector({std::sqrt(0.5), -std::sqrt(0.5)}, {"T", "F"}));
}

TEST_CASE("projector masks validate and construct from bits") {
  CHECK_THROWS_AS(DiagonalProjector({0, 2}), std::invalid_argument);
  DiagonalProjector p = DiagonalProjector::from_bits(4, 0b0101);
  CHECK(p.selects(0));
  CHECK_FALSE(p.selects(1));
  CHECK(p.selects(2));
  CHECK(DiagonalProjector::identity(3).mask() == std::vector<std::uint8_t>{1, 1, 1});
  CHECK(DiagonalProjector::zeros(2).mask() == std::vector<std::uint8_t>{0, 0});
}

TEST_CASE("quadratic form reproduces event probabilities") {
  ClassicalJoint joint(2, {0.2, 0.4, 0.1, 0.3});
  StateVector s = lift_classical(joint);
  Event p0 = Event::atom(0), p1 = Event::atom(1);
  CHECK(born_rule(s, projector_for_event(2, p0)) == doctest::Approx(0.6).epsilon(1e-14));
  CHECK(born_rule(s, projector_for_event(2, p1)) == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(born_rule(s, projector_for_event(2, p0 & p1)) == doctest::Approx(0.2).epsilon(1e-14));
  CHECK(born_rule(s, DiagonalProjector::identity(4)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(born_rule(s, DiagonalProjector::zeros(4)) == 0.0);
  CHECK_THROWS_AS(born_rule(s, DiagonalProjector::identity(3)), std::invalid_argument);
}

TEST_CASE("every sign pattern gives the same Born values") {
  RandomStream rng(0, 9, 20, 0);
  for (int trial = 0; trial < 50; ++trial) {
    ClassicalJoint joint(2, random_simplex(rng, 4));
    Event e = Event::atom(0) | (!Event::atom(1));
    DiagonalProjector p = projector_for_event(2, e);
    double reference = born_rule(lift_classical(joint), p);
    for (std::uint64_t signs = 0; signs < 16; ++signs)
      CHECK(born_rule(lift_classical(joint, signs), p) ==
            doctest::Approx(reference).epsilon(1e-13));
  }
}

TEST_CASE("squaring the lift recovers the weights") {
  RandomStream rng(0, 9, 21, 0);
  for (int trial = 0; trial < 100; ++trial) {
    ClassicalJoint joint(3, random_simplex(rng, 8));
    StateVector s = lift_classical(joint, /*signs=*/trial * 2654435761u % 256);
    for (std::size_t i = 0; i < 8; ++i)
      CHECK(s[i] * s[i] == doctest::Approx(joint.weight(i)).epsilon(1e-13));
  }
}

TEST_CASE("operator connectives equal the set connectives exactly") {
  DiagonalProjector p = DiagonalProjector::from_bits(4, 0b0011);
  DiagonalProjector q = DiagonalProjector::from_bits(4, 0b0101);
  BooleanOps ops = boolean_ops(p, q);
  CHECK(ops.not_p == DiagonalProjector::from_bits(4, 0b1100));
  CHECK(ops.p_and_q == DiagonalProjector::from_bits(4, 0b0001));
  CHECK(ops.p_or_q == DiagonalProjector::from_bits(4, 0b0111));
}

TEST_CASE("connective identities hold exhaustively in dimension four") {
  for (std::uint64_t a = 0; a < 16; ++a) {
    DiagonalProjector p = DiagonalProjector::from_bits(4, a);
    // Involution and excluded middle at the operator level.
    CHECK(boolean_ops(boolean_ops(p, p).not_p, p).not_p == p);
    CHECK(boolean_ops(p, boolean_ops(p, p).not_p).p_or_q == DiagonalProjector::identity(4));
    for (std::uint64_t b = 0; b < 16; ++b) {
      DiagonalProjector q = DiagonalProjector::from_bits(4, b);
      BooleanOps ops = boolean_ops(p, q);
      BooleanOps sym = boolean_ops(q, p);
      CHECK(ops.p_and_q == sym.p_and_q);
      CHECK(ops.p_or_q == sym.p_or_q);
      // De Morgan: not(p and q) = (not p) or (not q).
      DiagonalProjector lhs = boolean_ops(ops.p_and_q, ops.p_and_q).not_p;
      DiagonalProjector rhs = boolean_ops(ops.not_p, sym.not_p).p_or_q;
      CHECK(lhs == rhs);
      // Projector conjunction agrees with event conjunction via bits.
      CHECK(ops.p_and_q == DiagonalProjector::from_bits(4, a & b));
      CHECK(ops.p_or_q == DiagonalProjector::from_bits(4, a | b));
    }
  }
}

TEST_CASE("projector pairs for three-valued events split truth from reference") {
  RelEvent q = RelEvent::is_true(1);
  DiagonalProjector truth = truth_projector(2, q);
  DiagonalProjector ref = observability_projector(2, q);
  for (std::size_t cell = 0; cell < 9; ++cell) {
    CHECK(truth.selects(cell) == q.holds(cell, 2));
    CHECK(ref.selects(cell) == q.observable(cell, 2));
    if (truth.selects(cell)) CHECK(ref.selects(cell));
  }
}

TEST_CASE("ratio of quadratic forms equals the relative probability") {
  TfuJoint wb = joint2({{"TT", 0.2}, {"TU", 0.1}, {"TF", 0.3}, {"FT", 0.2}, {"FF", 0.2}});
  StateVector s = lift_tfu(wb);
  RelEvent p = RelEvent::is_true(0), q = RelEvent::is_true(1);
  CHECK(relative_born_ratio(s, truth_projector(2, p), observability_projector(2, p)) ==
        doctest::Approx(0.6).epsilon(1e-14));
  CHECK(relative_born_ratio(s, truth_projector(2, q), observability_projector(2, q)) ==
        doctest::Approx(4.0 / 9.0).epsilon(1e-14));

  RandomStream rng(0, 9, 22, 0);
  for (int trial = 0; trial < 200; ++trial) {
    TfuJoint joint(2, random_simplex(rng, 9));
    StateVector lifted = lift_tfu(joint, trial % 512);
    for (PropositionId a = 0; a < 2; ++a) {
      RelEvent e = RelEvent::is_true(a);
      CHECK(relative_born_ratio(lifted, truth_projector(2, e), observability_projector(2, e)) ==
            doctest::Approx(relative_probability(joint, e)).epsilon(1e-12));
    }
  }
}

TEST_CASE("ratio validates its arguments") {
  StateVector s = lift_tfu(TfuJoint::point_mass(1, tfu_cell("U", 1)));
  RelEvent p = RelEvent::is_true(0);
  CHECK_THROWS_AS(relative_born_ratio(s, truth_projector(1, p), observability_projector(1, p)),
                  UndefinedRelativeProbability);
  // Truth mask must sit inside the reference mask.
  CHECK_THROWS_AS(relative_born_ratio(s, DiagonalProjector::from_bits(3, 0b011),
                                      DiagonalProjector::from_bits(3, 0b001)),
                  std::invalid_argument);
}

TEST_CASE("no single projector reproduces the ratio on two chosen states") {
  // States lifted from three-valued tables over two propositions (dim 9).
  // First state: all mass on TT; its ratio for "both true" is 1.
  // Second state: equal thirds on TT, FF, UU; its ratio is 1/2 because the
  // UU third leaves the reference class.
  TfuJoint first = TfuJoint::point_mass(2, tfu_cell("TT", 2));
  TfuJoint second = joint2({{"TT", 1.0 / 3}, {"FF", 1.0 / 3}, {"UU", 1.0 / 3}});
  RelEvent both = RelEvent::is_true(0) & RelEvent::is_true(1);
  StateVector s1 = lift_tfu(first), s2 = lift_tfu(second);
  DiagonalProjector truth = truth_projector(2, both);
  DiagonalProjector ref = observability_projector(2, both);
  CHECK(relative_born_ratio(s1, truth, ref) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(relative_born_ratio(s2, truth, ref) == doctest::Approx(0.5).epsilon(1e-14));

  // Exhaustive over all 512 diagonal projectors in exact integer arithmetic:
  // <s1|P|s1> = mask[TT] (0 or 1) and 6 * <s2|P|s2> = 2 * (number of selected
  // support cells of s2).  Matching both ratios needs mask[TT] = 1 and
  // 2 * count = 3, which no integer count satisfies.
  const std::size_t tt = tfu_cell("TT", 2);
  const std::size_t ff = tfu_cell("FF", 2);
  const std::size_t uu = tfu_cell("UU", 2);
  int masks_matching_both = 0;
  for (std::uint64_t bits = 0; bits < 512; ++bits) {
    DiagonalProjector p = DiagonalProjector::from_bits(9, bits);
    bool matches_first = p.selects(tt);  // <s1|P|s1> = 1 exactly
    int count = int(p.selects(tt)) + int(p.selects(ff)) + int(p.selects(uu));
    bool matches_second = (2 * count == 3);  // <s2|P|s2> = 1/2 exactly
    if (matches_first && matches_second) ++masks_matching_both;
  }
  CHECK(masks_matching_both == 0);
}

TEST_CASE("negating inside the reference class differs from operator negation") {
  // On a state with unobservable mass, 1 - <s|truth|s> counts the hidden
  // cells while the within-reference complement does not.
  TfuJoint joint(1, {0.5, 0.0, 0.5});  // half T, half U
  StateVector s = lift_tfu(joint);
  RelEvent p = RelEvent::is_true(0);
  DiagonalProjector truth = truth_projector(1, p);
  DiagonalProjector ref = observability_projector(1, p);
  double outer = born_rule(s, boolean_ops(truth, truth).not_p);  // 1 - 0.5
  double inner = born_rule(s, ref) - born_rule(s, truth);        // 0.5 - 0.5
  CHECK(outer == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(inner == doctest::Approx(0.0).epsilon(1e-14));
  // Yet the ratio of the within-reference complement is a probability: 0.
  CHECK(relative_born_ratio(s, truth_projector(1, RelEvent::is_false(0)), ref) == 0.0);
}
