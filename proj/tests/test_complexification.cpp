#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "ontoprob/complexification.hpp"
#include "ontoprob/rng.hpp"

using namespace ontoprob;

namespace {

constexpr double kPi = std::numbers::pi;

TfuJoint single(double t, double f, double u) { return TfuJoint(1, {t, f, u}); }

double max_abs_diff(const Mat3& a, const Mat3& b) {
  double m = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m = std::max(m, std::abs(a[i][j] - b[i][j]));
  return m;
}

Mat3 identity3() { return {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}; }

}  // namespace

TEST_CASE("polar form of the axis-aligned tables") {
  PolarState all_true = polar_from_tfu(single(1, 0, 0));
  CHECK(all_true.theta == doctest::Approx(kPi / 2).epsilon(1e-14));
  CHECK(all_true.phi == doctest::Approx(0.0).epsilon(1e-14));

  PolarState all_false = polar_from_tfu(single(0, 1, 0));
  CHECK(all_false.theta == doctest::Approx(kPi / 2).epsilon(1e-14));
  CHECK(all_false.phi == doctest::Approx(kPi / 2).epsilon(1e-14));

  PolarState all_hidden = polar_from_tfu(single(0, 0, 1));
  CHECK(all_hidden.theta == doctest::Approx(0.0).epsilon(1e-14));

  PolarState mixed = polar_from_tfu(single(0.25, 0.25, 0.5));
  CHECK(mixed.theta == doctest::Approx(kPi / 4).epsilon(1e-13));
  CHECK(mixed.phi == doctest::Approx(kPi / 4).epsilon(1e-13));

  CHECK_THROWS_AS(polar_from_tfu(TfuJoint::uniform(2)), std::invalid_argument);
}

TEST_CASE("polar vector squares back to the weight table") {
  RandomStream rng(0, 9, 30, 0);
  for (int trial = 0; trial < 500; ++trial) {
    double a = rng.next_unit(), b = rng.next_unit(), c = rng.next_unit();
    double sum = a + b + c;
    if (sum == 0.0) continue;
    TfuJoint joint = single(a / sum, b / sum, c / sum);
    PolarState p = polar_from_tfu(joint);
    CHECK(p.theta >= 0.0);
    CHECK(p.theta <= kPi);
    CHECK(p.phi >= 0.0);
    CHECK(p.phi <= kPi / 2);
    auto v = p.to_vector();
    CHECK(v[0] * v[0] == doctest::Approx(joint.weight(0)).epsilon(1e-12));
    CHECK(v[1] * v[1] == doctest::Approx(joint.weight(1)).epsilon(1e-12));
    CHECK(v[2] * v[2] == doctest::Approx(joint.weight(2)).epsilon(1e-12));
    StateVector s = state_from_polar(p);
    CHECK(s.labels() == std::vector<std::string>{"T", "F", "U"});
  }
}

TEST_CASE("rotation carries the polar vector into the TF plane") {
  for (int i = 0; i <= 40; ++i) {
    for (int j = 0; j <= 40; ++j) {
      double theta = i * kPi / 40;
      double phi = j * (kPi / 2) / 40;
      RotationTriple rot = rotation_matrices(theta, phi);
      // Orthogonality of the composite.
      Mat3 rtr = mat3_mul(mat3_transpose(rot.r), rot.r);
      CHECK(max_abs_diff(rtr, identity3()) <= 1e-12);
      // The defining property.
      auto moved = mat3_apply(rot.r, PolarState{theta, phi}.to_vector());
      CHECK(moved[0] == doctest::Approx(std::cos(phi)).epsilon(1e-12));
      CHECK(moved[1] == doctest::Approx(std::sin(phi)).epsilon(1e-12));
      CHECK(std::abs(moved[2]) <= 1e-12);
    }
  }
}

TEST_CASE("composite rotation decomposes through its factors") {
  double theta = kPi / 4, phi = kPi / 4;
  RotationTriple rot = rotation_matrices(theta, phi);
  Mat3 recomposed = mat3_mul(mat3_transpose(rot.r_phi), mat3_mul(rot.r_theta, rot.r_phi));
  CHECK(max_abs_diff(rot.r, recomposed) <= 1e-15);

  auto moved = mat3_apply(rot.r, PolarState{theta, phi}.to_vector());
  CHECK(moved[0] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-13));
  CHECK(moved[1] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-13));
}

TEST_CASE("pulling the plane projector back through the rotation is a similarity") {
  // R^T diag(1,0,0) R applied to s reproduces the Born value cos^2(phi)
  // of the rotated frame.
  for (double theta : {0.3, 1.1, 2.0}) {
    for (double phi : {0.2, 0.7, 1.4}) {
      RotationTriple rot = rotation_matrices(theta, phi);
      Mat3 diag = {{{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}};
      Mat3 pulled = mat3_mul(mat3_transpose(rot.r), mat3_mul(diag, rot.r));
      auto s = PolarState{theta, phi}.to_vector();
      auto ps = mat3_apply(pulled, s);
      double form = s[0] * ps[0] + s[1] * ps[1] + s[2] * ps[2];
      CHECK(form == doctest::Approx(std::cos(phi) * std::cos(phi)).epsilon(1e-12));
    }
  }
}

TEST_CASE("complexified amplitudes at the landmark angles") {
  QubitState q = complexify({kPi / 2, kPi / 4});
  CHECK(q.a().real() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
  CHECK(q.a().imag() == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(q.b().real() == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(q.b().imag() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));

  QubitState real_axis = complexify({kPi / 2, 0.0});
  CHECK(real_axis.a() == Complex{1.0, 0.0});
  CHECK(std::abs(real_axis.b()) <= 1e-15);
}

TEST_CASE("canonical form strips the global phase") {
  QubitState q(Complex{0.0, 0.0}, Complex{0.0, 1.0});
  QubitState c = q.canonical();
  CHECK(c.b().real() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(c.b().imag() == doctest::Approx(0.0).epsilon(1e-14));

  Complex phase = std::polar(1.0, 0.9);
  QubitState r(phase * Complex{0.6, 0.0}, phase * Complex{0.0, 0.8});
  QubitState rc = r.canonical();
  CHECK(rc.a().real() == doctest::Approx(0.6).epsilon(1e-13));
  CHECK(rc.a().imag() == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(rc.b().real() == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(rc.b().imag() == doctest::Approx(0.8).epsilon(1e-13));

  CHECK_THROWS_AS(QubitState(Complex{1.0, 0.0}, Complex{0.5, 0.0}), std::invalid_argument);
}

TEST_CASE("qubit Born values of the plane projector") {
  CHECK(qubit_born(complexify({kPi / 3, kPi / 6}), QubitProjector::truth()) ==
        doctest::Approx(0.75).epsilon(1e-14));
  CHECK(qubit_born(complexify({0.7, 0.4}), QubitProjector::identity()) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(qubit_born(complexify({0.7, 0.4}), QubitProjector::zeros()) == 0.0);
}

TEST_CASE("projector and its complement always sum to one") {
  RandomStream rng(0, 9, 31, 0);
  for (int trial = 0; trial < 500; ++trial) {
    PolarState p{rng.next_unit() * kPi, rng.next_unit() * kPi / 2};
    QubitState s = complexify(p);
    QubitProjector truth = QubitProjector::truth();
    CHECK(qubit_born(s, truth) + qubit_born(s, truth.complement()) ==
          doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("qubit Born value equals the relative probability when defined") {
  RandomStream rng(0, 9, 32, 0);
  RelEvent p = RelEvent::is_true(0);
  for (int trial = 0; trial < 1000; ++trial) {
    double a = rng.next_unit(), b = rng.next_unit(), c = rng.next_unit();
    double sum = a + b + c;
    TfuJoint joint = single(a / sum, b / sum, c / sum);
    if (joint.weight(0) + joint.weight(1) <= 0.0) continue;
    double ratio = relative_probability(joint, p);
    double born = qubit_born(complexify(polar_from_tfu(joint)), QubitProjector::truth());
    CHECK(born == doctest::Approx(ratio).epsilon(1e-12));
  }
  // Fully hidden table: the ratio is undefined but the qubit value is total.
  TfuJoint hidden = single(0, 0, 1);
  CHECK_THROWS_AS(relative_probability(hidden, p), UndefinedRelativeProbability);
  CHECK(qubit_born(complexify(polar_from_tfu(hidden)), QubitProjector::truth()) ==
        doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("projector constructor enforces Hermitian idempotence") {
  CHECK_THROWS_AS(QubitProjector({Complex{0.5, 0}, Complex{0.5, 0.1},
                                  Complex{0.5, 0.1}, Complex{0.5, 0}}),
                  std::invalid_argument);  // not Hermitian
  CHECK_THROWS_AS(QubitProjector({Complex{0.5, 0}, Complex{0, 0},
                                  Complex{0, 0}, Complex{0.5, 0}}),
                  std::invalid_argument);  // Hermitian but not idempotent
  CHECK_NOTHROW(QubitProjector({Complex{0.5, 0}, Complex{0.5, 0},
                                Complex{0.5, 0}, Complex{0.5, 0}}));
}

TEST_CASE("measurement frames rotate the plane projector") {
  Mat2c id = {Complex{1, 0}, Complex{0, 0}, Complex{0, 0}, Complex{1, 0}};
  QubitProjector same = contextual_projector(id);
  CHECK(same.at(0, 0) == Complex{1.0, 0.0});
  CHECK(same.at(1, 1) == Complex{0.0, 0.0});

  const double h = std::sqrt(0.5);
  Mat2c hadamard = {Complex{h, 0}, Complex{h, 0}, Complex{h, 0}, Complex{-h, 0}};
  QubitProjector rotated = contextual_projector(hadamard);
  CHECK(rotated.at(0, 0).real() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(rotated.at(0, 1).real() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(rotated.at(1, 1).real() == doctest::Approx(0.5).epsilon(1e-14));

  Mat2c not_unitary = {Complex{1, 0}, Complex{1, 0}, Complex{0, 0}, Complex{1, 0}};
  CHECK_THROWS_AS(contextual_projector(not_unitary), std::domain_error);
}

TEST_CASE("distinct measurement frames need not commute") {
  const double h = std::sqrt(0.5);
  Mat2c hadamard = {Complex{h, 0}, Complex{h, 0}, Complex{h, 0}, Complex{-h, 0}};
  QubitProjector p = QubitProjector::truth();
  QubitProjector q = contextual_projector(hadamard);
  CHECK(commutator_norm(p, q) > 0.1);
  CHECK(commutator_norm(p, p) <= 1e-15);
  CHECK(commutator_norm(p, QubitProjector::identity()) <= 1e-15);
  CHECK(commutator_norm(p, p.complement()) <= 1e-15);
}

TEST_CASE("opposite-deflection probability: closed form and landmarks") {
  const double deg = kPi / 180.0;
  CHECK(sg_probability(0.0, 0.0) == 0.0);
  CHECK(sg_probability(0.0, 90.0 * deg) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(sg_probability(0.0, 180.0 * deg) == doctest::Approx(0.5).epsilon(1e-14));
  double seg1 = sg_probability(0.0, 45.0 * deg);
  double seg2 = sg_probability(45.0 * deg, 90.0 * deg);
  CHECK(seg1 == doctest::Approx(seg2).epsilon(1e-14));
  CHECK(seg1 + seg2 == doctest::Approx(0.14644660940672624).epsilon(1e-13));
  CHECK(seg1 + seg2 < 0.25);
  // Only the separation matters, with a full-turn period.
  RandomStream rng(0, 9, 33, 0);
  for (int trial = 0; trial < 200; ++trial) {
    double alpha = (rng.next_unit() - 0.5) * 8.0;
    double beta = (rng.next_unit() - 0.5) * 8.0;
    CHECK(sg_probability(alpha, beta) == doctest::Approx(sg_probability(beta, alpha)).epsilon(1e-13));
    CHECK(sg_probability(alpha + 2 * kPi, beta) ==
          doctest::Approx(sg_probability(alpha, beta)).epsilon(1e-12));
  }
}

TEST_CASE("product states interleave amplitudes in canonical order") {
  QubitState zero(Complex{1, 0}, Complex{0, 0});
  QubitState one(Complex{0, 0}, Complex{1, 0});
  std::vector<Complex> both = product_state({zero, one});
  REQUIRE(both.size() == 4);
  // Factor 0 is the most significant digit: |0>|1> sits at index 1.
  CHECK(std::abs(both[1] - Complex{1, 0}) <= 1e-15);
  CHECK(std::abs(both[0]) <= 1e-15);
  CHECK(std::abs(both[2]) <= 1e-15);
  CHECK(std::abs(both[3]) <= 1e-15);

  RandomStream rng(0, 9, 34, 0);
  for (int trial = 0; trial < 100; ++trial) {
    PolarState pa{rng.next_unit() * kPi, rng.next_unit() * kPi / 2};
    PolarState pb{rng.next_unit() * kPi, rng.next_unit() * kPi / 2};
    std::vector<Complex> prod = product_state({complexify(pa), complexify(pb)});
    double norm = 0.0;
    for (const Complex& c : prod) norm += std::norm(c);
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("single-factor measurements on a product state ignore the rest") {
  RandomStream rng(0, 9, 35, 0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<QubitState> factors;
    for (int k = 0; k < 3; ++k)
      factors.push_back(complexify({rng.next_unit() * kPi, rng.next_unit() * kPi / 2}));
    std::vector<Complex> prod = product_state(factors);
    for (int k = 0; k < 3; ++k) {
      double composite = composite_born(prod, QubitProjector::truth(), k, 3);
      double alone = qubit_born(factors[k], QubitProjector::truth());
      CHECK(composite == doctest::Approx(alone).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(composite_born({Complex{1, 0}, Complex{0, 0}}, QubitProjector::truth(), 2, 1),
                  std::invalid_argument);
}
