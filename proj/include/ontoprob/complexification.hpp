#pragma once

/**
 * The single-proposition bridge from the real three-valued picture to a
 * qubit.
 *
 * A one-proposition weight table (T, F, U masses) becomes a unit vector in
 * the nonnegative octant of R^3, written in polar form
 *
 *     s = (sin(theta)cos(phi), sin(theta)sin(phi), cos(theta))
 *
 * with theta in [0,pi] measured from the U axis and phi in [0,pi/2] inside
 * the TF plane.  A rotation R built from two plane rotations carries s onto
 * (cos(phi), sin(phi), 0), after which the pair (theta, phi) maps to the
 * qubit (cos(phi), e^{i theta} sin(phi)).  The Born value of diag(1,0) on
 * that qubit is cos^2(phi), which equals the relative probability of the
 * proposition whenever the observable mass is positive — and extends it
 * continuously where it is not (theta = 0).
 */

#include <array>
#include <complex>
#include <vector>

#include "ontoprob/geometry.hpp"
#include "ontoprob/tfu_algebra.hpp"

namespace ontoprob {

using Complex = std::complex<double>;
using Mat3 = std::array<std::array<double, 3>, 3>;
using Mat2c = std::array<Complex, 4>;  // row-major 2x2

struct PolarState {
  double theta;  // angle from the U axis, in [0, pi]
  double phi;    // angle inside the TF plane, in [0, pi/2]

  // Unit vector on axes (T, F, U).
  std::array<double, 3> to_vector() const;
};

// Polar form of a one-proposition joint: theta = arccos(sqrt(U mass)),
// phi = atan2(sqrt(F mass), sqrt(T mass)).  Requires n = 1.
PolarState polar_from_tfu(const TfuJoint& joint);

// The same vector as a dim-3 StateVector with labels T, F, U.
StateVector state_from_polar(const PolarState& p);

struct RotationTriple {
  Mat3 r_phi;    // rotation by phi inside the TF plane
  Mat3 r_theta;  // rotation by theta inside the FU plane
  Mat3 r;        // r_phi^T * r_theta * r_phi
};

// Matrices satisfying r * to_vector() = (cos(phi), sin(phi), 0).
RotationTriple rotation_matrices(double theta, double phi);

Mat3 mat3_mul(const Mat3& a, const Mat3& b);
Mat3 mat3_transpose(const Mat3& a);
std::array<double, 3> mat3_apply(const Mat3& a, const std::array<double, 3>& v);

class QubitState {
 public:
  // |a|^2 + |b|^2 must be 1 within 1e-12.
  QubitState(Complex a, Complex b);

  Complex a() const { return a_; }
  Complex b() const { return b_; }

  // Global phase removed: a real and nonnegative, or b real nonnegative
  // when a vanishes.  Two states are physically equal iff their canonical
  // forms agree componentwise.
  QubitState canonical() const;

 private:
  Complex a_, b_;
};

// (cos(phi), e^{i theta} sin(phi)).  Total on all polar states, including
// theta = 0 where the real ratio is undefined.
QubitState complexify(const PolarState& p);

class QubitProjector {
 public:
  // Row-major 2x2 matrix; must be Hermitian and idempotent within 1e-12.
  explicit QubitProjector(Mat2c m);

  static QubitProjector truth();  // diag(1, 0)
  static QubitProjector zeros();
  static QubitProjector identity();

  QubitProjector complement() const;  // I - P
  const Mat2c& matrix() const { return m_; }
  Complex at(int row, int col) const { return m_[row * 2 + col]; }

 private:
  Mat2c m_;
};

// <s|P|s>, guaranteed real by Hermiticity.
double qubit_born(const QubitState& s, const QubitProjector& p);

// U^dagger diag(1,0) U for a unitary U (checked within 1e-12); the truth
// projector as seen from the measurement frame U.
QubitProjector contextual_projector(const Mat2c& u);

Mat2c mat2_mul(const Mat2c& a, const Mat2c& b);
Mat2c mat2_adjoint(const Mat2c& a);

// Frobenius norm of PQ - QP; zero iff the projectors commute.
double commutator_norm(const QubitProjector& p, const QubitProjector& q);

// Probability that successive analyzers at angles alpha and beta give
// opposite deflections on the second axis: 0.5 * sin^2((beta - alpha)/2).
double sg_probability(double alpha, double beta);

// Tensor product, factor 0 most significant in the component index.
std::vector<Complex> product_state(const std::vector<QubitState>& factors);

// Born value of a single-factor projector on a composite state (the
// projector acts on `factor`, identity elsewhere).
double composite_born(const std::vector<Complex>& state, const QubitProjector& p, int factor,
                      int n_factors);

}  // namespace ontoprob
