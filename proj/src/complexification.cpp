#include "ontoprob/complexification.hpp"

#include <cmath>
#include <stdexcept>

namespace ontoprob {

std::array<double, 3> PolarState::to_vector() const {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

PolarState polar_from_tfu(const TfuJoint& joint) {
  if (joint.n() != 1)
    throw std::invalid_argument("polar_from_tfu: joint must have exactly one proposition");
  double t = joint.weight(static_cast<std::size_t>(Tfu::T));
  double f = joint.weight(static_cast<std::size_t>(Tfu::F));
  double u = joint.weight(static_cast<std::size_t>(Tfu::U));
  PolarState p;
  p.theta = std::acos(std::min(1.0, std::sqrt(u)));
  p.phi = std::atan2(std::sqrt(f), std::sqrt(t));
  return p;
}

StateVector state_from_polar(const PolarState& p) {
  auto v = p.to_vector();
  return StateVector({v[0], v[1], v[2]}, {"T", "F", "U"});
}

RotationTriple rotation_matrices(double theta, double phi) {
  double ct = std::cos(theta), st = std::sin(theta);
  double cp = std::cos(phi), sp = std::sin(phi);
  RotationTriple out;
  // Sends (sin(theta)cos(phi), sin(theta)sin(phi), cos(theta)) to
  // (0, sin(theta), cos(theta)): aligns the TF-plane part with the F axis.
  out.r_phi = {{{sp, -cp, 0.0}, {cp, sp, 0.0}, {0.0, 0.0, 1.0}}};
  // Sends (0, sin(theta), cos(theta)) to (0, 1, 0): closes the U gap.
  out.r_theta = {{{1.0, 0.0, 0.0}, {0.0, st, ct}, {0.0, -ct, st}}};
  out.r = mat3_mul(mat3_transpose(out.r_phi), mat3_mul(out.r_theta, out.r_phi));
  return out;
}

Mat3 mat3_mul(const Mat3& a, const Mat3& b) {
  Mat3 c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
      c[i][j] = s;
    }
  return c;
}

Mat3 mat3_transpose(const Mat3& a) {
  Mat3 t{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t[i][j] = a[j][i];
  return t;
}

std::array<double, 3> mat3_apply(const Mat3& a, const std::array<double, 3>& v) {
  std::array<double, 3> out{};
  for (int i = 0; i < 3; ++i) out[i] = a[i][0] * v[0] + a[i][1] * v[1] + a[i][2] * v[2];
  return out;
}

QubitState::QubitState(Complex a, Complex b) : a_(a), b_(b) {
  double norm2 = std::norm(a_) + std::norm(b_);
  if (std::abs(norm2 - 1.0) > 1e-12)
    throw std::invalid_argument("qubit state: squared norm is " + std::to_string(norm2) +
                                ", not 1");
}

QubitState QubitState::canonical() const {
  Complex ref = std::abs(a_) > 1e-15 ? a_ : b_;
  Complex phase = ref / std::abs(ref);
  return QubitState(a_ / phase, b_ / phase);
}

QubitState complexify(const PolarState& p) {
  return QubitState(Complex(std::cos(p.phi), 0.0),
                    std::exp(Complex(0.0, p.theta)) * std::sin(p.phi));
}

QubitProjector::QubitProjector(Mat2c m) : m_(m) {
  constexpr double tol = 1e-12;
  if (std::abs(m_[0].imag()) > tol || std::abs(m_[3].imag()) > tol ||
      std::abs(m_[1] - std::conj(m_[2])) > tol)
    throw std::invalid_argument("qubit projector: matrix is not Hermitian");
  Mat2c sq = mat2_mul(m_, m_);
  for (int i = 0; i < 4; ++i)
    if (std::abs(sq[i] - m_[i]) > tol)
      throw std::invalid_argument("qubit projector: matrix is not idempotent");
}

QubitProjector QubitProjector::truth() {
  return QubitProjector({Complex(1), Complex(0), Complex(0), Complex(0)});
}

QubitProjector QubitProjector::zeros() {
  return QubitProjector({Complex(0), Complex(0), Complex(0), Complex(0)});
}

QubitProjector QubitProjector::identity() {
  return QubitProjector({Complex(1), Complex(0), Complex(0), Complex(1)});
}

QubitProjector QubitProjector::complement() const {
  return QubitProjector({Complex(1) - m_[0], -m_[1], -m_[2], Complex(1) - m_[3]});
}

double qubit_born(const QubitState& s, const QubitProjector& p) {
  Complex a = s.a(), b = s.b();
  Complex v = std::conj(a) * (p.at(0, 0) * a + p.at(0, 1) * b) +
              std::conj(b) * (p.at(1, 0) * a + p.at(1, 1) * b);
  return v.real();
}

QubitProjector contextual_projector(const Mat2c& u) {
  constexpr double tol = 1e-12;
  Mat2c gram = mat2_mul(mat2_adjoint(u), u);
  Mat2c eye = {Complex(1), Complex(0), Complex(0), Complex(1)};
  for (int i = 0; i < 4; ++i)
    if (std::abs(gram[i] - eye[i]) > tol)
      throw std::domain_error("contextual_projector: matrix is not unitary");
  Mat2c d = {Complex(1), Complex(0), Complex(0), Complex(0)};
  return QubitProjector(mat2_mul(mat2_adjoint(u), mat2_mul(d, u)));
}

Mat2c mat2_mul(const Mat2c& a, const Mat2c& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
          a[2] * b[1] + a[3] * b[3]};
}

Mat2c mat2_adjoint(const Mat2c& a) {
  return {std::conj(a[0]), std::conj(a[2]), std::conj(a[1]), std::conj(a[3])};
}

double commutator_norm(const QubitProjector& p, const QubitProjector& q) {
  Mat2c pq = mat2_mul(p.matrix(), q.matrix());
  Mat2c qp = mat2_mul(q.matrix(), p.matrix());
  double sum = 0.0;
  for (int i = 0; i < 4; ++i) sum += std::norm(pq[i] - qp[i]);
  return std::sqrt(sum);
}

double sg_probability(double alpha, double beta) {
  double s = std::sin((beta - alpha) / 2.0);
  return 0.5 * s * s;
}

std::vector<Complex> product_state(const std::vector<QubitState>& factors) {
  if (factors.empty()) throw std::invalid_argument("product_state: no factors");
  if (factors.size() > 20) throw std::invalid_argument("product_state: too many factors");
  std::vector<Complex> state{Complex(1)};
  for (const QubitState& f : factors) {
    std::vector<Complex> next(state.size() * 2);
    for (std::size_t i = 0; i < state.size(); ++i) {
      next[2 * i] = state[i] * f.a();
      next[2 * i + 1] = state[i] * f.b();
    }
    state = std::move(next);
  }
  return state;
}

double composite_born(const std::vector<Complex>& state, const QubitProjector& p, int factor,
                      int n_factors) {
  if (n_factors < 1 || state.size() != (std::size_t{1} << n_factors))
    throw std::invalid_argument("composite_born: state size does not match factor count");
  if (factor < 0 || factor >= n_factors)
    throw std::invalid_argument("composite_born: factor index out of range");
  int shift = n_factors - 1 - factor;  // factor 0 owns the most significant bit
  Complex v(0.0, 0.0);
  for (std::size_t i = 0; i < state.size(); ++i) {
    int bi = static_cast<int>((i >> shift) & 1u);
    for (int bj = 0; bj < 2; ++bj) {
      Complex m = p.at(bi, bj);
      if (m == Complex(0)) continue;
      std::size_t j = (i & ~(std::size_t{1} << shift)) |
                      (static_cast<std::size_t>(bj) << shift);
      v += std::conj(state[i]) * m * state[j];
    }
  }
  return v.real();
}

}  // namespace ontoprob
