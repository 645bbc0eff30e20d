#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace triqap {

using cxd = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Mat8 = Eigen::Matrix<cxd, 8, 8>;
using Mat3r = Eigen::Matrix3d;
using Vec2 = Eigen::Vector2cd;
using Vec3r = Eigen::Vector3d;
using Vec4 = Eigen::Vector4cd;
using Vec8 = Eigen::Matrix<cxd, 8, 1>;

// Hermiticity tolerance tiers: internally constructed matrices vs. matrices
// ingested from files (file input carries more noise).
inline constexpr double kHermTolInternal = 1e-12;
inline constexpr double kHermTolIngest = 1e-10;

bool is_hermitian(const Eigen::MatrixXcd& m, double tol = kHermTolIngest);

// Kronecker product; dimensions multiply.
Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

// Bit position of a 1-based subsystem index under the normative encoding:
// basis index m in 0..7 carries the bits (q1 q2 q3) most-significant-first.
inline int qubit_bit(int system) {
  if (system < 1 || system > 3) throw std::invalid_argument("subsystem index must be in {1,2,3}");
  return 3 - system;
}

// Trace over one named subsystem of a three-qubit operator; the remaining
// pair keeps ascending system order.
Mat4 partial_trace(const Mat8& rho, int traced_out);

// Trace over the two other subsystems, keeping `kept`.
Mat2 partial_trace_two(const Mat8& rho, int kept);

// Transpose the indices of one tensor factor only.
Mat8 partial_transpose(const Mat8& rho, int system);

struct HermitianEigs {
  Eigen::VectorXd values;    // ascending
  Eigen::MatrixXcd vectors;  // orthonormal columns, matching values
};

// Eigendecomposition of a Hermitian matrix; throws on non-Hermitian input.
HermitianEigs hermitian_eigs(const Eigen::MatrixXcd& m, double tol = kHermTolIngest);

// Sum of singular values.  The 3x3 real overload takes the square roots of
// the eigenvalues of M^T M, clamped at 0 to absorb -1e-15 round-off.
double trace_norm(const Eigen::MatrixXcd& m);
double trace_norm(const Mat3r& m);

}  // namespace triqap
