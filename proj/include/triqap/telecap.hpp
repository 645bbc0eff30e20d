#pragma once

#include <array>

#include "triqap/states.hpp"

namespace triqap {

// Magic basis {(|00>+|11>)/s2, i(|00>-|11>)/s2, i(|01>+|10>)/s2, (|01>-|10>)/s2}
// as matrix columns.
const Mat4& magic_basis();

Mat2 rot_y(double theta);
Mat2 rot_z(double phi);
// U(theta, phi, psi) = Rz(phi) Ry(theta) Rz(psi); covers U(2) up to global phase.
Mat2 unitary_zyz(double theta, double phi, double psi);

struct Fef2Result {
  double f;     // fully entangled fraction, in [1/4, 1]
  Vec4 e_opt;   // a maximally entangled state attaining f
};

// FEF of a two-qubit state as the top eigenvalue of the real part of rho in
// the magic basis.
Fef2Result fef2(const Mat4& rho, double tol = kHermTolIngest);

struct MeasurementOutcome {
  int t = 0;
  double probability = 0.0;
  Mat4 conditional_state = Mat4::Identity() / 4.0;
  bool degenerate = false;  // probability < 1e-12; state replaced by I/4
};

// One-qubit orthogonal measurement of U^dag sigma_3 U on system i; returns
// both outcome branches on the remaining pair (ascending system order).
std::array<MeasurementOutcome, 2> post_measurement_pair(const ThreeQubitState& state, int i,
                                                        const Mat2& U);

struct SphereBudget {
  int grid_theta = 64;
  int grid_phi = 128;
  double angle_tol = 1e-5;
};

struct UnitaryBudget {
  int grid = 8;
  double angle_tol = 1e-7;
  int descents = 4;  // best grid cells refined
};

struct DirectionalFef {
  double f;
  Vec3r direction;
};

// Lagrange stationary point of the trace-norm bracket:
// y_l = |T_i^l| / sqrt(sum_t |T_i^t|^2), f = 1/4 + (|b+sum y T| + |b-sum y T|)/8.
// When every T_i^l vanishes, y defaults to (0,0,1) and f = 1/4 + |b|/4.
DirectionalFef f_i_closed(const PauliDecomposition& d, int i);

// Maximizes the trace-norm bracket over the unit sphere by a deterministic
// coarse grid plus local refinement; a certified lower bound of the maximum.
DirectionalFef f_i_sphere_oracle(const PauliDecomposition& d, int i,
                                 const SphereBudget& budget = {});

// Direct maximization of the defining average sum_t p_t f(rho_jk^t) over
// measurement unitaries; deterministic multi-start local search.
double f_i_definition_oracle(const ThreeQubitState& state, int i,
                             const UnitaryBudget& budget = {});

struct TeleportCapability {
  Vec3r f;                             // max of closed form and sphere oracle
  Vec3r F;                             // (2 f_i + 1)/3
  std::array<Vec3r, 3> direction;      // maximizing x per i
  bool useful = false;                 // min_i f_i > 1/2
  double closed_sphere_gap = 0.0;      // max_i |closed - sphere|
};

TeleportCapability capability(const ThreeQubitState& state, const SphereBudget& budget = {});

// f_1 = l0+ + l3, f_2 = l0+ + l2, f_3 = l0+ + l1; refuses non-canonical params.
Vec3r f_i_ghz_params(const GhzDiagonalParams& p);

}  // namespace triqap
