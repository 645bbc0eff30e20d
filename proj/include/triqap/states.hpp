#pragma once

#include <array>
#include <cstdint>
#include <random>

#include "triqap/matcore.hpp"

namespace triqap {

inline constexpr double kStateTol = 1e-10;

// Three-qubit density matrix.  Construction enforces Hermiticity, unit trace
// and positivity (min eigenvalue >= -1e-10).
class ThreeQubitState {
 public:
  explicit ThreeQubitState(const Mat8& rho, double tol = kStateTol);
  static ThreeQubitState pure(const Vec8& amplitudes);
  const Mat8& rho() const { return rho_; }

 private:
  Mat8 rho_;
};

// sigma_1, sigma_2, sigma_3 for k = 1..3; k = 0 gives the identity.
const Mat2& pauli(int k);

// Real coefficient of a Pauli word sigma_j x sigma_k x sigma_l in rho,
// with word indices in 0..3 (0 = identity).
double pauli_expectation(const Mat8& rho, int j, int k, int l);

struct PauliDecomposition {
  std::array<Vec3r, 3> s;   // local Bloch vectors
  std::array<Mat3r, 3> b;   // pair correlations, b[i-1] excludes system i
  double t[3][3][3];        // three-body correlation tensor
};

PauliDecomposition decompose_pauli(const ThreeQubitState& state);
Mat8 reconstruct_pauli(const PauliDecomposition& d);

// The 3x3 slices of the correlation data seen from system i:
// (T_1^j)_{kl} = (T_2^k)_{jl} = (T_3^l)_{jk} = t^{jkl}.
struct CorrelationSlices {
  Mat3r b;
  std::array<Mat3r, 3> T;
};
CorrelationSlices correlation_slices(const PauliDecomposition& d, int i);

// GHZ-basis state (|j> + sign |7-j>)/sqrt2, j in 0..3, sign in {+1,-1}.
Vec8 ghz_basis_vector(int j, int sign);

struct GhzDiagonalParams {
  double lambda0_plus = 0.0;
  double lambda0_minus = 0.0;
  Vec3r lambda = Vec3r::Zero();
  bool canonical = false;  // lambda0_plus dominates lambda0_minus and every lambda_j
};

// Builds params, checks the simplex constraint l0+ + l0- + 2(l1+l2+l3) = 1
// and fills the canonical flag.
GhzDiagonalParams make_ghz_params(double l0p, double l0m, double l1, double l2, double l3,
                                  double tol = 1e-10);

// Swaps lambda0_plus/lambda0_minus if needed (a sigma_3 on one qubit realizes
// the swap).  A dominant lambda_j cannot be promoted inside the 4-parameter
// class, so such params keep canonical = false.
GhzDiagonalParams canonicalize(GhzDiagonalParams p);

ThreeQubitState from_ghz_params(const GhzDiagonalParams& p);

// GHZ-basis diagonal of a state: lambda0_pm = <Psi_0^pm|rho|Psi_0^pm>,
// lambda_j = (<Psi_j^+|rho|Psi_j^+> + <Psi_j^-|rho|Psi_j^->)/2.
GhzDiagonalParams depolarize_to_ghz(const ThreeQubitState& state);

// --- seeded randomness -----------------------------------------------------
// Substream engines are std::mt19937_64 seeded with
// splitmix64(splitmix64(seed) ^ splitmix64(stream + 1)), so independent
// streams can be pre-split by counter.

std::uint64_t splitmix64(std::uint64_t x);
std::mt19937_64 seeded_engine(std::uint64_t seed, std::uint64_t stream = 0);

// Ginibre-induced mixed state: G is 8 x rank of standard complex Gaussians,
// result is GG^dag / tr(GG^dag).
ThreeQubitState random_mixed(std::uint64_t seed, int rank);

// Uniform Dirichlet over the weight simplex (l0+, l0-, 2l1, 2l2, 2l3),
// then canonicalized.
GhzDiagonalParams random_ghz_params(std::uint64_t seed);

}  // namespace triqap
