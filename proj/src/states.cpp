#include "triqap/states.hpp"

#include <cmath>

namespace triqap {

ThreeQubitState::ThreeQubitState(const Mat8& rho, double tol) : rho_(rho) {
  if (!is_hermitian(rho_, tol)) throw std::invalid_argument("state is not Hermitian");
  if (std::abs(rho_.trace().real() - 1.0) > tol || std::abs(rho_.trace().imag()) > tol)
    throw std::invalid_argument("state trace is not 1");
  Eigen::SelfAdjointEigenSolver<Mat8> es((rho_ + rho_.adjoint()) / 2.0, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol)
    throw std::invalid_argument("state has a negative eigenvalue beyond tolerance");
}

ThreeQubitState ThreeQubitState::pure(const Vec8& amplitudes) {
  const double n = amplitudes.norm();
  if (n < 1e-12) throw std::invalid_argument("pure state has zero norm");
  const Vec8 psi = amplitudes / n;
  return ThreeQubitState(psi * psi.adjoint());
}

const Mat2& pauli(int k) {
  static const std::array<Mat2, 4> sigma = [] {
    std::array<Mat2, 4> s;
    s[0] << 1, 0, 0, 1;
    s[1] << 0, 1, 1, 0;
    s[2] << 0, cxd(0, -1), cxd(0, 1), 0;
    s[3] << 1, 0, 0, -1;
    return s;
  }();
  if (k < 0 || k > 3) throw std::invalid_argument("pauli index out of range");
  return sigma[k];
}

namespace {

// Each Pauli has exactly one nonzero entry per column: row = col ^ flip.
struct PauliColumn {
  int flip;        // row bit = col bit ^ flip
  cxd entry[2];    // nonzero entry for column 0 and column 1
};

const PauliColumn& pauli_column(int k) {
  static const PauliColumn cols[4] = {
      {0, {1.0, 1.0}},                  // I
      {1, {1.0, 1.0}},                  // sigma_1
      {1, {cxd(0, 1), cxd(0, -1)}},     // sigma_2: (1,0) -> i, (0,1) -> -i
      {0, {1.0, -1.0}},                 // sigma_3
  };
  return cols[k];
}

}  // namespace

double pauli_expectation(const Mat8& rho, int j, int k, int l) {
  // tr(rho W) = sum_m rho(m, n(m)) W(n(m), m) with n the single nonzero row.
  const PauliColumn& pj = pauli_column(j);
  const PauliColumn& pk = pauli_column(k);
  const PauliColumn& pl = pauli_column(l);
  cxd acc = 0.0;
  for (int m = 0; m < 8; ++m) {
    const int b1 = (m >> 2) & 1, b2 = (m >> 1) & 1, b3 = m & 1;
    const int n = ((b1 ^ pj.flip) << 2) | ((b2 ^ pk.flip) << 1) | (b3 ^ pl.flip);
    acc += rho(m, n) * pj.entry[b1] * pk.entry[b2] * pl.entry[b3];
  }
  return acc.real();
}

PauliDecomposition decompose_pauli(const ThreeQubitState& state) {
  const Mat8& rho = state.rho();
  PauliDecomposition d;
  for (int a = 0; a < 3; ++a) {
    d.s[0][a] = pauli_expectation(rho, a + 1, 0, 0);
    d.s[1][a] = pauli_expectation(rho, 0, a + 1, 0);
    d.s[2][a] = pauli_expectation(rho, 0, 0, a + 1);
  }
  for (int k = 0; k < 3; ++k) {
    for (int l = 0; l < 3; ++l) {
      d.b[0](k, l) = pauli_expectation(rho, 0, k + 1, l + 1);
      d.b[1](k, l) = pauli_expectation(rho, k + 1, 0, l + 1);
      d.b[2](k, l) = pauli_expectation(rho, k + 1, l + 1, 0);
    }
  }
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k)
      for (int l = 0; l < 3; ++l) d.t[j][k][l] = pauli_expectation(rho, j + 1, k + 1, l + 1);
  return d;
}

namespace {

void add_word(Mat8& rho, double coeff, int j, int k, int l) {
  if (coeff == 0.0) return;
  const PauliColumn& pj = pauli_column(j);
  const PauliColumn& pk = pauli_column(k);
  const PauliColumn& pl = pauli_column(l);
  for (int m = 0; m < 8; ++m) {
    const int b1 = (m >> 2) & 1, b2 = (m >> 1) & 1, b3 = m & 1;
    const int n = ((b1 ^ pj.flip) << 2) | ((b2 ^ pk.flip) << 1) | (b3 ^ pl.flip);
    rho(n, m) += coeff * pj.entry[b1] * pk.entry[b2] * pl.entry[b3];
  }
}

}  // namespace

Mat8 reconstruct_pauli(const PauliDecomposition& d) {
  Mat8 rho = Mat8::Zero();
  add_word(rho, 1.0, 0, 0, 0);
  for (int a = 0; a < 3; ++a) {
    add_word(rho, d.s[0][a], a + 1, 0, 0);
    add_word(rho, d.s[1][a], 0, a + 1, 0);
    add_word(rho, d.s[2][a], 0, 0, a + 1);
  }
  for (int k = 0; k < 3; ++k) {
    for (int l = 0; l < 3; ++l) {
      add_word(rho, d.b[0](k, l), 0, k + 1, l + 1);
      add_word(rho, d.b[1](k, l), k + 1, 0, l + 1);
      add_word(rho, d.b[2](k, l), k + 1, l + 1, 0);
    }
  }
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k)
      for (int l = 0; l < 3; ++l) add_word(rho, d.t[j][k][l], j + 1, k + 1, l + 1);
  return rho / 8.0;
}

CorrelationSlices correlation_slices(const PauliDecomposition& d, int i) {
  if (i < 1 || i > 3) throw std::invalid_argument("correlation_slices: index out of range");
  CorrelationSlices cs;
  cs.b = d.b[i - 1];
  for (int m = 0; m < 3; ++m) {
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) {
        if (i == 1) cs.T[m](r, c) = d.t[m][r][c];
        else if (i == 2) cs.T[m](r, c) = d.t[r][m][c];
        else cs.T[m](r, c) = d.t[r][c][m];
      }
    }
  }
  return cs;
}

Vec8 ghz_basis_vector(int j, int sign) {
  if (j < 0 || j > 3) throw std::invalid_argument("GHZ basis index out of range");
  if (sign != 1 && sign != -1) throw std::invalid_argument("GHZ basis sign must be +1 or -1");
  Vec8 v = Vec8::Zero();
  v[j] = 1.0 / std::sqrt(2.0);
  v[7 - j] = sign / std::sqrt(2.0);
  return v;
}

GhzDiagonalParams make_ghz_params(double l0p, double l0m, double l1, double l2, double l3,
                                  double tol) {
  GhzDiagonalParams p;
  p.lambda0_plus = l0p;
  p.lambda0_minus = l0m;
  p.lambda << l1, l2, l3;
  const double sum = l0p + l0m + 2.0 * (l1 + l2 + l3);
  if (std::abs(sum - 1.0) > tol)
    throw std::invalid_argument("GHZ params violate the weight simplex constraint");
  if (l0p < -tol || l0m < -tol || l1 < -tol || l2 < -tol || l3 < -tol)
    throw std::invalid_argument("GHZ params must be nonnegative");
  p.canonical = l0p >= l0m && l0p >= p.lambda.maxCoeff();
  return p;
}

GhzDiagonalParams canonicalize(GhzDiagonalParams p) {
  if (p.lambda0_minus > p.lambda0_plus) std::swap(p.lambda0_plus, p.lambda0_minus);
  p.canonical = p.lambda0_plus >= p.lambda0_minus && p.lambda0_plus >= p.lambda.maxCoeff();
  return p;
}

ThreeQubitState from_ghz_params(const GhzDiagonalParams& p) {
  const double sum = p.lambda0_plus + p.lambda0_minus + 2.0 * p.lambda.sum();
  if (std::abs(sum - 1.0) > 1e-10)
    throw std::invalid_argument("GHZ params violate the weight simplex constraint");
  Mat8 rho = Mat8::Zero();
  const Vec8 psi0p = ghz_basis_vector(0, +1);
  const Vec8 psi0m = ghz_basis_vector(0, -1);
  rho += p.lambda0_plus * (psi0p * psi0p.adjoint());
  rho += p.lambda0_minus * (psi0m * psi0m.adjoint());
  for (int j = 1; j <= 3; ++j) {
    const Vec8 vp = ghz_basis_vector(j, +1);
    const Vec8 vm = ghz_basis_vector(j, -1);
    rho += p.lambda[j - 1] * (vp * vp.adjoint() + vm * vm.adjoint());
  }
  return ThreeQubitState(rho);
}

GhzDiagonalParams depolarize_to_ghz(const ThreeQubitState& state) {
  const Mat8& rho = state.rho();
  auto overlap = [&](int j, int sign) {
    const Vec8 v = ghz_basis_vector(j, sign);
    return (v.adjoint() * rho * v)(0, 0).real();
  };
  GhzDiagonalParams p;
  p.lambda0_plus = overlap(0, +1);
  p.lambda0_minus = overlap(0, -1);
  for (int j = 1; j <= 3; ++j) p.lambda[j - 1] = (overlap(j, +1) + overlap(j, -1)) / 2.0;
  p.canonical = p.lambda0_plus >= p.lambda0_minus && p.lambda0_plus >= p.lambda.maxCoeff();
  return p;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::mt19937_64 seeded_engine(std::uint64_t seed, std::uint64_t stream) {
  return std::mt19937_64(splitmix64(splitmix64(seed) ^ splitmix64(stream + 1)));
}

ThreeQubitState random_mixed(std::uint64_t seed, int rank) {
  if (rank < 1 || rank > 8) throw std::invalid_argument("random_mixed: rank must be in 1..8");
  auto rng = seeded_engine(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd g(8, rank);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < rank; ++j) g(i, j) = cxd(gauss(rng), gauss(rng));
  Mat8 rho = g * g.adjoint();
  rho /= rho.trace().real();
  return ThreeQubitState(rho);
}

GhzDiagonalParams random_ghz_params(std::uint64_t seed) {
  auto rng = seeded_engine(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double w[5];
  double sum = 0.0;
  for (double& wi : w) {
    double u;
    do {
      u = unif(rng);
    } while (u <= 0.0);
    wi = -std::log(u);
    sum += wi;
  }
  for (double& wi : w) wi /= sum;
  return canonicalize(make_ghz_params(w[0], w[1], w[2] / 2.0, w[3] / 2.0, w[4] / 2.0));
}

}  // namespace triqap
