#include "triqap/telecap.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "optim_util.hpp"

namespace triqap {

const Mat4& magic_basis() {
  static const Mat4 m = [] {
    const double s2 = 1.0 / std::sqrt(2.0);
    const cxd i(0, 1);
    Mat4 b = Mat4::Zero();
    b.col(0) << s2, 0, 0, s2;
    b.col(1) << i * s2, 0, 0, -i * s2;
    b.col(2) << 0, i * s2, i * s2, 0;
    b.col(3) << 0, s2, -s2, 0;
    return b;
  }();
  return m;
}

Mat2 rot_y(double theta) {
  Mat2 u;
  u << std::cos(theta / 2), -std::sin(theta / 2), std::sin(theta / 2), std::cos(theta / 2);
  return u;
}

Mat2 rot_z(double phi) {
  Mat2 u = Mat2::Zero();
  u(0, 0) = std::exp(cxd(0, -phi / 2));
  u(1, 1) = std::exp(cxd(0, phi / 2));
  return u;
}

Mat2 unitary_zyz(double theta, double phi, double psi) {
  return rot_z(phi) * rot_y(theta) * rot_z(psi);
}

Fef2Result fef2(const Mat4& rho, double tol) {
  if (!is_hermitian(rho, tol)) throw std::invalid_argument("fef2: state is not Hermitian");
  if (std::abs(rho.trace().real() - 1.0) > tol)
    throw std::invalid_argument("fef2: state trace is not 1");
  {
    Eigen::SelfAdjointEigenSolver<Mat4> es((rho + rho.adjoint()) / 2.0, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -tol)
      throw std::invalid_argument("fef2: state has a negative eigenvalue beyond tolerance");
  }
  const Mat4& m = magic_basis();
  const Mat4 r = m.adjoint() * rho * m;
  const Eigen::Matrix4d re = (r.real() + r.real().transpose()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(re);
  const int top = 3;  // ascending order
  Fef2Result out;
  out.f = es.eigenvalues()[top];
  out.e_opt = m * es.eigenvectors().col(top).cast<cxd>();
  return out;
}

std::array<MeasurementOutcome, 2> post_measurement_pair(const ThreeQubitState& state, int i,
                                                        const Mat2& U) {
  if ((U.adjoint() * U - Mat2::Identity()).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("post_measurement_pair: U is not unitary");
  const Mat8& rho = state.rho();
  const Mat2 rho_i = partial_trace_two(rho, i);
  const Mat2 urho = U * rho_i * U.adjoint();

  const int bi = qubit_bit(i);
  int keep[2], k = 0;
  for (int s = 1; s <= 3; ++s)
    if (s != i) keep[k++] = qubit_bit(s);

  std::array<MeasurementOutcome, 2> out;
  for (int t = 0; t < 2; ++t) {
    out[t].t = t;
    out[t].probability = urho(t, t).real();
    // conditional[(ab),(a'b')] = sum_{x,x'} U(t,x) rho[(ab,x),(a'b',x')] U*(t,x')
    Mat4 cond = Mat4::Zero();
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) {
        cxd acc = 0.0;
        for (int x = 0; x < 2; ++x) {
          for (int xp = 0; xp < 2; ++xp) {
            const int mfull = ((a >> 1) & 1) << keep[0] | (a & 1) << keep[1] | x << bi;
            const int nfull = ((b >> 1) & 1) << keep[0] | (b & 1) << keep[1] | xp << bi;
            acc += U(t, x) * rho(mfull, nfull) * std::conj(U(t, xp));
          }
        }
        cond(a, b) = acc;
      }
    }
    if (out[t].probability < 1e-12) {
      out[t].conditional_state = Mat4::Identity() / 4.0;
      out[t].degenerate = true;
    } else {
      out[t].conditional_state = cond / out[t].probability;
      out[t].degenerate = false;
    }
  }
  return out;
}

namespace {

Vec3r direction_from_angles(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

double bracket_value(const CorrelationSlices& cs, const Vec3r& x) {
  const Mat3r m = x[0] * cs.T[0] + x[1] * cs.T[1] + x[2] * cs.T[2];
  return trace_norm(Mat3r(cs.b + m)) + trace_norm(Mat3r(cs.b - m));
}

}  // namespace

DirectionalFef f_i_closed(const PauliDecomposition& d, int i) {
  const CorrelationSlices cs = correlation_slices(d, i);
  Vec3r norms;
  for (int l = 0; l < 3; ++l) norms[l] = trace_norm(cs.T[l]);
  const double tot = norms.norm();
  if (tot < 1e-14) return {0.25 + trace_norm(cs.b) / 4.0, Vec3r(0, 0, 1)};
  const Vec3r y = norms / tot;
  return {0.25 + bracket_value(cs, y) / 8.0, y};
}

DirectionalFef f_i_sphere_oracle(const PauliDecomposition& d, int i, const SphereBudget& budget) {
  const CorrelationSlices cs = correlation_slices(d, i);
  auto value = [&](const std::array<double, 2>& ang) {
    return 0.25 + bracket_value(cs, direction_from_angles(ang[0], ang[1])) / 8.0;
  };
  std::array<double, 2> best_ang{0.0, 0.0};
  double best = -1.0;
  for (int a = 0; a < budget.grid_theta; ++a) {
    const double theta = M_PI * (a + 0.5) / budget.grid_theta;
    for (int b = 0; b < budget.grid_phi; ++b) {
      const double phi = 2.0 * M_PI * b / budget.grid_phi;
      const double v = value({theta, phi});
      if (v > best) {
        best = v;
        best_ang = {theta, phi};
      }
    }
  }
  best = detail::coordinate_ascent<2>(value, best_ang, M_PI / budget.grid_theta,
                                      budget.angle_tol);
  return {best, direction_from_angles(best_ang[0], best_ang[1])};
}

double f_i_definition_oracle(const ThreeQubitState& state, int i, const UnitaryBudget& budget) {
  auto value = [&](const std::array<double, 3>& ang) {
    const Mat2 u = unitary_zyz(ang[0], ang[1], ang[2]);
    const auto outcomes = post_measurement_pair(state, i, u);
    double acc = 0.0;
    for (const auto& o : outcomes) {
      if (o.degenerate) continue;  // contributes 0 to the average
      acc += o.probability * fef2(o.conditional_state).f;
    }
    return acc;
  };

  struct Start {
    double v;
    std::array<double, 3> ang;
  };
  std::vector<Start> grid;
  grid.reserve(budget.grid * budget.grid * budget.grid);
  for (int a = 0; a < budget.grid; ++a) {
    const double theta = M_PI * (a + 0.5) / budget.grid;
    for (int b = 0; b < budget.grid; ++b) {
      const double phi = 2.0 * M_PI * b / budget.grid;
      for (int c = 0; c < budget.grid; ++c) {
        const double psi = 2.0 * M_PI * c / budget.grid;
        grid.push_back({value({theta, phi, psi}), {theta, phi, psi}});
      }
    }
  }
  std::stable_sort(grid.begin(), grid.end(), [](const Start& a, const Start& b) { return a.v > b.v; });

  double best = grid.front().v;
  const int nstarts = std::min<int>(budget.descents, static_cast<int>(grid.size()));
  for (int s = 0; s < nstarts; ++s) {
    std::array<double, 3> ang = grid[s].ang;
    best = std::max(best, detail::coordinate_ascent<3>(value, ang, M_PI / budget.grid,
                                                       budget.angle_tol));
  }
  return best;
}

TeleportCapability capability(const ThreeQubitState& state, const SphereBudget& budget) {
  const PauliDecomposition d = decompose_pauli(state);
  TeleportCapability cap;
  cap.closed_sphere_gap = 0.0;
  for (int i = 1; i <= 3; ++i) {
    const DirectionalFef closed = f_i_closed(d, i);
    const DirectionalFef sphere = f_i_sphere_oracle(d, i, budget);
    cap.closed_sphere_gap = std::max(cap.closed_sphere_gap, std::abs(closed.f - sphere.f));
    if (sphere.f >= closed.f) {
      cap.f[i - 1] = sphere.f;
      cap.direction[i - 1] = sphere.direction;
    } else {
      cap.f[i - 1] = closed.f;
      cap.direction[i - 1] = closed.direction;
    }
    cap.F[i - 1] = (2.0 * cap.f[i - 1] + 1.0) / 3.0;
  }
  cap.useful = cap.f.minCoeff() > 0.5;
  return cap;
}

Vec3r f_i_ghz_params(const GhzDiagonalParams& p) {
  if (!p.canonical)
    throw std::invalid_argument("f_i_ghz_params: non-canonical params refused");
  return {p.lambda0_plus + p.lambda[2], p.lambda0_plus + p.lambda[1],
          p.lambda0_plus + p.lambda[0]};
}

}  // namespace triqap
