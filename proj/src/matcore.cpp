#include "triqap/matcore.hpp"

namespace triqap {

bool is_hermitian(const Eigen::MatrixXcd& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Mat4 partial_trace(const Mat8& rho, int traced_out) {
  const int bo = qubit_bit(traced_out);
  int keep[2], k = 0;
  for (int s = 1; s <= 3; ++s)
    if (s != traced_out) keep[k++] = qubit_bit(s);
  Mat4 out = Mat4::Zero();
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      for (int x = 0; x < 2; ++x) {
        const int m = ((a >> 1) & 1) << keep[0] | (a & 1) << keep[1] | x << bo;
        const int n = ((b >> 1) & 1) << keep[0] | (b & 1) << keep[1] | x << bo;
        out(a, b) += rho(m, n);
      }
    }
  }
  return out;
}

Mat2 partial_trace_two(const Mat8& rho, int kept) {
  const int bk = qubit_bit(kept);
  int gone[2], k = 0;
  for (int s = 1; s <= 3; ++s)
    if (s != kept) gone[k++] = qubit_bit(s);
  Mat2 out = Mat2::Zero();
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int x = 0; x < 4; ++x) {
        const int rest = ((x >> 1) & 1) << gone[0] | (x & 1) << gone[1];
        out(a, b) += rho(a << bk | rest, b << bk | rest);
      }
    }
  }
  return out;
}

Mat8 partial_transpose(const Mat8& rho, int system) {
  const int bit = qubit_bit(system);
  Mat8 out;
  for (int m = 0; m < 8; ++m) {
    for (int n = 0; n < 8; ++n) {
      const int mm = (m & ~(1 << bit)) | (((n >> bit) & 1) << bit);
      const int nn = (n & ~(1 << bit)) | (((m >> bit) & 1) << bit);
      out(mm, nn) = rho(m, n);
    }
  }
  return out;
}

HermitianEigs hermitian_eigs(const Eigen::MatrixXcd& m, double tol) {
  if (!is_hermitian(m, tol)) throw std::invalid_argument("hermitian_eigs: input is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es((m + m.adjoint()) / 2.0);
  if (es.info() != Eigen::Success) throw std::runtime_error("hermitian_eigs: eigensolver failed");
  return {es.eigenvalues(), es.eigenvectors()};
}

double trace_norm(const Eigen::MatrixXcd& m) {
  if (m.rows() == m.cols() && is_hermitian(m, kHermTolInternal)) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es((m + m.adjoint()) / 2.0, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().sum();
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues().sum();
}

double trace_norm(const Mat3r& m) {
  Eigen::SelfAdjointEigenSolver<Mat3r> es;
  es.computeDirect(m.transpose() * m, Eigen::EigenvaluesOnly);
  double sum = 0.0;
  for (int i = 0; i < 3; ++i) sum += std::sqrt(std::max(0.0, es.eigenvalues()[i]));
  return sum;
}

}  // namespace triqap
