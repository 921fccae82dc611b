#include "oitkit/kalman.hpp"

#include <string>

#include "oitkit/error.hpp"

namespace oit::classical {

namespace {

std::string shape(const Eigen::MatrixXd& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

void require_shape(const Eigen::MatrixXd& m, Eigen::Index rows, Eigen::Index cols, const char* name) {
  if (m.rows() != rows || m.cols() != cols) {
    throw Error(ErrorKind::DimensionMismatch, std::string(name) + " is " + shape(m) + ", expected " +
                                                  std::to_string(rows) + "x" + std::to_string(cols));
  }
}

void require_symmetric(const Eigen::MatrixXd& m, const char* name) {
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw Error(ErrorKind::InvalidModel, std::string(name) + " must be symmetric");
  }
}

void require_psd(const Eigen::MatrixXd& m, const char* name) {
  require_symmetric(m, name);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(m, Eigen::EigenvaluesOnly);
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if (eig.eigenvalues().minCoeff() < -1e-12 * scale) {
    throw Error(ErrorKind::InvalidModel, std::string(name) + " must be positive semidefinite");
  }
}

}  // namespace

void LinearSystemSpec::check() const {
  const auto n = A.rows();
  if (n == 0) throw Error(ErrorKind::DimensionMismatch, "A must be a nonempty square matrix");
  require_shape(A, n, n, "A");
  if (B.rows() != n) throw Error(ErrorKind::DimensionMismatch, "B has " + std::to_string(B.rows()) + " rows, expected " + std::to_string(n));
  const auto p = H.rows();
  if (p == 0) throw Error(ErrorKind::DimensionMismatch, "H must have at least one row");
  require_shape(H, p, n, "H");
  require_shape(Q, n, n, "Q");
  require_shape(R, p, p, "R");
  require_shape(P0, n, n, "P0");
  if (x0.size() != n) throw Error(ErrorKind::DimensionMismatch, "x0 has " + std::to_string(x0.size()) + " entries, expected " + std::to_string(n));
  require_psd(Q, "Q");
  require_psd(P0, "P0");
  require_symmetric(R, "R");
  if (Eigen::LLT<Eigen::MatrixXd>(R).info() != Eigen::Success) {
    throw Error(ErrorKind::InvalidModel, "R must be positive definite");
  }
}

std::vector<KalmanStep> kalman_filter(const LinearSystemSpec& sys, const std::vector<Eigen::VectorXd>& inputs,
                                      const std::vector<Eigen::VectorXd>& measurements) {
  sys.check();
  const std::size_t steps = measurements.size();
  if (steps == 0) throw Error(ErrorKind::EmptyInput, "need at least one measurement");
  const bool has_input = sys.input_dim() > 0;
  if (has_input && inputs.size() != steps) {
    throw Error(ErrorKind::DimensionMismatch, std::to_string(inputs.size()) + " inputs for " + std::to_string(steps) + " steps");
  }

  const auto n = sys.state_dim();
  const Eigen::MatrixXd identity = Eigen::MatrixXd::Identity(n, n);
  Eigen::VectorXd x = sys.x0;
  Eigen::MatrixXd P = sys.P0;

  std::vector<KalmanStep> trace;
  trace.reserve(steps);
  for (std::size_t k = 0; k < steps; ++k) {
    const auto& z = measurements[k];
    if (z.size() != sys.measurement_dim()) {
      throw Error(ErrorKind::DimensionMismatch, "z(" + std::to_string(k + 1) + ") has " + std::to_string(z.size()) + " entries");
    }

    Eigen::VectorXd x_pred = sys.A * x;
    if (has_input) {
      if (inputs[k].size() != sys.input_dim()) {
        throw Error(ErrorKind::DimensionMismatch, "U(" + std::to_string(k + 1) + ") has " + std::to_string(inputs[k].size()) + " entries");
      }
      x_pred += sys.B * inputs[k];
    }
    Eigen::MatrixXd P_pred = sys.A * P * sys.A.transpose() + sys.Q;

    const Eigen::MatrixXd S = sys.H * P_pred * sys.H.transpose() + sys.R;
    Eigen::LLT<Eigen::MatrixXd> llt(0.5 * (S + S.transpose()));
    if (llt.info() != Eigen::Success) {
      throw Error(ErrorKind::SingularInnovation, "H P H^T + R is not positive definite at step " + std::to_string(k + 1));
    }
    // G = P H^T S^-1  <=>  S G^T = H P^T
    const Eigen::MatrixXd G = llt.solve(sys.H * P_pred.transpose()).transpose();

    x = x_pred + G * (z - sys.H * x_pred);
    P = (identity - G * sys.H) * P_pred;
    P = (0.5 * (P + P.transpose())).eval();
    trace.push_back({x, P, G});
  }
  return trace;
}

}  // namespace oit::classical
