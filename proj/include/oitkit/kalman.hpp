#pragma once

#include <vector>

#include <Eigen/Dense>

namespace oit::classical {

// x(k) = A x(k-1) + B U(k) + W(k),  W ~ N(0, Q)
// z(k) = H x(k) + V(k),             V ~ N(0, R)
struct LinearSystemSpec {
  Eigen::MatrixXd A;
  Eigen::MatrixXd B;
  Eigen::MatrixXd H;
  Eigen::MatrixXd Q;
  Eigen::MatrixXd R;
  Eigen::VectorXd x0;
  Eigen::MatrixXd P0;

  Eigen::Index state_dim() const { return A.rows(); }
  Eigen::Index input_dim() const { return B.cols(); }
  Eigen::Index measurement_dim() const { return H.rows(); }

  // Throws Error(DimensionMismatch) or Error(InvalidModel) on bad shapes,
  // asymmetric covariances or an R that is not positive definite.
  void check() const;
};

struct KalmanStep {
  Eigen::VectorXd x;  // x(k|k)
  Eigen::MatrixXd P;  // P(k|k)
  Eigen::MatrixXd G;  // gain G(k)
};

// Runs the predict/update recursion for k = 1..K, where K = measurements.size().
// inputs may be empty when B has no columns; otherwise one U(k) per step.
//
// The covariance prediction uses P(k-1|k-1):  P(k|k-1) = A P(k-1|k-1) A^T + Q.
// The gain is obtained from a Cholesky solve of the innovation covariance
// H P H^T + R; failure raises Error(SingularInnovation).
std::vector<KalmanStep> kalman_filter(const LinearSystemSpec& sys, const std::vector<Eigen::VectorXd>& inputs,
                                      const std::vector<Eigen::VectorXd>& measurements);

}  // namespace oit::classical
