#pragma once

#include <Eigen/Dense>
#include <utility>

namespace hpw {

/// Singular values sorted nonincreasing.
struct SingularSpectrum {
  Eigen::VectorXd values;
};

/// Singular values via the eigendecomposition of M^* M, with round-off
/// negatives clamped to zero before the square root.
SingularSpectrum singular_values(const Eigen::MatrixXcd& M);

/// Value used for the operator-norm case of schatten_norm.
inline constexpr double kSchattenInf = std::numeric_limits<double>::infinity();

/// l^p norm of the singular values; p = kSchattenInf gives the operator norm.
/// Requires p >= 1.
double schatten_norm(const Eigen::MatrixXcd& M, double p);

/// sum_n ||M f_n||^p over the columns f_n of basis, p > 2. With
/// require_unit_frame, the columns must form a frame with upper bound <= 1
/// (orthonormal within 1e-10 qualifies).
double onb_power_sum(const Eigen::MatrixXcd& M, const Eigen::MatrixXcd& basis, double p,
                     bool require_unit_frame = false);

/// Tight frame bounds (C1, C2): the extreme eigenvalues of sum_n f_n f_n^*.
/// A non-spanning family returns C1 = 0.
std::pair<double, double> frame_bounds(const Eigen::MatrixXcd& vectors);

}  // namespace hpw
