#pragma once

#include <Eigen/Dense>

namespace hpw {

/// L2-normalized Hermite function phi_m(tau), the eigenfunctions of
/// -d^2/dtau^2 + tau^2 with eigenvalue 2m+1. Evaluated by the three-term
/// recurrence with an exponent-carrying representation so that values stay
/// finite for m <= 256 and |tau| <= 40 even where e^{-tau^2/2} underflows.
double hermite_eval(int m, double tau);

/// phi_0..phi_mmax at a single point (same exponent-carrying recurrence).
Eigen::VectorXd hermite_eval_all(int mmax, double tau);

/// h_m(x) = phi_m(x) e^{x^2/2}: the orthonormal-polynomial part used in
/// Gauss-Hermite sums where the weight e^{-x^2} is carried separately.
/// Column m of the result holds h_m at every node. Arguments must satisfy
/// |x| <= ~40 at moderate m to stay in double range.
Eigen::MatrixXd hermite_weightless_table(int mmax, const Eigen::VectorXd& x);

/// phi_{m,beta}(tau) = beta^{1/4} phi_m(sqrt(beta) tau), beta > 0.
double scaled_hermite_eval(int m, double beta, double tau);

}  // namespace hpw
