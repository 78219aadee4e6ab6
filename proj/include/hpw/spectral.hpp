#pragma once

#include <Eigen/Dense>
#include <string>

#include "hpw/group.hpp"
#include "hpw/multi_index.hpp"

namespace hpw {

/// A point lambda of the Plancherel-relevant parameter set together with the
/// adapted almost-symplectic basis, frequencies eta(lambda) and the Pfaffian
/// density. Columns of P and Q are the basis vectors P_j(lambda), Q_j(lambda)
/// expressed in the reference coordinates of g1.
struct SpectralParameter {
  Eigen::VectorXd lambda;
  Eigen::VectorXd eta;
  double pfaffian = 0.0;
  Eigen::MatrixXd P;
  Eigen::MatrixXd Q;
  std::string orientation;

  int n() const { return static_cast<int>(eta.size()); }
  int k() const { return static_cast<int>(lambda.size()); }

  /// Coordinates of v in the adapted basis.
  Eigen::VectorXd p_coords(const Eigen::VectorXd& v) const { return P.transpose() * v; }
  Eigen::VectorXd q_coords(const Eigen::VectorXd& v) const { return Q.transpose() * v; }
  /// Reference-coordinate vector with the given adapted coordinates.
  Eigen::VectorXd v_from_coords(const Eigen::VectorXd& pl, const Eigen::VectorXd& ql) const {
    return P * pl + Q * ql;
  }
};

/// Constructs the spectral parameter for lambda != 0.
///
/// heisenberg (k=1): the reference basis for lambda > 0; for lambda < 0 the
/// P-columns are negated, which keeps eta = |lambda| positive and makes the
/// lambda -> -lambda matrices exact complex conjugates on symmetric grids.
/// htype: P_1 = e_1, Q_j = J_{lambda/|lambda|} P_j, further P_j by projecting
/// the next coordinate vector off span{P_i, Q_i} (deterministic).
SpectralParameter make_spectral_parameter(const GroupDescriptor& g,
                                          const Eigen::VectorXd& lambda);

/// Eigenvalue zeta(alpha, lambda) = sum_j (2 alpha_j + 1) eta_j(lambda) of the
/// generalized scaled Hermite operator.
double zeta(const MultiIndex& alpha, const SpectralParameter& sp);

/// Tensor eigenfunction Phi_alpha^{eta(lambda)}(xi) = prod_j phi_{alpha_j, eta_j}(xi_j).
double phi_alpha_eval(const MultiIndex& alpha, const SpectralParameter& sp,
                      const Eigen::VectorXd& xi);

}  // namespace hpw
