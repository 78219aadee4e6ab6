#include "hpw/spectral.hpp"

#include <cmath>
#include <stdexcept>

#include "hpw/hermite.hpp"

namespace hpw {

SpectralParameter make_spectral_parameter(const GroupDescriptor& g,
                                          const Eigen::VectorXd& lambda) {
  if (lambda.size() != g.k) throw std::invalid_argument("spectral parameter: lambda dim != k");
  if (!(lambda.norm() > 0.0)) throw std::invalid_argument("spectral parameter: lambda = 0");

  SpectralParameter sp;
  sp.lambda = lambda;
  sp.eta = g.eta(lambda);
  for (int j = 0; j < g.n; ++j)
    if (!(sp.eta[j] > 0.0)) throw std::runtime_error("spectral parameter: eta must be positive");
  {
    // degree-1 homogeneity of eta, checked against the descriptor
    const Eigen::VectorXd e2 = g.eta(2.0 * lambda);
    if (((e2 - 2.0 * sp.eta).cwiseAbs().maxCoeff()) > 1e-12 * sp.eta.maxCoeff())
      throw std::runtime_error("spectral parameter: eta is not homogeneous of degree 1");
  }
  sp.pfaffian = sp.eta.prod();

  const int n = g.n;
  if (g.kind == "heisenberg") {
    sp.P = Eigen::MatrixXd::Zero(2 * n, n);
    sp.Q = Eigen::MatrixXd::Zero(2 * n, n);
    const double sign = lambda[0] > 0.0 ? 1.0 : -1.0;
    sp.P.topRows(n) = sign * Eigen::MatrixXd::Identity(n, n);
    sp.Q.bottomRows(n) = Eigen::MatrixXd::Identity(n, n);
    sp.orientation = lambda[0] > 0.0 ? "reference" : "p-reflected";
    return sp;
  }

  // htype: orthonormal pairs (P_j, Q_j = J_unit P_j) grown from the
  // coordinate vectors in order.
  const Eigen::MatrixXd Ju = g.j_map(lambda / lambda.norm());
  sp.P.resize(2 * n, n);
  sp.Q.resize(2 * n, n);
  int built = 0;
  for (int cand = 0; cand < 2 * n && built < n; ++cand) {
    Eigen::VectorXd u = Eigen::VectorXd::Zero(2 * n);
    u[cand] = 1.0;
    for (int j = 0; j < built; ++j) {
      u -= sp.P.col(j).dot(u) * sp.P.col(j);
      u -= sp.Q.col(j).dot(u) * sp.Q.col(j);
    }
    const double norm = u.norm();
    if (norm < 1e-8) continue;
    u /= norm;
    sp.P.col(built) = u;
    sp.Q.col(built) = Ju * u;  // unit and orthogonal to u since Ju^2 = -Id, skew
    ++built;
  }
  if (built != n) throw std::runtime_error("spectral parameter: basis construction failed");
  sp.orientation = "j-gram-schmidt";
  return sp;
}

double zeta(const MultiIndex& alpha, const SpectralParameter& sp) {
  if (alpha.dim() != sp.n()) throw std::invalid_argument("zeta: multi-index dim != n");
  double z = 0.0;
  for (int j = 0; j < sp.n(); ++j) z += (2.0 * alpha.entries[j] + 1.0) * sp.eta[j];
  return z;
}

double phi_alpha_eval(const MultiIndex& alpha, const SpectralParameter& sp,
                      const Eigen::VectorXd& xi) {
  if (alpha.dim() != sp.n() || xi.size() != sp.n())
    throw std::invalid_argument("phi_alpha_eval: dimension mismatch");
  double prod = 1.0;
  for (int j = 0; j < sp.n(); ++j)
    prod *= scaled_hermite_eval(alpha.entries[j], sp.eta[j], xi[j]);
  return prod;
}

}  // namespace hpw
