#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "hpw/group.hpp"
#include "hpw/group_function.hpp"
#include "hpw/spectral.hpp"
#include "hpw/spectral_operator.hpp"

namespace hpw {

/// Quadrature nodes for the Lambda integral, weights carry the plain
/// d lambda measure (the Pfaffian density is applied by the field builder).
struct LambdaNode {
  Eigen::VectorXd lambda;
  double weight;
};

/// k=1: symmetric +-[min,max] with log-even Gauss-Legendre panels.
/// k=2: geometric radial panels x uniform angles (trapezoid, exact for
/// smooth periodic integrands). k=3: radial x product rule on S^2.
struct LambdaGridSpec {
  double min = 0.005;
  double max = 8.0;
  int nodes = 64;     // total for k=1 (split over both signs); radial count otherwise
  int angular = 16;   // per angular dimension, k >= 2

  /// Grid for f -> f(delta_{1/r} .): lambda scales by r^{-2}.
  LambdaGridSpec scaled(double r) const {
    return LambdaGridSpec{min / (r * r), max / (r * r), nodes, angular};
  }
};

std::vector<LambdaNode> lambda_grid(const GroupDescriptor& g, const LambdaGridSpec& spec);

/// Quadrature budget for one operator matrix. Boxes and node counts are
/// adapted per lambda: the (p,q) boxes shrink once the matrix elements die
/// (phase-space displacement beyond ~2 sqrt(2N+1)), and node counts grow
/// with the oscillation scale sqrt(eta (2N+1)) so accuracy is uniform in
/// lambda. The base values are floors, and the box is the ceiling set by
/// the decay of f.
struct PQQuadSpec {
  double box = 7.0;
  int base_nodes = 40;
  int base_hermite = 96;
  double t_box = 9.0;  // central quadrature when f has no closed form
  int t_nodes = 64;

  PQQuadSpec scaled(double r) const {
    return PQQuadSpec{box * r, base_nodes, base_hermite, t_box * r * r, t_nodes};
  }
};

/// f^mu(v) = int f(v,t) e^{i mu.t} dt by tensor Gauss-Legendre in t.
std::complex<double> partial_central_fourier(const GroupFunction& f, const GroupDescriptor& g,
                                             const Eigen::VectorXd& mu, const Eigen::VectorXd& v,
                                             double t_box, int t_nodes);

/// Truncated matrix of pi_lambda(x): entries <pi(x) Phi_alpha, Phi_gamma>
/// over the canonical enumeration at the cutoff. Separable: a product of
/// n one-dimensional Gauss-Hermite integrals times the central phase.
Eigen::MatrixXcd rep_matrix(const SpectralParameter& sp, const GroupPoint& x, int cutoff,
                            int hermite_nodes = 96);

/// pi_lambda(x) applied to Hermite coefficients.
Eigen::VectorXcd rep_apply(const GroupPoint& x, const SpectralParameter& sp,
                           const Eigen::VectorXcd& coeffs, int cutoff, int hermite_nodes = 96);

/// The group Fourier transform F(f)(lambda) as a truncated matrix, computed
/// as the (p,q) integral of f^lambda against the rep matrix elements.
SpectralOperator gft(const GroupFunction& f, const GroupDescriptor& g,
                     const SpectralParameter& sp, int cutoff, const PQQuadSpec& quad);

/// gft at every grid node; weights carry |Pf(lambda)| when pfaffian_weighted.
/// Parallel over nodes.
FourierField build_field(const GroupFunction& f, const GroupDescriptor& g,
                         const LambdaGridSpec& grid, int cutoff, const PQQuadSpec& quad,
                         bool pfaffian_weighted = true);

struct CalibrationConstants {
  double plancherel_c = 1.0;
  double inversion_kappa = 1.0;
  double plancherel_residual = 0.0;
  double inversion_residual = 0.0;
};

/// C * sum_i w_i ||M_i||_{S_2}^2. Field must carry Pfaffian weights.
double plancherel_sum(const FourierField& field, const CalibrationConstants& consts);

struct CalibrationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Least-squares fit of the Plancherel constant C against direct Haar
/// quadrature of ||f||_2^2, and of the inversion constant kappa against
/// f(e), over a family of test functions. Throws CalibrationError if the
/// worst relative residual exceeds 0.05.
CalibrationConstants calibrate(const std::vector<FamilyMember>& family, const GroupDescriptor& g,
                               const LambdaGridSpec& grid, int cutoff, const PQQuadSpec& quad,
                               const HaarBox& haar);

/// kappa * sum_i w_i tr(pi_{lambda_i}(x)^* M_i).
std::complex<double> invert(const FourierField& field, const GroupPoint& x,
                            const CalibrationConstants& consts, int hermite_nodes = 96);

/// Max entrywise |M[delta_r f](lambda) - r^{-Q} M[f](r^{-2} lambda)| with the
/// two sides computed by gft on dilation-matched boxes.
double dilation_covariance_residual(const GroupFunction& f, const GroupDescriptor& g, double r,
                                    const Eigen::VectorXd& lambda, int cutoff,
                                    const PQQuadSpec& quad);

/// delta_r f (x -> f(delta_r x)) with the central transform mapped along.
GroupFunction dilate_function(const GroupFunction& f, const GroupDescriptor& g, double r);

}  // namespace hpw
