#pragma once

#include <Eigen/Dense>
#include <vector>

#include "hpw/fourier.hpp"
#include "hpw/group.hpp"
#include "hpw/group_function.hpp"

namespace hpw {

/// Admissible parameter triple of the HPW inequality: p in [1,2), gamma > 0,
/// beta > Q(1/p - 1/2). p_conj is the conjugate exponent (infinite at p=1).
struct InequalityConfig {
  double p = 1.0;
  double gamma = 1.0;
  double beta = 3.0;
  double p_conj = std::numeric_limits<double>::infinity();

  static InequalityConfig make(double p, double gamma, double beta, int homogeneous_dimension);
};

/// All grid/cutoff choices a report depends on, mappable along dilations:
/// for f -> c f(delta_{1/r} .) the lambda grid scales by r^{-2} and the
/// spatial boxes by r, which keeps the discretized HPW ratio invariant.
struct HarnessGrids {
  LambdaGridSpec lambda;
  PQQuadSpec pq;
  HaarBox haar;
  int cutoff = 20;

  HarnessGrids scaled(double r) const {
    return HarnessGrids{lambda.scaled(r), pq.scaled(r), haar.scaled(r), cutoff};
  }
};

/// (int (|x|^gamma |f(x)|)^p dx)^{1/p} by Haar quadrature; gamma = 0 gives ||f||_p.
double weighted_lp_norm(const GroupFunction& f, const GroupDescriptor& g, double gamma, double p,
                        const HaarBox& box);

struct SupTerm {
  double value = 0.0;
  Eigen::VectorXd argmax_lambda;
};

/// sup over grid nodes of ||F(f)(lambda) H(eta(lambda))^{beta/2}||_op (p = 1 side).
SupTerm fourier_term_p1(const FourierField& field, double beta);

/// sum_i w_i ||F(f)(lambda_i) H^{beta/2}||_{S_{p'}}^{p'} with Pfaffian weights
/// (the integral before taking the 1/p' root). Requires p_conj > 2.
double fourier_term_lp(const FourierField& field, double beta, double p_conj);

struct HPWReport {
  double p = 0.0, gamma = 0.0, beta = 0.0;
  double lhs = 0.0;           // ||f||_p^{gamma+beta}
  double weight_term = 0.0;   // ||| . |^gamma f||_p^beta
  double fourier_term = 0.0;  // (sup ...)^gamma or (integral)^{gamma/p'}
  double ratio = 0.0;         // weight_term * fourier_term / lhs
  Eigen::VectorXd argmax_lambda;
  int cutoff = 0;
  int lambda_nodes = 0;
};

/// Both sides of the HPW inequality for one function; the ratio is the
/// empirical witness for a lower bound on the constant.
HPWReport hpw_report(const GroupFunction& f, const GroupDescriptor& g,
                     const InequalityConfig& cfg, const HarnessGrids& grids);

/// Same, reusing a prebuilt Pfaffian-weighted field (sweeps share a field
/// across the (p, beta, gamma) grid).
HPWReport hpw_report_with_field(const GroupFunction& f, const GroupDescriptor& g,
                                const FourierField& field, const InequalityConfig& cfg,
                                const HarnessGrids& grids);

enum class TailSide { below, above };

/// Partial Plancherel mass: sum of squared column norms of F(f)(lambda_i)
/// over multi-indices with zeta(alpha, lambda_i) <= r (below) or > r (above),
/// with Pfaffian weights. below + above equals the full S_2 sum exactly.
double spectral_tail_mass(const FourierField& field, double r, TailSide side);

struct TailRow {
  double r = 0.0;
  double below_mass = 0.0, below_bound = 0.0, below_ratio = 0.0;
  double above_mass = 0.0, above_bound = 0.0, above_ratio = 0.0;
};

struct TailTable {
  std::vector<TailRow> rows;
  double fitted_below = 0.0;  // max over rows of mass / bound
  double fitted_above = 0.0;
};

/// Tail estimates with unit constants: below bound r^{(n+k)(1-2/p')} ||f||_p^2,
/// above bound (r^{n+k - beta p/(2-p)})^{1-2/p'} A(f,beta)^{2/p'} where
/// A = fourier_term_lp(field, beta, p'). The fitted constants are the max
/// mass/bound ratios over the r grid.
TailTable tail_bound_check(const FourierField& field, double lp_norm_f,
                           const InequalityConfig& cfg, const std::vector<double>& r_grid,
                           int n, int k);

/// ( C * sum_i w_i ||F(f)||_{S_{p'}}^{p'} )^{1/p'} / ||f||_p with the
/// Plancherel-calibrated measure C |Pf| d lambda. 1 < p < 2.
double hausdorff_young_ratio(const FourierField& field, double lp_norm_f, double p,
                             const CalibrationConstants& consts);

/// Discretized measure of {(alpha, lambda): zeta(alpha, lambda) <= r} over a
/// lambda grid with Pfaffian weights; for equal-eta groups the alpha count
/// per node is binomial((r/eta - n)/2 + n, n) in closed form.
double frequency_count_measure(const GroupDescriptor& g, const LambdaGridSpec& grid, double r);

struct EstimateResult {
  double min_ratio = 0.0;
  Eigen::VectorXd argmin;
  std::vector<double> trajectory;
  long evaluations = 0;
};

/// Derivative-free minimization of the HPW ratio over the parametric family.
/// Each evaluation maps the grids along the member's dilation so the ratio
/// is exactly flat on the dilation axis. Deterministic for a fixed seed.
EstimateResult estimate_constant(const ParamFamily& family, const GroupDescriptor& g,
                                 const InequalityConfig& cfg, long budget, std::uint64_t seed,
                                 const HarnessGrids& grids);

}  // namespace hpw
