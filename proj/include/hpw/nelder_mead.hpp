#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <vector>

namespace hpw {

struct NelderMeadResult {
  Eigen::VectorXd best_x;
  double best_f = 0.0;
  std::vector<double> trajectory;  // best value seen after each evaluation
  long evaluations = 0;
};

/// Derivative-free simplex minimization on a box. Iterates are clipped to
/// [lower, upper]; the run is deterministic for a fixed seed (the seed only
/// perturbs the initial simplex) and stops when the evaluation budget is
/// spent or the simplex has collapsed.
NelderMeadResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& objective,
                             const Eigen::VectorXd& lower, const Eigen::VectorXd& upper,
                             const Eigen::VectorXd& start, long budget, std::uint64_t seed);

}  // namespace hpw
