#include "hpw/schatten.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hpw {

SingularSpectrum singular_values(const Eigen::MatrixXcd& M) {
  if (!M.allFinite()) throw std::invalid_argument("singular_values: non-finite entries");
  const Eigen::MatrixXcd gram = M.adjoint() * M;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(gram, Eigen::EigenvaluesOnly);
  Eigen::VectorXd vals = eig.eigenvalues();  // ascending
  SingularSpectrum out;
  out.values.resize(vals.size());
  for (Eigen::Index i = 0; i < vals.size(); ++i)
    out.values[vals.size() - 1 - i] = std::sqrt(std::max(0.0, vals[i]));
  return out;
}

double schatten_norm(const Eigen::MatrixXcd& M, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("schatten_norm: p must be >= 1");
  const SingularSpectrum s = singular_values(M);
  if (s.values.size() == 0) return 0.0;
  if (p == kSchattenInf) return s.values[0];
  if (p == 2.0) return std::sqrt(s.values.squaredNorm());
  if (p == 1.0) return s.values.sum();
  double acc = 0.0;
  for (Eigen::Index i = 0; i < s.values.size(); ++i) acc += std::pow(s.values[i], p);
  return std::pow(acc, 1.0 / p);
}

double onb_power_sum(const Eigen::MatrixXcd& M, const Eigen::MatrixXcd& basis, double p,
                     bool require_unit_frame) {
  if (!(p > 2.0)) throw std::invalid_argument("onb_power_sum: p must be > 2");
  if (basis.rows() != M.cols()) throw std::invalid_argument("onb_power_sum: shape mismatch");
  if (require_unit_frame) {
    const auto [c1, c2] = frame_bounds(basis);
    (void)c1;
    if (c2 > 1.0 + 1e-10)
      throw std::invalid_argument("onb_power_sum: upper frame bound exceeds 1");
  }
  double acc = 0.0;
  for (Eigen::Index j = 0; j < basis.cols(); ++j)
    acc += std::pow((M * basis.col(j)).norm(), p);
  return acc;
}

std::pair<double, double> frame_bounds(const Eigen::MatrixXcd& vectors) {
  if (vectors.cols() == 0) throw std::invalid_argument("frame_bounds: empty family");
  const Eigen::MatrixXcd S = vectors * vectors.adjoint();  // frame operator
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(S, Eigen::EigenvaluesOnly);
  const double lo = std::max(0.0, eig.eigenvalues().minCoeff());
  const double hi = std::max(0.0, eig.eigenvalues().maxCoeff());
  return {lo, hi};
}

}  // namespace hpw
