#pragma once

#include <Eigen/Dense>
#include <filesystem>

namespace hpw {

struct QuadratureRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
  int size() const { return static_cast<int>(nodes.size()); }
};

/// Gauss-Hermite rule for weight e^{-x^2}: exact for polynomials of degree
/// 2*count-1, sum of weights = sqrt(pi). Golub-Welsch on the Jacobi matrix.
QuadratureRule gauss_hermite(int count);

/// Gauss-Legendre on [-1,1].
QuadratureRule gauss_legendre(int count);

/// Gauss-Legendre mapped to [a,b].
QuadratureRule legendre_on(double a, double b, int count);

/// Composite Gauss-Legendre over [lo,hi] split into log-even panels,
/// roughly one per decade. Node count is distributed evenly.
QuadratureRule geometric_panels(double lo, double hi, int count);

/// Process-wide memoized Gauss-Hermite tables (read-only after creation).
const QuadratureRule& cached_gauss_hermite(int count);

/// Binary sidecar (exact little-endian doubles, keyed by count).
void save_rule(const std::filesystem::path& path, const QuadratureRule& rule);
QuadratureRule load_rule(const std::filesystem::path& path);

}  // namespace hpw
