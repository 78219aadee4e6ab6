#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <filesystem>
#include <vector>

#include <json.hpp>

#include "hpw/group.hpp"
#include "hpw/spectral.hpp"

namespace hpw {

/// Quadrature metadata attached to every computed operator.
struct QuadMeta {
  double p_box = 0.0, q_box = 0.0;
  int p_nodes = 0, q_nodes = 0;
  int hermite_nodes = 0;
  double t_box = 0.0;
  int t_nodes = 0;
};

/// Truncated matrix of F(f)(lambda) in the basis {Phi_alpha^{eta(lambda)}},
/// indexed (gamma, alpha) over the canonical enumeration of |alpha| <= cutoff.
/// entries(g, a) = <F(f)(lambda) Phi_a, Phi_g>.
struct SpectralOperator {
  SpectralParameter sp;
  int cutoff = 0;
  Eigen::MatrixXcd entries;
  QuadMeta meta;

  int dim() const { return static_cast<int>(entries.rows()); }
};

/// Right-multiplication by H(eta(lambda))^{beta_half*2 / 2}: column alpha is
/// scaled by zeta(alpha, lambda)^{beta_half}, realizing F(f) H^{beta/2} with
/// beta_half = beta/2. zeta > 0 on the parameter set, so negative powers are
/// well-defined.
SpectralOperator apply_H_power(const SpectralOperator& M, double beta_half);

/// zeta values along the canonical enumeration at cutoff.
Eigen::VectorXd zeta_diagonal(const SpectralParameter& sp, int cutoff);

/// Discretized map lambda_i -> F(f)(lambda_i) with quadrature weights for the
/// Lambda integral. When pfaffian_weighted, weights include |Pf(lambda_i)|.
struct FourierField {
  std::uint64_t descriptor_hash = 0;
  bool pfaffian_weighted = true;
  std::vector<double> weights;
  std::vector<SpectralOperator> ops;

  std::size_t size() const { return ops.size(); }
};

/// Versioned little-endian binary container for a field.
void save_field(const std::filesystem::path& path, const FourierField& field);
FourierField load_field(const std::filesystem::path& path, const GroupDescriptor& g);

/// JSON form for small instances (exact doubles not guaranteed; intended for
/// inspection and interop, not archival round-trips).
nlohmann::json field_to_json(const FourierField& field);

}  // namespace hpw
