#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace hpw {

/// A Metivier group in almost-symplectic coordinates: g = g1 + g2 with
/// dim g1 = 2n, dim g2 = k, and the structure map lambda -> J_lambda
/// assembled linearly from k skew-symmetric generators.
///
/// Shipped kinds: "heisenberg" (k=1, J = [[0,-I],[I,0]]) and "htype"
/// (user-supplied anticommuting generators with J_a^2 = -Id).
struct GroupDescriptor {
  int n = 1;
  int k = 1;
  std::string kind = "heisenberg";
  std::vector<Eigen::MatrixXd> j_generators;  // k matrices, 2n x 2n, skew

  int homogeneous_dimension() const { return 2 * n + 2 * k; }

  /// J_lambda = sum_j lambda_j J_j.
  Eigen::MatrixXd j_map(const Eigen::VectorXd& lambda) const;

  /// Commutator vector c(v,w) in g2 coordinates: c_j = <J_j v, w>.
  Eigen::VectorXd commutator(const Eigen::VectorXd& v, const Eigen::VectorXd& w) const;

  /// Frequencies eta_1..eta_n of J_lambda (positive, degree-1 homogeneous).
  Eigen::VectorXd eta(const Eigen::VectorXd& lambda) const;

  std::uint64_t hash() const;

  static GroupDescriptor heisenberg(int n);
  static GroupDescriptor htype(int n, int k, std::vector<Eigen::MatrixXd> generators);
  static GroupDescriptor from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

/// x = (p, q, t): p,q coefficients on the reference p/q blocks of g1,
/// t central coordinates. Identity is (0,0,0).
struct GroupPoint {
  Eigen::VectorXd p;
  Eigen::VectorXd q;
  Eigen::VectorXd t;

  Eigen::VectorXd v() const;  // concatenated (p,q) in R^{2n}
  static GroupPoint identity(const GroupDescriptor& g);
  static GroupPoint from_v(const Eigen::VectorXd& v, const Eigen::VectorXd& t);
};

/// BCH product: (v,t)(v',t') = (v+v', t+t'+c(v,v')/2).
GroupPoint multiply(const GroupPoint& a, const GroupPoint& b, const GroupDescriptor& g);

GroupPoint inverse(const GroupPoint& x);

/// delta_r(v,t) = (r v, r^2 t), r > 0.
GroupPoint dilate(const GroupPoint& x, double r);

/// Koranyi-type gauge (|v|^4 + |t|^2)^{1/4}.
double hom_norm(const GroupPoint& x);

struct HaarBox {
  double v_radius = 7.0;
  double t_radius = 9.0;
  int v_nodes = 48;
  int t_nodes = 48;

  HaarBox scaled(double r) const {
    return HaarBox{v_radius * r, t_radius * r * r, v_nodes, t_nodes};
  }
};

struct HaarResult {
  std::complex<double> value;
  long node_count = 0;
  /// max |f| over the outermost quadrature shell; decay proxy for the caller.
  double outer_shell_max = 0.0;
};

/// Tensor-product Gauss-Legendre quadrature of f over the truncated box;
/// Haar measure is Lebesgue measure dv dt in these coordinates.
HaarResult haar_integral(const std::function<std::complex<double>(const GroupPoint&)>& f,
                         const GroupDescriptor& g, const HaarBox& box);

}  // namespace hpw
