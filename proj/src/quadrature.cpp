#include "hpw/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "hpw/util.hpp"

namespace hpw {

namespace {

// Symmetric tridiagonal Jacobi matrix -> nodes (eigenvalues) and weights
// (first eigenvector components squared, times the zeroth moment).
QuadratureRule golub_welsch(const Eigen::VectorXd& diag, const Eigen::VectorXd& sub,
                            double moment0) {
  const int n = static_cast<int>(diag.size());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig;
  eig.computeFromTridiagonal(diag, sub);
  QuadratureRule rule;
  rule.nodes = eig.eigenvalues();
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    const double v0 = eig.eigenvectors()(0, i);
    rule.weights[i] = moment0 * v0 * v0;
  }
  return rule;
}

}  // namespace

QuadratureRule gauss_hermite(int count) {
  if (count < 1) throw std::invalid_argument("gauss_hermite: count must be >= 1");
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(count);
  Eigen::VectorXd sub(count - 1);
  for (int j = 1; j < count; ++j) sub[j - 1] = std::sqrt(j / 2.0);
  QuadratureRule rule = golub_welsch(diag, sub, std::sqrt(M_PI));
  // enforce exact symmetry of the computed nodes
  for (int i = 0, j = count - 1; i < j; ++i, --j) {
    const double x = 0.5 * (rule.nodes[j] - rule.nodes[i]);
    rule.nodes[i] = -x;
    rule.nodes[j] = x;
    const double w = 0.5 * (rule.weights[i] + rule.weights[j]);
    rule.weights[i] = rule.weights[j] = w;
  }
  if (count % 2 == 1) rule.nodes[count / 2] = 0.0;
  return rule;
}

QuadratureRule gauss_legendre(int count) {
  if (count < 1) throw std::invalid_argument("gauss_legendre: count must be >= 1");
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(count);
  Eigen::VectorXd sub(count - 1);
  for (int j = 1; j < count; ++j) sub[j - 1] = j / std::sqrt(4.0 * j * j - 1.0);
  return golub_welsch(diag, sub, 2.0);
}

QuadratureRule legendre_on(double a, double b, int count) {
  QuadratureRule base = gauss_legendre(count);
  QuadratureRule rule;
  rule.nodes = 0.5 * (b - a) * base.nodes.array() + 0.5 * (a + b);
  rule.weights = 0.5 * (b - a) * base.weights;
  return rule;
}

QuadratureRule geometric_panels(double lo, double hi, int count) {
  if (!(0.0 < lo && lo < hi)) throw std::invalid_argument("geometric_panels: need 0 < lo < hi");
  if (count < 2) throw std::invalid_argument("geometric_panels: count must be >= 2");
  const int panels = std::max(1, static_cast<int>(std::ceil(std::log10(hi / lo))));
  const int per_panel = std::max(2, count / panels);
  QuadratureRule rule;
  rule.nodes.resize(panels * per_panel);
  rule.weights.resize(panels * per_panel);
  const double ratio = std::pow(hi / lo, 1.0 / panels);
  double left = lo;
  int at = 0;
  for (int p = 0; p < panels; ++p) {
    const double right = (p + 1 == panels) ? hi : left * ratio;
    QuadratureRule piece = legendre_on(left, right, per_panel);
    rule.nodes.segment(at, per_panel) = piece.nodes;
    rule.weights.segment(at, per_panel) = piece.weights;
    at += per_panel;
    left = right;
  }
  return rule;
}

const QuadratureRule& cached_gauss_hermite(int count) {
  static std::mutex mu;
  static std::map<int, QuadratureRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(count);
  if (it == cache.end()) it = cache.emplace(count, gauss_hermite(count)).first;
  return it->second;
}

void save_rule(const std::filesystem::path& path, const QuadratureRule& rule) {
  std::string blob;
  append_u64(blob, 0x68707771756164ull);  // magic
  append_u64(blob, static_cast<std::uint64_t>(rule.size()));
  for (int i = 0; i < rule.size(); ++i) append_f64(blob, rule.nodes[i]);
  for (int i = 0; i < rule.size(); ++i) append_f64(blob, rule.weights[i]);
  atomic_write_file(path, blob);
}

QuadratureRule load_rule(const std::filesystem::path& path) {
  const std::string blob = read_file(path);
  std::size_t pos = 0;
  if (read_u64(blob, pos) != 0x68707771756164ull)
    throw std::runtime_error("load_rule: bad magic in " + path.string());
  const auto n = static_cast<int>(read_u64(blob, pos));
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) rule.nodes[i] = read_f64(blob, pos);
  for (int i = 0; i < n; ++i) rule.weights[i] = read_f64(blob, pos);
  return rule;
}

}  // namespace hpw
