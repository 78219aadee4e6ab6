#include "hpw/group.hpp"

#include <cmath>
#include <stdexcept>

#include "hpw/quadrature.hpp"
#include "hpw/util.hpp"

namespace hpw {

Eigen::MatrixXd GroupDescriptor::j_map(const Eigen::VectorXd& lambda) const {
  if (lambda.size() != k) throw std::invalid_argument("j_map: lambda dimension != k");
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (int j = 0; j < k; ++j) J += lambda[j] * j_generators[j];
  return J;
}

Eigen::VectorXd GroupDescriptor::commutator(const Eigen::VectorXd& v,
                                            const Eigen::VectorXd& w) const {
  if (v.size() != 2 * n || w.size() != 2 * n)
    throw std::invalid_argument("commutator: vectors must have dimension 2n");
  Eigen::VectorXd c(k);
  for (int j = 0; j < k; ++j) c[j] = (j_generators[j] * v).dot(w);
  return c;
}

Eigen::VectorXd GroupDescriptor::eta(const Eigen::VectorXd& lambda) const {
  if (lambda.size() != k) throw std::invalid_argument("eta: lambda dimension != k");
  const double r = lambda.norm();
  if (!(r > 0.0)) throw std::invalid_argument("eta: lambda must be nonzero");
  // heisenberg and htype both satisfy J_lambda^2 = -|lambda|^2 Id
  return Eigen::VectorXd::Constant(n, r);
}

std::uint64_t GroupDescriptor::hash() const {
  std::string blob = kind;
  append_u64(blob, static_cast<std::uint64_t>(n));
  append_u64(blob, static_cast<std::uint64_t>(k));
  for (const auto& J : j_generators)
    for (int c = 0; c < J.cols(); ++c)
      for (int r = 0; r < J.rows(); ++r) append_f64(blob, J(r, c));
  return fnv1a(blob);
}

GroupDescriptor GroupDescriptor::heisenberg(int n) {
  if (n < 1) throw std::invalid_argument("heisenberg: n must be >= 1");
  GroupDescriptor g;
  g.n = n;
  g.k = 1;
  g.kind = "heisenberg";
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  J.topRightCorner(n, n) = -Eigen::MatrixXd::Identity(n, n);
  J.bottomLeftCorner(n, n) = Eigen::MatrixXd::Identity(n, n);
  g.j_generators = {J};
  return g;
}

GroupDescriptor GroupDescriptor::htype(int n, int k, std::vector<Eigen::MatrixXd> generators) {
  if (n < 1 || k < 1) throw std::invalid_argument("htype: need n >= 1, k >= 1");
  if (static_cast<int>(generators.size()) != k)
    throw std::invalid_argument("htype: need exactly k generators");
  const double tol = 1e-12;
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(2 * n, 2 * n);
  for (int a = 0; a < k; ++a) {
    const Eigen::MatrixXd& Ja = generators[a];
    if (Ja.rows() != 2 * n || Ja.cols() != 2 * n)
      throw std::invalid_argument("htype: generator must be 2n x 2n");
    if ((Ja + Ja.transpose()).norm() > tol)
      throw std::invalid_argument("htype: generator is not skew-symmetric");
    if ((Ja * Ja + id).norm() > tol) throw std::invalid_argument("htype: J_a^2 != -Id");
    for (int b = 0; b < a; ++b)
      if ((Ja * generators[b] + generators[b] * Ja).norm() > tol)
        throw std::invalid_argument("htype: generators do not anticommute");
  }
  GroupDescriptor g;
  g.n = n;
  g.k = k;
  g.kind = "htype";
  g.j_generators = std::move(generators);
  return g;
}

GroupDescriptor GroupDescriptor::from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "heisenberg") return heisenberg(j.at("n").get<int>());
  if (kind == "htype") {
    const int n = j.at("n").get<int>();
    const int k = j.at("k").get<int>();
    std::vector<Eigen::MatrixXd> gens;
    for (const auto& gj : j.at("j_generators")) {
      Eigen::MatrixXd J(2 * n, 2 * n);
      for (int r = 0; r < 2 * n; ++r)
        for (int c = 0; c < 2 * n; ++c) J(r, c) = gj.at(r).at(c).get<double>();
      gens.push_back(std::move(J));
    }
    return htype(n, k, std::move(gens));
  }
  throw std::invalid_argument("unknown group kind: " + kind);
}

nlohmann::json GroupDescriptor::to_json() const {
  nlohmann::json j;
  j["kind"] = kind;
  j["n"] = n;
  j["k"] = k;
  if (kind != "heisenberg") {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& J : j_generators) {
      nlohmann::json rows = nlohmann::json::array();
      for (int r = 0; r < J.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < J.cols(); ++c) row.push_back(J(r, c));
        rows.push_back(row);
      }
      gens.push_back(rows);
    }
    j["j_generators"] = gens;
  }
  return j;
}

Eigen::VectorXd GroupPoint::v() const {
  Eigen::VectorXd out(p.size() + q.size());
  out << p, q;
  return out;
}

GroupPoint GroupPoint::identity(const GroupDescriptor& g) {
  return GroupPoint{Eigen::VectorXd::Zero(g.n), Eigen::VectorXd::Zero(g.n),
                    Eigen::VectorXd::Zero(g.k)};
}

GroupPoint GroupPoint::from_v(const Eigen::VectorXd& v, const Eigen::VectorXd& t) {
  const auto n = v.size() / 2;
  return GroupPoint{v.head(n), v.tail(n), t};
}

GroupPoint multiply(const GroupPoint& a, const GroupPoint& b, const GroupDescriptor& g) {
  if (a.p.size() != g.n || b.p.size() != g.n || a.t.size() != g.k || b.t.size() != g.k)
    throw std::invalid_argument("multiply: dimension mismatch with descriptor");
  GroupPoint out;
  out.p = a.p + b.p;
  out.q = a.q + b.q;
  out.t = a.t + b.t + 0.5 * g.commutator(a.v(), b.v());
  return out;
}

GroupPoint inverse(const GroupPoint& x) { return GroupPoint{-x.p, -x.q, -x.t}; }

GroupPoint dilate(const GroupPoint& x, double r) {
  if (!(r > 0.0)) throw std::invalid_argument("dilate: r must be > 0");
  return GroupPoint{r * x.p, r * x.q, r * r * x.t};
}

double hom_norm(const GroupPoint& x) {
  const double v2 = x.p.squaredNorm() + x.q.squaredNorm();
  return std::pow(v2 * v2 + x.t.squaredNorm(), 0.25);
}

HaarResult haar_integral(const std::function<std::complex<double>(const GroupPoint&)>& f,
                         const GroupDescriptor& g, const HaarBox& box) {
  const QuadratureRule vr = legendre_on(-box.v_radius, box.v_radius, box.v_nodes);
  const QuadratureRule tr = legendre_on(-box.t_radius, box.t_radius, box.t_nodes);
  const int axes = 2 * g.n + g.k;
  std::vector<const QuadratureRule*> rule(axes);
  for (int a = 0; a < 2 * g.n; ++a) rule[a] = &vr;
  for (int a = 2 * g.n; a < axes; ++a) rule[a] = &tr;

  // parallel over the first axis; inner axes by odometer
  const std::size_t outer = static_cast<std::size_t>(rule[0]->size());
  std::vector<std::complex<double>> partial(outer, 0.0);
  std::vector<double> shell(outer, 0.0);
  std::vector<char> bad(outer, 0);
  long inner_count = 1;
  for (int a = 1; a < axes; ++a) inner_count *= rule[a]->size();

  parallel_for(outer, [&](std::size_t i0) {
    std::vector<int> idx(axes, 0);
    idx[0] = static_cast<int>(i0);
    GroupPoint x = GroupPoint::identity(g);
    std::complex<double> acc = 0.0;
    double shell_max = 0.0;
    for (long step = 0; step < inner_count; ++step) {
      double w = 1.0;
      bool on_shell = idx[0] == 0 || idx[0] == rule[0]->size() - 1;
      for (int a = 0; a < axes; ++a) {
        w *= rule[a]->weights[idx[a]];
        if (idx[a] == 0 || idx[a] == rule[a]->size() - 1) on_shell = true;
        const double node = rule[a]->nodes[idx[a]];
        if (a < g.n)
          x.p[a] = node;
        else if (a < 2 * g.n)
          x.q[a - g.n] = node;
        else
          x.t[a - 2 * g.n] = node;
      }
      const std::complex<double> fx = f(x);
      if (!std::isfinite(fx.real()) || !std::isfinite(fx.imag())) {
        bad[i0] = 1;
        return;
      }
      if (on_shell) shell_max = std::max(shell_max, std::abs(fx));
      acc += w * fx;
      for (int a = axes - 1; a >= 1; --a) {
        if (++idx[a] < rule[a]->size()) break;
        idx[a] = 0;
      }
    }
    partial[i0] = acc;
    shell[i0] = shell_max;
  });

  HaarResult res;
  for (std::size_t i = 0; i < outer; ++i) {
    if (bad[i]) throw std::runtime_error("haar_integral: non-finite sample");
    res.value += partial[i];
    res.outer_shell_max = std::max(res.outer_shell_max, shell[i]);
  }
  res.node_count = static_cast<long>(outer) * inner_count;
  return res;
}

}  // namespace hpw
