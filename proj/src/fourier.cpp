#include "hpw/fourier.hpp"

#include <cmath>
#include <stdexcept>

#include "hpw/hermite.hpp"
#include "hpw/quadrature.hpp"
#include "hpw/util.hpp"

namespace hpw {

namespace {

// Per-lambda quadrature sizes. smax = sqrt(2N+1) is the classical extent of
// the highest retained mode in oscillator units; matrix elements vanish once
// the phase-space displacement (a = sqrt(eta) q/2, b = sqrt(eta) p) passes
// ~2 smax, and they oscillate on the scale sqrt(eta) smax per unit p or q.
struct ResolvedPQ {
  double p_box, q_box;
  int p_nodes, q_nodes, gh_nodes;
};

ResolvedPQ resolve_pq(double eta, int cutoff, const PQQuadSpec& quad) {
  const double smax = std::sqrt(2.0 * cutoff + 1.0);
  const double reach = 2.0 * (smax + 3.0) / std::sqrt(eta);
  ResolvedPQ r;
  r.p_box = std::min(quad.box, reach);
  r.q_box = std::min(quad.box, reach);
  const double span_p = 2.0 * r.p_box * std::sqrt(eta) * (smax + 2.0);
  const double span_q = 2.0 * r.q_box * std::sqrt(eta) * (smax + 2.0);
  r.p_nodes = std::max(quad.base_nodes, static_cast<int>(std::ceil(0.5 * span_p)) + 16);
  r.q_nodes = std::max(quad.base_nodes, static_cast<int>(std::ceil(0.5 * span_q)) + 16);
  const double amax = std::sqrt(eta) * r.q_box / 2.0;
  const double need = (smax + amax + 2.0) * (smax + amax + 2.0) / 2.0 + 1.0;
  r.gh_nodes = std::max(quad.base_hermite, static_cast<int>(std::ceil(need)));
  return r;
}

int rep_gh_nodes(double eta, int cutoff, double a_shift, int base) {
  const double smax = std::sqrt(2.0 * cutoff + 1.0);
  const double need = (smax + std::abs(a_shift) + 2.0) * (smax + std::abs(a_shift) + 2.0) / 2.0 + 1.0;
  return std::max(base, static_cast<int>(std::ceil(need)));
}

// One-dimensional matrix elements for a single (a,b) displacement:
//   J(g, m) = e^{-a^2} sum_i w_i h_m(u_i + a) h_g(u_i - a) e^{i b u_i}
// which equals <pi(p,q,0) phi_m, phi_g> for a = sqrt(eta) q/2, b = sqrt(eta) p.
Eigen::MatrixXcd elem_block(const QuadratureRule& gh, int deg, double a, double b) {
  const Eigen::MatrixXd ha = hermite_weightless_table(deg, gh.nodes.array() + a);
  const Eigen::MatrixXd hg = hermite_weightless_table(deg, gh.nodes.array() - a);
  const double damp = std::exp(-a * a);
  Eigen::VectorXd wc(gh.size()), ws(gh.size());
  for (int i = 0; i < gh.size(); ++i) {
    wc[i] = damp * gh.weights[i] * std::cos(b * gh.nodes[i]);
    ws[i] = damp * gh.weights[i] * std::sin(b * gh.nodes[i]);
  }
  Eigen::MatrixXcd out(deg + 1, deg + 1);
  out.real() = hg.transpose() * wc.asDiagonal() * ha;
  out.imag() = hg.transpose() * ws.asDiagonal() * ha;
  return out;
}

std::complex<double> central_value(const GroupFunction& f, const GroupDescriptor& g,
                                   const Eigen::VectorXd& lambda, const Eigen::VectorXd& v,
                                   const PQQuadSpec& quad) {
  if (f.has_central()) return f.central(lambda, v);
  return partial_central_fourier(f, g, lambda, v, quad.t_box, quad.t_nodes);
}

// n = 1 assembly: D(i,s) = sum_r w_i e^{i b_r u_i} c(r,s) collapses the
// p-sum once, then each q node contributes one pair of (K x N+1) real GEMMs.
Eigen::MatrixXcd gft_matrix_1d(const GroupFunction& f, const GroupDescriptor& g,
                               const SpectralParameter& sp, int cutoff, const PQQuadSpec& quad,
                               QuadMeta& meta) {
  const double eta = sp.eta[0];
  const ResolvedPQ res = resolve_pq(eta, cutoff, quad);
  const QuadratureRule& gh = cached_gauss_hermite(res.gh_nodes);
  const QuadratureRule pr = legendre_on(-res.p_box, res.p_box, res.p_nodes);
  const QuadratureRule qr = legendre_on(-res.q_box, res.q_box, res.q_nodes);
  const int K = gh.size(), R = pr.size(), S = qr.size(), D = cutoff + 1;

  meta = QuadMeta{res.p_box, res.q_box, R, S, K, quad.t_box, f.has_central() ? 0 : quad.t_nodes};

  const double sq = std::sqrt(eta);
  Eigen::VectorXd bvals = sq * pr.nodes;
  Eigen::VectorXd avals = 0.5 * sq * qr.nodes;

  Eigen::MatrixXcd C(R, S);
  Eigen::VectorXd pl(1), ql(1);
  for (int s = 0; s < S; ++s) {
    const double damp = std::exp(-avals[s] * avals[s]);
    for (int r = 0; r < R; ++r) {
      pl[0] = pr.nodes[r];
      ql[0] = qr.nodes[s];
      const std::complex<double> fv =
          central_value(f, g, sp.lambda, sp.v_from_coords(pl, ql), quad);
      C(r, s) = pr.weights[r] * qr.weights[s] * damp * fv;
    }
  }
  if (!C.allFinite()) throw std::runtime_error("gft: non-finite samples of f^lambda");

  Eigen::MatrixXcd E(K, R);
  for (int r = 0; r < R; ++r)
    for (int i = 0; i < K; ++i) {
      const double ph = bvals[r] * gh.nodes[i];
      E(i, r) = gh.weights[i] * std::complex<double>(std::cos(ph), std::sin(ph));
    }
  const Eigen::MatrixXcd Dmat = E * C;  // K x S
  const Eigen::MatrixXd Dre = Dmat.real(), Dim = Dmat.imag();

  Eigen::MatrixXd Mre = Eigen::MatrixXd::Zero(D, D), Mim = Eigen::MatrixXd::Zero(D, D);
  for (int s = 0; s < S; ++s) {
    const Eigen::MatrixXd ha = hermite_weightless_table(cutoff, gh.nodes.array() + avals[s]);
    const Eigen::MatrixXd hg = hermite_weightless_table(cutoff, gh.nodes.array() - avals[s]);
    Mre.noalias() += hg.transpose() * Dre.col(s).asDiagonal() * ha;
    Mim.noalias() += hg.transpose() * Dim.col(s).asDiagonal() * ha;
  }
  Eigen::MatrixXcd M(D, D);
  M.real() = Mre;
  M.imag() = Mim;
  return M;
}

// General n: tensor (p,q) grid with memoized per-(r,s) one-dimensional
// element blocks (shared across coordinates with equal eta).
Eigen::MatrixXcd gft_matrix_nd(const GroupFunction& f, const GroupDescriptor& g,
                               const SpectralParameter& sp, int cutoff, const PQQuadSpec& quad,
                               QuadMeta& meta) {
  const int n = sp.n();
  for (int j = 1; j < n; ++j)
    if (std::abs(sp.eta[j] - sp.eta[0]) > 1e-12 * sp.eta[0])
      throw std::runtime_error("gft: distinct eta_j not supported by the tensor assembly");
  const double eta = sp.eta[0];
  const ResolvedPQ res = resolve_pq(eta, cutoff, quad);
  const QuadratureRule& gh = cached_gauss_hermite(res.gh_nodes);
  const QuadratureRule pr = legendre_on(-res.p_box, res.p_box, res.p_nodes);
  const QuadratureRule qr = legendre_on(-res.q_box, res.q_box, res.q_nodes);
  const int R = pr.size(), S = qr.size();
  meta = QuadMeta{res.p_box,  res.q_box, R, S, gh.size(), quad.t_box,
                  f.has_central() ? 0 : quad.t_nodes};

  const double sq = std::sqrt(eta);
  std::vector<Eigen::MatrixXcd> block(static_cast<std::size_t>(R) * S);
  for (int r = 0; r < R; ++r)
    for (int s = 0; s < S; ++s)
      block[static_cast<std::size_t>(r) * S + s] =
          elem_block(gh, cutoff, 0.5 * sq * qr.nodes[s], sq * pr.nodes[r]);

  const auto idx = enumerate_multi_indices(n, cutoff);
  const int D = static_cast<int>(idx.size());
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(D, D);

  std::vector<int> ri(n, 0), si(n, 0);
  Eigen::VectorXd pl(n), ql(n);
  const long total = static_cast<long>(std::pow(R, n)) * static_cast<long>(std::pow(S, n));
  for (long step = 0; step < total; ++step) {
    double w = 1.0;
    for (int j = 0; j < n; ++j) {
      pl[j] = pr.nodes[ri[j]];
      ql[j] = qr.nodes[si[j]];
      w *= pr.weights[ri[j]] * qr.weights[si[j]];
    }
    const std::complex<double> fv =
        central_value(f, g, sp.lambda, sp.v_from_coords(pl, ql), quad);
    if (!std::isfinite(fv.real()) || !std::isfinite(fv.imag()))
      throw std::runtime_error("gft: non-finite samples of f^lambda");
    if (std::abs(fv) > 1e-300) {
      const std::complex<double> coeff = w * fv;
      for (int col = 0; col < D; ++col)
        for (int row = 0; row < D; ++row) {
          std::complex<double> prod = coeff;
          for (int j = 0; j < n; ++j) {
            // e^{-a^2} is inside the block
            prod *= block[static_cast<std::size_t>(ri[j]) * S + si[j]](idx[row].entries[j],
                                                                       idx[col].entries[j]);
            if (prod == 0.0) break;
          }
          M(row, col) += prod;
        }
    }
    for (int j = 2 * n - 1; j >= 0; --j) {
      int& c = j < n ? ri[j] : si[j - n];
      const int lim = j < n ? R : S;
      if (++c < lim) break;
      c = 0;
    }
  }
  return M;
}

}  // namespace

std::vector<LambdaNode> lambda_grid(const GroupDescriptor& g, const LambdaGridSpec& spec) {
  if (!(0.0 < spec.min && spec.min < spec.max))
    throw std::invalid_argument("lambda_grid: need 0 < min < max");
  std::vector<LambdaNode> nodes;
  if (g.k == 1) {
    const QuadratureRule radial = geometric_panels(spec.min, spec.max, std::max(2, spec.nodes / 2));
    for (int i = radial.size() - 1; i >= 0; --i)
      nodes.push_back({Eigen::VectorXd::Constant(1, -radial.nodes[i]), radial.weights[i]});
    for (int i = 0; i < radial.size(); ++i)
      nodes.push_back({Eigen::VectorXd::Constant(1, radial.nodes[i]), radial.weights[i]});
    return nodes;
  }
  const QuadratureRule radial = geometric_panels(spec.min, spec.max, spec.nodes);
  if (g.k == 2) {
    const int m = spec.angular;
    for (int i = 0; i < radial.size(); ++i)
      for (int j = 0; j < m; ++j) {
        const double th = 2.0 * M_PI * j / m;
        Eigen::VectorXd lam(2);
        lam << radial.nodes[i] * std::cos(th), radial.nodes[i] * std::sin(th);
        nodes.push_back({lam, radial.weights[i] * radial.nodes[i] * (2.0 * M_PI / m)});
      }
    return nodes;
  }
  if (g.k == 3) {
    const int m = spec.angular;
    const QuadratureRule ur = legendre_on(-1.0, 1.0, m);
    for (int i = 0; i < radial.size(); ++i)
      for (int a = 0; a < m; ++a)
        for (int j = 0; j < m; ++j) {
          const double u = ur.nodes[a];
          const double ph = 2.0 * M_PI * j / m;
          const double rho = radial.nodes[i];
          const double sn = std::sqrt(std::max(0.0, 1.0 - u * u));
          Eigen::VectorXd lam(3);
          lam << rho * sn * std::cos(ph), rho * sn * std::sin(ph), rho * u;
          nodes.push_back(
              {lam, radial.weights[i] * rho * rho * ur.weights[a] * (2.0 * M_PI / m)});
        }
    return nodes;
  }
  throw std::invalid_argument("lambda_grid: k > 3 not supported");
}

std::complex<double> partial_central_fourier(const GroupFunction& f, const GroupDescriptor& g,
                                             const Eigen::VectorXd& mu, const Eigen::VectorXd& v,
                                             double t_box, int t_nodes) {
  if (mu.size() != g.k) throw std::invalid_argument("partial_central_fourier: mu dim != k");
  const QuadratureRule tr = legendre_on(-t_box, t_box, t_nodes);
  GroupPoint x = GroupPoint::from_v(v, Eigen::VectorXd::Zero(g.k));
  std::vector<int> idx(g.k, 0);
  long total = 1;
  for (int a = 0; a < g.k; ++a) total *= tr.size();
  std::complex<double> acc = 0.0;
  for (long step = 0; step < total; ++step) {
    double w = 1.0, phase = 0.0;
    for (int a = 0; a < g.k; ++a) {
      x.t[a] = tr.nodes[idx[a]];
      w *= tr.weights[idx[a]];
      phase += mu[a] * tr.nodes[idx[a]];
    }
    const std::complex<double> fx = f(x);
    if (!std::isfinite(fx.real()) || !std::isfinite(fx.imag()))
      throw std::runtime_error("partial_central_fourier: non-finite sample");
    acc += w * fx * std::complex<double>(std::cos(phase), std::sin(phase));
    for (int a = g.k - 1; a >= 0; --a) {
      if (++idx[a] < tr.size()) break;
      idx[a] = 0;
    }
  }
  return acc;
}

Eigen::MatrixXcd rep_matrix(const SpectralParameter& sp, const GroupPoint& x, int cutoff,
                            int hermite_nodes) {
  const int n = sp.n();
  const Eigen::VectorXd pl = sp.p_coords(x.v());
  const Eigen::VectorXd ql = sp.q_coords(x.v());
  std::vector<Eigen::MatrixXcd> blocks(n);
  for (int j = 0; j < n; ++j) {
    const double sq = std::sqrt(sp.eta[j]);
    const double a = 0.5 * sq * ql[j];
    const double b = sq * pl[j];
    const QuadratureRule& gh = cached_gauss_hermite(rep_gh_nodes(sp.eta[j], cutoff, a, hermite_nodes));
    blocks[j] = elem_block(gh, cutoff, a, b);
  }
  const auto idx = enumerate_multi_indices(n, cutoff);
  const int D = static_cast<int>(idx.size());
  const double tphase = sp.lambda.dot(x.t);
  const std::complex<double> phase(std::cos(tphase), std::sin(tphase));
  if (n == 1) return phase * blocks[0];
  Eigen::MatrixXcd R(D, D);
  for (int col = 0; col < D; ++col)
    for (int row = 0; row < D; ++row) {
      std::complex<double> prod = phase;
      for (int j = 0; j < n; ++j) prod *= blocks[j](idx[row].entries[j], idx[col].entries[j]);
      R(row, col) = prod;
    }
  return R;
}

Eigen::VectorXcd rep_apply(const GroupPoint& x, const SpectralParameter& sp,
                           const Eigen::VectorXcd& coeffs, int cutoff, int hermite_nodes) {
  if (coeffs.size() != static_cast<Eigen::Index>(multi_index_count(sp.n(), cutoff)))
    throw std::invalid_argument("rep_apply: coefficient count does not match cutoff");
  return rep_matrix(sp, x, cutoff, hermite_nodes) * coeffs;
}

SpectralOperator gft(const GroupFunction& f, const GroupDescriptor& g,
                     const SpectralParameter& sp, int cutoff, const PQQuadSpec& quad) {
  if (cutoff < 0) throw std::invalid_argument("gft: cutoff must be >= 0");
  SpectralOperator op;
  op.sp = sp;
  op.cutoff = cutoff;
  op.entries = sp.n() == 1 ? gft_matrix_1d(f, g, sp, cutoff, quad, op.meta)
                           : gft_matrix_nd(f, g, sp, cutoff, quad, op.meta);
  return op;
}

FourierField build_field(const GroupFunction& f, const GroupDescriptor& g,
                         const LambdaGridSpec& grid, int cutoff, const PQQuadSpec& quad,
                         bool pfaffian_weighted) {
  const std::vector<LambdaNode> nodes = lambda_grid(g, grid);
  FourierField field;
  field.descriptor_hash = g.hash();
  field.pfaffian_weighted = pfaffian_weighted;
  field.weights.resize(nodes.size());
  field.ops.resize(nodes.size());
  parallel_for(nodes.size(), [&](std::size_t i) {
    const SpectralParameter sp = make_spectral_parameter(g, nodes[i].lambda);
    field.ops[i] = gft(f, g, sp, cutoff, quad);
    field.weights[i] = pfaffian_weighted ? nodes[i].weight * sp.pfaffian : nodes[i].weight;
  });
  return field;
}

double plancherel_sum(const FourierField& field, const CalibrationConstants& consts) {
  if (field.size() == 0) throw std::invalid_argument("plancherel_sum: empty field");
  if (!field.pfaffian_weighted)
    throw std::invalid_argument("plancherel_sum: field must carry Pfaffian weights");
  double acc = 0.0;
  for (std::size_t i = 0; i < field.size(); ++i)
    acc += field.weights[i] * field.ops[i].entries.squaredNorm();
  return consts.plancherel_c * acc;
}

CalibrationConstants calibrate(const std::vector<FamilyMember>& family, const GroupDescriptor& g,
                               const LambdaGridSpec& grid, int cutoff, const PQQuadSpec& quad,
                               const HaarBox& haar) {
  if (family.size() < 3) throw std::invalid_argument("calibrate: need at least 3 functions");
  const std::size_t m = family.size();
  std::vector<double> X(m), Y(m), Z(m), Fe(m);
  for (std::size_t i = 0; i < m; ++i) {
    const GroupFunction f = make_gaussian(g, family[i].spec);
    const FourierField field = build_field(f, g, grid, cutoff, quad, true);
    double x = 0.0;
    std::complex<double> z = 0.0;
    for (std::size_t j = 0; j < field.size(); ++j) {
      x += field.weights[j] * field.ops[j].entries.squaredNorm();
      z += field.weights[j] * field.ops[j].entries.trace();
    }
    X[i] = x;
    Z[i] = z.real();
    const auto l2 = haar_integral(
        [&f](const GroupPoint& p) { return std::norm(f(p)); }, g, haar);
    Y[i] = l2.value.real();
    Fe[i] = f(GroupPoint::identity(g)).real();
  }
  double sxy = 0.0, sxx = 0.0, szf = 0.0, szz = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    sxy += X[i] * Y[i];
    sxx += X[i] * X[i];
    szf += Z[i] * Fe[i];
    szz += Z[i] * Z[i];
  }
  if (!(sxx > 0.0) || !(szz > 0.0)) throw std::invalid_argument("calibrate: degenerate family");
  CalibrationConstants out;
  out.plancherel_c = sxy / sxx;
  out.inversion_kappa = szf / szz;
  for (std::size_t i = 0; i < m; ++i) {
    out.plancherel_residual =
        std::max(out.plancherel_residual, std::abs(out.plancherel_c * X[i] - Y[i]) / Y[i]);
    out.inversion_residual =
        std::max(out.inversion_residual,
                 std::abs(out.inversion_kappa * Z[i] - Fe[i]) / std::abs(Fe[i]));
  }
  if (out.plancherel_residual > 0.05 || out.inversion_residual > 0.05)
    throw CalibrationError("calibrate: residual exceeds 0.05");
  return out;
}

std::complex<double> invert(const FourierField& field, const GroupPoint& x,
                            const CalibrationConstants& consts, int hermite_nodes) {
  if (field.size() == 0) throw std::invalid_argument("invert: empty field");
  if (!field.pfaffian_weighted)
    throw std::invalid_argument("invert: field must carry Pfaffian weights");
  std::vector<std::complex<double>> parts(field.size());
  parallel_for(field.size(), [&](std::size_t i) {
    const SpectralOperator& op = field.ops[i];
    const Eigen::MatrixXcd R = rep_matrix(op.sp, x, op.cutoff, hermite_nodes);
    // tr(R^* M) = <M, R>_F
    parts[i] = field.weights[i] * (R.conjugate().cwiseProduct(op.entries)).sum();
  });
  std::complex<double> acc = 0.0;
  for (const auto& c : parts) acc += c;
  return consts.inversion_kappa * acc;
}

GroupFunction dilate_function(const GroupFunction& f, const GroupDescriptor& g, double r) {
  if (!(r > 0.0)) throw std::invalid_argument("dilate_function: r must be > 0");
  auto eval = [f, r](const GroupPoint& x) { return f(dilate(x, r)); };
  if (!f.has_central()) return GroupFunction(eval);
  const double scale = std::pow(r, -2.0 * g.k);
  auto central = [f, r, scale](const Eigen::VectorXd& lambda, const Eigen::VectorXd& v) {
    return scale * f.central(lambda / (r * r), r * v);
  };
  return GroupFunction(eval, central);
}

double dilation_covariance_residual(const GroupFunction& f, const GroupDescriptor& g, double r,
                                    const Eigen::VectorXd& lambda, int cutoff,
                                    const PQQuadSpec& quad) {
  if (!(r > 0.0)) throw std::invalid_argument("dilation_covariance_residual: r must be > 0");
  const GroupFunction df = dilate_function(f, g, r);
  const SpectralParameter sp_l = make_spectral_parameter(g, lambda);
  const SpectralParameter sp_r = make_spectral_parameter(g, lambda / (r * r));
  const SpectralOperator lhs = gft(df, g, sp_l, cutoff, quad.scaled(1.0 / r));
  const SpectralOperator rhs = gft(f, g, sp_r, cutoff, quad);
  const double factor = std::pow(r, -g.homogeneous_dimension());
  return (lhs.entries - factor * rhs.entries).cwiseAbs().maxCoeff();
}

}  // namespace hpw
