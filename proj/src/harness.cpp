#include "hpw/harness.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "hpw/nelder_mead.hpp"
#include "hpw/schatten.hpp"

namespace hpw {

InequalityConfig InequalityConfig::make(double p, double gamma, double beta,
                                        int homogeneous_dimension) {
  if (!(p >= 1.0 && p < 2.0))
    throw std::invalid_argument("InequalityConfig: p must lie in [1,2)");
  if (!(gamma > 0.0)) throw std::invalid_argument("InequalityConfig: gamma must be > 0");
  const double threshold = homogeneous_dimension * (1.0 / p - 0.5);
  if (!(beta > threshold))
    throw std::invalid_argument("InequalityConfig: beta must exceed Q(1/p - 1/2)");
  InequalityConfig cfg;
  cfg.p = p;
  cfg.gamma = gamma;
  cfg.beta = beta;
  cfg.p_conj = p == 1.0 ? std::numeric_limits<double>::infinity() : p / (p - 1.0);
  return cfg;
}

double weighted_lp_norm(const GroupFunction& f, const GroupDescriptor& g, double gamma, double p,
                        const HaarBox& box) {
  if (!(p >= 1.0)) throw std::invalid_argument("weighted_lp_norm: p must be >= 1");
  if (gamma < 0.0) throw std::invalid_argument("weighted_lp_norm: gamma must be >= 0");
  const HaarResult res = haar_integral(
      [&](const GroupPoint& x) -> std::complex<double> {
        const double w = gamma == 0.0 ? 1.0 : std::pow(hom_norm(x), gamma);
        return std::pow(w * std::abs(f(x)), p);
      },
      g, box);
  return std::pow(res.value.real(), 1.0 / p);
}

SupTerm fourier_term_p1(const FourierField& field, double beta) {
  if (field.size() == 0) throw std::invalid_argument("fourier_term_p1: empty field");
  SupTerm out;
  for (const SpectralOperator& op : field.ops) {
    const double norm = schatten_norm(apply_H_power(op, beta / 2.0).entries, kSchattenInf);
    if (norm > out.value) {
      out.value = norm;
      out.argmax_lambda = op.sp.lambda;
    }
  }
  return out;
}

double fourier_term_lp(const FourierField& field, double beta, double p_conj) {
  if (!(p_conj > 2.0)) throw std::invalid_argument("fourier_term_lp: p_conj must be > 2");
  if (field.size() == 0) throw std::invalid_argument("fourier_term_lp: empty field");
  if (!field.pfaffian_weighted)
    throw std::invalid_argument("fourier_term_lp: field must carry Pfaffian weights");
  double acc = 0.0;
  for (std::size_t i = 0; i < field.size(); ++i) {
    const double norm =
        schatten_norm(apply_H_power(field.ops[i], beta / 2.0).entries, p_conj);
    acc += field.weights[i] * std::pow(norm, p_conj);
  }
  return acc;
}

HPWReport hpw_report_with_field(const GroupFunction& f, const GroupDescriptor& g,
                                const FourierField& field, const InequalityConfig& cfg,
                                const HarnessGrids& grids) {
  HPWReport rep;
  rep.p = cfg.p;
  rep.gamma = cfg.gamma;
  rep.beta = cfg.beta;
  rep.cutoff = grids.cutoff;
  rep.lambda_nodes = static_cast<int>(field.size());

  const double base_norm = weighted_lp_norm(f, g, 0.0, cfg.p, grids.haar);
  if (!(base_norm > 0.0)) throw std::invalid_argument("hpw_report: ||f||_p = 0 on the grid");
  rep.lhs = std::pow(base_norm, cfg.gamma + cfg.beta);
  rep.weight_term = std::pow(weighted_lp_norm(f, g, cfg.gamma, cfg.p, grids.haar), cfg.beta);
  if (cfg.p == 1.0) {
    const SupTerm sup = fourier_term_p1(field, cfg.beta);
    rep.fourier_term = std::pow(sup.value, cfg.gamma);
    rep.argmax_lambda = sup.argmax_lambda;
  } else {
    rep.fourier_term =
        std::pow(fourier_term_lp(field, cfg.beta, cfg.p_conj), cfg.gamma / cfg.p_conj);
  }
  rep.ratio = rep.weight_term * rep.fourier_term / rep.lhs;
  return rep;
}

HPWReport hpw_report(const GroupFunction& f, const GroupDescriptor& g,
                     const InequalityConfig& cfg, const HarnessGrids& grids) {
  const FourierField field = build_field(f, g, grids.lambda, grids.cutoff, grids.pq, true);
  return hpw_report_with_field(f, g, field, cfg, grids);
}

double spectral_tail_mass(const FourierField& field, double r, TailSide side) {
  if (!(r > 0.0)) throw std::invalid_argument("spectral_tail_mass: r must be > 0");
  double acc = 0.0;
  for (std::size_t i = 0; i < field.size(); ++i) {
    const SpectralOperator& op = field.ops[i];
    const Eigen::VectorXd z = zeta_diagonal(op.sp, op.cutoff);
    for (Eigen::Index a = 0; a < z.size(); ++a) {
      const bool below = z[a] <= r;
      if ((side == TailSide::below) == below)
        acc += field.weights[i] * op.entries.col(a).squaredNorm();
    }
  }
  return acc;
}

TailTable tail_bound_check(const FourierField& field, double lp_norm_f,
                           const InequalityConfig& cfg, const std::vector<double>& r_grid,
                           int n, int k) {
  if (!(cfg.p > 1.0)) throw std::invalid_argument("tail_bound_check: requires 1 < p < 2");
  TailTable table;
  const double pc = cfg.p_conj;
  const double A = fourier_term_lp(field, cfg.beta, pc);
  const double ex_below = (n + k) * (1.0 - 2.0 / pc);
  const double ex_above = (n + k - cfg.beta * cfg.p / (2.0 - cfg.p)) * (1.0 - 2.0 / pc);
  for (double r : r_grid) {
    TailRow row;
    row.r = r;
    row.below_mass = spectral_tail_mass(field, r, TailSide::below);
    row.above_mass = spectral_tail_mass(field, r, TailSide::above);
    row.below_bound = std::pow(r, ex_below) * lp_norm_f * lp_norm_f;
    row.above_bound = std::pow(r, ex_above) * std::pow(A, 2.0 / pc);
    row.below_ratio = row.below_mass / row.below_bound;
    row.above_ratio = row.above_mass / row.above_bound;
    table.fitted_below = std::max(table.fitted_below, row.below_ratio);
    table.fitted_above = std::max(table.fitted_above, row.above_ratio);
    table.rows.push_back(row);
  }
  return table;
}

double hausdorff_young_ratio(const FourierField& field, double lp_norm_f, double p,
                             const CalibrationConstants& consts) {
  if (!(p > 1.0 && p < 2.0))
    throw std::invalid_argument("hausdorff_young_ratio: p must lie in (1,2)");
  if (!(lp_norm_f > 0.0)) throw std::invalid_argument("hausdorff_young_ratio: ||f||_p = 0");
  const double pc = p / (p - 1.0);
  const double integral = consts.plancherel_c * fourier_term_lp(field, 0.0, pc);
  return std::pow(integral, 1.0 / pc) / lp_norm_f;
}

double frequency_count_measure(const GroupDescriptor& g, const LambdaGridSpec& grid, double r) {
  if (!(r > 0.0)) throw std::invalid_argument("frequency_count_measure: r must be > 0");
  double acc = 0.0;
  for (const LambdaNode& node : lambda_grid(g, grid)) {
    const SpectralParameter sp = make_spectral_parameter(g, node.lambda);
    const double eta = sp.eta[0];  // equal-eta groups
    const double m = std::floor((r / eta - g.n) / 2.0);
    if (m < 0.0) continue;
    acc += node.weight * sp.pfaffian *
           static_cast<double>(multi_index_count(g.n, static_cast<int>(m)));
  }
  return acc;
}

EstimateResult estimate_constant(const ParamFamily& family, const GroupDescriptor& g,
                                 const InequalityConfig& cfg, long budget, std::uint64_t seed,
                                 const HarnessGrids& grids) {
  if (budget < 1) throw std::invalid_argument("estimate_constant: budget must be >= 1");
  auto objective = [&](const Eigen::VectorXd& params) -> double {
    const GaussianSpec spec = family.materialize(params);
    const GroupFunction f = make_gaussian(g, spec);
    const HarnessGrids mapped = grids.scaled(spec.dilation);
    return hpw_report(f, g, cfg, mapped).ratio;
  };
  const Eigen::VectorXd start = 0.5 * (family.lower + family.upper);
  const NelderMeadResult nm =
      nelder_mead(objective, family.lower, family.upper, start, budget, seed);
  EstimateResult out;
  out.min_ratio = nm.best_f;
  out.argmin = nm.best_x;
  out.trajectory = nm.trajectory;
  out.evaluations = nm.evaluations;
  return out;
}

NelderMeadResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& objective,
                             const Eigen::VectorXd& lower, const Eigen::VectorXd& upper,
                             const Eigen::VectorXd& start, long budget, std::uint64_t seed) {
  const int d = static_cast<int>(lower.size());
  NelderMeadResult res;
  res.evaluations = 0;

  auto clip = [&](Eigen::VectorXd x) {
    for (int i = 0; i < d; ++i) x[i] = std::min(upper[i], std::max(lower[i], x[i]));
    return x;
  };
  auto eval = [&](const Eigen::VectorXd& x) {
    const double v = objective(x);
    if (!std::isfinite(v)) throw std::runtime_error("nelder_mead: non-finite objective value");
    ++res.evaluations;
    if (res.trajectory.empty() || v < res.best_f) {
      res.best_f = v;
      res.best_x = x;
    }
    res.trajectory.push_back(res.best_f);
    return v;
  };

  std::vector<Eigen::VectorXd> xs;
  std::vector<double> fs;
  xs.push_back(clip(start));
  fs.push_back(eval(xs[0]));
  if (budget == 1) return res;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> jitter(0.8, 1.2);
  for (int i = 0; i < d && res.evaluations < budget; ++i) {
    Eigen::VectorXd x = xs[0];
    const double step = 0.25 * (upper[i] - lower[i]) * jitter(rng);
    x[i] = x[i] + step <= upper[i] ? x[i] + step : x[i] - step;
    xs.push_back(clip(x));
    fs.push_back(eval(xs.back()));
  }

  auto order = [&] {
    for (std::size_t i = 1; i < xs.size(); ++i)
      for (std::size_t j = i; j > 0 && fs[j] < fs[j - 1]; --j) {
        std::swap(fs[j], fs[j - 1]);
        std::swap(xs[j], xs[j - 1]);
      }
  };
  order();

  while (res.evaluations < budget && xs.size() == static_cast<std::size_t>(d) + 1) {
    const std::size_t worst = xs.size() - 1;
    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(d);
    for (std::size_t i = 0; i < worst; ++i) centroid += xs[i];
    centroid /= static_cast<double>(worst);

    double spread = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) spread = std::max(spread, (xs[i] - xs[0]).norm());
    if (spread < 1e-10) break;

    const Eigen::VectorXd xr = clip(centroid + (centroid - xs[worst]));
    const double fr = eval(xr);
    if (fr < fs[0] && res.evaluations < budget) {
      const Eigen::VectorXd xe = clip(centroid + 2.0 * (centroid - xs[worst]));
      const double fe = eval(xe);
      xs[worst] = fe < fr ? xe : xr;
      fs[worst] = std::min(fe, fr);
    } else if (fr < fs[worst - 1]) {
      xs[worst] = xr;
      fs[worst] = fr;
    } else if (res.evaluations < budget) {
      const Eigen::VectorXd xc = clip(centroid + 0.5 * (xs[worst] - centroid));
      const double fc = eval(xc);
      if (fc < fs[worst]) {
        xs[worst] = xc;
        fs[worst] = fc;
      } else {
        for (std::size_t i = 1; i < xs.size() && res.evaluations < budget; ++i) {
          xs[i] = clip(xs[0] + 0.5 * (xs[i] - xs[0]));
          fs[i] = eval(xs[i]);
        }
      }
    }
    order();
  }
  return res;
}

}  // namespace hpw
