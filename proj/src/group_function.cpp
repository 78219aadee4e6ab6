#include "hpw/group_function.hpp"

#include <cmath>
#include <stdexcept>

namespace hpw {

namespace {

Eigen::VectorXd or_zero(const Eigen::VectorXd& v, int size) {
  if (v.size() == 0) return Eigen::VectorXd::Zero(size);
  if (v.size() != size) throw std::invalid_argument("gaussian spec: bad vector dimension");
  return v;
}

std::vector<double> to_vec(const Eigen::VectorXd& v) {
  return std::vector<double>(v.data(), v.data() + v.size());
}

Eigen::VectorXd from_vec(const nlohmann::json& j) {
  Eigen::VectorXd v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Eigen::Index>(i)] = j[i].get<double>();
  return v;
}

}  // namespace

nlohmann::json GaussianSpec::to_json() const {
  nlohmann::json j;
  j["amplitude"] = amplitude;
  j["a"] = a;
  j["b"] = b;
  j["dilation"] = dilation;
  if (modulation.size()) j["modulation"] = to_vec(modulation);
  if (shift_v.size()) j["shift_v"] = to_vec(shift_v);
  if (shift_t.size()) j["shift_t"] = to_vec(shift_t);
  return j;
}

GaussianSpec GaussianSpec::from_json(const nlohmann::json& j) {
  GaussianSpec s;
  s.amplitude = j.value("amplitude", 1.0);
  s.a = j.value("a", 0.5);
  s.b = j.value("b", 0.5);
  s.dilation = j.value("dilation", 1.0);
  if (j.contains("modulation")) s.modulation = from_vec(j["modulation"]);
  if (j.contains("shift_v")) s.shift_v = from_vec(j["shift_v"]);
  if (j.contains("shift_t")) s.shift_t = from_vec(j["shift_t"]);
  return s;
}

GroupFunction make_gaussian(const GroupDescriptor& g, const GaussianSpec& spec) {
  if (!(spec.a > 0.0 && spec.b > 0.0 && spec.dilation > 0.0))
    throw std::invalid_argument("make_gaussian: a, b, dilation must be positive");
  const double s2 = spec.dilation * spec.dilation;
  const double ae = spec.a / s2;
  const double be = spec.b / (s2 * s2);
  const Eigen::VectorXd ce = or_zero(spec.modulation, g.k) / s2;
  const Eigen::VectorXd yv = or_zero(spec.shift_v, 2 * g.n);
  const Eigen::VectorXd yt = or_zero(spec.shift_t, g.k);
  const double amp = spec.amplitude;
  const GroupDescriptor group = g;

  auto eval = [=](const GroupPoint& x) -> std::complex<double> {
    const Eigen::VectorXd v = x.v() - yv;
    const Eigen::VectorXd tw = x.t - yt - 0.5 * group.commutator(yv, x.v());
    const double re = -ae * v.squaredNorm() - be * tw.squaredNorm();
    const double im = ce.dot(tw);
    return amp * std::exp(re) * std::complex<double>(std::cos(im), std::sin(im));
  };
  const double tfactor = std::pow(M_PI / be, 0.5 * g.k);
  auto central = [=](const Eigen::VectorXd& lambda,
                     const Eigen::VectorXd& v) -> std::complex<double> {
    const Eigen::VectorXd dv = v - yv;
    const Eigen::VectorXd mu = yt + 0.5 * group.commutator(yv, v);
    const double re = -ae * dv.squaredNorm() - (lambda + ce).squaredNorm() / (4.0 * be);
    const double im = lambda.dot(mu);
    return amp * tfactor * std::exp(re) * std::complex<double>(std::cos(im), std::sin(im));
  };
  return GroupFunction(eval, central);
}

double gaussian_lp_norm(const GroupDescriptor& g, const GaussianSpec& spec, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("gaussian_lp_norm: p must be >= 1");
  const double s2 = spec.dilation * spec.dilation;
  const double ae = spec.a / s2;
  const double be = spec.b / (s2 * s2);
  const double logv = g.n * std::log(M_PI / (p * ae)) + 0.5 * g.k * std::log(M_PI / (p * be));
  return std::abs(spec.amplitude) * std::exp(logv / p);
}

std::vector<FamilyMember> default_calibration_family(const GroupDescriptor& g) {
  (void)g;
  std::vector<FamilyMember> fam;
  for (double s : {1.0, 1.25, 0.8}) {
    GaussianSpec spec;
    spec.dilation = s;
    fam.push_back({"cal_dilate_" + std::to_string(s).substr(0, 4), spec});
  }
  return fam;
}

std::vector<FamilyMember> default_heldout_family(const GroupDescriptor& g) {
  std::vector<FamilyMember> fam;
  auto add = [&fam](const std::string& name, GaussianSpec spec) {
    fam.push_back({name, std::move(spec)});
  };
  for (double s : {0.7, 0.9, 1.1, 1.4}) {
    GaussianSpec spec;
    spec.dilation = s;
    add("dilate_" + std::to_string(s).substr(0, 4), spec);
  }
  {
    GaussianSpec spec;
    spec.shift_v = Eigen::VectorXd::Zero(2 * g.n);
    spec.shift_v[0] = 0.8;
    spec.shift_v[g.n] = -0.5;
    add("translate_v", spec);
  }
  {
    GaussianSpec spec;
    spec.shift_t = Eigen::VectorXd::Constant(g.k, 1.0);
    add("translate_t", spec);
  }
  {
    GaussianSpec spec;
    spec.shift_v = Eigen::VectorXd::Zero(2 * g.n);
    spec.shift_v[0] = 0.5;
    spec.shift_t = Eigen::VectorXd::Constant(g.k, -0.6);
    add("translate_vt", spec);
  }
  for (double c : {0.2, -0.3}) {
    GaussianSpec spec;
    spec.modulation = Eigen::VectorXd::Constant(g.k, c);
    add("modulate_" + std::to_string(c).substr(0, 4), spec);
  }
  {
    GaussianSpec spec;
    spec.dilation = 1.1;
    spec.shift_v = Eigen::VectorXd::Zero(2 * g.n);
    spec.shift_v[0] = 0.5;
    spec.shift_v[g.n] = 0.2;
    spec.modulation = Eigen::VectorXd::Constant(g.k, 0.15);
    add("mixed", spec);
  }
  return fam;
}

GaussianSpec ParamFamily::materialize(const Eigen::VectorXd& params) const {
  if (params.size() != dim()) throw std::invalid_argument("ParamFamily: bad parameter count");
  GaussianSpec spec;
  spec.dilation = std::exp(params[0]);
  spec.shift_v = params.segment(1, 2 * group.n);
  spec.modulation = params.tail(group.k);
  return spec;
}

ParamFamily ParamFamily::standard(const GroupDescriptor& g) {
  ParamFamily fam;
  fam.group = g;
  const int d = 1 + 2 * g.n + g.k;
  fam.lower.resize(d);
  fam.upper.resize(d);
  fam.lower[0] = std::log(0.7);
  fam.upper[0] = std::log(1.4);
  for (int i = 0; i < 2 * g.n; ++i) {
    fam.lower[1 + i] = -1.0;
    fam.upper[1 + i] = 1.0;
  }
  for (int i = 0; i < g.k; ++i) {
    fam.lower[1 + 2 * g.n + i] = -0.3;
    fam.upper[1 + 2 * g.n + i] = 0.3;
  }
  return fam;
}

}  // namespace hpw
