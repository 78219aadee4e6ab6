#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hpw/group.hpp"

namespace hpw {

/// A complex-valued function on the group. The optional central transform
/// hands the Fourier machinery the closed form of
///   f^lambda(v) = int f(v,t) e^{i lambda.t} dt
/// when the caller has one; otherwise it is computed by quadrature in t.
class GroupFunction {
 public:
  using Eval = std::function<std::complex<double>(const GroupPoint&)>;
  using Central =
      std::function<std::complex<double>(const Eigen::VectorXd&, const Eigen::VectorXd&)>;

  GroupFunction() = default;
  explicit GroupFunction(Eval eval) : eval_(std::move(eval)) {}
  GroupFunction(Eval eval, Central central)
      : eval_(std::move(eval)), central_(std::move(central)) {}

  std::complex<double> operator()(const GroupPoint& x) const { return eval_(x); }
  bool has_central() const { return static_cast<bool>(central_); }
  std::complex<double> central(const Eigen::VectorXd& lambda, const Eigen::VectorXd& v) const {
    return central_(lambda, v);
  }

 private:
  Eval eval_;
  Central central_;
};

/// f(x) = amplitude * g(delta_{1/dilation}(shift^{-1} x)) with the base
/// profile g(v,t) = exp(-a|v|^2 - b|t|^2 + i modulation.t).
struct GaussianSpec {
  double amplitude = 1.0;
  double a = 0.5;
  double b = 0.5;
  Eigen::VectorXd modulation;  // R^k; empty means 0
  Eigen::VectorXd shift_v;     // R^{2n}; empty means 0
  Eigen::VectorXd shift_t;     // R^k; empty means 0
  double dilation = 1.0;

  nlohmann::json to_json() const;
  static GaussianSpec from_json(const nlohmann::json& j);
};

GroupFunction make_gaussian(const GroupDescriptor& g, const GaussianSpec& spec);

/// ||f||_p in closed form. Valid for every member: the central shear in the
/// group translation is measure preserving at fixed v.
double gaussian_lp_norm(const GroupDescriptor& g, const GaussianSpec& spec, double p);

struct FamilyMember {
  std::string name;
  GaussianSpec spec;
};

/// Three dilates of the base Gaussian; used to fit the Plancherel and
/// inversion constants.
std::vector<FamilyMember> default_calibration_family(const GroupDescriptor& g);

/// Dilates, group translates and mild central modulations of the base
/// Gaussian, disjoint from the calibration family.
std::vector<FamilyMember> default_heldout_family(const GroupDescriptor& g);

/// Continuous family for the constant-estimation search: parameters are
/// (log dilation, v-shift components, modulation components), materialized
/// around the base Gaussian.
struct ParamFamily {
  GroupDescriptor group;
  Eigen::VectorXd lower;  // bounds, dimension = 1 + 2n + k
  Eigen::VectorXd upper;

  int dim() const { return static_cast<int>(lower.size()); }
  GaussianSpec materialize(const Eigen::VectorXd& params) const;
  static ParamFamily standard(const GroupDescriptor& g);
};

}  // namespace hpw
