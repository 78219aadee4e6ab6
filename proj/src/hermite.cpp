#include "hpw/hermite.hpp"

#include <cmath>
#include <stdexcept>

namespace hpw {

namespace {

constexpr double kRescaleHi = 0x1p+500;
constexpr double kRescaleLo = 0x1p-500;

// phi_0 = pi^{-1/4} e^{-tau^2/2} as mantissa * 2^exp2 without underflow.
void phi0_split(double tau, double& mant, long& exp2) {
  const double ln = -0.25 * std::log(M_PI) - 0.5 * tau * tau;
  const double e = ln / M_LN2;
  exp2 = static_cast<long>(std::floor(e));
  mant = std::exp2(e - static_cast<double>(exp2));
}

}  // namespace

double hermite_eval(int m, double tau) {
  if (m < 0) throw std::invalid_argument("hermite_eval: m must be >= 0");
  double prev, cur;
  long ex;
  phi0_split(tau, prev, ex);
  if (m == 0) return std::ldexp(prev, static_cast<int>(ex));
  cur = std::sqrt(2.0) * tau * prev;
  for (int j = 1; j < m; ++j) {
    const double next =
        std::sqrt(2.0 / (j + 1)) * tau * cur - std::sqrt(static_cast<double>(j) / (j + 1)) * prev;
    prev = cur;
    cur = next;
    const double mag = std::max(std::abs(prev), std::abs(cur));
    if (mag > kRescaleHi) {
      prev = std::ldexp(prev, -500);
      cur = std::ldexp(cur, -500);
      ex += 500;
    } else if (mag > 0.0 && mag < kRescaleLo) {
      prev = std::ldexp(prev, 500);
      cur = std::ldexp(cur, 500);
      ex -= 500;
    }
  }
  return std::ldexp(cur, static_cast<int>(ex));
}

Eigen::VectorXd hermite_eval_all(int mmax, double tau) {
  Eigen::VectorXd out(mmax + 1);
  double prev, cur;
  long ex;
  phi0_split(tau, prev, ex);
  out[0] = std::ldexp(prev, static_cast<int>(ex));
  if (mmax == 0) return out;
  cur = std::sqrt(2.0) * tau * prev;
  out[1] = std::ldexp(cur, static_cast<int>(ex));
  for (int j = 1; j < mmax; ++j) {
    const double next =
        std::sqrt(2.0 / (j + 1)) * tau * cur - std::sqrt(static_cast<double>(j) / (j + 1)) * prev;
    prev = cur;
    cur = next;
    const double mag = std::max(std::abs(prev), std::abs(cur));
    if (mag > kRescaleHi) {
      prev = std::ldexp(prev, -500);
      cur = std::ldexp(cur, -500);
      ex += 500;
    } else if (mag > 0.0 && mag < kRescaleLo) {
      prev = std::ldexp(prev, 500);
      cur = std::ldexp(cur, 500);
      ex -= 500;
    }
    out[j + 1] = std::ldexp(cur, static_cast<int>(ex));
  }
  return out;
}

Eigen::MatrixXd hermite_weightless_table(int mmax, const Eigen::VectorXd& x) {
  const auto rows = x.size();
  Eigen::MatrixXd out(rows, mmax + 1);
  const double pif = std::pow(M_PI, -0.25);
  out.col(0).setConstant(pif);
  if (mmax >= 1) out.col(1) = std::sqrt(2.0) * pif * x;
  for (int m = 1; m < mmax; ++m) {
    out.col(m + 1) = std::sqrt(2.0 / (m + 1)) * (x.array() * out.col(m).array()).matrix() -
                     std::sqrt(static_cast<double>(m) / (m + 1)) * out.col(m - 1);
  }
  return out;
}

double scaled_hermite_eval(int m, double beta, double tau) {
  if (!(beta > 0.0)) throw std::invalid_argument("scaled_hermite_eval: beta must be > 0");
  return std::pow(beta, 0.25) * hermite_eval(m, std::sqrt(beta) * tau);
}

}  // namespace hpw
