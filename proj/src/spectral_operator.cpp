#include "hpw/spectral_operator.hpp"

#include <cmath>
#include <stdexcept>

#include "hpw/util.hpp"

namespace hpw {

Eigen::VectorXd zeta_diagonal(const SpectralParameter& sp, int cutoff) {
  const auto idx = enumerate_multi_indices(sp.n(), cutoff);
  Eigen::VectorXd z(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) z[static_cast<Eigen::Index>(i)] = zeta(idx[i], sp);
  return z;
}

SpectralOperator apply_H_power(const SpectralOperator& M, double beta_half) {
  SpectralOperator out = M;
  if (beta_half == 0.0) return out;
  const Eigen::VectorXd z = zeta_diagonal(M.sp, M.cutoff);
  if (z.size() != M.entries.cols())
    throw std::invalid_argument("apply_H_power: cutoff does not match matrix dimension");
  for (Eigen::Index a = 0; a < z.size(); ++a)
    out.entries.col(a) *= std::pow(z[a], beta_half);
  return out;
}

namespace {
constexpr std::uint64_t kFieldMagic = 0x687077666c640001ull;  // "hpwfld" v1
}

void save_field(const std::filesystem::path& path, const FourierField& field) {
  std::string blob;
  append_u64(blob, kFieldMagic);
  append_u64(blob, field.descriptor_hash);
  append_u64(blob, field.pfaffian_weighted ? 1 : 0);
  append_u64(blob, field.size());
  if (!field.ops.empty()) {
    append_u64(blob, static_cast<std::uint64_t>(field.ops[0].sp.k()));
    append_u64(blob, static_cast<std::uint64_t>(field.ops[0].cutoff));
  } else {
    append_u64(blob, 0);
    append_u64(blob, 0);
  }
  for (std::size_t i = 0; i < field.size(); ++i) {
    const SpectralOperator& op = field.ops[i];
    append_f64(blob, field.weights[i]);
    for (int j = 0; j < op.sp.k(); ++j) append_f64(blob, op.sp.lambda[j]);
    append_u64(blob, static_cast<std::uint64_t>(op.dim()));
    for (Eigen::Index c = 0; c < op.entries.cols(); ++c)
      for (Eigen::Index r = 0; r < op.entries.rows(); ++r) {
        append_f64(blob, op.entries(r, c).real());
        append_f64(blob, op.entries(r, c).imag());
      }
  }
  atomic_write_file(path, blob);
}

FourierField load_field(const std::filesystem::path& path, const GroupDescriptor& g) {
  const std::string blob = read_file(path);
  std::size_t pos = 0;
  if (read_u64(blob, pos) != kFieldMagic)
    throw std::runtime_error("load_field: bad magic in " + path.string());
  FourierField field;
  field.descriptor_hash = read_u64(blob, pos);
  if (field.descriptor_hash != g.hash())
    throw std::runtime_error("load_field: descriptor hash mismatch");
  field.pfaffian_weighted = read_u64(blob, pos) != 0;
  const std::size_t count = read_u64(blob, pos);
  const auto k = static_cast<int>(read_u64(blob, pos));
  const auto cutoff = static_cast<int>(read_u64(blob, pos));
  field.weights.reserve(count);
  field.ops.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    field.weights.push_back(read_f64(blob, pos));
    Eigen::VectorXd lambda(k);
    for (int j = 0; j < k; ++j) lambda[j] = read_f64(blob, pos);
    SpectralOperator op;
    op.sp = make_spectral_parameter(g, lambda);
    op.cutoff = cutoff;
    const auto dim = static_cast<Eigen::Index>(read_u64(blob, pos));
    op.entries.resize(dim, dim);
    for (Eigen::Index c = 0; c < dim; ++c)
      for (Eigen::Index r = 0; r < dim; ++r) {
        const double re = read_f64(blob, pos);
        const double im = read_f64(blob, pos);
        op.entries(r, c) = {re, im};
      }
    field.ops.push_back(std::move(op));
  }
  return field;
}

nlohmann::json field_to_json(const FourierField& field) {
  nlohmann::json j;
  j["descriptor_hash"] = field.descriptor_hash;
  j["pfaffian_weighted"] = field.pfaffian_weighted;
  nlohmann::json nodes = nlohmann::json::array();
  for (std::size_t i = 0; i < field.size(); ++i) {
    const SpectralOperator& op = field.ops[i];
    nlohmann::json node;
    node["weight"] = field.weights[i];
    node["lambda"] = std::vector<double>(op.sp.lambda.data(),
                                         op.sp.lambda.data() + op.sp.lambda.size());
    node["cutoff"] = op.cutoff;
    nlohmann::json re = nlohmann::json::array(), im = nlohmann::json::array();
    for (Eigen::Index r = 0; r < op.entries.rows(); ++r) {
      nlohmann::json rr = nlohmann::json::array(), ri = nlohmann::json::array();
      for (Eigen::Index c = 0; c < op.entries.cols(); ++c) {
        rr.push_back(op.entries(r, c).real());
        ri.push_back(op.entries(r, c).imag());
      }
      re.push_back(rr);
      im.push_back(ri);
    }
    node["re"] = re;
    node["im"] = im;
    nodes.push_back(node);
  }
  j["nodes"] = nodes;
  return j;
}

}  // namespace hpw
