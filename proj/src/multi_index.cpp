#include "hpw/multi_index.hpp"

#include <stdexcept>

namespace hpw {

namespace {
void emit_degree(int n, int degree, std::vector<int>& scratch, int at, int left,
                 std::vector<MultiIndex>& out) {
  if (at == n - 1) {
    scratch[at] = left;
    out.push_back(MultiIndex{scratch});
    return;
  }
  for (int v = 0; v <= left; ++v) {
    scratch[at] = v;
    emit_degree(n, degree, scratch, at + 1, left - v, out);
  }
}
}  // namespace

std::vector<MultiIndex> enumerate_multi_indices(int n, int max_degree) {
  if (n < 1) throw std::invalid_argument("enumerate_multi_indices: n must be >= 1");
  if (max_degree < 0) throw std::invalid_argument("enumerate_multi_indices: max_degree < 0");
  std::vector<MultiIndex> out;
  out.reserve(multi_index_count(n, max_degree));
  std::vector<int> scratch(n, 0);
  for (int d = 0; d <= max_degree; ++d) emit_degree(n, d, scratch, 0, d, out);
  return out;
}

std::size_t multi_index_count(int n, int max_degree) {
  // binomial(max_degree + n, n)
  std::size_t num = 1;
  for (int i = 1; i <= n; ++i) num = num * (max_degree + i) / i;
  return num;
}

}  // namespace hpw
