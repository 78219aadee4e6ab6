#pragma once

#include <cstddef>
#include <vector>

namespace hpw {

/// Multi-index alpha in N^n with |alpha| = sum of entries.
struct MultiIndex {
  std::vector<int> entries;

  int order() const {
    int s = 0;
    for (int e : entries) s += e;
    return s;
  }
  int dim() const { return static_cast<int>(entries.size()); }
  bool operator==(const MultiIndex& other) const = default;
};

/// All alpha with |alpha| <= max_degree, ordered by total degree then
/// lexicographically ascending. The enumeration is the canonical index map
/// used by every truncated operator matrix.
std::vector<MultiIndex> enumerate_multi_indices(int n, int max_degree);

/// binomial(max_degree + n, n), the size of the enumeration above.
std::size_t multi_index_count(int n, int max_degree);

}  // namespace hpw
