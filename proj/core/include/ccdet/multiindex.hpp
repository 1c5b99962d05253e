#pragma once

#include <optional>
#include <string>
#include <vector>

namespace ccdet {

// Strictly increasing list of indices in 1..n; empty means degree 0.
using MultiIndex = std::vector<int>;

// Sorts an arbitrary index tuple into a MultiIndex, returning the
// permutation sign, or nullopt when an index repeats.
struct SortedIndex {
  MultiIndex index;
  int sign = 1;
};
std::optional<SortedIndex> sort_index_tuple(std::vector<int> tuple);

// Position (1-based) of value v in I, or 0 when absent.
int index_position(const MultiIndex& I, int v);

// I \ {value at 1-based position pos}.
MultiIndex erase_position(const MultiIndex& I, int pos);

// Complement of I inside 1..n.
MultiIndex complement(const MultiIndex& I, int n);

// All strictly increasing p-element multi-indices in 1..n.
std::vector<MultiIndex> all_multi_indices(int n, int p);

std::string multiindex_str(const MultiIndex& I);

} // namespace ccdet
