#pragma once

// Generic Euclidean distance degree of the Segre variety of rank-one
// k_1 x ... x k_L tensors, which equals the number of complex critical
// points of quadratic-loss training for a reduced architecture with L > 1.
//
// With n_j = k_j - 1 and kbar = sum n_j:
//
//   C_k = sum_{t=0}^{kbar} (-1)^t (2^{kbar+1-t} - 1) (kbar-t)!
//           * sum_{i_1+..+i_L = t, i_j <= n_j} prod_j binom(n_j+1, i_j) / (n_j-i_j)!

#include <span>
#include <string>
#include <vector>

#include "lcn/architecture.hpp"
#include "lcn/polyring.hpp"

namespace lcn {

struct EDReport {
  std::vector<int> filter_sizes;
  int k_bar = 0;
  Integer value;
};

// Requires every k_j >= 2.
Integer generic_ed_degree(std::span<const int> filter_sizes);
EDReport ed_report(std::span<const int> filter_sizes);

// Stride-independent count for an architecture: C of its reduced filter
// sizes, or 1 when it reduces to a single layer (a linear space).
Integer architecture_ed_degree(const Architecture& arch);

// Eckart-Young count for rank-r approximation of m x n matrices.
Integer fully_connected_count(int m, int n, int r);

struct MergeNode {
  EDReport report;
  std::vector<MergeNode> children;
};

// Children merge two layers k_i, k_j into k_i + k_j - 1 (placed at i), one
// child per distinct resulting multiset. Recursion stops at two layers.
MergeNode merge_tree(std::span<const int> filter_sizes);

}  // namespace lcn
