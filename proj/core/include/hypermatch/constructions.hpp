#pragma once

#include <cstddef>

#include "hypermatch/fractional_lp.hpp"
#include "hypermatch/hypergraph.hpp"

namespace hypermatch {

/// K_n^(k) minus the complete k-graph on the last n - s + 1 vertices: every
/// k-set meeting the fixed set {0, ..., s - 2}. No matching of size s exists.
/// Requires k >= 2 and 1 <= s <= n/k + 1.
Hypergraph fixed_set_construction(int n, int k, int s);

/// Parity construction on n in kN vertices. A = {0, ..., a_size - 1}; edges
/// are the k-sets meeting A in an odd number of vertices.
struct ParityConstruction {
  Hypergraph graph;
  int a_size;
};

/// |A| is the value nearest n/2 with ||A| - |B|| <= 2 and parity different
/// from n/k; ties go to the smaller |A|.
int parity_part_size(int n, int k);
ParityConstruction parity_construction(int n, int k);

/// Exact finite-n evidence that the fixed-set construction blocks s-matchings.
struct Certificate {
  Hypergraph hypergraph;
  int degree_order = 0;
  std::size_t min_degree = 0;
  std::size_t claimed_max_matching = 0;
  FractionalCover witness_cover;
  FractionalMatching witness_matching;
};

/// Builds the fixed-set construction, its exact minimum d-degree and the cover
/// with weight 1 on the s - 1 fixed vertices. Verifies that the cover is
/// feasible and that the LP optimum is exactly s - 1 before returning.
/// Requires 0 <= d <= k - 1 and 1 <= s <= n/k.
Certificate fixed_set_certificate(int n, int k, int d, int s);

}  // namespace hypermatch
