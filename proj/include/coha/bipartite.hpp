#pragma once

#include <cstdint>
#include <functional>

#include "coha/errors.hpp"
#include "coha/partition.hpp"
#include "coha/partition_algebra.hpp"

namespace coha {

/// Orientation of the complete bipartite graph between u_1..u_n and v_1..v_k.
/// Bit i*k + j of `bits` is set when the edge {u_i, v_j} points toward u_i.
struct OrientedBipartiteGraph {
  int n = 0;
  int k = 0;
  std::uint64_t bits = 0;

  bool points_to_u(int i, int j) const { return (bits >> (i * k + j)) & 1U; }
  int u_indegree(int i) const;
  int v_indegree(int j) const;
};

struct GraphTerm {
  Partition partition;
  QLaurent coefficient;
};

/// h(G) = (-q)^{m(G)} (mu + indeg_U, nu + indeg_V)_<=, m(G) = edges into U.
GraphTerm h_of_graph(const Partition& mu, const Partition& nu, const OrientedBipartiteGraph& graph);

/// Sum of h(G) over all 2^{nk} orientations; the d = 2 product.
/// `visit`, when given, sees every (orientation id, h(G)) before merging.
PartitionElement product_via_graphs(const Partition& mu, const Partition& nu, const Limits& limits = {},
                                    const std::function<void(std::uint64_t, const GraphTerm&)>& visit = {});

}  // namespace coha
