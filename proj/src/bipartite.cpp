#include "coha/bipartite.hpp"

#include <string>

namespace coha {

int OrientedBipartiteGraph::u_indegree(int i) const {
  int count = 0;
  for (int j = 0; j < k; ++j) count += points_to_u(i, j) ? 1 : 0;
  return count;
}

int OrientedBipartiteGraph::v_indegree(int j) const {
  int count = 0;
  for (int i = 0; i < n; ++i) count += points_to_u(i, j) ? 0 : 1;
  return count;
}

GraphTerm h_of_graph(const Partition& mu, const Partition& nu, const OrientedBipartiteGraph& graph) {
  if (static_cast<int>(mu.length()) != graph.n || static_cast<int>(nu.length()) != graph.k) {
    throw ShapeError("graph is " + std::to_string(graph.n) + "x" + std::to_string(graph.k) + " but partitions have lengths " +
                     std::to_string(mu.length()) + " and " + std::to_string(nu.length()));
  }
  if (graph.n * graph.k > 63) throw ShapeError("orientation does not fit in 64 bits");
  IntVector parts;
  parts.reserve(mu.length() + nu.length());
  int into_u = 0;
  for (int i = 0; i < graph.n; ++i) {
    const int in = graph.u_indegree(i);
    into_u += in;
    parts.push_back(mu[static_cast<std::size_t>(i)] + in);
  }
  for (int j = 0; j < graph.k; ++j) parts.push_back(nu[static_cast<std::size_t>(j)] + graph.v_indegree(j));
  return GraphTerm{sort_ascending(std::move(parts)), QLaurent::neg_q_power(into_u)};
}

PartitionElement product_via_graphs(const Partition& mu, const Partition& nu, const Limits& limits,
                                    const std::function<void(std::uint64_t, const GraphTerm&)>& visit) {
  const int n = static_cast<int>(mu.length());
  const int k = static_cast<int>(nu.length());
  if (n * k > limits.graph_bits || n * k > 62) {
    throw ResourceLimitError("2^" + std::to_string(n * k) + " orientations exceed the graph budget of 2^" +
                             std::to_string(limits.graph_bits));
  }
  PartitionElement out;
  const std::uint64_t count = std::uint64_t{1} << (n * k);
  for (std::uint64_t id = 0; id < count; ++id) {
    const GraphTerm term = h_of_graph(mu, nu, OrientedBipartiteGraph{n, k, id});
    if (visit) visit(id, term);
    out.add(term.partition, term.coefficient);
  }
  return out;
}

}  // namespace coha
