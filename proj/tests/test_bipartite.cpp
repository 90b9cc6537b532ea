#include <doctest.h>

#include <bit>
#include <set>

#include "coha/bipartite.hpp"
#include "coha/errors.hpp"

using namespace coha;

TEST_SUITE("bipartite") {
  TEST_CASE("orientation 53 of the (1,2), (0,2,3) pair") {
    const OrientedBipartiteGraph g{2, 3, 53};
    CHECK(g.u_indegree(0) == 2);
    CHECK(g.u_indegree(1) == 2);
    CHECK(g.v_indegree(0) == 1);
    CHECK(g.v_indegree(1) == 1);
    CHECK(g.v_indegree(2) == 0);
    const GraphTerm h = h_of_graph({1, 2}, {0, 2, 3}, g);
    CHECK(h.partition == Partition{1, 3, 3, 3, 4});
    CHECK(h.coefficient == QLaurent::monomial(1, 4));
  }

  TEST_CASE("all edges toward V") {
    const GraphTerm h = h_of_graph({1, 2}, {0, 2, 3}, OrientedBipartiteGraph{2, 3, 0});
    CHECK(h.partition == Partition{1, 2, 2, 4, 5});
    CHECK(h.coefficient == QLaurent(1));
    const GraphTerm all_u = h_of_graph({1, 2}, {0, 2, 3}, OrientedBipartiteGraph{2, 3, 63});
    CHECK(all_u.partition == Partition{0, 2, 3, 4, 5});
    CHECK(all_u.coefficient == QLaurent::monomial(1, 6));
  }

  TEST_CASE("single edge") {
    CHECK(product_via_graphs({0}, {0}) == PartitionElement({0, 1}, QLaurent(0, {1, -1})));
    CHECK(product_via_graphs({}, {1, 2}) == PartitionElement({1, 2}, QLaurent(1)));
    CHECK(product_via_graphs({4}, {}) == PartitionElement({4}, QLaurent(1)));
  }

  TEST_CASE("every orientation of the (1,2), (0,2,3) pair is visited once") {
    std::set<std::uint64_t> seen;
    const PartitionElement sum = product_via_graphs({1, 2}, {0, 2, 3}, Limits{}, [&](std::uint64_t id, const GraphTerm& t) {
      seen.insert(id);
      const OrientedBipartiteGraph g{2, 3, id};
      CHECK(t.partition.weight() == 1 + 2 + 0 + 2 + 3 + 6);
      CHECK(t.coefficient == QLaurent::neg_q_power(std::popcount(id)));
      CHECK(t.partition == h_of_graph({1, 2}, {0, 2, 3}, g).partition);
    });
    CHECK(seen.size() == 64);
    CHECK(sum == product(Partition{1, 2}, Partition{0, 2, 3}, LoopCount(2)));
  }

  TEST_CASE("graph model equals the d = 2 product") {
    for (const auto& mu : partitions_up_to(3, 2)) {
      for (const auto& nu : partitions_up_to(3, 2)) {
        CHECK(product_via_graphs(mu, nu) == product(mu, nu, LoopCount(2)));
      }
    }
  }

  TEST_CASE("limits and shape errors") {
    Limits tight;
    tight.graph_bits = 4;
    CHECK_THROWS_AS(product_via_graphs({0, 1}, {0, 1, 2}, tight), ResourceLimitError);
    CHECK_THROWS_AS(h_of_graph({0}, {0, 1}, OrientedBipartiteGraph{2, 2, 0}), ShapeError);
  }
}
