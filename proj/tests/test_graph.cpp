#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "twoblocks/errors.hpp"
#include "twoblocks/graph.hpp"

using namespace twoblocks;
using namespace fixtures;

namespace {

std::vector<std::pair<Vertex, Vertex>> pairs(std::initializer_list<std::pair<Vertex, Vertex>> p) { return p; }

}  // namespace

TEST(FromEdgeList, Cycle) {
  const DiGraph g = c3();
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.edge_count(), 3u);
}

TEST(FromEdgeList, DropsDuplicates) {
  const DiGraph g = make(2, {{0, 1}, {1, 0}, {0, 1}});
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g, two_cycle());
}

TEST(FromEdgeList, Fig1EdgeCount) { EXPECT_EQ(fig1().edge_count(), 26u); }

TEST(FromEdgeList, CanonicalOrder) {
  const DiGraph g = make(3, {{2, 0}, {0, 2}, {1, 2}, {0, 1}});
  const EdgeList expected{{0, 1}, {0, 2}, {1, 2}, {2, 0}};
  EXPECT_TRUE(std::equal(g.edges().begin(), g.edges().end(), expected.begin(), expected.end()));
}

TEST(FromEdgeList, RejectsOutOfRange) {
  const std::vector<Edge> e{{0, 3}};
  try {
    (void)DiGraph::from_edge_list(3, e);
    FAIL();
  } catch (const InputError& err) {
    EXPECT_NE(std::string(err.what()).find("(0,3)"), std::string::npos) << err.what();
  }
}

TEST(FromEdgeList, RejectsSelfLoop) {
  const std::vector<Edge> e{{1, 1}};
  EXPECT_THROW((void)DiGraph::from_edge_list(2, e), InputError);
}

TEST(Adjacency, InAndOutAgree) {
  const DiGraph g = fig1();
  std::size_t in_total = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    in_total += g.in_degree(v);
    for (Vertex w : g.successors(v)) {
      const auto preds = g.predecessors(w);
      EXPECT_NE(std::find(preds.begin(), preds.end(), v), preds.end());
    }
    const auto ids = g.in_edge_ids(v);
    const auto preds = g.predecessors(v);
    for (std::size_t i = 0; i < ids.size(); ++i) EXPECT_EQ(g.edge(ids[i]), (Edge{preds[i], v}));
  }
  EXPECT_EQ(in_total, g.edge_count());
  EXPECT_EQ(g.out_degree(5), 5u);  // label 6
}

TEST(Reverse, Cycle) { EXPECT_EQ(reverse(c3()), make(3, {{1, 0}, {2, 1}, {0, 2}})); }

TEST(Reverse, SymmetricGraphIsFixed) { EXPECT_EQ(reverse(k3()), k3()); }

TEST(Reverse, Fig1EdgeByEdge) {
  const DiGraph g = fig1();
  const DiGraph r = reverse(g);
  EXPECT_EQ(r.edge_count(), g.edge_count());
  for (Edge e : g.edges()) EXPECT_TRUE(r.has_edge({e.to, e.from}));
  EXPECT_EQ(reverse(r), g);
}

TEST(DeleteVertices, CycleMinusOne) {
  const Vertex removed[] = {1};
  const InducedSubgraph sub = delete_vertices(c3(), removed);
  EXPECT_EQ(sub.graph.vertex_count(), 2u);
  ASSERT_EQ(sub.graph.edge_count(), 1u);
  const Edge e = sub.graph.edge(0);
  EXPECT_EQ(sub.to_parent[e.from], 2u);
  EXPECT_EQ(sub.to_parent[e.to], 0u);
  EXPECT_EQ(sub.to_local[1], kNoVertex);
}

TEST(DeleteVertices, Fig1MinusSix) {
  const Vertex removed[] = {5};
  const InducedSubgraph sub = delete_vertices(fig1(), removed);
  EXPECT_EQ(sub.graph.vertex_count(), 11u);
  EXPECT_EQ(sub.graph.edge_count(), 17u);  // 9 edges touch label 6
}

TEST(DeleteVertices, EmptySetIsIdentity) {
  const InducedSubgraph sub = delete_vertices(fig1(), {});
  EXPECT_EQ(sub.graph, fig1());
}

TEST(DeleteEdges, TwoCycle) {
  const Edge removed[] = {{0, 1}};
  EXPECT_EQ(delete_edges(two_cycle(), removed), make(2, {{1, 0}}));
}

TEST(DeleteEdges, Identity) { EXPECT_EQ(delete_edges(fig1(), {}), fig1()); }

TEST(DeleteEdges, Fig1MinusOne) {
  const Edge removed[] = {id_edge(3, 4)};
  EXPECT_EQ(delete_edges(fig1(), removed).edge_count(), 25u);
}

TEST(Scc, Cycle) { EXPECT_EQ(scc(c3()).size(), 1u); }

TEST(Scc, Fig1) {
  const Partition p = scc(fig1());
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p.cell(0).size(), 12u);
}

TEST(Scc, PathIsSingletons) {
  const Partition p = scc(path3());
  EXPECT_EQ(p.cells(), (std::vector<VertexSet>{{0}, {1}, {2}}));
}

TEST(Scc, InvariantUnderReverse) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const DiGraph g = random_layered(3, 5, seed);
    EXPECT_EQ(scc(g), scc(reverse(g)));
  }
}

TEST(StronglyConnected, Basics) {
  EXPECT_TRUE(is_strongly_connected(c3()));
  EXPECT_FALSE(is_strongly_connected(path3()));
  EXPECT_TRUE(is_strongly_connected(fig1()));
}

TEST(ConnectedComponents, Examples) {
  EXPECT_EQ(connected_components(UndirectedGraph(3)).size(), 3u);
  const auto tri = pairs({{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(connected_components(UndirectedGraph::from_edges(3, tri)).size(), 1u);
  const auto one = pairs({{0, 1}});
  EXPECT_EQ(connected_components(UndirectedGraph::from_edges(3, one)).cells(),
            (std::vector<VertexSet>{{0, 1}, {2}}));
}

TEST(BiconnectedBlocks, Triangle) {
  const auto tri = pairs({{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(biconnected_blocks(UndirectedGraph::from_edges(3, tri)), (std::vector<VertexSet>{{0, 1, 2}}));
}

TEST(BiconnectedBlocks, PathGivesEdges) {
  const auto p = pairs({{0, 1}, {1, 2}});
  EXPECT_EQ(biconnected_blocks(UndirectedGraph::from_edges(3, p)), (std::vector<VertexSet>{{0, 1}, {1, 2}}));
}

TEST(BiconnectedBlocks, Bowtie) {
  const auto p = pairs({{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  EXPECT_EQ(biconnected_blocks(UndirectedGraph::from_edges(5, p)),
            (std::vector<VertexSet>{{0, 1, 2}, {2, 3, 4}}));
}

TEST(BiconnectedBlocks, IsolatedVerticesIgnored) {
  EXPECT_TRUE(biconnected_blocks(UndirectedGraph(4)).empty());
}

TEST(Partition, CanonicalCells) {
  const Partition p(4, {{3, 1}, {2, 0}});
  EXPECT_EQ(p.cells(), (std::vector<VertexSet>{{0, 2}, {1, 3}}));
  EXPECT_EQ(p.cell_of(3), 1u);
}
