#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "twoblocks/graph.hpp"

namespace twoblocks {

/// A graph with a start vertex from which every vertex is reachable, walked
/// in the given direction (Direction::reverse gives the flowgraph G^R(root)).
/// Holds a reference to the graph; the graph must outlive the FlowGraph.
class FlowGraph {
 public:
  /// Throws PreconditionError if some vertex is unreachable from root.
  FlowGraph(const DiGraph& g, Vertex root, Direction d = Direction::forward);

  const DiGraph& graph() const { return *graph_; }
  Vertex root() const { return root_; }
  Direction direction() const { return direction_; }

 private:
  const DiGraph* graph_;
  Vertex root_;
  Direction direction_;
};

/// Immediate-dominator tree of a flowgraph.
class DominatorTree {
 public:
  DominatorTree() = default;
  DominatorTree(Vertex root, std::vector<Vertex> idom, std::vector<Vertex> preorder);

  Vertex root() const { return root_; }
  std::size_t vertex_count() const { return idom_.size(); }
  // kNoVertex for the root and for unreachable vertices.
  Vertex idom(Vertex w) const { return idom_[w]; }
  const std::vector<Vertex>& idoms() const { return idom_; }
  bool is_reachable(Vertex w) const { return w == root_ || idom_[w] != kNoVertex; }
  // Reachable vertices; every vertex appears after its immediate dominator.
  std::span<const Vertex> preorder() const { return preorder_; }
  std::span<const Vertex> children(Vertex v) const {
    return {children_.data() + child_offsets_[v], children_.data() + child_offsets_[v + 1]};
  }
  // u in dom(w); both must be reachable.
  bool dominates(Vertex u, Vertex w) const {
    return enter_[u] <= enter_[w] && exit_[w] <= exit_[u];
  }
  std::size_t depth(Vertex w) const { return depth_[w]; }

  friend bool operator==(const DominatorTree& a, const DominatorTree& b) {
    return a.root_ == b.root_ && a.idom_ == b.idom_;
  }

 private:
  Vertex root_ = 0;
  std::vector<Vertex> idom_;
  std::vector<Vertex> preorder_;
  std::vector<std::size_t> child_offsets_{0};
  std::vector<Vertex> children_;
  std::vector<std::uint32_t> enter_, exit_, depth_;
};

/// Lengauer-Tarjan (path compression). Vertices unreachable from root get no
/// immediate dominator; use the FlowGraph overload when that is an error.
DominatorTree dominator_tree(const DiGraph& g, Vertex root, Direction d = Direction::forward);
DominatorTree dominator_tree(const FlowGraph& f);

/// D(root): non-root vertices that dominate some other vertex.
VertexSet nontrivial_dominators(const DominatorTree& t);

/// A graph in which selected edges e = (x, y) are replaced by a path
/// x -> phi(e) -> y through a fresh auxiliary vertex.
struct EdgeSplitGraph {
  std::size_t original_vertex_count = 0;
  DiGraph split;
  std::vector<Vertex> phi;       // base edge id -> auxiliary vertex, kNoVertex if kept
  std::vector<Edge> split_edge;  // (aux - original_vertex_count) -> base edge

  bool is_original(Vertex v) const { return v < original_vertex_count; }
};

/// Splits every edge; auxiliary ids are n, n+1, ... in canonical edge order.
EdgeSplitGraph edge_split_all(const DiGraph& g);
/// Splits only the out-edges of v.
EdgeSplitGraph edge_split_out(const DiGraph& g, Vertex v);

/// U(root): vertices w != root without an edge dominator, i.e. reachable
/// from root after deleting any single edge.
VertexSet unguarded_vertices(const FlowGraph& f);
/// Same, reusing a precomputed edge_split_all of the flowgraph's graph.
VertexSet unguarded_vertices(const EdgeSplitGraph& split, Vertex root, Direction d);

/// Edges lying on every root -> w path for some w, reported as edges of the
/// underlying graph (for Direction::reverse that is the reversal of the G^R edge).
EdgeList edge_dominators(const EdgeSplitGraph& split, Vertex root, Direction d);

/// Two spanning trees whose union flowgraph keeps the dominance structure of
/// the input. `repair` holds the edges added when the greedy second tree
/// alone introduced spurious dominators. Every edge is an edge of the
/// flowgraph's underlying DiGraph in its stored orientation.
struct TreePair {
  EdgeList first;
  EdgeList second;
  EdgeList repair;

  EdgeList union_edges() const;
  std::size_t union_size() const { return union_edges().size(); }
};

/// Union flowgraph has the same dominator tree as f (hence the same
/// non-trivial dominators).
TreePair dominator_preserving_pair(const FlowGraph& f);
/// Union flowgraph has the same edge dominators for every vertex as f.
TreePair edge_dominator_preserving_pair(const FlowGraph& f);

}  // namespace twoblocks
