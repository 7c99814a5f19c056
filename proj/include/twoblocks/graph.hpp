#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace twoblocks {

using Vertex = std::uint32_t;
inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

struct Edge {
  Vertex from = 0;
  Vertex to = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Sorted ascending, no duplicates.
using VertexSet = std::vector<Vertex>;
// Sorted by (from, to), no duplicates.
using EdgeList = std::vector<Edge>;

// Which way a traversal follows the edges of a DiGraph. Reverse traversal
// walks G^R without materializing it.
enum class Direction { forward, reverse };

/// Simple directed graph over dense vertex ids 0..n-1.
///
/// Edges are kept in canonical (source, target) order, so the out-adjacency
/// of u is a contiguous slice of edges() and edge ids are stable positions in
/// that list. The graph is immutable once built.
class DiGraph {
 public:
  DiGraph() = default;

  /// Validates endpoints, rejects self-loops, drops duplicate pairs.
  /// Throws InputError naming the offending pair.
  static DiGraph from_edge_list(std::size_t n, std::span<const Edge> pairs);

  /// Trusted constructor: `edges` must already be canonical and valid.
  static DiGraph from_canonical_edges(std::size_t n, EdgeList edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(std::size_t id) const { return edges_[id]; }

  std::span<const Vertex> successors(Vertex v) const {
    return {out_targets_.data() + out_offsets_[v], out_targets_.data() + out_offsets_[v + 1]};
  }
  std::span<const Vertex> predecessors(Vertex v) const {
    return {in_sources_.data() + in_offsets_[v], in_sources_.data() + in_offsets_[v + 1]};
  }
  std::span<const Vertex> neighbors(Vertex v, Direction d) const {
    return d == Direction::forward ? successors(v) : predecessors(v);
  }
  std::span<const Vertex> neighbors_against(Vertex v, Direction d) const {
    return d == Direction::forward ? predecessors(v) : successors(v);
  }
  // Edge ids of the out-edges of v are [out_offset(v), out_offset(v + 1)).
  std::size_t out_offset(Vertex v) const { return out_offsets_[v]; }
  // Edge ids aligned with predecessors(v).
  std::span<const std::uint32_t> in_edge_ids(Vertex v) const {
    return {in_edge_ids_.data() + in_offsets_[v], in_edge_ids_.data() + in_offsets_[v + 1]};
  }

  std::size_t out_degree(Vertex v) const { return out_offsets_[v + 1] - out_offsets_[v]; }
  std::size_t in_degree(Vertex v) const { return in_offsets_[v + 1] - in_offsets_[v]; }

  bool has_edge(Edge e) const;
  // Position of e in edges(), or edge_count() when absent.
  std::size_t edge_id(Edge e) const;

  friend bool operator==(const DiGraph& a, const DiGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void build_index();

  std::size_t n_ = 0;
  EdgeList edges_;
  std::vector<std::uint32_t> out_offsets_{0};
  std::vector<Vertex> out_targets_;
  std::vector<std::uint32_t> in_offsets_{0};
  std::vector<Vertex> in_sources_;
  std::vector<std::uint32_t> in_edge_ids_;
};

/// Simple undirected graph; each pair {u, v} stored once with u < v.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  explicit UndirectedGraph(std::size_t n) : n_(n), offsets_(n + 1, 0) {}

  /// Throws InputError on self-loops or out-of-range endpoints.
  static UndirectedGraph from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const std::pair<Vertex, Vertex>> edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  bool has_edge(Vertex u, Vertex v) const;

 private:
  std::size_t n_ = 0;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adjacency_;
};

/// Disjoint cells covering 0..n-1, canonically ordered by minimum member.
class Partition {
 public:
  Partition() = default;
  // Canonicalizes `cells`; they must be disjoint and cover 0..n-1.
  Partition(std::size_t n, std::vector<VertexSet> cells);

  std::size_t size() const { return cells_.size(); }
  const std::vector<VertexSet>& cells() const { return cells_; }
  const VertexSet& cell(std::size_t i) const { return cells_[i]; }
  std::size_t cell_of(Vertex v) const { return cell_of_[v]; }

  friend bool operator==(const Partition& a, const Partition& b) { return a.cells_ == b.cells_; }

 private:
  std::vector<VertexSet> cells_;
  std::vector<std::size_t> cell_of_;
};

/// An induced subgraph together with the id translation in both directions.
struct InducedSubgraph {
  DiGraph graph;
  std::vector<Vertex> to_parent;  // local id -> parent id
  std::vector<Vertex> to_local;   // parent id -> local id, kNoVertex if removed
};

DiGraph reverse(const DiGraph& g);

InducedSubgraph induced_subgraph(const DiGraph& g, std::span<const Vertex> keep);
InducedSubgraph delete_vertices(const DiGraph& g, std::span<const Vertex> removed);
DiGraph delete_edges(const DiGraph& g, std::span<const Edge> removed);
// Subgraph on the same vertex set keeping only `kept` (which must be edges of g).
DiGraph edge_subgraph(const DiGraph& g, std::span<const Edge> kept);

Partition scc(const DiGraph& g);
bool is_strongly_connected(const DiGraph& g);

/// SCC labels only (no canonical ordering); labels are dense, arbitrary.
/// Vertices with skip[v] set get label kNoVertex and are treated as deleted.
/// Returns the number of components.
std::size_t scc_labels(const DiGraph& g, std::span<const char> skip, std::vector<Vertex>& label);

/// Vertices reachable from root following `d`; skip marks deleted vertices.
std::vector<char> reachable(const DiGraph& g, Vertex root, Direction d = Direction::forward,
                            std::span<const char> skip = {});

Partition connected_components(const UndirectedGraph& u);

/// Vertex sets of the biconnected blocks with at least two vertices (a bridge
/// edge yields a 2-set), members ascending, blocks ordered by minimum member.
std::vector<VertexSet> biconnected_blocks(const UndirectedGraph& u);

void canonicalize(std::vector<VertexSet>& family);

}  // namespace twoblocks
