#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "twoblocks/connectivity.hpp"
#include "twoblocks/graph.hpp"
#include "twoblocks/parallel.hpp"
#include "twoblocks/relation.hpp"

namespace twoblocks {

enum class BlockKind { two_directed, two_strong, two_edge };

std::string_view to_string(BlockKind kind);  // "2d", "2s", "2e"
std::optional<BlockKind> parse_block_kind(std::string_view text);

/// Maximal vertex sets (size >= 2) closed under the kind's pair relation.
/// Blocks are canonical: members ascending, blocks ordered by minimum member.
struct BlockFamily {
  BlockKind kind = BlockKind::two_directed;
  std::vector<VertexSet> blocks;

  friend bool operator==(const BlockFamily&, const BlockFamily&) = default;
};

/// Block-cut structure of the 2-directed blocks: one node per block plus one
/// per vertex shared by two or more blocks, joined by block-vertex incidences.
struct BlockGraph2D {
  std::vector<VertexSet> blocks;
  VertexSet cut_vertices;
  std::vector<std::pair<std::size_t, Vertex>> incidences;  // (block index, cut vertex)

  std::size_t node_count() const { return blocks.size() + cut_vertices.size(); }
  bool is_forest() const;
};

// -- Per-root rows of the directional matrix (g strongly connected). --------

/// {w : two vertex-disjoint v -> w paths}: original children of v in the
/// dominator tree of G'(v), G with the out-edges of v split.
VertexSet two_reach_targets(const DiGraph& g, Vertex v);
/// Children of v in the dominator tree of G(v).
VertexSet strong_reach_targets(const DiGraph& g, Vertex v);
/// U(v): vertices with no edge dominator in G(v).
VertexSet unguarded_targets(const DiGraph& g, Vertex v);

// -- Pair relations of a strongly connected graph. -------------------------
// Each kind has two independent constructions; the block functions below are
// built on these.

PairRelation relation_2d_direct(const DiGraph& g, Execution exec = Execution::parallel);
PairRelation relation_2d_combined(const DiGraph& g, std::span<const Vertex> saps,
                                  std::span<const Edge> bridges,
                                  Execution exec = Execution::parallel);
PairRelation relation_2s_dom(const DiGraph& g, Execution exec = Execution::parallel);
PairRelation relation_2s_sap(const DiGraph& g, std::span<const Vertex> saps,
                             Execution exec = Execution::parallel);
PairRelation relation_2e_dom(const DiGraph& g, Execution exec = Execution::parallel);
PairRelation relation_2e_bridge(const DiGraph& g, std::span<const Edge> bridges,
                                Execution exec = Execution::parallel);

// -- Block families; any input graph, decomposed into SCCs. -----------------

BlockFamily blocks_2d_direct(const DiGraph& g, Execution exec = Execution::parallel);
BlockFamily blocks_2d_combined(const DiGraph& g, Execution exec = Execution::parallel);
BlockFamily blocks_2s_dom(const DiGraph& g, Execution exec = Execution::parallel);
BlockFamily blocks_2s_sap(const DiGraph& g, Execution exec = Execution::parallel);
BlockFamily blocks_2e_dom(const DiGraph& g, Execution exec = Execution::parallel);
BlockFamily blocks_2e_bridge(const DiGraph& g, Execution exec = Execution::parallel);

/// dom: per-root dominator rows; enumeration: SAP / strong-bridge deletion;
/// automatic: picks per strongly connected component (see choose_algorithm).
enum class Algorithm { dom, enumeration, automatic };

std::string_view to_string(Algorithm algo);  // "dom", "enum", "auto"
std::optional<Algorithm> parse_algorithm(std::string_view text);

/// Dispatch rule for Algorithm::automatic on one strongly connected
/// component with n vertices and m edges: compares the estimated cost of
/// t enumeration steps, t*(m + n*ceil(n/64)), against 2*n*m for the per-vertex
/// dominator rows. Never returns automatic.
Algorithm choose_algorithm(BlockKind kind, std::size_t n, std::size_t m, std::size_t t_sap,
                           std::size_t t_sb);

BlockFamily compute_blocks(const DiGraph& g, BlockKind kind, Algorithm algo,
                           Execution exec = Execution::parallel);

// -- Per-vertex queries (g strongly connected). ------------------------------

/// N(v) = {w : v and w are 2-directed related}.
VertexSet neighborhood_2d(const DiGraph& g, Vertex v);
/// The 2-directed blocks containing v, without building G*.
std::vector<VertexSet> blocks_2d_at_vertex(const DiGraph& g, Vertex v);
/// U(v) and U^R(v) intersected, plus v; empty when v is in no 2-edge block.
VertexSet block_2e_at_vertex(const DiGraph& g, Vertex v);

BlockGraph2D block_graph_2d(const DiGraph& g);

}  // namespace twoblocks
