#pragma once

#include <cstddef>

#include "twoblocks/blocks.hpp"
#include "twoblocks/graph.hpp"

// Brute-force definitional implementations; test-only, exponential or
// polynomial with large constants.
namespace twoblocks::oracle {

inline constexpr std::size_t kMaxCliqueVertices = 12;
inline constexpr std::size_t kMaxPathVertices = 8;

/// x, y co-SCC after deleting any other vertex, and after deleting both
/// edges between them. Throws InputError when x == y.
bool pair_2d(const DiGraph& g, Vertex x, Vertex y);
/// x, y co-SCC after deleting any other vertex.
bool pair_2s(const DiGraph& g, Vertex x, Vertex y);
/// x, y co-SCC after deleting any single edge.
bool pair_2e(const DiGraph& g, Vertex x, Vertex y);
bool pair(const DiGraph& g, BlockKind kind, Vertex x, Vertex y);

/// Two internally vertex-disjoint x -> y paths, by enumerating simple paths.
/// Throws SizeGuardError when n > kMaxPathVertices.
bool two_disjoint_paths(const DiGraph& g, Vertex x, Vertex y);

/// Maximal cliques (size >= 2) of the kind's pair relation; throws
/// SizeGuardError when n > kMaxCliqueVertices.
BlockFamily blocks(const DiGraph& g, BlockKind kind);

/// Vertices whose deletion leaves the rest not strongly connected.
/// Throws PreconditionError if g is not strongly connected.
VertexSet saps(const DiGraph& g);
/// Edges whose deletion leaves g not strongly connected.
EdgeList bridges(const DiGraph& g);

/// Every vertex reachable from root after deleting any single edge.
VertexSet unguarded(const DiGraph& g, Vertex root);
/// Immediate dominators by vertex deletion; kNoVertex at the root.
std::vector<Vertex> idoms(const DiGraph& g, Vertex root);

}  // namespace twoblocks::oracle
