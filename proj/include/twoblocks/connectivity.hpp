#pragma once

#include <cstddef>

#include "twoblocks/graph.hpp"

namespace twoblocks {

struct ConnectivityReport {
  VertexSet saps;
  EdgeList bridges;
  std::size_t t_sap = 0;
  std::size_t t_sb = 0;
  bool is2v = false;
  bool is2e = false;
};

/// Strong articulation points of a strongly connected graph: D(r) and D^R(r)
/// for root r = 0, plus r itself when G \ {r} is not strongly connected.
/// Throws PreconditionError if g is not strongly connected.
VertexSet strong_articulation_points(const DiGraph& g);

/// Strong bridges: edge dominators of G(0) together with those of G^R(0).
/// Throws PreconditionError if g is not strongly connected.
EdgeList strong_bridges(const DiGraph& g);

bool is_2vertex_connected(const DiGraph& g);
bool is_2edge_connected(const DiGraph& g);

ConnectivityReport report(const DiGraph& g);

}  // namespace twoblocks
