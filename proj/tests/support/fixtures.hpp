#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "twoblocks/generate.hpp"
#include "twoblocks/graph.hpp"

namespace fixtures {

using twoblocks::DiGraph;
using twoblocks::Edge;
using twoblocks::EdgeList;
using twoblocks::Vertex;
using twoblocks::VertexSet;

inline DiGraph make(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
  std::vector<Edge> edges;
  for (auto [a, b] : pairs) edges.push_back({a, b});
  return DiGraph::from_edge_list(n, edges);
}

inline DiGraph c3() { return make(3, {{0, 1}, {1, 2}, {2, 0}}); }
inline DiGraph k3() { return make(3, {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}}); }
inline DiGraph two_cycle() { return make(2, {{0, 1}, {1, 0}}); }
inline DiGraph path3() { return make(3, {{0, 1}, {1, 2}}); }

// The 12-vertex example graph; vertex id = label - 1.
inline const std::vector<std::pair<Vertex, Vertex>>& fig1_labels() {
  static const std::vector<std::pair<Vertex, Vertex>> e = {
      {1, 2}, {2, 1},  {1, 3}, {3, 1},  {2, 3},   {3, 2},  {3, 4},  {5, 3},  {5, 7},
      {6, 5}, {8, 4},  {9, 8}, {6, 9},  {8, 10},  {10, 6}, {6, 11}, {11, 8}, {6, 12},
      {12, 7}, {7, 6}, {4, 6}, {4, 10}, {6, 1},   {10, 11}, {2, 6}, {10, 9}};
  return e;
}

inline DiGraph fig1() {
  std::vector<Edge> edges;
  for (auto [a, b] : fig1_labels()) edges.push_back({a - 1, b - 1});
  return DiGraph::from_edge_list(12, edges);
}

// Label-space helpers for fig1 expectations.
inline VertexSet ids(std::initializer_list<Vertex> labels) {
  VertexSet out;
  for (Vertex l : labels) out.push_back(l - 1);
  std::sort(out.begin(), out.end());
  return out;
}
inline Edge id_edge(Vertex a, Vertex b) { return {a - 1, b - 1}; }

/// Strongly connected graph grown by ears: a start cycle, then paths whose
/// ends attach to existing vertices. Gives more varied SAP / bridge structure
/// than the backbone-cycle generator.
inline DiGraph ear_graph(std::size_t n, std::size_t extra_edges, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto below = [&](std::size_t b) { return static_cast<Vertex>(twoblocks::uniform_below(rng, b)); };
  std::vector<Edge> edges;
  const std::size_t first = std::min<std::size_t>(n, 2 + below(3));
  for (Vertex v = 0; v < first; ++v) edges.push_back({v, static_cast<Vertex>((v + 1) % first)});
  Vertex next = static_cast<Vertex>(first);
  while (next < n) {
    const std::size_t len = std::min<std::size_t>(n - next, 1 + below(4));
    Vertex prev = below(next);
    const Vertex end = below(next);
    for (std::size_t i = 0; i < len; ++i) {
      edges.push_back({prev, next});
      prev = next++;
    }
    edges.push_back({prev, end});
  }
  for (std::size_t i = 0; i < extra_edges; ++i) {
    const Vertex a = below(n);
    const Vertex b = below(n);
    if (a != b) edges.push_back({a, b});
  }
  return DiGraph::from_edge_list(n, edges);
}

/// Random strongly connected graph of one of two shapes, for property sweeps.
inline DiGraph random_strong(std::size_t n, std::size_t max_m, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  const std::size_t cap = std::min(max_m, n * (n - 1));
  if (twoblocks::uniform_below(rng, 2) == 0) {
    const std::size_t m = n + twoblocks::uniform_below(rng, cap - n + 1);
    return twoblocks::random_strong_graph(n, m, seed);
  }
  const std::size_t extra = twoblocks::uniform_below(rng, cap / 2 + 1);
  DiGraph g = ear_graph(n, extra, seed);
  if (g.edge_count() <= max_m) return g;
  return twoblocks::random_strong_graph(n, cap, seed);
}

/// Two or three strongly connected pieces joined by one-way edges, plus a
/// stray singleton; exercises the per-SCC decomposition.
inline DiGraph random_layered(std::size_t pieces, std::size_t piece_n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  Vertex base = 0;
  for (std::size_t p = 0; p < pieces; ++p) {
    const DiGraph part = ear_graph(piece_n, piece_n / 2, seed * 31 + p);
    for (Edge e : part.edges()) edges.push_back({e.from + base, e.to + base});
    if (p > 0) {
      edges.push_back({static_cast<Vertex>(base - 1 - twoblocks::uniform_below(rng, piece_n)),
                       static_cast<Vertex>(base + twoblocks::uniform_below(rng, piece_n))});
    }
    base += static_cast<Vertex>(piece_n);
  }
  edges.push_back({0, base});  // singleton sink
  return DiGraph::from_edge_list(base + 1, edges);
}

}  // namespace fixtures
