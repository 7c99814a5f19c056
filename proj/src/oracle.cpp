#include "twoblocks/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "twoblocks/errors.hpp"

namespace twoblocks::oracle {

namespace {

void check_pair(const DiGraph& g, Vertex x, Vertex y) {
  if (x >= g.vertex_count() || y >= g.vertex_count()) {
    throw InputError("oracle pair (" + std::to_string(x) + "," + std::to_string(y) +
                     ") out of range");
  }
  if (x == y) throw InputError("oracle pair needs distinct vertices, got " + std::to_string(x));
}

bool co_scc(const DiGraph& g, Vertex x, Vertex y, std::span<const char> skip = {}) {
  return reachable(g, x, Direction::forward, skip)[y] && reachable(g, y, Direction::forward, skip)[x];
}

bool survives_vertex_deletions(const DiGraph& g, Vertex x, Vertex y) {
  std::vector<char> skip(g.vertex_count(), 0);
  for (Vertex z = 0; z < g.vertex_count(); ++z) {
    if (z == x || z == y) continue;
    skip[z] = 1;
    const bool ok = co_scc(g, x, y, skip);
    skip[z] = 0;
    if (!ok) return false;
  }
  return true;
}

bool strong_or_trivial(const DiGraph& g) { return g.vertex_count() <= 1 || is_strongly_connected(g); }

void require_strong(const DiGraph& g, const char* what) {
  if (!is_strongly_connected(g)) {
    throw PreconditionError(std::string(what) + " requires a strongly connected graph");
  }
}

using Mask = std::uint32_t;

// Bron-Kerbosch with pivoting over adjacency bitmasks.
void maximal_cliques(const std::vector<Mask>& adj, Mask r, Mask p, Mask x,
                     std::vector<VertexSet>& out) {
  if (p == 0 && x == 0) {
    if (std::popcount(r) >= 2) {
      VertexSet c;
      for (Mask m = r; m != 0; m &= m - 1) c.push_back(static_cast<Vertex>(std::countr_zero(m)));
      out.push_back(std::move(c));
    }
    return;
  }
  const auto pivot = static_cast<std::size_t>(std::countr_zero(p | x));
  for (Mask cand = p & ~adj[pivot]; cand != 0; cand &= cand - 1) {
    const auto v = static_cast<std::size_t>(std::countr_zero(cand));
    const Mask bit = Mask{1} << v;
    maximal_cliques(adj, r | bit, p & adj[v], x & adj[v], out);
    p &= ~bit;
    x |= bit;
  }
}

void collect_paths(const DiGraph& g, Vertex at, Vertex target, Mask visited, Mask interior,
                   std::vector<Mask>& out) {
  for (Vertex next : g.successors(at)) {
    if (next == target) {
      out.push_back(interior);
      continue;
    }
    const Mask bit = Mask{1} << next;
    if (visited & bit) continue;
    collect_paths(g, next, target, visited | bit, interior | bit, out);
  }
}

}  // namespace

bool pair_2s(const DiGraph& g, Vertex x, Vertex y) {
  check_pair(g, x, y);
  return co_scc(g, x, y) && survives_vertex_deletions(g, x, y);
}

bool pair_2d(const DiGraph& g, Vertex x, Vertex y) {
  if (!pair_2s(g, x, y)) return false;
  EdgeList both;
  for (Edge e : {Edge{x, y}, Edge{y, x}}) {
    if (g.has_edge(e)) both.push_back(e);
  }
  std::sort(both.begin(), both.end());
  return co_scc(delete_edges(g, both), x, y);
}

bool pair_2e(const DiGraph& g, Vertex x, Vertex y) {
  check_pair(g, x, y);
  if (!co_scc(g, x, y)) return false;
  for (Edge e : g.edges()) {
    const Edge removed[] = {e};
    if (!co_scc(delete_edges(g, removed), x, y)) return false;
  }
  return true;
}

bool pair(const DiGraph& g, BlockKind kind, Vertex x, Vertex y) {
  switch (kind) {
    case BlockKind::two_directed: return pair_2d(g, x, y);
    case BlockKind::two_strong: return pair_2s(g, x, y);
    case BlockKind::two_edge: return pair_2e(g, x, y);
  }
  return false;
}

bool two_disjoint_paths(const DiGraph& g, Vertex x, Vertex y) {
  if (g.vertex_count() > kMaxPathVertices) {
    throw SizeGuardError("path enumeration limited to " + std::to_string(kMaxPathVertices) +
                         " vertices, got " + std::to_string(g.vertex_count()));
  }
  check_pair(g, x, y);
  std::vector<Mask> interiors;
  collect_paths(g, x, y, Mask{1} << x, 0, interiors);
  // distinct simple paths always differ in interior unless both are the edge itself
  for (std::size_t i = 0; i < interiors.size(); ++i) {
    for (std::size_t j = i + 1; j < interiors.size(); ++j) {
      if ((interiors[i] & interiors[j]) == 0) return true;
    }
  }
  return false;
}

BlockFamily blocks(const DiGraph& g, BlockKind kind) {
  const std::size_t n = g.vertex_count();
  if (n > kMaxCliqueVertices) {
    throw SizeGuardError("clique enumeration limited to " + std::to_string(kMaxCliqueVertices) +
                         " vertices, got " + std::to_string(n));
  }
  std::vector<Mask> adj(n, 0);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      if (pair(g, kind, x, y)) {
        adj[x] |= Mask{1} << y;
        adj[y] |= Mask{1} << x;
      }
    }
  }
  BlockFamily out{kind, {}};
  const Mask everyone = n == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n) - 1);
  maximal_cliques(adj, 0, everyone, 0, out.blocks);
  canonicalize(out.blocks);
  return out;
}

VertexSet saps(const DiGraph& g) {
  require_strong(g, "oracle::saps");
  VertexSet out;
  if (g.vertex_count() < 2) return out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const Vertex removed[] = {v};
    if (!strong_or_trivial(delete_vertices(g, removed).graph)) out.push_back(v);
  }
  return out;
}

EdgeList bridges(const DiGraph& g) {
  require_strong(g, "oracle::bridges");
  EdgeList out;
  for (Edge e : g.edges()) {
    const Edge removed[] = {e};
    if (!is_strongly_connected(delete_edges(g, removed))) out.push_back(e);
  }
  return out;
}

VertexSet unguarded(const DiGraph& g, Vertex root) {
  std::vector<char> ok(g.vertex_count(), 1);
  for (Edge e : g.edges()) {
    const Edge removed[] = {e};
    const auto seen = reachable(delete_edges(g, removed), root);
    for (Vertex w = 0; w < g.vertex_count(); ++w) ok[w] = ok[w] && seen[w];
  }
  VertexSet out;
  for (Vertex w = 0; w < g.vertex_count(); ++w) {
    if (w != root && ok[w]) out.push_back(w);
  }
  return out;
}

std::vector<Vertex> idoms(const DiGraph& g, Vertex root) {
  const std::size_t n = g.vertex_count();
  // dom[w][u]: u is a proper dominator of w
  std::vector<std::vector<char>> dom(n, std::vector<char>(n, 0));
  const auto base = reachable(g, root);
  std::vector<char> skip(n, 0);
  for (Vertex u = 0; u < n; ++u) {
    if (u == root) continue;
    skip[u] = 1;
    const auto seen = reachable(g, root, Direction::forward, skip);
    skip[u] = 0;
    for (Vertex w = 0; w < n; ++w) {
      if (w != u && base[w] && !seen[w]) dom[w][u] = 1;
    }
  }
  std::vector<Vertex> idom(n, kNoVertex);
  for (Vertex w = 0; w < n; ++w) {
    if (w == root || !base[w]) continue;
    dom[w][root] = 1;
    // the proper dominator dominated by all the others
    for (Vertex u = 0; u < n; ++u) {
      if (!dom[w][u]) continue;
      bool deepest = true;
      for (Vertex o = 0; o < n && deepest; ++o) {
        if (o != u && dom[w][o] && !(o == root || dom[u][o])) deepest = false;
      }
      if (deepest) idom[w] = u;
    }
  }
  return idom;
}

}  // namespace twoblocks::oracle
