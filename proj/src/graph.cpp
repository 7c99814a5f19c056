#include "twoblocks/graph.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "twoblocks/errors.hpp"

namespace twoblocks {

namespace {

std::string pair_text(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

DiGraph DiGraph::from_edge_list(std::size_t n, std::span<const Edge> pairs) {
  EdgeList edges(pairs.begin(), pairs.end());
  for (const Edge& e : edges) {
    if (e.from >= n || e.to >= n) {
      throw InputError("edge " + pair_text(e.from, e.to) + " has an endpoint outside 0.." +
                       std::to_string(n == 0 ? 0 : n - 1));
    }
    if (e.from == e.to) {
      throw InputError("self-loop " + pair_text(e.from, e.to) + " is not allowed");
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return from_canonical_edges(n, std::move(edges));
}

DiGraph DiGraph::from_canonical_edges(std::size_t n, EdgeList edges) {
  assert(std::is_sorted(edges.begin(), edges.end()));
  DiGraph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  g.build_index();
  return g;
}

void DiGraph::build_index() {
  const std::size_t m = edges_.size();
  out_offsets_.assign(n_ + 1, 0);
  in_offsets_.assign(n_ + 1, 0);
  for (const Edge& e : edges_) {
    ++out_offsets_[e.from + 1];
    ++in_offsets_[e.to + 1];
  }
  for (std::size_t v = 0; v < n_; ++v) {
    out_offsets_[v + 1] += out_offsets_[v];
    in_offsets_[v + 1] += in_offsets_[v];
  }
  out_targets_.resize(m);
  in_sources_.resize(m);
  in_edge_ids_.resize(m);
  std::vector<std::uint32_t> cursor(in_offsets_.begin(), in_offsets_.end() - 1);
  for (std::size_t id = 0; id < m; ++id) {
    const Edge& e = edges_[id];
    out_targets_[id] = e.to;
    const std::uint32_t slot = cursor[e.to]++;
    in_sources_[slot] = e.from;
    in_edge_ids_[slot] = static_cast<std::uint32_t>(id);
  }
}

std::size_t DiGraph::edge_id(Edge e) const {
  if (e.from >= n_ || e.to >= n_) return edges_.size();
  auto first = edges_.begin() + out_offsets_[e.from];
  auto last = edges_.begin() + out_offsets_[e.from + 1];
  auto it = std::lower_bound(first, last, e);
  if (it == last || *it != e) return edges_.size();
  return static_cast<std::size_t>(it - edges_.begin());
}

bool DiGraph::has_edge(Edge e) const { return edge_id(e) != edges_.size(); }

UndirectedGraph UndirectedGraph::from_edges(std::size_t n,
                                            std::span<const std::pair<Vertex, Vertex>> pairs) {
  UndirectedGraph u(n);
  u.edges_.reserve(pairs.size());
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) throw InputError("edge " + pair_text(a, b) + " is out of range");
    if (a == b) throw InputError("self-loop " + pair_text(a, b) + " is not allowed");
    u.edges_.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(u.edges_.begin(), u.edges_.end());
  u.edges_.erase(std::unique(u.edges_.begin(), u.edges_.end()), u.edges_.end());

  for (auto [a, b] : u.edges_) {
    ++u.offsets_[a + 1];
    ++u.offsets_[b + 1];
  }
  for (std::size_t v = 0; v < n; ++v) u.offsets_[v + 1] += u.offsets_[v];
  u.adjacency_.resize(2 * u.edges_.size());
  std::vector<std::size_t> cursor(u.offsets_.begin(), u.offsets_.end() - 1);
  for (auto [a, b] : u.edges_) {
    u.adjacency_[cursor[a]++] = b;
    u.adjacency_[cursor[b]++] = a;
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(u.adjacency_.begin() + static_cast<std::ptrdiff_t>(u.offsets_[v]),
              u.adjacency_.begin() + static_cast<std::ptrdiff_t>(u.offsets_[v + 1]));
  }
  return u;
}

bool UndirectedGraph::has_edge(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

void canonicalize(std::vector<VertexSet>& family) {
  for (auto& s : family) std::sort(s.begin(), s.end());
  std::sort(family.begin(), family.end());
}

Partition::Partition(std::size_t n, std::vector<VertexSet> cells)
    : cells_(std::move(cells)), cell_of_(n, 0) {
  canonicalize(cells_);
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    for (Vertex v : cells_[i]) cell_of_[v] = i;
  }
}

DiGraph reverse(const DiGraph& g) {
  EdgeList edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) edges.push_back({e.to, e.from});
  std::sort(edges.begin(), edges.end());
  return DiGraph::from_canonical_edges(g.vertex_count(), std::move(edges));
}

InducedSubgraph induced_subgraph(const DiGraph& g, std::span<const Vertex> keep) {
  InducedSubgraph sub;
  sub.to_local.assign(g.vertex_count(), kNoVertex);
  VertexSet kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  for (Vertex v : kept) {
    sub.to_local[v] = static_cast<Vertex>(sub.to_parent.size());
    sub.to_parent.push_back(v);
  }
  // Local ids are monotone in parent ids, so canonical order is preserved.
  EdgeList edges;
  for (const Edge& e : g.edges()) {
    const Vertex a = sub.to_local[e.from];
    const Vertex b = sub.to_local[e.to];
    if (a != kNoVertex && b != kNoVertex) edges.push_back({a, b});
  }
  sub.graph = DiGraph::from_canonical_edges(sub.to_parent.size(), std::move(edges));
  return sub;
}

InducedSubgraph delete_vertices(const DiGraph& g, std::span<const Vertex> removed) {
  std::vector<char> gone(g.vertex_count(), 0);
  for (Vertex v : removed) {
    if (v < g.vertex_count()) gone[v] = 1;
  }
  VertexSet keep;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!gone[v]) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

DiGraph delete_edges(const DiGraph& g, std::span<const Edge> removed) {
  std::vector<char> gone(g.edge_count(), 0);
  for (const Edge& e : removed) {
    const std::size_t id = g.edge_id(e);
    if (id != g.edge_count()) gone[id] = 1;
  }
  EdgeList edges;
  edges.reserve(g.edge_count());
  for (std::size_t id = 0; id < g.edge_count(); ++id) {
    if (!gone[id]) edges.push_back(g.edge(id));
  }
  return DiGraph::from_canonical_edges(g.vertex_count(), std::move(edges));
}

DiGraph edge_subgraph(const DiGraph& g, std::span<const Edge> kept) {
  EdgeList edges(kept.begin(), kept.end());
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return DiGraph::from_canonical_edges(g.vertex_count(), std::move(edges));
}

std::size_t scc_labels(const DiGraph& g, std::span<const char> skip, std::vector<Vertex>& label) {
  // Iterative Tarjan.
  const std::size_t n = g.vertex_count();
  constexpr Vertex kUnvisited = kNoVertex;
  std::vector<Vertex> index(n, kUnvisited), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<Vertex> stack;
  std::vector<std::pair<Vertex, std::uint32_t>> call;  // vertex, next successor position
  label.assign(n, kNoVertex);
  Vertex next_index = 0;
  Vertex components = 0;
  const bool has_skip = !skip.empty();

  for (Vertex s = 0; s < n; ++s) {
    if (index[s] != kUnvisited || (has_skip && skip[s])) continue;
    call.emplace_back(s, 0);
    index[s] = low[s] = next_index++;
    stack.push_back(s);
    on_stack[s] = 1;
    while (!call.empty()) {
      auto& [v, pos] = call.back();
      auto succ = g.successors(v);
      if (pos < succ.size()) {
        const Vertex w = succ[pos++];
        if (has_skip && skip[w]) continue;
        if (index[w] == kUnvisited) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const Vertex done = v;
      call.pop_back();
      if (!call.empty()) {
        const Vertex parent = call.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          label[w] = components;
        } while (w != done);
        ++components;
      }
    }
  }
  return components;
}

Partition scc(const DiGraph& g) {
  std::vector<Vertex> label;
  const std::size_t count = scc_labels(g, {}, label);
  std::vector<VertexSet> cells(count);
  for (Vertex v = 0; v < g.vertex_count(); ++v) cells[label[v]].push_back(v);
  return Partition(g.vertex_count(), std::move(cells));
}

std::vector<char> reachable(const DiGraph& g, Vertex root, Direction d, std::span<const char> skip) {
  std::vector<char> seen(g.vertex_count(), 0);
  if (root >= g.vertex_count() || (!skip.empty() && skip[root])) return seen;
  std::vector<Vertex> stack{root};
  seen[root] = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v, d)) {
      if (seen[w] || (!skip.empty() && skip[w])) continue;
      seen[w] = 1;
      stack.push_back(w);
    }
  }
  return seen;
}

bool is_strongly_connected(const DiGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return false;
  auto fwd = reachable(g, 0, Direction::forward);
  if (std::find(fwd.begin(), fwd.end(), 0) != fwd.end()) return false;
  auto bwd = reachable(g, 0, Direction::reverse);
  return std::find(bwd.begin(), bwd.end(), 0) == bwd.end();
}

Partition connected_components(const UndirectedGraph& u) {
  const std::size_t n = u.vertex_count();
  std::vector<Vertex> label(n, kNoVertex);
  std::vector<VertexSet> cells;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (label[s] != kNoVertex) continue;
    const auto id = static_cast<Vertex>(cells.size());
    cells.emplace_back();
    label[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      cells[id].push_back(v);
      for (Vertex w : u.neighbors(v)) {
        if (label[w] == kNoVertex) {
          label[w] = id;
          stack.push_back(w);
        }
      }
    }
  }
  return Partition(n, std::move(cells));
}

std::vector<VertexSet> biconnected_blocks(const UndirectedGraph& u) {
  // Hopcroft-Tarjan with an explicit edge stack.
  const std::size_t n = u.vertex_count();
  std::vector<Vertex> disc(n, kNoVertex), low(n, 0), parent(n, kNoVertex);
  std::vector<std::pair<Vertex, Vertex>> edge_stack;
  std::vector<std::pair<Vertex, std::uint32_t>> call;
  std::vector<VertexSet> blocks;
  std::vector<Vertex> mark(n, kNoVertex);
  Vertex time = 0;

  auto pop_block = [&](Vertex a, Vertex b) {
    VertexSet block;
    const auto stamp = static_cast<Vertex>(blocks.size());
    while (true) {
      auto [x, y] = edge_stack.back();
      edge_stack.pop_back();
      for (Vertex z : {x, y}) {
        if (mark[z] != stamp) {
          mark[z] = stamp;
          block.push_back(z);
        }
      }
      if (x == a && y == b) break;
    }
    blocks.push_back(std::move(block));
  };

  for (Vertex s = 0; s < n; ++s) {
    if (disc[s] != kNoVertex) continue;
    disc[s] = low[s] = time++;
    call.emplace_back(s, 0);
    while (!call.empty()) {
      auto& [v, pos] = call.back();
      auto nb = u.neighbors(v);
      if (pos < nb.size()) {
        const Vertex w = nb[pos++];
        if (disc[w] == kNoVertex) {
          parent[w] = v;
          disc[w] = low[w] = time++;
          edge_stack.emplace_back(v, w);
          call.emplace_back(w, 0);
        } else if (w != parent[v] && disc[w] < disc[v]) {
          edge_stack.emplace_back(v, w);
          low[v] = std::min(low[v], disc[w]);
        }
        continue;
      }
      const Vertex w = v;
      call.pop_back();
      if (call.empty()) break;
      const Vertex p = call.back().first;
      low[p] = std::min(low[p], low[w]);
      if (low[w] >= disc[p]) pop_block(p, w);
    }
  }
  canonicalize(blocks);
  return blocks;
}

}  // namespace twoblocks
