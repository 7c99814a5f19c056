#include "twoblocks/dominators.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "twoblocks/errors.hpp"

namespace twoblocks {

FlowGraph::FlowGraph(const DiGraph& g, Vertex root, Direction d)
    : graph_(&g), root_(root), direction_(d) {
  if (root >= g.vertex_count()) {
    throw PreconditionError("flowgraph root " + std::to_string(root) + " is not a vertex");
  }
  auto seen = reachable(g, root, d);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!seen[v]) {
      throw PreconditionError("vertex " + std::to_string(v) + " is unreachable from root " +
                              std::to_string(root));
    }
  }
}

DominatorTree::DominatorTree(Vertex root, std::vector<Vertex> idom, std::vector<Vertex> preorder)
    : root_(root), idom_(std::move(idom)), preorder_(std::move(preorder)) {
  const std::size_t n = idom_.size();
  child_offsets_.assign(n + 1, 0);
  for (Vertex w : preorder_) {
    if (idom_[w] != kNoVertex) ++child_offsets_[idom_[w] + 1];
  }
  for (std::size_t v = 0; v < n; ++v) child_offsets_[v + 1] += child_offsets_[v];
  children_.resize(child_offsets_[n]);
  std::vector<std::size_t> cursor(child_offsets_.begin(), child_offsets_.end() - 1);
  for (Vertex w : preorder_) {
    if (idom_[w] != kNoVertex) children_[cursor[idom_[w]]++] = w;
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(children_.begin() + static_cast<std::ptrdiff_t>(child_offsets_[v]),
              children_.begin() + static_cast<std::ptrdiff_t>(child_offsets_[v + 1]));
  }

  enter_.assign(n, 0);
  exit_.assign(n, 0);
  depth_.assign(n, 0);
  if (n == 0) return;
  std::uint32_t clock = 0;
  std::vector<std::pair<Vertex, std::size_t>> stack{{root_, 0}};
  enter_[root_] = clock++;
  while (!stack.empty()) {
    auto& [v, pos] = stack.back();
    auto kids = children(v);
    if (pos < kids.size()) {
      const Vertex c = kids[pos++];
      enter_[c] = clock++;
      depth_[c] = depth_[v] + 1;
      stack.emplace_back(c, 0);
    } else {
      exit_[v] = clock++;
      stack.pop_back();
    }
  }
}

DominatorTree dominator_tree(const DiGraph& g, Vertex root, Direction d) {
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> number(n, kNoVertex);  // vertex -> DFS preorder number
  std::vector<Vertex> vertex;                // number -> vertex
  std::vector<Vertex> parent;                // number -> parent number
  vertex.reserve(n);
  parent.reserve(n);

  {
    std::vector<std::pair<Vertex, std::uint32_t>> stack;
    number[root] = 0;
    vertex.push_back(root);
    parent.push_back(kNoVertex);
    stack.emplace_back(root, 0);
    while (!stack.empty()) {
      auto& [v, pos] = stack.back();
      auto next = g.neighbors(v, d);
      if (pos == next.size()) {
        stack.pop_back();
        continue;
      }
      const Vertex w = next[pos++];
      if (number[w] != kNoVertex) continue;
      number[w] = static_cast<Vertex>(vertex.size());
      parent.push_back(number[v]);
      vertex.push_back(w);
      stack.emplace_back(w, 0);
    }
  }

  const std::size_t count = vertex.size();
  std::vector<Vertex> semi(count), label(count), ancestor(count, kNoVertex), dom(count, 0);
  std::vector<Vertex> bucket_head(count, kNoVertex), bucket_next(count, kNoVertex);
  std::vector<Vertex> path;
  for (std::size_t i = 0; i < count; ++i) semi[i] = label[i] = static_cast<Vertex>(i);

  auto eval = [&](Vertex j) -> Vertex {
    if (ancestor[j] == kNoVertex) return j;
    path.clear();
    Vertex x = j;
    while (ancestor[ancestor[x]] != kNoVertex) {
      path.push_back(x);
      x = ancestor[x];
    }
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      const Vertex y = *it;
      const Vertex a = ancestor[y];
      if (semi[label[a]] < semi[label[y]]) label[y] = label[a];
      ancestor[y] = ancestor[a];
    }
    return label[j];
  };

  for (std::size_t i = count; i-- > 1;) {
    const Vertex w = vertex[i];
    for (Vertex v : g.neighbors_against(w, d)) {
      if (number[v] == kNoVertex) continue;
      const Vertex u = eval(number[v]);
      semi[i] = std::min(semi[i], semi[u]);
    }
    bucket_next[i] = bucket_head[semi[i]];
    bucket_head[semi[i]] = static_cast<Vertex>(i);
    const Vertex p = parent[i];
    ancestor[i] = p;
    for (Vertex j = bucket_head[p]; j != kNoVertex; j = bucket_next[j]) {
      const Vertex u = eval(j);
      dom[j] = semi[u] < semi[j] ? u : p;
    }
    bucket_head[p] = kNoVertex;
  }
  for (std::size_t i = 1; i < count; ++i) {
    if (dom[i] != semi[i]) dom[i] = dom[dom[i]];
  }

  std::vector<Vertex> idom(n, kNoVertex);
  for (std::size_t i = 1; i < count; ++i) idom[vertex[i]] = vertex[dom[i]];
  return DominatorTree(root, std::move(idom), std::move(vertex));
}

DominatorTree dominator_tree(const FlowGraph& f) {
  return dominator_tree(f.graph(), f.root(), f.direction());
}

VertexSet nontrivial_dominators(const DominatorTree& t) {
  VertexSet out;
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    if (v != t.root() && t.is_reachable(v) && !t.children(v).empty()) out.push_back(v);
  }
  return out;
}

EdgeSplitGraph edge_split_all(const DiGraph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  EdgeSplitGraph s;
  s.original_vertex_count = n;
  s.phi.resize(m);
  s.split_edge.assign(g.edges().begin(), g.edges().end());
  EdgeList edges;
  edges.reserve(2 * m);
  for (std::size_t id = 0; id < m; ++id) {
    s.phi[id] = static_cast<Vertex>(n + id);
    edges.push_back({g.edge(id).from, s.phi[id]});
  }
  for (std::size_t id = 0; id < m; ++id) edges.push_back({s.phi[id], g.edge(id).to});
  s.split = DiGraph::from_canonical_edges(n + m, std::move(edges));
  return s;
}

EdgeSplitGraph edge_split_out(const DiGraph& g, Vertex v) {
  const std::size_t n = g.vertex_count();
  EdgeSplitGraph s;
  s.original_vertex_count = n;
  s.phi.assign(g.edge_count(), kNoVertex);
  EdgeList edges;
  edges.reserve(g.edge_count() + g.out_degree(v));
  const std::size_t first = g.out_offset(v);
  const std::size_t last = g.out_offset(v + 1);
  for (std::size_t id = 0; id < g.edge_count(); ++id) {
    if (id >= first && id < last) {
      const auto aux = static_cast<Vertex>(n + (id - first));
      s.phi[id] = aux;
      s.split_edge.push_back(g.edge(id));
      edges.push_back({v, aux});
    } else {
      edges.push_back(g.edge(id));
    }
  }
  for (std::size_t k = 0; k < s.split_edge.size(); ++k) {
    edges.push_back({static_cast<Vertex>(n + k), s.split_edge[k].to});
  }
  s.split = DiGraph::from_canonical_edges(n + s.split_edge.size(), std::move(edges));
  return s;
}

namespace {

// guarded[v]: some proper dominator of v in the split flowgraph is auxiliary.
std::vector<char> guarded_marks(const EdgeSplitGraph& split, const DominatorTree& t) {
  std::vector<char> guarded(split.split.vertex_count(), 0);
  for (Vertex v : t.preorder()) {
    if (v == t.root()) continue;
    const Vertex p = t.idom(v);
    guarded[v] = guarded[p] || !split.is_original(p);
  }
  return guarded;
}

}  // namespace

VertexSet unguarded_vertices(const EdgeSplitGraph& split, Vertex root, Direction d) {
  const DominatorTree t = dominator_tree(split.split, root, d);
  const auto guarded = guarded_marks(split, t);
  VertexSet out;
  for (Vertex w = 0; w < split.original_vertex_count; ++w) {
    if (w != root && t.is_reachable(w) && !guarded[w]) out.push_back(w);
  }
  return out;
}

VertexSet unguarded_vertices(const FlowGraph& f) {
  return unguarded_vertices(edge_split_all(f.graph()), f.root(), f.direction());
}

EdgeList edge_dominators(const EdgeSplitGraph& split, Vertex root, Direction d) {
  const DominatorTree t = dominator_tree(split.split, root, d);
  EdgeList out;
  for (std::size_t k = 0; k < split.split_edge.size(); ++k) {
    const auto aux = static_cast<Vertex>(split.original_vertex_count + k);
    if (t.is_reachable(aux) && !t.children(aux).empty()) out.push_back(split.split_edge[k]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

EdgeList TreePair::union_edges() const {
  EdgeList all;
  all.reserve(first.size() + second.size() + repair.size());
  all.insert(all.end(), first.begin(), first.end());
  all.insert(all.end(), second.begin(), second.end());
  all.insert(all.end(), repair.begin(), repair.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

namespace {

enum class Preserve { vertex_dominators, edge_dominators };

// Multi-source BFS in g from every vertex marked in `sources`, avoiding
// `blocked_vertex` and `blocked_edge`; returns the first edge on a shortest
// path that leaves the source set towards `target`.
Edge first_edge_towards(const DiGraph& g, const std::vector<char>& sources, Vertex target,
                        Vertex blocked_vertex, Edge blocked_edge) {
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> pred(n, kNoVertex);
  std::vector<char> seen(sources);
  std::deque<Vertex> queue;
  for (Vertex v = 0; v < n; ++v) {
    if (sources[v]) queue.push_back(v);
  }
  while (!queue.empty() && !seen[target]) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.successors(v)) {
      if (seen[w] || w == blocked_vertex) continue;
      if (Edge{v, w} == blocked_edge) continue;
      seen[w] = 1;
      pred[w] = v;
      queue.push_back(w);
    }
  }
  Vertex y = target;
  while (!sources[pred[y]]) y = pred[y];
  return {pred[y], y};
}

std::vector<char> reach_avoiding_edge(const DiGraph& g, Vertex root, Edge blocked) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<Vertex> stack{root};
  seen[root] = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.successors(v)) {
      if (seen[w] || Edge{v, w} == blocked) continue;
      seen[w] = 1;
      stack.push_back(w);
    }
  }
  return seen;
}

// Edge-dominator sets per original vertex, as edges, read off the dominator
// tree of the fully split graph.
std::vector<EdgeList> edge_dominator_sets(const DiGraph& g, Vertex root) {
  const EdgeSplitGraph split = edge_split_all(g);
  const DominatorTree t = dominator_tree(split.split, root);
  std::vector<EdgeList> sets(g.vertex_count());
  for (Vertex w = 0; w < g.vertex_count(); ++w) {
    if (w == root || !t.is_reachable(w)) continue;
    for (Vertex a = t.idom(w); a != kNoVertex; a = t.idom(a)) {
      if (!split.is_original(a)) sets[w].push_back(split.split_edge[a - split.original_vertex_count]);
    }
    std::sort(sets[w].begin(), sets[w].end());
  }
  return sets;
}

TreePair build_pair(const DiGraph& g, Vertex root, Preserve preserve) {
  const std::size_t n = g.vertex_count();

  // First tree: BFS.
  std::vector<Vertex> parent1(n, kNoVertex);
  std::vector<Vertex> order{root};
  {
    std::vector<char> seen(n, 0);
    seen[root] = 1;
    for (std::size_t head = 0; head < order.size(); ++head) {
      const Vertex v = order[head];
      for (Vertex w : g.successors(v)) {
        if (seen[w]) continue;
        seen[w] = 1;
        parent1[w] = v;
        order.push_back(w);
      }
    }
  }
  // Ancestor intervals in the first tree.
  std::vector<std::uint32_t> enter(n, 0), exit(n, 0);
  {
    std::vector<std::vector<Vertex>> kids(n);
    for (Vertex v : order) {
      if (parent1[v] != kNoVertex) kids[parent1[v]].push_back(v);
    }
    std::uint32_t clock = 0;
    std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
    enter[root] = clock++;
    while (!stack.empty()) {
      auto& [v, pos] = stack.back();
      if (pos < kids[v].size()) {
        const Vertex c = kids[v][pos++];
        enter[c] = clock++;
        stack.emplace_back(c, 0);
      } else {
        exit[v] = clock++;
        stack.pop_back();
      }
    }
  }
  auto tree1_ancestor = [&](Vertex a, Vertex b) {
    return enter[a] <= enter[b] && exit[b] <= exit[a];
  };

  // Second tree: 0-1 BFS that charges an edge (x, w) when it reuses the
  // first tree's route to w, so the two root paths diverge where possible.
  std::vector<Vertex> parent2(n, kNoVertex);
  {
    std::vector<std::uint32_t> dist(n, std::numeric_limits<std::uint32_t>::max());
    std::vector<char> done(n, 0);
    std::deque<Vertex> queue{root};
    dist[root] = 0;
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      if (done[x]) continue;
      done[x] = 1;
      for (Vertex w : g.successors(x)) {
        if (done[w]) continue;
        std::uint32_t cost = 0;
        if (preserve == Preserve::vertex_dominators) {
          cost = (x != root && tree1_ancestor(x, w)) ? 1 : 0;
        } else {
          cost = (x == parent1[w]) ? 1 : 0;
        }
        if (dist[x] + cost < dist[w]) {
          dist[w] = dist[x] + cost;
          parent2[w] = x;
          if (cost == 0) {
            queue.push_front(w);
          } else {
            queue.push_back(w);
          }
        }
      }
    }
  }

  TreePair pair;
  for (Vertex w = 0; w < n; ++w) {
    if (parent1[w] != kNoVertex) pair.first.push_back({parent1[w], w});
    if (parent2[w] != kNoVertex) pair.second.push_back({parent2[w], w});
  }
  std::sort(pair.first.begin(), pair.first.end());
  std::sort(pair.second.begin(), pair.second.end());

  EdgeList current = pair.union_edges();
  if (preserve == Preserve::vertex_dominators) {
    const DominatorTree target = dominator_tree(g, root);
    while (true) {
      const DiGraph h = DiGraph::from_canonical_edges(n, current);
      const DominatorTree t = dominator_tree(h, root);
      Vertex bad = kNoVertex;
      for (Vertex w : target.preorder()) {
        if (t.idom(w) != target.idom(w)) {
          bad = w;
          break;
        }
      }
      if (bad == kNoVertex) break;
      // t.idom(bad) dominates bad in h but not in g.
      const Vertex spurious = t.idom(bad);
      std::vector<char> skip(n, 0);
      skip[spurious] = 1;
      const auto sources = reachable(h, root, Direction::forward, skip);
      const Edge add = first_edge_towards(g, sources, bad, spurious, Edge{kNoVertex, kNoVertex});
      pair.repair.push_back(add);
      current.insert(std::lower_bound(current.begin(), current.end(), add), add);
    }
  } else {
    const auto target = edge_dominator_sets(g, root);
    while (true) {
      const DiGraph h = DiGraph::from_canonical_edges(n, current);
      const auto sets = edge_dominator_sets(h, root);
      Vertex bad = kNoVertex;
      Edge spurious{};
      for (Vertex w : order) {
        if (sets[w].size() == target[w].size()) continue;
        for (const Edge& e : sets[w]) {
          if (!std::binary_search(target[w].begin(), target[w].end(), e)) {
            spurious = e;
            break;
          }
        }
        bad = w;
        break;
      }
      if (bad == kNoVertex) break;
      const auto sources = reach_avoiding_edge(h, root, spurious);
      const Edge add = first_edge_towards(g, sources, bad, kNoVertex, spurious);
      pair.repair.push_back(add);
      current.insert(std::lower_bound(current.begin(), current.end(), add), add);
    }
  }
  std::sort(pair.repair.begin(), pair.repair.end());
  return pair;
}

TreePair pair_for(const FlowGraph& f, Preserve preserve) {
  if (f.direction() == Direction::forward) return build_pair(f.graph(), f.root(), preserve);
  TreePair p = build_pair(reverse(f.graph()), f.root(), preserve);
  for (EdgeList* list : {&p.first, &p.second, &p.repair}) {
    for (Edge& e : *list) e = {e.to, e.from};
    std::sort(list->begin(), list->end());
  }
  return p;
}

}  // namespace

TreePair dominator_preserving_pair(const FlowGraph& f) {
  return pair_for(f, Preserve::vertex_dominators);
}

TreePair edge_dominator_preserving_pair(const FlowGraph& f) {
  return pair_for(f, Preserve::edge_dominators);
}

}  // namespace twoblocks
