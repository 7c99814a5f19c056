#include "twoblocks/mscss.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "twoblocks/blocks.hpp"
#include "twoblocks/connectivity.hpp"
#include "twoblocks/dominators.hpp"
#include "twoblocks/errors.hpp"

namespace twoblocks {

std::string_view to_string(PreserveKind kind) {
  switch (kind) {
    case PreserveKind::two_vertex: return "2vcss";
    case PreserveKind::saps: return "saps";
    case PreserveKind::two_strong: return "2s";
    case PreserveKind::two_edge: return "2e";
    case PreserveKind::two_directed: return "2d";
  }
  return "?";
}

std::optional<PreserveKind> parse_preserve_kind(std::string_view text) {
  if (text == "2vcss") return PreserveKind::two_vertex;
  if (text == "saps") return PreserveKind::saps;
  if (text == "2s") return PreserveKind::two_strong;
  if (text == "2e") return PreserveKind::two_edge;
  if (text == "2d") return PreserveKind::two_directed;
  return std::nullopt;
}

namespace {

void require_strong(const DiGraph& g, const char* what) {
  if (!is_strongly_connected(g)) {
    throw PreconditionError(std::string(what) + " requires a strongly connected graph");
  }
}

void merge_into(EdgeList& acc, const EdgeList& more) {
  EdgeList out;
  out.reserve(acc.size() + more.size());
  std::set_union(acc.begin(), acc.end(), more.begin(), more.end(), std::back_inserter(out));
  acc = std::move(out);
}

EdgeList to_parent(const InducedSubgraph& sub, std::span<const Edge> local) {
  EdgeList out;
  out.reserve(local.size());
  for (Edge e : local) out.push_back({sub.to_parent[e.from], sub.to_parent[e.to]});
  std::sort(out.begin(), out.end());
  return out;
}

EdgeList run_scss(const DiGraph& g, const MscssOptions& opts) {
  EdgeList out = opts.scss ? opts.scss(g) : scss_branching(g, 0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t tree_bound(std::size_t n) { return n == 0 ? 0 : 2 * (n - 1); }

// Adds a dominator-preserving pair; returns the edges above 2(n-1).
std::size_t add_pair(EdgeList& acc, const TreePair& pair, std::size_t n) {
  const EdgeList u = pair.union_edges();
  merge_into(acc, u);
  return u.size() > tree_bound(n) ? u.size() - tree_bound(n) : 0;
}

SpanningSolution finish(SpanningSolution s) {
  s.edge_count = s.edges.size();
  return s;
}

// T1, T2 on G(v), T3, T4 on G^R(v), plus an SCSS of G \ {v}; v must be a non-SAP.
SpanningSolution core_solution(const DiGraph& g, Vertex v, const MscssOptions& opts,
                               PreserveKind kind) {
  const std::size_t n = g.vertex_count();
  SpanningSolution s;
  s.kind = kind;
  std::size_t excess = add_pair(s.edges, dominator_preserving_pair(FlowGraph(g, v)), n);
  excess += add_pair(s.edges, dominator_preserving_pair(FlowGraph(g, v, Direction::reverse)), n);

  const Vertex removed[] = {v};
  const InducedSubgraph rest = delete_vertices(g, removed);
  merge_into(s.edges, to_parent(rest, run_scss(rest.graph, opts)));

  s.pair_over_budget = excess > 0;
  s.budget_bound = 2 * tree_bound(n) + tree_bound(n - 1) + excess;
  return s;
}

bool induced_strong(const DiGraph& h, const VertexSet& cell) {
  return cell.size() < 2 || is_strongly_connected(induced_subgraph(h, cell).graph);
}

}  // namespace

EdgeList scss_branching(const DiGraph& g, Vertex root) {
  require_strong(g, "scss_branching");
  const std::size_t n = g.vertex_count();
  if (root >= n) throw InputError("scss_branching: root " + std::to_string(root) + " out of range");
  EdgeList out;
  for (Direction d : {Direction::forward, Direction::reverse}) {
    std::vector<char> seen(n, 0);
    std::deque<Vertex> queue{root};
    seen[root] = 1;
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      for (Vertex y : g.neighbors(x, d)) {
        if (seen[y]) continue;
        seen[y] = 1;
        out.push_back(d == Direction::forward ? Edge{x, y} : Edge{y, x});
        queue.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SpanningSolution twovcss_georgiadis(const DiGraph& g, const MscssOptions& opts) {
  if (!is_2vertex_connected(g)) {
    throw PreconditionError("twovcss_georgiadis requires a 2-vertex-connected graph");
  }
  SpanningSolution s = core_solution(g, 0, opts, PreserveKind::two_vertex);
  s.feasible = verify_solution(g, s).ok();
  return finish(std::move(s));
}

SpanningSolution mscss_same_saps(const DiGraph& g, const MscssOptions& opts) {
  require_strong(g, "mscss_same_saps");
  const std::size_t n = g.vertex_count();
  const VertexSet saps = strong_articulation_points(g);
  SpanningSolution s;
  if (n >= 3 && saps.empty()) {
    s = core_solution(g, 0, opts, PreserveKind::saps);
  } else if (saps.size() == n) {
    s.kind = PreserveKind::saps;
    s.edges = run_scss(g, opts);
    s.budget_bound = tree_bound(n);
  } else {
    // smallest non-SAP
    Vertex v = 0;
    while (std::binary_search(saps.begin(), saps.end(), v)) ++v;
    s = core_solution(g, v, opts, PreserveKind::saps);
  }
  s.edge_count = s.edges.size();
  s.feasible = verify_solution(g, s).ok();
  return s;
}

SpanningSolution mscss_same_2s(const DiGraph& g, const MscssOptions& opts) {
  require_strong(g, "mscss_same_2s");
  const std::size_t n = g.vertex_count();
  SpanningSolution s = mscss_same_saps(g, opts);
  s.kind = PreserveKind::two_strong;
  const VertexSet saps = strong_articulation_points(g);
  s.budget_bound += 2 * saps.size() * n;

  std::vector<char> in_block(n, 1);
  if (opts.skip_blockless_components) {
    std::fill(in_block.begin(), in_block.end(), 0);
    for (const VertexSet& b : blocks_2s_dom(g).blocks) {
      for (Vertex v : b) in_block[v] = 1;
    }
  }

  for (Vertex v : saps) {
    const Vertex removed[] = {v};
    const InducedSubgraph rest = delete_vertices(g, removed);
    const Partition parts = scc(rest.graph);
    for (const VertexSet& local_cell : parts.cells()) {
      if (local_cell.size() < 2) continue;
      VertexSet cell;
      for (Vertex w : local_cell) cell.push_back(rest.to_parent[w]);
      if (std::none_of(cell.begin(), cell.end(), [&](Vertex w) { return in_block[w] != 0; })) {
        continue;
      }
      if (induced_strong(edge_subgraph(g, s.edges), cell)) continue;
      const InducedSubgraph part = induced_subgraph(g, cell);
      merge_into(s.edges, to_parent(part, scss_branching(part.graph, 0)));
    }
  }
  s.edge_count = s.edges.size();
  s.feasible = verify_solution(g, s).ok();
  return s;
}

SpanningSolution mscss_same_2e(const DiGraph& g, const MscssOptions& opts) {
  require_strong(g, "mscss_same_2e");
  const std::size_t n = g.vertex_count();
  SpanningSolution s;
  s.kind = PreserveKind::two_edge;
  s.strict_bound = true;
  std::size_t excess = add_pair(s.edges, edge_dominator_preserving_pair(FlowGraph(g, 0)), n);
  excess += add_pair(s.edges,
                     edge_dominator_preserving_pair(FlowGraph(g, 0, Direction::reverse)), n);

  const EdgeList bridges = strong_bridges(g);
  for (std::size_t i = 0; i < bridges.size(); ++i) {
    const DiGraph cut = delete_edges(g, std::span<const Edge>(bridges).subspan(i, 1));
    const Partition parts = scc(cut);
    for (const VertexSet& cell : parts.cells()) {
      if (induced_strong(edge_subgraph(g, s.edges), cell)) continue;
      const InducedSubgraph part = induced_subgraph(g, cell);
      merge_into(s.edges, to_parent(part, run_scss(part.graph, opts)));
    }
  }
  s.pair_over_budget = excess > 0;
  s.budget_bound = (4 + 2 * bridges.size()) * n + excess;
  s.edge_count = s.edges.size();
  s.feasible = verify_solution(g, s).ok();
  return s;
}

SpanningSolution mscss_same_2d(const DiGraph& g, const MscssOptions& opts) {
  require_strong(g, "mscss_same_2d");
  const SpanningSolution strong = mscss_same_2s(g, opts);
  const SpanningSolution edge = mscss_same_2e(g, opts);
  SpanningSolution s;
  s.kind = PreserveKind::two_directed;
  s.edges = strong.edges;
  merge_into(s.edges, edge.edges);
  s.budget_bound = strong.budget_bound + edge.budget_bound;
  s.pair_over_budget = strong.pair_over_budget || edge.pair_over_budget;
  s.edge_count = s.edges.size();
  s.feasible = verify_solution(g, s).ok();
  return s;
}

SpanningSolution mscss(const DiGraph& g, PreserveKind kind, const MscssOptions& opts) {
  switch (kind) {
    case PreserveKind::two_vertex: return twovcss_georgiadis(g, opts);
    case PreserveKind::saps: return mscss_same_saps(g, opts);
    case PreserveKind::two_strong: return mscss_same_2s(g, opts);
    case PreserveKind::two_edge: return mscss_same_2e(g, opts);
    case PreserveKind::two_directed: return mscss_same_2d(g, opts);
  }
  return {};
}

FeasibilityReport verify_solution(const DiGraph& g, const SpanningSolution& s) {
  FeasibilityReport r;
  r.edge_count = s.edges.size();
  r.input_edge_count = g.edge_count();
  r.budget_bound = s.budget_bound;
  r.within_bound = s.strict_bound ? r.edge_count < s.budget_bound : r.edge_count <= s.budget_bound;
  r.edges_subset = std::is_sorted(s.edges.begin(), s.edges.end()) &&
                   std::adjacent_find(s.edges.begin(), s.edges.end()) == s.edges.end() &&
                   std::all_of(s.edges.begin(), s.edges.end(), [&](Edge e) {
                     return e.from < g.vertex_count() && e.to < g.vertex_count() && g.has_edge(e);
                   });
  if (!r.edges_subset) return r;

  const DiGraph h = edge_subgraph(g, s.edges);
  r.strongly_connected = is_strongly_connected(h);
  if (!r.strongly_connected) return r;

  switch (s.kind) {
    case PreserveKind::two_vertex:
      r.structure_preserved = is_2vertex_connected(h);
      break;
    case PreserveKind::saps:
      r.structure_preserved = strong_articulation_points(h) == strong_articulation_points(g);
      break;
    case PreserveKind::two_strong:
      r.structure_preserved = blocks_2s_dom(h) == blocks_2s_dom(g);
      break;
    case PreserveKind::two_edge:
      r.structure_preserved = blocks_2e_dom(h) == blocks_2e_dom(g);
      break;
    case PreserveKind::two_directed:
      r.structure_preserved = blocks_2d_direct(h) == blocks_2d_direct(g);
      break;
  }
  return r;
}

}  // namespace twoblocks
