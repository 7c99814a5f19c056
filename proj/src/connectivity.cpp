#include "twoblocks/connectivity.hpp"

#include <algorithm>

#include "twoblocks/dominators.hpp"
#include "twoblocks/errors.hpp"

namespace twoblocks {

namespace {

void require_strong(const DiGraph& g, const char* what) {
  if (!is_strongly_connected(g)) {
    throw PreconditionError(std::string(what) + " requires a strongly connected graph");
  }
}

VertexSet saps_of_strong(const DiGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 3) return {};
  constexpr Vertex root = 0;
  VertexSet out = nontrivial_dominators(dominator_tree(g, root, Direction::forward));
  const VertexSet back = nontrivial_dominators(dominator_tree(g, root, Direction::reverse));
  out.insert(out.end(), back.begin(), back.end());

  std::vector<char> skip(n, 0);
  skip[root] = 1;
  std::vector<Vertex> label;
  if (scc_labels(g, skip, label) > 1) out.push_back(root);

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

EdgeList bridges_of_strong(const DiGraph& g) {
  if (g.vertex_count() < 2) return {};
  const EdgeSplitGraph split = edge_split_all(g);
  EdgeList out = edge_dominators(split, 0, Direction::forward);
  const EdgeList back = edge_dominators(split, 0, Direction::reverse);
  out.insert(out.end(), back.begin(), back.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

VertexSet strong_articulation_points(const DiGraph& g) {
  require_strong(g, "strong_articulation_points");
  return saps_of_strong(g);
}

EdgeList strong_bridges(const DiGraph& g) {
  require_strong(g, "strong_bridges");
  return bridges_of_strong(g);
}

bool is_2vertex_connected(const DiGraph& g) {
  return g.vertex_count() >= 3 && is_strongly_connected(g) && saps_of_strong(g).empty();
}

bool is_2edge_connected(const DiGraph& g) {
  return is_strongly_connected(g) && bridges_of_strong(g).empty();
}

ConnectivityReport report(const DiGraph& g) {
  require_strong(g, "report");
  ConnectivityReport r;
  r.saps = saps_of_strong(g);
  r.bridges = bridges_of_strong(g);
  r.t_sap = r.saps.size();
  r.t_sb = r.bridges.size();
  r.is2v = g.vertex_count() >= 3 && r.saps.empty();
  r.is2e = r.bridges.empty();
  return r;
}

}  // namespace twoblocks
