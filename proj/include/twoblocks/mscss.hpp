#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>

#include "twoblocks/graph.hpp"

namespace twoblocks {

/// Which structure a sparse spanning subgraph must keep.
enum class PreserveKind { two_vertex, saps, two_strong, two_edge, two_directed };

std::string_view to_string(PreserveKind kind);  // "2vcss", "saps", "2s", "2e", "2d"
std::optional<PreserveKind> parse_preserve_kind(std::string_view text);

/// Edge subset E* of the input together with its budget and certificate.
struct SpanningSolution {
  PreserveKind kind = PreserveKind::saps;
  EdgeList edges;
  std::size_t edge_count = 0;
  // Analytic size bound for the construction; `strict_bound` means |E*| < bound.
  std::size_t budget_bound = 0;
  bool strict_bound = false;
  // A tree pair needed repair edges beyond 2(n-1); budget_bound then uses the
  // achieved pair sizes.
  bool pair_over_budget = false;
  bool feasible = false;
};

struct FeasibilityReport {
  bool edges_subset = false;
  bool strongly_connected = false;
  bool structure_preserved = false;
  bool within_bound = false;
  std::size_t edge_count = 0;
  std::size_t input_edge_count = 0;
  std::size_t budget_bound = 0;

  bool ok() const { return edges_subset && strongly_connected && structure_preserved; }
};

/// SCSS subroutine slot: any routine returning a strongly connected spanning
/// edge subset of a strongly connected graph with at most 2(n-1) edges.
using ScssRoutine = std::function<EdgeList(const DiGraph&)>;

struct MscssOptions {
  ScssRoutine scss;  // empty: branching union rooted at vertex 0
  // Skip SCCs of G \ {v} holding no vertex of any 2-strong block.
  bool skip_blockless_components = false;
};

/// Out-branching plus in-branching at root; at most 2(n-1) edges.
EdgeList scss_branching(const DiGraph& g, Vertex root);

SpanningSolution twovcss_georgiadis(const DiGraph& g, const MscssOptions& opts = {});
SpanningSolution mscss_same_saps(const DiGraph& g, const MscssOptions& opts = {});
SpanningSolution mscss_same_2s(const DiGraph& g, const MscssOptions& opts = {});
SpanningSolution mscss_same_2e(const DiGraph& g, const MscssOptions& opts = {});
SpanningSolution mscss_same_2d(const DiGraph& g, const MscssOptions& opts = {});
SpanningSolution mscss(const DiGraph& g, PreserveKind kind, const MscssOptions& opts = {});

/// Recomputes the preserved structure on (V, s.edges) and compares with g.
FeasibilityReport verify_solution(const DiGraph& g, const SpanningSolution& s);

}  // namespace twoblocks
