#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "twoblocks/graph.hpp"

namespace twoblocks::cli {

using Label = std::uint64_t;

/// A parsed graph file: dense ids plus the original label of each id.
struct LabeledGraph {
  DiGraph graph;
  std::vector<Label> labels;  // id -> label
};

/// Header "n m", then exactly m lines "u v"; '#' lines and blank lines are
/// skipped. Labels get ids in first-appearance order; ids left over when
/// fewer than n labels occur take the smallest unused labels.
/// Throws InputError with the offending line.
LabeledGraph parse_graph(std::istream& in, const std::string& source);
LabeledGraph read_graph_file(const std::string& path);

/// Writes the graph file format, one edge per line in canonical id order.
void write_graph(std::ostream& out, const DiGraph& g, const std::vector<Label>& labels);

/// Full command line (argv[0] included). Exit codes: 0 success, 1 oracle
/// mismatch, 2 bad input or usage, 3 precondition violation, 4 size guard.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace twoblocks::cli
