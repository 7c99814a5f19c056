#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include <CLI11.hpp>
#include <json.hpp>

#include "twoblocks/blocks.hpp"
#include "twoblocks/connectivity.hpp"
#include "twoblocks/errors.hpp"
#include "twoblocks/generate.hpp"
#include "twoblocks/mscss.hpp"
#include "twoblocks/oracle.hpp"

namespace twoblocks::cli {

using Json = nlohmann::ordered_json;

// -- graph files --

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::uint64_t parse_number(std::string_view tok, const std::string& where) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw InputError(where + ": '" + std::string(tok) + "' is not a non-negative integer");
  }
  return value;
}

}  // namespace

LabeledGraph parse_graph(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> header;
  std::vector<std::pair<Label, Label>> raw;
  while (std::getline(in, line)) {
    ++line_no;
    const auto toks = tokens(line);
    if (toks.empty() || toks.front().front() == '#') continue;
    const std::string where = source + ":" + std::to_string(line_no);
    if (toks.size() != 2) {
      throw InputError(where + ": expected two integers, got '" + line + "'");
    }
    const std::uint64_t a = parse_number(toks[0], where);
    const std::uint64_t b = parse_number(toks[1], where);
    if (!header) {
      header = {a, b};
      continue;
    }
    if (a == b) throw InputError(where + ": self-loop (" + std::to_string(a) + "," + std::to_string(b) + ")");
    raw.emplace_back(a, b);
  }
  if (!header) throw InputError(source + ": missing 'n m' header");
  const auto [n, m] = *header;
  if (raw.size() != m) {
    throw InputError(source + ": header announces " + std::to_string(m) + " edges, found " +
                     std::to_string(raw.size()));
  }

  LabeledGraph out;
  std::unordered_map<Label, Vertex> id_of;
  auto intern = [&](Label l) {
    auto [it, fresh] = id_of.try_emplace(l, static_cast<Vertex>(out.labels.size()));
    if (fresh) {
      if (out.labels.size() == n) {
        throw InputError(source + ": more than n=" + std::to_string(n) + " distinct labels (label " +
                         std::to_string(l) + ")");
      }
      out.labels.push_back(l);
    }
    return it->second;
  };
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (auto [a, b] : raw) edges.push_back({intern(a), intern(b)});
  // isolated vertices: smallest labels not used by any edge
  for (Label l = 0; out.labels.size() < n; ++l) {
    if (!id_of.contains(l)) intern(l);
  }
  out.graph = DiGraph::from_edge_list(n, edges);
  return out;
}

LabeledGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return parse_graph(in, path);
}

void write_graph(std::ostream& out, const DiGraph& g, const std::vector<Label>& labels) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (Edge e : g.edges()) out << labels[e.from] << ' ' << labels[e.to] << '\n';
}

// -- reports --

namespace {

std::vector<Label> labeled(const LabeledGraph& lg, const VertexSet& set) {
  std::vector<Label> out;
  out.reserve(set.size());
  for (Vertex v : set) out.push_back(lg.labels[v]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Label>> labeled(const LabeledGraph& lg, const std::vector<VertexSet>& family) {
  std::vector<std::vector<Label>> out;
  for (const VertexSet& b : family) out.push_back(labeled(lg, b));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::array<Label, 2>> labeled(const LabeledGraph& lg, const EdgeList& edges) {
  std::vector<std::array<Label, 2>> out;
  for (Edge e : edges) out.push_back({lg.labels[e.from], lg.labels[e.to]});
  std::sort(out.begin(), out.end());
  return out;
}

Vertex vertex_of(const LabeledGraph& lg, Label label) {
  const auto it = std::find(lg.labels.begin(), lg.labels.end(), label);
  if (it == lg.labels.end()) throw InputError("vertex label " + std::to_string(label) + " not in graph");
  return static_cast<Vertex>(it - lg.labels.begin());
}

struct Common {
  std::string format = "json";
  bool timing = true;
};

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Json envelope(std::string_view command, const LabeledGraph& lg) {
  Json j;
  j["command"] = command;
  j["input"] = {{"n", lg.graph.vertex_count()}, {"m", lg.graph.edge_count()}};
  j["labels"] = lg.labels;
  return j;
}

bool is_edge_key(std::string_view key) { return key == "edges" || key == "strong_bridges"; }

void render_value(std::ostream& out, const Json& v, bool edges = false) {
  if (!v.is_array()) {
    out << (v.is_string() ? v.get<std::string>() : v.dump());
    return;
  }
  if (edges) {
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i][0].dump() << "->" << v[i][1].dump();
    return;
  }
  out << '{';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ' ';
    render_value(out, v[i]);
  }
  out << '}';
}

void render_text(std::ostream& out, const Json& report) {
  out << report["command"].get<std::string>() << "  n=" << report["input"]["n"].dump()
      << " m=" << report["input"]["m"].dump() << '\n';
  for (const auto& [key, value] : report["results"].items()) {
    out << "  " << key << ':';
    if (value.is_object()) {
      for (const auto& [k2, v2] : value.items()) out << "\n    " << k2 << ": " << v2.dump();
    } else if (value.is_array() && !is_edge_key(key) && !value.empty() && value[0].is_array()) {
      for (const Json& row : value) {
        out << "\n    ";
        render_value(out, row);
      }
    } else {
      out << ' ';
      render_value(out, value, is_edge_key(key));
    }
    out << '\n';
  }
  if (report.contains("timing")) {
    out << "  timing:";
    for (const auto& [k, v] : report["timing"].items()) {
      out << ' ' << k << '=';
      render_value(out, v);
    }
    out << '\n';
  }
}

void emit(std::ostream& out, const Common& c, Json report, const Stopwatch& watch, Json timing = Json::object()) {
  if (c.timing) {
    timing["ms"] = watch.elapsed_ms();
    report["timing"] = std::move(timing);
  }
  if (c.format == "text") {
    render_text(out, report);
  } else {
    out << report.dump(2) << '\n';
  }
}

// -- commands --

int cmd_analyze(const std::string& path, const Common& c, std::ostream& out) {
  const LabeledGraph lg = read_graph_file(path);
  const Stopwatch watch;
  const ConnectivityReport r = report(lg.graph);
  Json j = envelope("analyze", lg);
  j["results"] = {{"saps", labeled(lg, r.saps)},
                  {"strong_bridges", labeled(lg, r.bridges)},
                  {"t_sap", r.t_sap},
                  {"t_sb", r.t_sb},
                  {"two_vertex_connected", r.is2v},
                  {"two_edge_connected", r.is2e}};
  emit(out, c, std::move(j), watch);
  return 0;
}

int cmd_blocks(const std::string& path, const std::string& kind_text, const std::string& algo_text,
               const Common& c, std::ostream& out) {
  const auto kind = parse_block_kind(kind_text);
  const auto algo = parse_algorithm(algo_text);
  const LabeledGraph lg = read_graph_file(path);
  const Stopwatch watch;
  const BlockFamily family = compute_blocks(lg.graph, *kind, *algo);
  Json j = envelope("blocks", lg);
  j["results"] = {{"kind", to_string(*kind)}, {"blocks", labeled(lg, family.blocks)}};
  emit(out, c, std::move(j), watch, Json{{"algorithm", to_string(*algo)}});
  return 0;
}

int cmd_blocks_at(const std::string& path, Label label, const std::string& kind_text, const Common& c,
                  std::ostream& out) {
  const auto kind = parse_block_kind(kind_text);
  if (kind == BlockKind::two_strong) throw InputError("blocks-at supports --kind 2d or 2e");
  const LabeledGraph lg = read_graph_file(path);
  const Vertex v = vertex_of(lg, label);
  const Stopwatch watch;

  // only the SCC of v matters
  const Partition comps = scc(lg.graph);
  const InducedSubgraph sub = induced_subgraph(lg.graph, comps.cell(comps.cell_of(v)));
  std::vector<VertexSet> found;
  if (sub.graph.vertex_count() >= 2) {
    const Vertex local = sub.to_local[v];
    if (kind == BlockKind::two_directed) {
      found = blocks_2d_at_vertex(sub.graph, local);
    } else if (VertexSet b = block_2e_at_vertex(sub.graph, local); !b.empty()) {
      found.push_back(std::move(b));
    }
    for (VertexSet& b : found) {
      for (Vertex& w : b) w = sub.to_parent[w];
    }
  }
  Json j = envelope("blocks-at", lg);
  j["results"] = {{"kind", to_string(*kind)}, {"vertex", label}, {"blocks", labeled(lg, found)}};
  emit(out, c, std::move(j), watch);
  return 0;
}

int cmd_mscss(const std::string& path, const std::string& preserve_text, bool skip_blockless,
              const Common& c, std::ostream& out) {
  const auto kind = parse_preserve_kind(preserve_text);
  const LabeledGraph lg = read_graph_file(path);
  const Stopwatch watch;
  MscssOptions opts;
  opts.skip_blockless_components = skip_blockless;
  const SpanningSolution s = mscss(lg.graph, *kind, opts);
  const FeasibilityReport f = verify_solution(lg.graph, s);
  Json j = envelope("mscss", lg);
  j["results"] = {{"preserve", to_string(*kind)},
                  {"edge_count", s.edge_count},
                  {"budget_bound", s.budget_bound},
                  {"bound_is_strict", s.strict_bound},
                  {"pair_over_budget", s.pair_over_budget},
                  {"verification",
                   {{"edges_subset", f.edges_subset},
                    {"strongly_connected", f.strongly_connected},
                    {"structure_preserved", f.structure_preserved},
                    {"within_bound", f.within_bound}}},
                  {"edges", labeled(lg, s.edges)}};
  emit(out, c, std::move(j), watch);
  return 0;
}

int cmd_oracle_check(const std::string& path, const Common& c, std::ostream& out) {
  const LabeledGraph lg = read_graph_file(path);
  const DiGraph& g = lg.graph;
  if (g.vertex_count() > oracle::kMaxCliqueVertices) {
    throw SizeGuardError("oracle-check is limited to n <= " + std::to_string(oracle::kMaxCliqueVertices) +
                         ", got n=" + std::to_string(g.vertex_count()));
  }
  const Stopwatch watch;
  Json checks = Json::object();
  bool all = true;
  auto record = [&](const std::string& name, bool equal) {
    checks[name] = equal;
    all = all && equal;
  };
  for (BlockKind kind : {BlockKind::two_directed, BlockKind::two_strong, BlockKind::two_edge}) {
    const BlockFamily expected = oracle::blocks(g, kind);
    for (Algorithm algo : {Algorithm::dom, Algorithm::enumeration}) {
      record(std::string(to_string(kind)) + "_" + std::string(to_string(algo)),
             compute_blocks(g, kind, algo) == expected);
    }
  }
  if (is_strongly_connected(g)) {
    record("saps", strong_articulation_points(g) == oracle::saps(g));
    record("strong_bridges", strong_bridges(g) == oracle::bridges(g));
  }
  Json j = envelope("oracle-check", lg);
  j["results"] = {{"checks", checks}, {"all_equal", all}};
  emit(out, c, std::move(j), watch);
  return all ? 0 : 1;
}

int cmd_gen(std::size_t n, std::size_t m, std::uint64_t seed, const std::string& out_path,
            std::ostream& out) {
  const DiGraph g = random_strong_graph(n, m, seed);
  std::vector<Label> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = i;
  if (out_path.empty()) {
    write_graph(out, g, labels);
    return 0;
  }
  std::ofstream file(out_path);
  if (!file) throw InputError("cannot write '" + out_path + "'");
  write_graph(file, g, labels);
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Strong articulation points, 2-blocks and sparse spanning subgraphs of digraphs"};
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  bool no_timing = false;
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_flag("--no-timing", no_timing, "Omit the timing field (byte-stable output)");

  std::string path;
  std::string kind = "2d";
  std::string algo = "auto";
  std::string preserve = "saps";
  bool skip_blockless = false;
  Label vertex = 0;
  std::size_t gen_n = 0;
  std::size_t gen_m = 0;
  std::uint64_t seed = 1;
  std::string out_path;

  auto* analyze = app.add_subcommand("analyze", "SAPs, strong bridges, 2-vertex / 2-edge tests");
  analyze->add_option("graph", path, "Graph file")->required();

  auto* blocks = app.add_subcommand("blocks", "2-directed, 2-strong or 2-edge blocks");
  blocks->add_option("graph", path, "Graph file")->required();
  blocks->add_option("--kind", kind)->check(CLI::IsMember({"2d", "2s", "2e"}))->capture_default_str();
  blocks->add_option("--algo", algo)->check(CLI::IsMember({"dom", "enum", "auto"}))->capture_default_str();

  auto* blocks_at = app.add_subcommand("blocks-at", "Blocks containing one vertex");
  blocks_at->add_option("graph", path, "Graph file")->required();
  blocks_at->add_option("vertex", vertex, "Vertex label")->required();
  blocks_at->add_option("--kind", kind)->check(CLI::IsMember({"2d", "2e"}))->capture_default_str();

  auto* span = app.add_subcommand("mscss", "Sparse strongly connected spanning subgraph");
  span->add_option("graph", path, "Graph file")->required();
  span->add_option("--preserve", preserve)
      ->check(CLI::IsMember({"saps", "2s", "2e", "2d", "2vcss"}))
      ->capture_default_str();
  span->add_flag("--skip-blockless", skip_blockless, "2s: skip components without 2-strong block vertices");

  auto* check = app.add_subcommand("oracle-check", "Compare fast results with brute force (n <= 12)");
  check->add_option("graph", path, "Graph file")->required();

  auto* gen = app.add_subcommand("gen", "Random strongly connected graph file");
  gen->add_option("n", gen_n, "Vertices")->required();
  gen->add_option("m", gen_m, "Edges")->required();
  gen->add_option("--seed", seed)->capture_default_str();
  gen->add_option("--out", out_path, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  common.timing = !no_timing;

  try {
    if (*analyze) return cmd_analyze(path, common, out);
    if (*blocks) return cmd_blocks(path, kind, algo, common, out);
    if (*blocks_at) return cmd_blocks_at(path, vertex, kind, common, out);
    if (*span) return cmd_mscss(path, preserve, skip_blockless, common, out);
    if (*check) return cmd_oracle_check(path, common, out);
    if (*gen) return cmd_gen(gen_n, gen_m, seed, out_path, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const SizeGuardError& e) {
    err << "error: " << e.what() << '\n';
    return 4;
  }
  return 2;
}

}  // namespace twoblocks::cli
