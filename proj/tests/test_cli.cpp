#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "twoblocks/errors.hpp"
#include "twoblocks/generate.hpp"
#include <json.hpp>

using twoblocks::InputError;
using twoblocks::cli::parse_graph;
using Json = nlohmann::ordered_json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "twoblocks");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = twoblocks::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("twoblocks_test_" + name);
  std::ofstream(path) << body;
  return path.string();
}

twoblocks::cli::LabeledGraph parse_text(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in, "<test>");
}

const std::string fig1_path = TWOBLOCKS_FIG1_PATH;

}  // namespace

TEST(ParseGraph, CommentsAndLabels) {
  const auto lg = parse_text("# tri\n3 3\n\n10 20\n20 30\n# mid\n30 10\n");
  EXPECT_EQ(lg.graph.vertex_count(), 3u);
  EXPECT_EQ(lg.graph.edge_count(), 3u);
  EXPECT_EQ(lg.labels, (std::vector<twoblocks::cli::Label>{10, 20, 30}));
}

TEST(ParseGraph, PadsMissingLabels) {
  const auto lg = parse_text("4 1\n1 2\n");
  EXPECT_EQ(lg.graph.vertex_count(), 4u);
  EXPECT_EQ(lg.labels, (std::vector<twoblocks::cli::Label>{1, 2, 0, 3}));
}

TEST(ParseGraph, Errors) {
  EXPECT_THROW(parse_text(""), InputError);
  EXPECT_THROW(parse_text("3 2\n1 2\n"), InputError);       // too few edges
  EXPECT_THROW(parse_text("3 1\n1 2\n2 3\n"), InputError);  // too many
  EXPECT_THROW(parse_text("3 1\n2 2\n"), InputError);       // self-loop
  EXPECT_THROW(parse_text("2 2\n1 2\n3 1\n"), InputError);  // more labels than n
  EXPECT_THROW(parse_text("3 1\n1 x\n"), InputError);
}

TEST(Cli, BadInputExitsTwo) {
  const std::string p = temp_file("bad.edges", "3 1\n1 1\n");
  const Outcome r = invoke({"analyze", p});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
  EXPECT_EQ(invoke({"blocks", p, "--kind", "3x"}).code, 2);
  EXPECT_EQ(invoke({"analyze", "/nonexistent/graph.edges"}).code, 2);
}

TEST(Cli, Fig1Blocks) {
  const Outcome r = invoke({"--no-timing", "blocks", fig1_path, "--kind", "2d"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["results"]["blocks"], Json::parse("[[1,2,3,6],[4,6,8,10]]"));
  EXPECT_EQ(j["input"]["n"], 12);
  EXPECT_EQ(j["input"]["m"], 26);
}

TEST(Cli, Fig1Analyze) {
  const Outcome r = invoke({"--no-timing", "analyze", fig1_path});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["results"]["saps"], Json::parse("[6,7,8]"));
  EXPECT_EQ(j["results"]["strong_bridges"].size(), 6u);
  EXPECT_FALSE(j.contains("timing"));
}

TEST(Cli, AlgorithmsGiveIdenticalOutput) {
  for (const char* kind : {"2d", "2s", "2e"}) {
    const Outcome a = invoke({"--no-timing", "blocks", fig1_path, "--kind", kind, "--algo", "dom"});
    const Outcome b = invoke({"--no-timing", "blocks", fig1_path, "--kind", kind, "--algo", "enum"});
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out) << kind;
  }
}

TEST(Cli, CycleHasNoStrongBlocks) {
  const std::string p = temp_file("c3.edges", "3 3\n1 2\n2 3\n3 1\n");
  const Outcome r = invoke({"--no-timing", "blocks", p, "--kind", "2s", "--algo", "enum"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["results"]["blocks"], Json::array());
}

TEST(Cli, BlocksAtVertex) {
  const Outcome r = invoke({"--no-timing", "blocks-at", fig1_path, "6"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["results"]["blocks"], Json::parse("[[1,2,3,6],[4,6,8,10]]"));
  EXPECT_EQ(invoke({"blocks-at", fig1_path, "99"}).code, 2);
}

TEST(Cli, GenRoundTripAndOracle) {
  const std::string p = (std::filesystem::temp_directory_path() / "twoblocks_test_gen.edges").string();
  ASSERT_EQ(invoke({"gen", "8", "20", "--seed", "7", "--out", p}).code, 0);
  const auto lg = twoblocks::cli::read_graph_file(p);
  const twoblocks::DiGraph g = twoblocks::random_strong_graph(8, 20, 7);
  std::vector<twoblocks::Edge> relabeled;
  for (twoblocks::Edge e : lg.graph.edges()) {
    relabeled.push_back({static_cast<twoblocks::Vertex>(lg.labels[e.from]),
                         static_cast<twoblocks::Vertex>(lg.labels[e.to])});
  }
  EXPECT_EQ(twoblocks::DiGraph::from_edge_list(8, relabeled), g);
  const Outcome r = invoke({"oracle-check", p});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(Json::parse(r.out)["results"]["all_equal"].get<bool>());

  std::ostringstream again;
  twoblocks::cli::write_graph(again, g, {0, 1, 2, 3, 4, 5, 6, 7});
  EXPECT_EQ(invoke({"gen", "8", "20", "--seed", "7"}).out, again.str());
}

TEST(Cli, PreconditionAndSizeGuard) {
  const std::string path = temp_file("path.edges", "3 2\n1 2\n2 3\n");
  EXPECT_EQ(invoke({"mscss", path}).code, 3);
  const std::string big = (std::filesystem::temp_directory_path() / "twoblocks_test_big.edges").string();
  ASSERT_EQ(invoke({"gen", "13", "30", "--out", big}).code, 0);
  EXPECT_EQ(invoke({"oracle-check", big}).code, 4);
}

TEST(Cli, MscssReportsVerification) {
  for (const char* p : {"saps", "2s", "2e", "2d"}) {
    const Outcome r = invoke({"--no-timing", "mscss", fig1_path, "--preserve", p});
    ASSERT_EQ(r.code, 0) << r.err;
    const Json v = Json::parse(r.out)["results"]["verification"];
    EXPECT_TRUE(v["strongly_connected"].get<bool>());
    EXPECT_TRUE(v["structure_preserved"].get<bool>());
  }
}

TEST(Cli, TextFormat) {
  const Outcome r = invoke({"--format", "text", "--no-timing", "analyze", fig1_path});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("->"), std::string::npos) << r.out;
}
