#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace lpa;

namespace {

ParseError parse_error_of(const std::string& text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no parse error for:\n" << text;
  return ParseError(0, 0, "");
}

}  // namespace

TEST(GraphIo, ParsesAllDeclarationForms) {
  Graph g = parse_graph(
      "# comment\n"
      "\n"
      "vertex v   # trailing comment\n"
      "vertex w\n"
      "edge e: v -> w\n"
      "bundle b: v -> w * inf\n"
      "bundle m:w->v*3\n");
  EXPECT_EQ(g.vertex_count(), 2u);
  EXPECT_EQ(g.bundle_count(), 3u);
  EXPECT_TRUE(g.bundle(g.bundle_id("b")).multiplicity.is_omega());
  EXPECT_EQ(g.bundle(g.bundle_id("m")).multiplicity.value(), 3u);
  EXPECT_EQ(g.source({g.bundle_id("m"), 2}), g.vertex("w"));
}

TEST(GraphIo, VerticesMayFollowTheirEdges) {
  Graph g = parse_graph("edge e: a -> b\nvertex a\nvertex b\n");
  EXPECT_EQ(g.range({g.bundle_id("e"), 0}), g.vertex("b"));
}

TEST(GraphIo, EmptyFileIsTheEmptyGraph) {
  Graph g = parse_graph("");
  EXPECT_EQ(g.vertex_count(), 0u);
  EXPECT_EQ(parse_graph("# nothing\n\n").vertex_count(), 0u);
}

TEST(GraphIo, DuplicateNamesReportBothLines) {
  ParseError e = parse_error_of("vertex v\nvertex w\nvertex v\n");
  EXPECT_EQ(e.line(), 3u);
  EXPECT_EQ(e.column(), 8u);
  EXPECT_NE(std::string(e.what()).find("line 1"), std::string::npos);

  ParseError f = parse_error_of("vertex v\nedge v: v -> v\n");
  EXPECT_EQ(f.line(), 2u);
}

TEST(GraphIo, ErrorPositions) {
  ParseError a = parse_error_of("vertex v\nedge e: v -> x\n");
  EXPECT_EQ(a.line(), 2u);
  EXPECT_EQ(a.column(), 14u);

  ParseError b = parse_error_of("vertex v\nedge e v -> v\n");
  EXPECT_EQ(b.line(), 2u);
  EXPECT_EQ(b.column(), 8u);

  ParseError c = parse_error_of("vertex v\nbundle b: v -> v * 0\n");
  EXPECT_EQ(c.column(), 20u);

  ParseError d = parse_error_of("vertex v\nbundle b: v -> v\n");
  EXPECT_EQ(d.line(), 2u);

  ParseError e = parse_error_of("vertx v\n");
  EXPECT_EQ(e.column(), 1u);

  ParseError f = parse_error_of("vertex v w\n");
  EXPECT_EQ(f.column(), 10u);

  ParseError g = parse_error_of("vertex v$\n");
  EXPECT_EQ(g.column(), 9u);
}

TEST(GraphIo, MissingFileIsAnInputError) {
  EXPECT_THROW(load_graph_file("/nonexistent/graph.file"), InputError);
}

TEST(GraphIo, RoundTripOnCorpus) {
  for (const auto& name : lpa::testing::corpus_names()) {
    Graph g = lpa::testing::corpus(name);
    std::string text = serialize_graph(g);
    Graph h = parse_graph(text);
    EXPECT_EQ(g, h) << name;
    EXPECT_EQ(serialize_graph(h), text) << name;
  }
}

TEST(GraphIo, RoundTripOnRandomGraphs) {
  std::mt19937 rng(21);
  for (int i = 0; i < 200; ++i) {
    Graph g = lpa::testing::random_graph(rng);
    EXPECT_EQ(parse_graph(serialize_graph(g)), g);
  }
}
