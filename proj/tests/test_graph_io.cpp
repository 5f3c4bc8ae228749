#include <gtest/gtest.h>

#include <sstream>

#include "trigsum/graph_io.hpp"

using namespace trigsum;

namespace {

UnitGraph parse(const std::string &text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

errc parse_error_code(const std::string &text) {
  try {
    parse(text);
  } catch (const error &e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return errc::argument_out_of_range;
}

} // namespace

TEST(GraphIo, ParsesCommentsAndBlankLines) {
  const UnitGraph g = parse("# ladder\n\nnodes 4   # four nodes\n0 1\n1 2 # middle\n\n2 3\n");
  EXPECT_EQ(g.node_count, 4);
  ASSERT_EQ(g.edges.size(), 3u);
  EXPECT_EQ(g.edges[1], std::make_pair(std::int64_t{1}, std::int64_t{2}));
  EXPECT_EQ(laplacian_resistance(g, 0, 3), 3);
}

TEST(GraphIo, RoundTrip) {
  const UnitGraph g = grid_graph(2, 3);
  const UnitGraph back = parse(format_edge_list(g));
  EXPECT_EQ(back.node_count, g.node_count);
  EXPECT_EQ(back.edges, g.edges);
}

TEST(GraphIo, ParallelEdgesAddConductance) {
  const UnitGraph g = parse("nodes 2\n0 1\n0 1\n");
  EXPECT_EQ(laplacian_resistance(g, 0, 1), make_rational(1, 2));
}

TEST(GraphIo, Errors) {
  EXPECT_EQ(parse_error_code(""), errc::parse_error);
  EXPECT_EQ(parse_error_code("0 1\n"), errc::parse_error);
  EXPECT_EQ(parse_error_code("nodes 0\n"), errc::parse_error);
  EXPECT_EQ(parse_error_code("nodes 3 4\n"), errc::parse_error);
  EXPECT_EQ(parse_error_code("nodes 3\n0 3\n"), errc::parse_error);
  EXPECT_EQ(parse_error_code("nodes 3\n1 1\n"), errc::parse_error);
  EXPECT_EQ(parse_error_code("nodes 3\n0 x\n"), errc::parse_error);
  EXPECT_EQ(parse_error_code("nodes 3\n0 1 2\n"), errc::parse_error);
  EXPECT_EQ(parse_error_code("nodes 3\n-1 2\n"), errc::parse_error);
}

TEST(GraphIo, ErrorNamesTheLine) {
  try {
    parse("nodes 3\n0 1\n\n2 7\n");
    FAIL();
  } catch (const error &e) {
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos) << e.what();
  }
}

TEST(GraphIo, MissingFile) { EXPECT_THROW(read_edge_list("/nonexistent/graph.edges"), error); }
