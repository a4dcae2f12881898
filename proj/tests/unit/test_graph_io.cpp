#include <gtest/gtest.h>

#include <filesystem>
#include <functional>
#include <fstream>
#include <random>

#include "oracles.hpp"
#include "sgs/constructions.hpp"
#include "sgs/graph_io.hpp"

namespace sgs {
namespace {

int line_of(const std::function<void()>& fn, Errc expected = Errc::ParseError) {
  try {
    fn();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), expected) << e.what();
    const std::string msg = e.what();
    const auto at = msg.find("line ");
    return at == std::string::npos ? -1 : std::stoi(msg.substr(at + 5));
  }
  return 0;
}

TEST(EdgeList, ReadsSignsAndComments) {
  const auto g = read_edge_list("# K3 with one negative edge\n3 3\n0 1 -\n1 2 +1\n0 2 1  # trailing\n");
  EXPECT_EQ(g, SignedGraph::build(3, {{0, 1, -1}, {1, 2, 1}, {0, 2, 1}}));
}

TEST(EdgeList, RoundTrip) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 10));
    const std::string text = to_edge_list(g);
    EXPECT_EQ(read_edge_list(text), g);
    EXPECT_EQ(to_edge_list(read_edge_list(text)), text);
  }
}

TEST(EdgeList, Errors) {
  EXPECT_EQ(line_of([] { read_edge_list("3 2\n0 1 +\n1 x +\n"); }), 3);
  EXPECT_EQ(line_of([] { read_edge_list("3 2\n0 1 +\n"); }), 2);
  EXPECT_EQ(line_of([] { read_edge_list("3 1\n0 1 *\n"); }, Errc::BadSign), 2);
  EXPECT_EQ(line_of([] { read_edge_list("3 1\n0 5 +\n"); }, Errc::VertexOutOfRange), 2);
  EXPECT_EQ(line_of([] { read_edge_list(""); }), 1);
  EXPECT_THROW(read_edge_list("2 1\n0 0 +\n"), Error);
  EXPECT_THROW(read_edge_list_file("/nonexistent/graph.sg"), Error);
}

TEST(EdgeList, Files) {
  const auto path = std::filesystem::temp_directory_path() / "sgs_io_test.sg";
  {
    std::ofstream out(path);
    write_edge_list(out, huang_signing(3));
  }
  EXPECT_EQ(read_edge_list_file(path), huang_signing(3));
  std::filesystem::remove(path);
}

TEST(Graph6, KnownEncodings) {
  const auto k4 = decode_graph6("C~");
  EXPECT_EQ(k4.order(), 4);
  EXPECT_EQ(k4.size(), 6);
  EXPECT_EQ(encode_graph6(complete(4)), "C~");
  EXPECT_EQ(decode_graph6("@"), SignedGraph::build(1, {}));
  EXPECT_EQ(decode_graph6("A_"), SignedGraph::build(2, {{0, 1, 1}}));
  const auto petersen = decode_graph6("IheA@GUAo");
  EXPECT_EQ(petersen.order(), 10);
  EXPECT_EQ(petersen.size(), 15);
  EXPECT_TRUE(is_regular(petersen));
}

TEST(Graph6, RoundTripIncludingLongForm) {
  std::mt19937_64 rng(2);
  for (int n : {0, 1, 5, 13, 62, 63, 64}) {
    const auto g = underlying(oracle::random_graph(rng, n, 0.3));
    EXPECT_EQ(decode_graph6(encode_graph6(g)), g) << n;
  }
  EXPECT_EQ(encode_graph6(SignedGraph::build(63, {})).substr(0, 4), "~??~");
}

TEST(Graph6, BundledCountsOfNonIsomorphicGraphs) {
  const std::vector<std::size_t> counts{1, 2, 4, 11, 34, 156, 1044};
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(oracle::graphs_of_order(n).size(), counts[static_cast<std::size_t>(n - 1)]);
  EXPECT_THROW(bundled_graph6(8), Error);
}

TEST(Graph6, BatchesAndErrors) {
  EXPECT_TRUE(read_graph6("").graphs.empty());
  EXPECT_EQ(read_graph6(">>graph6<<C~\nA_\n").graphs.size(), 2U);
  EXPECT_EQ(line_of([] { read_graph6("C~\nA_\nC\x01\n"); }), 3);
  const auto lenient = read_graph6("C~\nA_\nC\x01\nA_\n", true);
  EXPECT_EQ(lenient.graphs.size(), 2U);
  ASSERT_TRUE(lenient.error.has_value());
  EXPECT_EQ(lenient.error_line, 3);
  EXPECT_EQ(line_of([] { read_graph6("C~~~\n"); }), 1);
}

}  // namespace
}  // namespace sgs
