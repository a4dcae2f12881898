#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "sgs/canonical.hpp"
#include "sgs/constructions.hpp"
#include "sgs/search.hpp"
#include "sgs/spectral.hpp"

namespace sgs {
namespace {

SignedGraph by_name(std::string_view name, std::vector<std::string> params) { return named(name, params); }

TEST(Named, Builders) {
  const auto k4 = by_name("complete", {"4", "-"});
  EXPECT_EQ(k4.size(), 6);
  for (const Edge& e : k4.edges()) EXPECT_EQ(e.sign, -1);
  EXPECT_EQ(by_name("cycle", {"4", "-"}), cycle(4, -1));
  EXPECT_EQ(by_name("unbalanced_c4", {}), unbalanced_c4());
  EXPECT_FALSE(is_balanced(unbalanced_c4()));
  const auto q3 = by_name("hypercube", {"3"});
  EXPECT_EQ(q3.order(), 8);
  EXPECT_EQ(q3.size(), 12);
  EXPECT_TRUE(is_regular(q3));
  EXPECT_TRUE(is_balanced(q3));
  EXPECT_EQ(by_name("path", {"4"}).size(), 3);
  EXPECT_EQ(by_name("star", {"5"}).order(), 5);
  EXPECT_EQ(by_name("bouquet", {"2", "3", "shared"}).order(), 5);
  EXPECT_EQ(by_name("huang", {"3"}), huang_signing(3));
}

TEST(Named, Errors) {
  auto code = [](std::string_view name, std::vector<std::string> params) {
    try {
      named(name, params);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::NotFound;
  };
  EXPECT_EQ(code("wheel", {"5"}), Errc::UnknownName);
  EXPECT_EQ(code("complete", {}), Errc::BadParams);
  EXPECT_EQ(code("complete", {"x"}), Errc::BadParams);
  EXPECT_EQ(code("cycle", {"4", "?"}), Errc::BadParams);
}

TEST(Cycle, ExactlyOneNegativeEdge) {
  for (int n = 3; n <= 9; ++n) {
    const auto c = cycle(n, -1);
    int negatives = 0;
    for (const Edge& e : c.edges()) negatives += e.sign < 0;
    EXPECT_EQ(negatives, 1);
    EXPECT_EQ(c.sign(0, n - 1), -1);
  }
}

TEST(Huang, SquaresToDI) {
  for (int d = 1; d <= 6; ++d) {
    const auto h = huang_signing(d);
    EXPECT_EQ(h.order(), 1 << d);
    EXPECT_EQ(underlying(h), hypercube(d));
    EXPECT_TRUE(oracle::squares_to(h, d)) << d;
    EXPECT_EQ(weighing_weight(h), d);
  }
  EXPECT_THROW(huang_signing(7), Error);
}

TEST(Huang, Spectra) {
  const auto s2 = spectrum(huang_signing(2));
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(std::abs(s2.values(i)), std::sqrt(2.0), 1e-9);
  const auto s4 = spectrum(huang_signing(4));
  for (int i = 0; i < 8; ++i) EXPECT_NEAR(s4.values(i), 2, 1e-8);
  for (int i = 8; i < 16; ++i) EXPECT_NEAR(s4.values(i), -2, 1e-8);
}

TEST(DoubleSigning, FromC4Minus) {
  const auto b = double_signing(cycle(4, -1));
  EXPECT_EQ(b.order(), 8);
  EXPECT_TRUE(is_regular(b));
  EXPECT_EQ(b.degree(0), 3);
  EXPECT_TRUE(oracle::squares_to(b, 3));
  EXPECT_TRUE(oracle::switching_isomorphic(double_signing(huang_signing(2)), huang_signing(3)));
  EXPECT_TRUE(are_switching_isomorphic(double_signing(huang_signing(2)), huang_signing(3)));
}

TEST(DoubleSigning, ChainsRegularEqualityCases) {
  SignedGraph g = cycle(4, -1);
  for (int k = 2; k <= 4; ++k) {
    ASSERT_TRUE(gregory_check(g).equality);
    const SignedGraph next = double_signing(g);
    EXPECT_TRUE(is_regular(next));
    EXPECT_EQ(next.degree(0), k + 1);
    EXPECT_TRUE(oracle::squares_to(next, k + 1));
    g = next;
  }
  try {
    double_signing(path(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::PreconditionFailed);
  }
}

TEST(Seidel, Examples) {
  EXPECT_EQ(seidel(SignedGraph::build(5, {})), complete(5));
  EXPECT_EQ(seidel(complete(5)), complete(5, -1));
  const auto s = spectrum(seidel(complete(6)));
  for (int i = 0; i < 5; ++i) EXPECT_NEAR(s.values(i), 1, 1e-9);
  EXPECT_NEAR(s.values(5), -5, 1e-9);
  const auto c5 = seidel(cycle(5));
  EXPECT_NEAR(oracle::det(oracle::to_dense(c5)).convert_to<double>(), 0.0, 0.0);
  EXPECT_EQ(rational_rank(adjacency<std::int64_t>(c5)), 4);
  EXPECT_THROW(seidel(SignedGraph::build(1, {})), Error);
}

// Switching the Seidel signing across U is the Seidel signing of g with its
// adjacency complemented across the cut.
TEST(Seidel, SwitchingMatchesCutComplement) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 7));
    const int n = g.order();
    const std::uint64_t mask = rng() & ((std::uint64_t{1} << n) - 1);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        const bool cut = ((mask >> u) & 1U) != ((mask >> v) & 1U);
        if (g.adjacent(u, v) != cut) edges.push_back({u, v, 1});
      }
    }
    EXPECT_EQ(switching(seidel(g), VertexSet::from_mask(n, mask)), seidel(SignedGraph::build(n, edges)));
  }
}

TEST(FromAdjacency, RoundTrip) {
  const auto g = huang_signing(3);
  EXPECT_EQ(from_adjacency(adjacency<std::int64_t>(g)), g);
}

}  // namespace
}  // namespace sgs
