#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "sgs/canonical.hpp"
#include "sgs/catalog.hpp"
#include "sgs/constructions.hpp"

namespace sgs {
namespace {

SignedGraph k3_one_negative() { return SignedGraph::build(3, {{0, 1, -1}, {1, 2, 1}, {0, 2, 1}}); }

TEST(Cert, RelabelingInvariance) {
  const auto g = k3_one_negative();
  const std::vector<Vertex> perm{2, 0, 1};
  EXPECT_EQ(canonical_cert(g), canonical_cert(relabeled(g, perm)));
}

TEST(Cert, TriangleSignSeparates) {
  EXPECT_NE(canonical_cert(complete(3)), canonical_cert(k3_one_negative()));
  EXPECT_EQ(cycle_sign(complete(3), std::vector<Vertex>{0, 1, 2}), 1);
  EXPECT_EQ(cycle_sign(k3_one_negative(), std::vector<Vertex>{0, 1, 2}), -1);
}

TEST(Cert, SwitchingInvariance) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = oracle::random_graph(rng, 7);
    EXPECT_EQ(canonical_cert(g), canonical_cert(oracle::switched(g, rng() & 127U)));
  }
}

TEST(Cert, TooLarge) {
  EXPECT_THROW(canonical_cert(complete(11)), Error);
  EXPECT_NO_THROW(canonical_cert(complete(11), 11));
}

TEST(SwitchingIsomorphism, Examples) {
  const auto c4 = cycle(4);
  const auto c4_two = SignedGraph::build(4, {{0, 1, -1}, {1, 2, -1}, {2, 3, 1}, {0, 3, 1}});
  EXPECT_TRUE(are_switching_isomorphic(c4, c4_two));
  EXPECT_FALSE(are_switching_isomorphic(complete(3), complete(3, -1)));
  EXPECT_TRUE(are_switching_isomorphic(c4_two, c4_two));
}

// Certificates must agree with a permutation-times-switching brute force.
TEST(SwitchingIsomorphism, AgreesWithBruteForce) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const auto a = oracle::random_graph(rng, n, 0.6);
    SignedGraph b;
    if (trial % 2 == 0) {
      std::vector<Vertex> perm(static_cast<std::size_t>(n));
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      b = relabeled(oracle::switched(a, rng()), perm);
      if (trial % 4 == 0 && b.size() > 0) {
        std::vector<Edge> edges(b.edges().begin(), b.edges().end());
        edges[rng() % edges.size()].sign *= -1;
        b = SignedGraph::build(n, edges);
      }
    } else {
      b = oracle::random_graph(rng, n, 0.6);
    }
    EXPECT_EQ(are_switching_isomorphic(a, b), oracle::switching_isomorphic(a, b)) << trial;
  }
}

TEST(SignSymmetric, Examples) {
  EXPECT_FALSE(is_sign_symmetric(k3_one_negative()));
  EXPECT_TRUE(is_balanced(k3_one_negative()) == false && is_balanced(negate(k3_one_negative())));
  const auto a1 = catalog_find(bundled_catalog(), "A1").graph;
  EXPECT_FALSE(is_sign_symmetric(a1));
  const auto p = oracle::char_poly(a1);
  for (int i = 1 - (a1.order() % 2); i <= p.degree(); i += 2) EXPECT_EQ(p.coeff(i), 0) << i;
}

TEST(SignSymmetric, BipartiteAlwaysSymmetric) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Edge> edges;
    for (int u = 0; u < 3; ++u) {
      for (int v = 3; v < 7; ++v) {
        if (rng() & 1U) edges.push_back({u, v, (rng() & 1U) ? 1 : -1});
      }
    }
    EXPECT_TRUE(is_sign_symmetric(SignedGraph::build(7, edges)));
  }
}

TEST(SignSymmetric, AgreesWithBruteForce) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 5), 0.6);
    EXPECT_EQ(is_sign_symmetric(g), oracle::switching_isomorphic(g, negate(g)));
  }
}

}  // namespace
}  // namespace sgs
