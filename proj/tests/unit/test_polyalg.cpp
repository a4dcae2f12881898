#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "sgs/constructions.hpp"
#include "sgs/polyalg.hpp"
#include "sgs/roots.hpp"
#include "sgs/spectral.hpp"

namespace sgs {
namespace {

CharPolyInt ints(std::initializer_list<long> c) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return CharPolyInt(std::move(v));
}

SignedGraph k3_one_negative() { return SignedGraph::build(3, {{0, 1, -1}, {1, 2, 1}, {0, 2, 1}}); }

TEST(Sachs, Triangles) {
  EXPECT_EQ(sachs_char_poly(complete(3)), ints({-2, -3, 0, 1}));
  EXPECT_EQ(sachs_char_poly(k3_one_negative()), ints({2, -3, 0, 1}));
  EXPECT_EQ(oracle::char_poly(k3_one_negative()), ints({2, -3, 0, 1}));
}

TEST(Sachs, ForestsUseMatchingsOnly) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Edge> edges;
    for (int v = 1; v < 9; ++v) {
      if (rng() % 4) edges.push_back({static_cast<int>(rng() % v), v, (rng() & 1U) ? 1 : -1});
    }
    const auto g = SignedGraph::build(9, edges);
    const auto p = sachs_char_poly(g);
    const auto m = oracle::matching_counts(g);
    for (int i = 0; i <= 9; ++i) {
      const BigInt want = i % 2 ? BigInt(0) : BigInt((i / 2) % 2 ? -m[i / 2] : m[i / 2]);
      EXPECT_EQ(p.coeff(9 - i), want);
    }
  }
}

TEST(Sachs, AgreesWithCharPoly) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    const auto g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 9));
    EXPECT_EQ(sachs_char_poly(g), oracle::char_poly(g));
  }
  EXPECT_THROW(sachs_char_poly(complete(13)), Error);
}

TEST(CycleWeights, Triangle) {
  const auto w = cycle_weights(k3_one_negative());
  EXPECT_EQ(w.at(7), -1);
  EXPECT_EQ(cycle_weights(complete(4)).at(15), 3);  // three Hamiltonian 4-cycles
}

TEST(Schwenk, Examples) {
  EXPECT_TRUE(schwenk_residual(path(5), VertexPivot{2}).is_zero());
  EXPECT_TRUE(schwenk_residual(k3_one_negative(), VertexPivot{0}).is_zero());
  const auto c4 = cycle(4, -1);
  EXPECT_TRUE(schwenk_residual(c4, EdgePivot{c4.edge_id(0, 3)}).is_zero());
  EXPECT_THROW(schwenk_residual(c4, VertexPivot{4}), Error);
  EXPECT_THROW(schwenk_residual(c4, EdgePivot{9}), Error);
}

// Vertex form rebuilt with the determinant oracle: phi(G) = x phi(G-v)
// - sum_u phi(G-u-v) - 2 sum_C sigma(C) phi(G-C).
TEST(Schwenk, VertexFormByOracle) {
  const auto g = k3_one_negative();
  const auto x = ints({0, 1});
  CharPolyInt rhs = x * oracle::char_poly(delete_vertex(g, 0));
  for (Vertex u : {1, 2}) rhs = rhs - oracle::char_poly(delete_vertices(g, VertexSet(3, {0, u})));
  rhs = rhs - ints({2}) * ints({-1});  // the only cycle is the whole negative triangle
  EXPECT_EQ(oracle::char_poly(g), rhs);
}

TEST(Schwenk, RandomGraphsAllPivots) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 8));
    for (Vertex v = 0; v < g.order(); ++v) EXPECT_TRUE(schwenk_residual(g, VertexPivot{v}).is_zero());
    for (int e = 0; e < g.size(); ++e) EXPECT_TRUE(schwenk_residual(g, EdgePivot{e}).is_zero());
  }
}

TEST(Matching, Examples) {
  EXPECT_EQ(matching_polynomial(path(3)), ints({0, -2, 0, 1}));
  EXPECT_EQ(matching_polynomial(SignedGraph::build(2, {{0, 1, -1}})), ints({-1, 0, 1}));
  EXPECT_EQ(matching_polynomial(cycle(4)), ints({2, 0, -4, 0, 1}));
  EXPECT_EQ(oracle::matching_counts(cycle(4)), (std::vector<std::int64_t>{1, 4, 2}));
  EXPECT_EQ(oracle::matching_counts(path(3)), (std::vector<std::int64_t>{1, 2}));
}

TEST(Matching, CountsAgreeWithEnumeration) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 9));
    const auto counts = match_counts(g);
    const auto want = oracle::matching_counts(g);
    ASSERT_EQ(counts.m.size(), want.size());
    for (std::size_t k = 0; k < want.size(); ++k) EXPECT_EQ(counts.m[k], want[k]);
    EXPECT_EQ(matching_polynomial(counts, g.order()), matching_polynomial(g));
  }
}

TEST(Matching, HeilmannLiebForRegularGraphs) {
  for (int d = 2; d <= 3; ++d) {
    for (const auto& g : {hypercube(d), complete(d + 1), cycle(7)}) {
      if (!is_regular(g)) continue;
      const int deg = g.degree(0);
      const auto p = polynomial_cast<Rational>(matching_polynomial(g));
      const auto bound = RealAlgebraic::sqrt_of(Rational(4 * (deg - 1)));
      EXPECT_EQ(count_roots_beyond(p, bound), 0);
    }
  }
}

TEST(GodsilGutman, Examples) {
  const auto tree = path(5);
  EXPECT_EQ(godsil_gutman_average(tree), polynomial_cast<Rational>(char_poly(tree)));
  const auto c3 = godsil_gutman_average(cycle(3));
  const auto by_hand = polynomial_cast<Rational>(oracle::char_poly(complete(3)) + oracle::char_poly(k3_one_negative()));
  EXPECT_EQ(c3 * Rational(2), by_hand);
  EXPECT_EQ(c3, polynomial_cast<Rational>(ints({0, -3, 0, 1})));
  const auto c4 = godsil_gutman_average(cycle(4));
  EXPECT_EQ(c4 * Rational(2), polynomial_cast<Rational>(oracle::char_poly(cycle(4)) + oracle::char_poly(cycle(4, -1))));
  EXPECT_EQ(c4, polynomial_cast<Rational>(ints({2, 0, -4, 0, 1})));
}

TEST(GodsilGutman, EqualsMatchingPolynomial) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& g : oracle::graphs_of_order(n)) {
      EXPECT_EQ(godsil_gutman_average(g), polynomial_cast<Rational>(matching_polynomial(g)));
    }
  }
}

// Averaging over every one of the 2^m signings gives the same result.
TEST(GodsilGutman, AverageOverAllSignings) {
  const auto g = complete(4);
  RationalPoly sum;
  const auto all = oracle::all_signings(g);
  for (const auto& s : all) sum = sum + polynomial_cast<Rational>(oracle::char_poly(s));
  EXPECT_EQ(sum * Rational(1, static_cast<long>(all.size())), godsil_gutman_average(g));
}

TEST(Bouquet, Examples) {
  const auto a = odd_cycle_bouquet_check(1, 3);
  EXPECT_NEAR(a.rho, 2, 1e-9);
  EXPECT_NEAR(a.bound, 2 * std::sqrt(3.0), 1e-12);
  EXPECT_TRUE(a.holds);
  const auto b = odd_cycle_bouquet_check(1, 5);
  EXPECT_NEAR(b.rho, 2, 1e-9);
  EXPECT_TRUE(b.holds);
  const auto c = odd_cycle_bouquet_check(2, 3);
  EXPECT_NEAR(c.bound, 2 * std::sqrt(7.0), 1e-12);
  EXPECT_TRUE(c.holds);
  // the positive and negative triangles have rho 2 each
  EXPECT_NEAR(spectrum(complete(3)).rho(), 2, 1e-10);
  EXPECT_NEAR(spectrum(complete(3, -1)).rho(), 2, 1e-10);
  // with a shared vertex the bouquet is connected
  const auto shared = bouquet(4, 3, BouquetLayout::Shared);
  EXPECT_TRUE(is_connected(shared));
  EXPECT_EQ(shared.order(), 9);
  const auto s = odd_cycle_bouquet_check(2, 3, BouquetLayout::Shared);
  EXPECT_NEAR(s.rho, spectrum(shared).rho(), 1e-9);
}

TEST(Corollary, SymmetricSpectrumForcesBalancedTriangleCount) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 6));
    if (!char_poly(g).has_symmetric_roots()) continue;
    const auto t = triangle_sign_census(g);
    EXPECT_EQ(t.positive, t.negative);
  }
}

}  // namespace
}  // namespace sgs
