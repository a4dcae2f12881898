#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "oracles.hpp"
#include "sgs/canonical.hpp"
#include "sgs/constructions.hpp"
#include "sgs/search.hpp"

namespace sgs {
namespace {

CharPolyInt ints(std::initializer_list<long> c) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return CharPolyInt(std::move(v));
}

SignedGraph petersen() { return read_graph6(bundled_petersen_graph6()).graphs.at(0); }

TEST(Enumerate, Sizes) {
  EXPECT_EQ(enumerate_classes(path(6)).size(), 1U);
  const auto c5 = enumerate_classes(cycle(5));
  ASSERT_EQ(c5.size(), 2U);
  EXPECT_TRUE(is_balanced(c5[0]));
  EXPECT_FALSE(is_balanced(c5[1]));
  EXPECT_EQ(enumerate_classes(petersen()).size(), 64U);
  EXPECT_THROW(enumerate_classes(complete(8), 20), Error);
}

TEST(Enumerate, ForestEdgesPositive) {
  const auto space = enumerate_classes(complete(5));
  for (std::uint64_t w = 0; w < space.size(); ++w) {
    const auto g = space[w];
    for (int id : space.basis().forest_edges) EXPECT_EQ(g.edge(id).sign, 1);
    EXPECT_EQ(space.word_of(g), w);
  }
}

// Every signing of every graph on <= 5 vertices lands on exactly one
// representative, and distinct representatives are never switching equivalent.
TEST(Enumerate, CompleteAndIrredundant) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& g : oracle::graphs_of_order(n)) {
      const SignatureSpace space(g);
      std::set<std::uint64_t> hit;
      for (const auto& s : oracle::all_signings(g)) {
        const std::uint64_t w = space.word_of(s);
        ASSERT_LT(w, space.size());
        // s must be a switching of the representative
        bool reached = false;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n) && !reached; ++mask) {
          reached = oracle::switched(s, mask) == space[w];
        }
        EXPECT_TRUE(reached);
        hit.insert(w);
      }
      EXPECT_EQ(hit.size(), space.size());
    }
  }
}

TEST(Enumerate, CompleteOnSixVertices) {
  for (const auto& g : oracle::graphs_of_order(6)) {
    const SignatureSpace space(g);
    std::set<std::uint64_t> hit;
    for (const auto& s : oracle::all_signings(g)) hit.insert(space.word_of(s));
    EXPECT_EQ(hit.size(), space.size());
  }
}

TEST(Minimize, TreeAndC4) {
  const auto tree = minimize(star(5), Objective::Rho);
  EXPECT_EQ(tree.records.size(), 1U);
  EXPECT_NEAR(tree.min_value, 2, 1e-9);
  EXPECT_EQ(tree.min_value, tree.max_value);
  const auto c4 = minimize(cycle(4), Objective::Rho);
  EXPECT_NEAR(c4.min_value, std::sqrt(2.0), 1e-9);
  EXPECT_NEAR(c4.max_value, 2, 1e-9);
  EXPECT_EQ(c4.argmin_words, std::vector<std::uint64_t>{1});
  EXPECT_EQ(c4.argmax_words, std::vector<std::uint64_t>{0});
  ASSERT_EQ(c4.argmin_certs.size(), 1U);
  EXPECT_EQ(c4.argmin_certs[0], canonical_cert(cycle(4, -1)).hex());
}

TEST(Minimize, Petersen) {
  const auto r = minimize(petersen(), Objective::Rho);
  EXPECT_EQ(r.records.size(), 64U);
  EXPECT_TRUE(r.exhaustive);
  EXPECT_LT(r.min_value, 3);
  EXPECT_NEAR(r.max_value, 3, 1e-9);
  double lowest = 1e9;
  for (const auto& rec : r.records) lowest = std::min(lowest, rec.value);
  EXPECT_EQ(lowest, r.min_value);
  for (auto w : r.argmin_words) {
    EXPECT_NEAR(spectrum(SignatureSpace(petersen())[w]).rho(), r.min_value, 1e-9);
  }
}

TEST(Minimize, MaxIsAllPositiveAndGregoryFloor) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = underlying(oracle::random_graph(rng, 7));
    for (Objective obj : {Objective::Rho, Objective::Lambda1}) {
      const auto r = minimize(g, obj);
      EXPECT_NEAR(r.max_value, spectrum(g).lambda1(), 1e-8);
      if (obj != Objective::Rho) continue;
      const double floor = g.order() ? std::sqrt(2.0 * g.size() / g.order()) : 0;
      for (const auto& rec : r.records) EXPECT_GE(rec.value, floor - 1e-8);
    }
  }
}

TEST(Minimize, DeterministicAcrossThreadCounts) {
  SearchOptions one;
  SearchOptions many;
  many.jobs = 5;
  for (const auto& g : {petersen(), complete(6), hypercube(3)}) {
    const auto a = minimize(g, Objective::Rho, one);
    const auto b = minimize(g, Objective::Rho, many);
    ASSERT_EQ(a.records.size(), b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
      EXPECT_EQ(a.records[i].word, b.records[i].word);
      EXPECT_EQ(a.records[i].value, b.records[i].value);
    }
    EXPECT_EQ(a.argmin_words, b.argmin_words);
    EXPECT_EQ(a.argmin_certs, b.argmin_certs);
  }
}

TEST(Conjecture, Examples) {
  const auto k4 = conjecture_check(complete(4), Conjecture::MssLambda1);
  EXPECT_TRUE(k4.holds);
  EXPECT_EQ(k4.classes, 8U);
  ASSERT_TRUE(k4.witness.has_value());
  EXPECT_LE(spectrum(SignatureSpace(complete(4))[*k4.witness]).lambda1(), 2 * std::sqrt(2.0) + 1e-12);
  const auto c6 = conjecture_check(cycle(6), Conjecture::BiluLinial);
  EXPECT_TRUE(c6.holds);
  const auto p = conjecture_check(petersen(), Conjecture::BiluLinial);
  EXPECT_EQ(p.classes, 64U);
  const auto r = minimize(petersen(), Objective::Rho);
  EXPECT_EQ(p.holds, r.min_value <= 2 * std::sqrt(2.0));
  try {
    conjecture_check(path(4), Conjecture::BiluLinial);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotRegular);
  }
}

TEST(Conjecture, ExactAtTheBound) {
  // Signed C8 has rho 2 (balanced) or 2 cos(pi/8) (unbalanced).
  const auto c8 = conjecture_check(cycle(8), Conjecture::BiluLinial);
  EXPECT_TRUE(c8.holds);
  const auto strict = conjecture_check(cycle(8), Conjecture::GregoryDelta);
  EXPECT_TRUE(strict.strict);
  EXPECT_TRUE(strict.holds);
  const auto k3 = conjecture_check(complete(3), Conjecture::GregoryDelta);
  EXPECT_FALSE(k3.holds);  // both triangles have rho exactly 2
}

TEST(Census, CyclotomicSignedCycles) {
  std::vector<SignedGraph> stream;
  for (int n = 3; n <= 6; ++n) {
    for (const auto& g : oracle::graphs_of_order(n)) {
      if (is_connected(g)) stream.push_back(g);
    }
  }
  const auto reports = census(stream, CensusPredicate::Cyclotomic);
  ASSERT_EQ(reports.size(), stream.size());
  std::size_t cycles_seen = 0;
  for (const auto& r : reports) {
    const auto& g = stream[r.index];
    for (const auto& hit : r.hits) EXPECT_TRUE(is_cyclotomic(SignatureSpace(g)[hit.word]));
    if (g.size() == g.order() && is_regular(g)) {
      EXPECT_EQ(r.hits.size(), 2U);
      ++cycles_seen;
    }
  }
  EXPECT_EQ(cycles_seen, 4U);
}

TEST(Census, WeighingHitsAreCyclotomicAtRadiusTwo) {
  std::vector<SignedGraph> stream{complete(5)};
  for (int n = 6; n <= 7; ++n) {
    for (const auto& g : oracle::graphs_of_order(n)) {
      if (is_regular(g) && g.degree(0) == 4) stream.push_back(g);
    }
  }
  const auto reports = census(stream, CensusPredicate::Weighing);
  for (const auto& r : reports) {
    for (const auto& hit : r.hits) {
      const auto g = SignatureSpace(stream[r.index])[hit.word];
      EXPECT_EQ(hit.weight, 4);
      EXPECT_TRUE(oracle::squares_to(g, 4));
      EXPECT_TRUE(is_cyclotomic(g));
      EXPECT_NEAR(spectrum(g).rho(), 2, 1e-9);
    }
  }
}

TEST(Census, SymmetricNotSignSymmetricHitsAreGenuine) {
  std::vector<SignedGraph> stream;
  for (const auto& g : oracle::graphs_of_order(6)) stream.push_back(g);
  const auto reports = census(stream, CensusPredicate::SymNotSignSym);
  for (const auto& r : reports) {
    const auto& g = stream[r.index];
    if (!r.hits.empty()) {
      EXPECT_TRUE(is_connected(g));
      EXPECT_FALSE(is_complete(g));
    }
    for (const auto& hit : r.hits) {
      const auto s = SignatureSpace(g)[hit.word];
      EXPECT_TRUE(oracle::char_poly(s).has_symmetric_roots());
      EXPECT_FALSE(oracle::switching_isomorphic(s, negate(s)));
    }
  }
}

TEST(Census, TooLargeIsRecordedAndStreamContinues) {
  SearchOptions o;
  o.max_xi = 3;
  const auto reports = census({complete(5), cycle(5)}, CensusPredicate::Cyclotomic, o);
  ASSERT_EQ(reports.size(), 2U);
  EXPECT_EQ(reports[0].status, "too_large");
  EXPECT_EQ(reports[1].status, "ok");
  EXPECT_EQ(reports[1].hits.size(), 2U);
}

TEST(Hoffman, ExactBound) {
  EXPECT_TRUE(within_hoffman_bound(ints({-1, 0, -4, 0, 1})));  // root exactly sqrt(2 + sqrt 5)
  EXPECT_TRUE(within_hoffman_bound(ints({-4, 0, 1})));
  EXPECT_FALSE(within_hoffman_bound(ints({-5, 0, 1})));
  EXPECT_TRUE(within_hoffman_bound(ints({-2, -3, 0, 1})));  // roots 2, -1, -1
  EXPECT_FALSE(within_hoffman_bound(ints({-3, 1})));
  EXPECT_FALSE(within_hoffman_bound(ints({-3, -8, -6, 0, 1})));  // (x - 3)(x + 1)^3
}

TEST(Cospectral, Examples) {
  const auto& cat = bundled_catalog();
  const auto pair = cospectral_mates({catalog_find(cat, "C6").graph, catalog_find(cat, "P2_Q4tilde").graph});
  ASSERT_EQ(pair.size(), 1U);
  EXPECT_TRUE(pair[0].has_mates());
  const auto k3 = cospectral_mates({complete(3), complete(3, -1)});
  EXPECT_EQ(k3.size(), 2U);
  std::vector<SignedGraph> tree;
  for (const auto& s : oracle::all_signings(path(5))) tree.push_back(s);
  const auto t = cospectral_mates(tree);
  ASSERT_EQ(t.size(), 1U);
  EXPECT_EQ(t[0].classes.size(), 1U);
  EXPECT_EQ(t[0].classes[0].members.size(), tree.size());
}

TEST(Seidel, EnergyExamples) {
  EXPECT_NEAR(seidel_energy(complete(5)), 8, 1e-9);
  const auto conf = disjoint_union(cycle(5), SignedGraph::build(1, {}));
  EXPECT_TRUE(oracle::squares_to(seidel(conf), 5));
  EXPECT_NEAR(seidel_energy(conf), 6 * std::sqrt(5.0), 1e-9);
}

TEST(Seidel, ScanOrderSeven) {
  const auto graphs = oracle::graphs_of_order(7);
  const auto s = seidel_scan(graphs);
  EXPECT_EQ(s.count, 1044U);
  EXPECT_TRUE(s.violations.empty());
  EXPECT_NEAR(s.min_energy, 12, 1e-8);
  EXPECT_LE(s.max_energy, 7 * std::sqrt(6.0) + 1e-8);
  // K7 (and the empty graph) sit in the switching class attaining the minimum
  bool has_complete = false;
  for (auto i : s.argmin) has_complete = has_complete || is_complete(graphs[i]);
  EXPECT_TRUE(has_complete);
  EXPECT_THROW(seidel_scan({complete(4), complete(5)}), Error);
}

TEST(Seidel, KernelCheck) {
  const auto c5 = seidel_kernel_check(cycle(5));
  EXPECT_EQ(c5.rank, 4);
  ASSERT_EQ(c5.kernel.size(), 5U);
  const auto s = oracle::int_table(seidel(cycle(5)));
  for (std::size_t i = 0; i < 5; ++i) {
    BigInt dot = 0;
    for (std::size_t j = 0; j < 5; ++j) dot += s[i][j] * c5.kernel[j];
    EXPECT_EQ(dot, 0);
  }
  ASSERT_TRUE(c5.pm1_kernel.has_value());
  bool pm1 = true;
  for (const auto& x : c5.kernel) pm1 = pm1 && abs(x) == 1;
  EXPECT_EQ(*c5.pm1_kernel, pm1);
  const auto k3 = seidel_kernel_check(complete(3));
  EXPECT_EQ(k3.rank, 3);
  EXPECT_FALSE(k3.pm1_kernel.has_value());
  EXPECT_EQ(oracle::det(oracle::to_dense(seidel(complete(3)))), -2);
  const auto one = seidel_kernel_check(SignedGraph::build(1, {}));
  EXPECT_EQ(one.rank, 0);
  EXPECT_EQ(one.kernel, std::vector<BigInt>{1});
  EXPECT_EQ(one.pm1_kernel, true);
  EXPECT_THROW(seidel_kernel_check(cycle(4)), Error);
}

TEST(Slices, CoverRangeInOrder) {
  for (int jobs : {1, 2, 3, 8, 100}) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> seen(static_cast<std::size_t>(jobs));
    std::vector<int> used(static_cast<std::size_t>(jobs), 0);
    for_each_slice(37, jobs, [&](std::uint64_t b, std::uint64_t e, std::size_t slice) {
      seen[slice] = {b, e};
      used[slice] = 1;
    });
    std::uint64_t next = 0;
    for (std::size_t i = 0; i < seen.size(); ++i) {
      if (!used[i]) continue;
      EXPECT_EQ(seen[i].first, next);
      next = seen[i].second;
    }
    EXPECT_EQ(next, 37U);
  }
}

}  // namespace
}  // namespace sgs
