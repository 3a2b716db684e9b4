#include <gtest/gtest.h>

#include <cmath>
#include <algorithm>
#include <numeric>
#include <random>

#include "corpus.hpp"
#include "gel/classify.hpp"
#include "gel/error.hpp"
#include "gel/ops.hpp"

using namespace gel;

TEST(Classify, Examples) {
  const auto k2 = classify_energy(complete(2));
  EXPECT_TRUE(k2.orderenergetic);
  EXPECT_TRUE(k2.nonhypoenergetic);
  EXPECT_FALSE(k2.hypoenergetic);
  EXPECT_EQ(k2.comparison, Comparison::Exact);
  EXPECT_EQ(k2.energy_exact, 2);

  const auto p3 = classify_energy(path(3));
  EXPECT_FALSE(p3.orderenergetic);
  EXPECT_TRUE(p3.hypoenergetic);
  EXPECT_EQ(p3.integral, false);
  EXPECT_EQ(p3.comparison, Comparison::Numeric);
  EXPECT_FALSE(p3.energy_exact);

  const auto k5 = classify_energy(complete(5));
  EXPECT_FALSE(k5.hyperenergetic);  // 8 is not > 8
  EXPECT_TRUE(k5.nonhypoenergetic);

  const auto csp3 = classify_energy(canonical_superpath(3));
  EXPECT_TRUE(csp3.orderenergetic);
  EXPECT_EQ(csp3.energy_exact, 12);

  const auto e3 = classify_energy(empty(3));
  EXPECT_TRUE(e3.hypoenergetic);
  EXPECT_EQ(e3.energy, 0.0);
}

TEST(Classify, HyperenergeticExample) {
  // K4 x K4 has energy 36 > 2(16 - 1); K3 x K3 sits exactly on the boundary.
  const auto r = classify_energy(kronecker(complete(4), complete(4)));
  EXPECT_EQ(r.energy_exact, 36);
  EXPECT_TRUE(r.hyperenergetic);
  const auto edge = classify_energy(kronecker(complete(3), complete(3)));
  EXPECT_EQ(edge.energy_exact, 16);
  EXPECT_FALSE(edge.hyperenergetic);
}

TEST(Classify, FlagConsistency) {
  for (const auto& g : testing_corpus::graphs()) {
    const auto r = classify_energy(g);
    const double p = static_cast<double>(g.order());
    EXPECT_EQ(r.order, g.order());
    EXPECT_NE(r.hypoenergetic, r.nonhypoenergetic) << g.label();
    if (r.orderenergetic) {
      EXPECT_TRUE(r.nonhypoenergetic);
    }
    EXPECT_EQ(r.hypoenergetic, !r.orderenergetic && r.energy < p) << g.label();
    if (r.integral == true) {
      ASSERT_TRUE(r.energy_exact) << g.label();
      EXPECT_EQ(r.comparison, Comparison::Exact);
      EXPECT_NEAR(static_cast<double>(*r.energy_exact), r.energy, 1e-8 * std::max(1.0, r.energy));
      EXPECT_EQ(r.orderenergetic, *r.energy_exact == static_cast<std::int64_t>(g.order()));
    }
    if (r.hyperenergetic) {
      EXPECT_GT(r.energy, 2.0 * (p - 1.0));
    }
  }
}

TEST(Classify, NearlyEqual) {
  EXPECT_TRUE(nearly_equal(1.0, 1.0 + 1e-9));
  EXPECT_FALSE(nearly_equal(1.0, 1.0 + 1e-7));
  EXPECT_TRUE(nearly_equal(0.0, 0.0));
  EXPECT_TRUE(nearly_equal(1e6, 1e6 + 1e-3));
}

TEST(Pair, Examples) {
  const auto a = certify_pair(duplicate(complete(2)), shadow(complete(2), 2));
  EXPECT_EQ(a.verdict, PairVerdict::Equiorderenergetic);
  EXPECT_TRUE(a.energies_equal);
  EXPECT_FALSE(a.cospectral);
  EXPECT_EQ(a.isomorphic, false);
  EXPECT_TRUE(a.equienergetic());

  const auto same = certify_pair(cycle(5), cycle(5));
  EXPECT_EQ(same.verdict, PairVerdict::NotEquienergetic);
  EXPECT_EQ(same.isomorphic, true);
  EXPECT_TRUE(same.cospectral);

  const auto diff_order = certify_pair(complete(2), cycle(4));
  EXPECT_FALSE(diff_order.same_order);
  EXPECT_EQ(diff_order.verdict, PairVerdict::NotEquienergetic);

  // Cospectral, non-isomorphic, both hypoenergetic.
  const auto cs = certify_pair(complete_bipartite(1, 4),
                               disjoint_union(cycle(4), complete(1)));
  EXPECT_TRUE(cs.cospectral);
  EXPECT_EQ(cs.isomorphic, false);
  EXPECT_EQ(cs.verdict, PairVerdict::Equihypoenergetic);

  const auto plain = certify_pair(complete_bipartite(2, 2), disjoint_union(complete(2), complete(2)));
  EXPECT_EQ(plain.verdict, PairVerdict::Equiorderenergetic);
}

TEST(Pair, Symmetry) {
  const auto graphs = testing_corpus::graphs();
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    for (std::size_t j = i; j < graphs.size(); j += 3) {
      const auto ab = certify_pair(graphs[i], graphs[j]);
      const auto ba = certify_pair(graphs[j], graphs[i]);
      EXPECT_EQ(ab.verdict, ba.verdict) << graphs[i].label() << " / " << graphs[j].label();
      EXPECT_EQ(ab.cospectral, ba.cospectral);
      EXPECT_EQ(ab.energies_equal, ba.energies_equal);
    }
  }
}

TEST(Pair, UndecidedAboveIsomorphismCap) {
  ClassifyOptions opts;
  opts.isomorphism.max_order = 4;
  const auto c = certify_pair(complete_bipartite(1, 4),
                              disjoint_union(cycle(4), complete(1)), opts);
  EXPECT_EQ(c.verdict, PairVerdict::UndecidedIsomorphism);
  EXPECT_FALSE(c.isomorphic);
  EXPECT_FALSE(c.equienergetic());
}

TEST(Isomorphism, Examples) {
  EXPECT_TRUE(is_isomorphic(cycle(5), complement(cycle(5))));
  EXPECT_TRUE(is_isomorphic(path(4), complement(path(4))));
  EXPECT_FALSE(is_isomorphic(cycle(6), disjoint_union(complete(3), complete(3))));
  EXPECT_FALSE(is_isomorphic(complete_bipartite(1, 3), path(4)));
  EXPECT_FALSE(is_isomorphic(cycle(4), cycle(5)));
  EXPECT_FALSE(is_isomorphic(complete_bipartite(3, 3), kronecker(complete(3), complete(2))));
}

TEST(Isomorphism, RelabellingIsDetected) {
  std::mt19937_64 rng(3);
  std::bernoulli_distribution coin(0.45);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 3 + trial % 10;
    std::vector<Graph::Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (coin(rng)) edges.push_back({i, j});
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Graph::Edge> moved;
    for (auto [u, v] : edges) moved.push_back({std::min(perm[u], perm[v]), std::max(perm[u], perm[v])});
    const auto g = Graph::from_edges(n, edges, "g");
    const auto h = Graph::from_edges(n, moved, "h");
    EXPECT_TRUE(is_isomorphic(g, h)) << trial;
    if (!edges.empty() && edges.size() < n * (n - 1) / 2) {
      auto fewer = moved;
      fewer.pop_back();
      EXPECT_FALSE(is_isomorphic(g, Graph::from_edges(n, fewer, "f")));
    }
  }
}

TEST(Isomorphism, CapRaisesUndecidable) {
  try {
    is_isomorphic(cycle(13), cycle(13));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Undecidable);
  }
  IsomorphismOptions tiny;
  tiny.node_budget = 1;
  EXPECT_THROW(is_isomorphic(cycle(10), cycle(10), tiny), Error);
}
