#include <gtest/gtest.h>

#include <random>

#include "cofmat/k5_sequence.hpp"

using namespace cofmat;

namespace {

EdgeSet random_edges(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  EdgeSet f(n);
  for (int i = 0; i < num_edges(n); ++i)
    if (coin(rng)) f.insert(edge_at(n, i));
  return f;
}

// Minimum value over every proper sequence of 5-sets of the pool, by plain
// enumeration of ordered sequences with no pruning or memo.
int brute_min_value(const EdgeSet& f, const VertexSet& pool) {
  const int n = f.ambient();
  auto cands = vertex_subsets(pool, 5);
  int best = f.size();
  std::vector<bool> used(cands.size(), false);
  std::function<void(const EdgeSet&, int)> go = [&](const EdgeSet& u, int t) {
    best = std::min(best, (f | u).size() - t);
    for (std::size_t i = 0; i < cands.size(); ++i) {
      if (used[i]) continue;
      EdgeSet k = complete_edges(n, cands[i]);
      if (t > 0 && k.subset_of(u)) continue;
      used[i] = true;
      go(u | k, t + 1);
      used[i] = false;
    }
  };
  go(EdgeSet(n), 0);
  return best;
}

EdgeSet double_banana() {
  return (complete_edges(8, {0, 1, 2, 3, 4}) | complete_edges(8, {0, 1, 5, 6, 7})).without(Edge(0, 1));
}

}  // namespace

TEST(CircuitSequence, ValueAndProperness) {
  CircuitSequence c{7, 3, {{0, 1, 2, 3, 4}, {0, 1, 2, 3, 5}}};
  EXPECT_TRUE(c.is_proper());
  EXPECT_EQ(c.union_edges().size(), 14);
  EXPECT_EQ(seq_value(EdgeSet(7), c), 12);
  EXPECT_EQ(seq_value(EdgeSet::complete(7), c), 19);

  CircuitSequence repeat{7, 3, {{0, 1, 2, 3, 4}, {0, 1, 2, 3, 5}, {0, 1, 2, 3, 4}}};
  EXPECT_EQ(repeat.first_improper(), std::optional<std::size_t>(2));
  EXPECT_THROW(seq_value(EdgeSet(7), repeat), PreconditionError);
  CircuitSequence small{7, 3, {{0, 1, 2, 3}}};
  EXPECT_FALSE(small.is_proper());
  EXPECT_THROW(seq_value(EdgeSet(8), c), AmbientMismatch);
  CircuitSequence empty{7, 3, {}};
  EXPECT_EQ(seq_value(EdgeSet(7, {{0, 1}}), empty), 1);
}

TEST(CircuitSequence, CoveringSequence) {
  for (int n = 5; n <= 14; ++n) {
    auto c = covering_sequence(n);
    EXPECT_EQ(c.length(), static_cast<std::size_t>((n - 3) * (n - 4) / 2)) << n;
    EXPECT_TRUE(c.is_proper());
    EXPECT_EQ(c.union_edges(), EdgeSet::complete(n));
    EXPECT_EQ(seq_value(EdgeSet(n), c), 3 * n - 6);
  }
  // graphic case: K_3-sequences of length C(n-1, 2)
  auto g = covering_sequence(7, 1);
  EXPECT_EQ(g.length(), 15u);
  EXPECT_EQ(seq_value(EdgeSet(7), g), 6);
  EXPECT_THROW(covering_sequence(4), PreconditionError);
}

TEST(VertexSubsets, LexicographicOrder) {
  auto s = vertex_subsets({1, 3, 4, 6}, 2);
  ASSERT_EQ(s.size(), 6u);
  EXPECT_EQ(s.front(), (VertexSet{1, 3}));
  EXPECT_EQ(s[2], (VertexSet{1, 6}));
  EXPECT_EQ(s.back(), (VertexSet{4, 6}));
  EXPECT_TRUE(vertex_subsets({1, 2}, 3).empty());
  EXPECT_EQ(vertex_subsets({1, 2}, 0).size(), 1u);
}

TEST(MinSequenceValue, MatchesUnprunedEnumeration) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 60; ++i) {
    EdgeSet f = random_edges(6, 0.45 + 0.008 * i, rng);
    SequenceSearchOptions all;
    all.pool = VertexSet::range(6);
    EXPECT_EQ(min_sequence_value(f, all).value, brute_min_value(f, all.pool)) << i;
  }
}

TEST(MinSequenceValue, EqualsOracleRank) {
  auto o = CofactorOracle::cofactor(8);
  std::mt19937_64 rng(12);
  for (int i = 0; i < 80; ++i) {
    EdgeSet f = random_edges(8, 0.3 + 0.006 * i, rng);
    auto res = min_sequence_value(f);
    ASSERT_EQ(res.value, o.rank(f)) << i;
    ASSERT_TRUE(res.witness.is_proper());
    ASSERT_EQ(seq_value(f, res.witness), res.value);
  }
  EXPECT_EQ(min_sequence_value(double_banana()).value, 17);
}

TEST(MinSequenceValue, EverySearchedSequenceBoundsTheRank) {
  auto o = CofactorOracle::cofactor(7);
  std::mt19937_64 rng(8);
  for (int i = 0; i < 20; ++i) {
    EdgeSet f = random_edges(7, 0.7, rng);
    const int r = o.rank(f);
    std::size_t visited = 0;
    SequenceSearchOptions opts;
    opts.on_node = [&](const CircuitSequence& c, int v) {
      ++visited;
      EXPECT_TRUE(c.is_proper());
      EXPECT_EQ(v, seq_value(f, c));
      EXPECT_GE(v, r);
    };
    min_sequence_value(f, opts);
    EXPECT_GT(visited, 0u);
  }
}

TEST(MinSequenceValue, LowerBoundDoesNotChangeTheAnswer) {
  auto o = CofactorOracle::cofactor(8);
  std::mt19937_64 rng(15);
  for (int i = 0; i < 30; ++i) {
    EdgeSet f = random_edges(8, 0.6, rng);
    SequenceSearchOptions plain;
    SequenceSearchOptions bounded;
    bounded.lower_bound = [&](const EdgeSet& x) { return o.rank(x); };
    auto a = min_sequence_value(f, plain);
    auto b = min_sequence_value(f, bounded);
    EXPECT_EQ(a.value, b.value);
    EXPECT_LE(b.nodes, a.nodes);
  }
}

TEST(MinSequenceValue, TieBreakPrefersShortSequences) {
  EdgeSet k5 = complete_edges(6, {0, 1, 2, 3, 4});
  SequenceSearchOptions all;
  all.pool = VertexSet::range(6);
  auto res = min_sequence_value(k5, all);
  EXPECT_EQ(res.value, 9);
  ASSERT_EQ(res.witness.length(), 1u);
  EXPECT_EQ(res.witness.members[0], (VertexSet{0, 1, 2, 3, 4}));
  auto none = min_sequence_value(EdgeSet(6, {{0, 1}, {2, 3}}));
  EXPECT_EQ(none.value, 2);
  EXPECT_EQ(none.witness.length(), 0u);
}

TEST(MinSequenceValue, PoolCap) {
  EdgeSet f(12);
  for (int i = 0; i < 10; i += 2) f.insert(Edge(i, i + 1));
  EXPECT_THROW(min_sequence_value(f), CapExceeded);
  // a forced search over a large pool is only practical with a rank bound
  auto o = CofactorOracle::cofactor(12);
  SequenceSearchOptions forced;
  forced.force = true;
  forced.lower_bound = [&](const EdgeSet& x) { return o.rank(x); };
  EXPECT_EQ(min_sequence_value(f, forced).value, 5);
  SequenceSearchOptions outside;
  outside.pool = VertexSet{0, 13};
  EXPECT_THROW(min_sequence_value(f, outside), PreconditionError);
}

TEST(RankCertificate, DoubleBanana) {
  auto o = CofactorOracle::cofactor(8);
  auto cert = rank_certificate(double_banana(), o);
  EXPECT_EQ(cert.rank, 17);
  EXPECT_EQ(cert.independent_set.size(), 17);
  EXPECT_TRUE(o.is_independent(cert.independent_set));
  EXPECT_TRUE(cert.independent_set.subset_of(double_banana()));
  EXPECT_EQ(cert.sequence.length(), 2u);
  EXPECT_EQ(seq_value(double_banana(), cert.sequence), 17);
  EXPECT_TRUE(tightness_conditions_hold(double_banana(), cert.sequence, o));
  auto js = sequence_json(cert.sequence);
  EXPECT_EQ(js.size(), 2u);
  EXPECT_EQ(edges_json(EdgeSet(8, {{2, 5}})).dump(), "[[2,5]]");
}

TEST(RankCertificate, TightnessOnRandomSets) {
  auto o = CofactorOracle::cofactor(7);
  std::mt19937_64 rng(31);
  for (int i = 0; i < 40; ++i) {
    EdgeSet f = random_edges(7, 0.4 + 0.01 * i, rng);
    auto cert = rank_certificate(f, o);
    ASSERT_EQ(cert.rank, o.rank(f));
    ASSERT_EQ(seq_value(f, cert.sequence), cert.rank);
  }
}

TEST(RankCertificate, MismatchCarriesDiagnostic) {
  // K5 has rank 7 in the plane rigidity matroid, while its K5-sequence value is 9
  auto planar = CofactorOracle::rigidity(6, 2);
  EdgeSet k5 = complete_edges(6, {0, 1, 2, 3, 4});
  try {
    rank_certificate(k5, planar);
    FAIL() << "expected WitnessMismatch";
  } catch (const WitnessMismatch& e) {
    auto diag = nlohmann::json::parse(e.diagnostic);
    EXPECT_EQ(diag["oracle_rank"], 7);
    EXPECT_EQ(diag["sequence_value"], 9);
  }
}

TEST(SimplicialVertex, FindsDegreeThreeBases) {
  auto o = CofactorOracle::cofactor(8);
  EdgeSet flat = o.closure(double_banana());
  auto sv = find_simplicial_base_vertex(flat, o);
  EXPECT_EQ(sv.base.size(), o.rank(flat));
  EXPECT_TRUE(o.is_independent(sv.base));
  EXPECT_TRUE(sv.base.subset_of(flat));
  EXPECT_EQ(neighbor_edges(sv.base, sv.vertex).degree, 3);
  EXPECT_TRUE(complete_edges(8, neighbor_edges(flat, sv.vertex).neighbors).subset_of(flat));

  auto k8 = find_simplicial_base_vertex(EdgeSet::complete(8), o);
  EXPECT_EQ(neighbor_edges(k8.base, k8.vertex).degree, 3);

  EXPECT_THROW(find_simplicial_base_vertex(double_banana(), o), PreconditionError);
  EdgeSet pendant = complete_edges(8, {0, 1, 2, 3, 4}).with(Edge(4, 5));
  EXPECT_THROW(find_simplicial_base_vertex(pendant, o), PreconditionError);
}
