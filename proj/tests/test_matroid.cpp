#include <gtest/gtest.h>

#include "cofmat/matroid.hpp"
#include "cofmat/standard.hpp"

using namespace cofmat;

namespace {

// M(K4) on the six edges of K4, via the edge-index encoding.
ExplicitMatroid graphic_k4() {
  return ExplicitMatroid::from_rank_function(6, [](Subset x) { return graphic_rank(to_edge_set(4, x)); });
}

}  // namespace

TEST(ExplicitMatroid, UniformMatroidStructure) {
  auto u = ExplicitMatroid::uniform(2, 4);
  EXPECT_EQ(u.rank(), 2);
  EXPECT_TRUE(check_rank_axioms(u).ok);
  EXPECT_EQ(circuits(u).size(), 4u);
  for (Subset c : circuits(u)) EXPECT_EQ(card(c), 3);
  EXPECT_EQ(flats(u).size(), 6u);
  EXPECT_EQ(hyperplanes(u).size(), 4u);
  auto cf = cyclic_flats(u);
  ASSERT_EQ(cf.size(), 1u);
  EXPECT_EQ(cf.members().front(), 0u);
  EXPECT_EQ(cyclic_flats(u, kDefaultEnumerationCap, true).size(), 2u);
  EXPECT_EQ(cyclic_sets(u).size(), 6u);
  EXPECT_TRUE(dual(u).same_rank_function(u));
}

TEST(ExplicitMatroid, FromBasesRecoversRank) {
  // bases of M(K4): spanning trees, i.e. 3-subsets that are not triangles
  auto g = graphic_k4();
  std::vector<Subset> trees;
  for (Subset x = 0; x < 64; ++x)
    if (card(x) == 3 && g.rank(x) == 3) trees.push_back(x);
  EXPECT_EQ(trees.size(), 16u);
  EXPECT_TRUE(ExplicitMatroid::from_bases(6, trees).same_rank_function(g));
  EXPECT_THROW(ExplicitMatroid::from_bases(3, {}), PreconditionError);
  EXPECT_THROW(ExplicitMatroid::from_bases(3, {8}), PreconditionError);
  EXPECT_THROW(ExplicitMatroid::from_bases(17, {1}), CapExceeded);
  EXPECT_THROW(ExplicitMatroid::from_table(2, {0, 1, 1}), PreconditionError);
}

TEST(ExplicitMatroid, RankAxiomCheckerFindsViolations) {
  EXPECT_TRUE(check_rank_axioms(graphic_k4()).ok);
  auto jump = ExplicitMatroid::from_table(2, {0, 2, 1, 2});
  EXPECT_FALSE(check_rank_axioms(jump).ok);
  // r({a}) = r({b}) = r({a,b}) - 1 = 0 breaks submodularity
  auto bad = ExplicitMatroid::from_table(2, {0, 0, 0, 1});
  EXPECT_FALSE(check_rank_axioms(bad).ok);
  auto nonzero = ExplicitMatroid::from_table(1, {1, 1});
  EXPECT_FALSE(check_rank_axioms(nonzero).ok);
}

TEST(ExplicitMatroid, ClosureCycAndCircuits) {
  auto g = graphic_k4();
  Subset tri = to_subset(complete_edges(4, {0, 1, 2}));
  Subset path = tri & ~Subset{1};  // drop edge 0-1
  EXPECT_EQ(closure(g, path), tri);
  EXPECT_TRUE(is_flat(g, tri));
  EXPECT_TRUE(is_circuit(g, tri));
  EXPECT_TRUE(is_cyclic(g, tri));
  Subset pendant = tri | to_subset(EdgeSet(4, {{2, 3}}));
  EXPECT_EQ(cyc(g, pendant), tri);
  EXPECT_EQ(circuits(g).size(), 7u);  // four triangles, three 4-cycles
  EXPECT_EQ(circuits(g, tri).size(), 1u);
}

TEST(ExplicitMatroid, DualRankAndModularity) {
  auto r6 = k5_paving_matroid(6);
  EXPECT_EQ(r6.rank(), 10);
  EXPECT_EQ(dual_rank(r6, r6.ground()), 5);
  auto k5s = clique_subsets(6, 5);
  ASSERT_EQ(k5s.size(), 6u);
  // two K5 copies of K6 share a K4 (rank 6): 9 + 9 != 6 + 10
  EXPECT_FALSE(is_modular_pair(r6, k5s[0], k5s[1]));
  EXPECT_TRUE(is_modular_pair(r6, k5s[0], k5s[0]));
  EXPECT_TRUE(is_modular_pair(r6, 0, k5s[3]));
  for (Subset x : {Subset{0}, k5s[2], Subset{0x7ff}}) EXPECT_EQ(dual(dual(r6)).rank(x), r6.rank(x));
}

TEST(ExplicitMatroid, CyclicFlatsOfK5PavingMatroid) {
  auto r6 = k5_paving_matroid(6);
  auto cf = cyclic_flats(r6);
  EXPECT_EQ(cf.size(), 7u);
  EXPECT_TRUE(cf.contains(0));
  for (Subset k5 : clique_subsets(6, 5)) {
    EXPECT_TRUE(cf.contains(k5));
    EXPECT_TRUE(is_circuit(r6, k5));
  }
  EXPECT_TRUE(check_rank_axioms(r6).ok);
}

TEST(ExplicitMatroid, TruncatedOracleEqualsPavingMatroid) {
  auto o = oracle_matroid(CofactorOracle::cofactor(6));
  EXPECT_EQ(o.rank(), 12);
  EXPECT_TRUE(truncate(o, 10).same_rank_function(k5_paving_matroid(6)));
  EXPECT_FALSE(truncate(o, 11).same_rank_function(k5_paving_matroid(6)));
  EXPECT_THROW(truncate(o, 13), PreconditionError);
  EXPECT_TRUE(oracle_matroid(CofactorOracle::cofactor(5)).same_rank_function(k5_paving_matroid(5)));
}

TEST(ExplicitMatroid, MinorsOfUniformMatroids) {
  auto u = ExplicitMatroid::uniform(2, 4);
  auto contracted = minor(u, 0, 1);
  EXPECT_EQ(contracted.ground_size(), 3);
  EXPECT_TRUE(contracted.same_rank_function(ExplicitMatroid::uniform(1, 3)));
  auto deleted = minor(u, 1, 0);
  EXPECT_TRUE(deleted.same_rank_function(ExplicitMatroid::uniform(2, 3)));
  // contracting a dependent set: {0,1,2} has rank 2, leaving a rank-0 loop
  auto loop = minor(u, 0, 7);
  EXPECT_EQ(loop.ground_size(), 1);
  EXPECT_EQ(loop.rank(1), 0);
  EXPECT_THROW(minor(u, 1, 1), PreconditionError);
  EXPECT_THROW(minor(u, 16, 0), PreconditionError);
}

TEST(ExplicitMatroid, ConnectedComponentsAndEars) {
  auto g = graphic_k4();
  EXPECT_EQ(connected_components(g, g.ground()).size(), 1u);
  auto f = ExplicitMatroid::free(4);
  EXPECT_EQ(connected_components(f, f.ground()).size(), 4u);

  auto ears = ear_decomposition(g, g.ground());
  EXPECT_TRUE(is_ear_decomposition(g, g.ground(), ears));
  // M(K4) has rank 3 and nullity 3, so every ear decomposition has 3 ears
  EXPECT_EQ(ears.size(), 3u);

  auto k5 = oracle_matroid(CofactorOracle::cofactor(5));
  auto single = ear_decomposition(k5, k5.ground());
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0], k5.ground());

  Subset t1 = to_subset(complete_edges(4, {0, 1, 2}));
  Subset t2 = to_subset(complete_edges(4, {1, 2, 3}));
  EXPECT_FALSE(is_ear_decomposition(g, t1 | t2, {t1}));
  EXPECT_FALSE(is_ear_decomposition(g, g.ground(), {}));
  EXPECT_THROW(ear_decomposition(f, f.ground()), PreconditionError);
}

TEST(ExplicitMatroid, EnumerationCap) {
  auto big = ExplicitMatroid::free(20);
  EXPECT_THROW(cyclic_flats(big), CapExceeded);
  EXPECT_THROW(big.materialized(), CapExceeded);
  EXPECT_EQ(big.rank(0xfffff), 20);
  EXPECT_THROW(ExplicitMatroid::free(25), CapExceeded);
}
