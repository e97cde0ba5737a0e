#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "cofmat/oracle.hpp"

using namespace cofmat;

namespace {

EdgeSet random_edges(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  EdgeSet f(n);
  for (int i = 0; i < num_edges(n); ++i)
    if (coin(rng)) f.insert(edge_at(n, i));
  return f;
}

// Union-find forest size: rank of F in the graphic matroid.
int forest_rank(const EdgeSet& f) {
  std::vector<int> parent(f.ambient());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int r = 0;
  for (const Edge& e : f.edges()) {
    int a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      ++r;
    }
  }
  return r;
}

// Laman count: every nonempty subset F' spans at least (|F'| + 3) / 2 vertices.
bool laman_sparse(const std::vector<Edge>& es) {
  const std::size_t m = es.size();
  for (std::uint32_t sub = 1; sub < (1u << m); ++sub) {
    std::uint32_t verts = 0;
    for (std::size_t i = 0; i < m; ++i)
      if ((sub >> i) & 1u) verts |= (1u << es[i].u) | (1u << es[i].v);
    if (std::popcount(sub) > 2 * std::popcount(verts) - 3) return false;
  }
  return true;
}

int laman_rank(const EdgeSet& f) {
  std::vector<Edge> kept;
  for (const Edge& e : f.edges()) {
    kept.push_back(e);
    if (!laman_sparse(kept)) kept.pop_back();
  }
  return static_cast<int>(kept.size());
}

}  // namespace

TEST(CofactorOracle, CompleteGraphRanks) {
  for (int n = 5; n <= 12; ++n) EXPECT_EQ(CofactorOracle::cofactor(n).full_rank(), 3 * n - 6) << n;
  EXPECT_EQ(CofactorOracle::cofactor(4).full_rank(), 6);
  EXPECT_EQ(CofactorOracle::cofactor(3).full_rank(), 3);
  EXPECT_EQ(CofactorOracle::cofactor(1).full_rank(), 0);
}

TEST(CofactorOracle, K5IsACircuit) {
  auto o = CofactorOracle::cofactor(7);
  EdgeSet k5 = complete_edges(7, {1, 2, 3, 5, 6});
  EXPECT_EQ(o.rank(k5), 9);
  for (const Edge& e : k5.edges()) EXPECT_TRUE(o.is_independent(k5.without(e)));
  EXPECT_FALSE(o.is_independent(k5));
  EXPECT_TRUE(o.is_independent(complete_edges(7, {0, 1, 2, 3})));
}

TEST(CofactorOracle, ClosureAndFlats) {
  auto o = CofactorOracle::cofactor(6);
  EdgeSet k5 = complete_edges(6, {0, 1, 2, 3, 4});
  EdgeSet almost = k5.without(Edge(0, 1));
  EXPECT_EQ(o.closure(almost), k5);
  EXPECT_TRUE(o.is_flat(k5));
  EdgeSet tri(6, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_TRUE(o.is_flat(tri));
  EXPECT_EQ(o.closure(complete_edges(6, {0, 1, 2, 3, 4, 5}).without(Edge(2, 5))),
            EdgeSet::complete(6));
  EXPECT_TRUE(o.is_rigid(EdgeSet::complete(6).without(Edge(2, 5))));
}

TEST(CofactorOracle, FundamentalCircuitAndGreedyBase) {
  auto o = CofactorOracle::cofactor(6);
  EdgeSet k5 = complete_edges(6, {0, 1, 2, 3, 4});
  EdgeSet b = o.greedy_base(k5);
  EXPECT_EQ(b.size(), 9);
  Edge missing = (k5 - b).edges().front();
  EXPECT_EQ(o.fundamental_circuit(b, missing), k5);
  EXPECT_THROW(o.fundamental_circuit(k5, Edge(0, 5)), PreconditionError);
  EXPECT_THROW(o.fundamental_circuit(EdgeSet(6, {{0, 1}}), Edge(0, 2)), PreconditionError);
}

TEST(CofactorOracle, RankTableMatchesDirectQueries) {
  auto o = CofactorOracle::cofactor(5);
  auto table = o.rank_table();
  ASSERT_EQ(table.size(), 1024u);
  // a fresh oracle has no memo, so these are independent evaluations
  auto fresh = CofactorOracle::cofactor(5);
  for (std::uint32_t x = 0; x < 1024; ++x) ASSERT_EQ(table[x], fresh.rank(EdgeSet::from_mask(5, EdgeMask(x)))) << x;
  EXPECT_THROW(CofactorOracle::cofactor(8).rank_table(), CapExceeded);
}

TEST(CofactorOracle, IndependentOfModulusAndSeeds) {
  auto a = CofactorOracle::cofactor(8);
  auto b = CofactorOracle::cofactor(8, 2, {1000003, {17, 29, 31}});
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    EdgeSet f = random_edges(8, 0.6, rng);
    ASSERT_EQ(a.rank(f), b.rank(f));
  }
}

TEST(CofactorOracle, SeedMajorityPolicy) {
  // over GF(2) many configurations are degenerate, so single seeds disagree
  OracleOptions two{2, {1, 2}};
  auto both = CofactorOracle::cofactor(6, 2, two);
  auto s1 = CofactorOracle::cofactor(6, 2, {2, {1}});
  auto s2 = CofactorOracle::cofactor(6, 2, {2, {2}});
  std::mt19937_64 rng(9);
  int disagreements = 0;
  for (int i = 0; i < 100; ++i) {
    EdgeSet f = random_edges(6, 0.5, rng);
    int r1 = s1.rank(f), r2 = s2.rank(f);
    if (r1 == r2) {
      EXPECT_EQ(both.rank(f), r1);
    } else {
      ++disagreements;
      EXPECT_THROW(both.rank(f), SeedDisagreement);
    }
  }
  EXPECT_GT(disagreements, 0);

  // three seeds: the maximum wins if at least two seeds attain it
  auto three = CofactorOracle::cofactor(6, 2, {2, {1, 2, 3}});
  auto s3 = CofactorOracle::cofactor(6, 2, {2, {3}});
  for (int i = 0; i < 100; ++i) {
    EdgeSet f = random_edges(6, 0.5, rng);
    std::vector<int> r = {s1.rank(f), s2.rank(f), s3.rank(f)};
    int mx = *std::max_element(r.begin(), r.end());
    if (std::count(r.begin(), r.end(), mx) >= 2)
      EXPECT_EQ(three.rank(f), mx);
    else
      EXPECT_THROW(three.rank(f), SeedDisagreement);
  }
}

TEST(CofactorOracle, RejectsBadArguments) {
  EXPECT_THROW(CofactorOracle::cofactor(17), CapExceeded);
  EXPECT_THROW(CofactorOracle::cofactor(6, -1), PreconditionError);
  EXPECT_THROW(CofactorOracle::cofactor(6, 2, {kMersenne61, {}}), PreconditionError);
  EXPECT_THROW(CofactorOracle::cofactor(6, 2, {100, {1}}), PreconditionError);
  EXPECT_THROW(CofactorOracle::rigidity(6, 4), PreconditionError);
  auto o = CofactorOracle::cofactor(6);
  EXPECT_THROW(o.rank(EdgeSet(7)), AmbientMismatch);
}

TEST(CofactorOracle, LowDegreeCasesMatchClassicalMatroids) {
  std::mt19937_64 rng(21);
  auto s0 = CofactorOracle::cofactor(7, 0);
  auto s1 = CofactorOracle::cofactor(7, 1);
  auto r1 = CofactorOracle::rigidity(7, 1);
  auto r2 = CofactorOracle::rigidity(7, 2);
  for (int i = 0; i < 150; ++i) {
    EdgeSet f = random_edges(7, 0.35, rng);
    int forest = forest_rank(f);
    ASSERT_EQ(s0.rank(f), forest);
    ASSERT_EQ(r1.rank(f), forest);
    if (f.size() <= 12) {
      int laman = laman_rank(f);
      ASSERT_EQ(s1.rank(f), laman);
      ASSERT_EQ(r2.rank(f), laman);
    }
  }
}

TEST(CofactorOracle, ThreeDimensionalRigidityOnSmallGraphs) {
  auto r3 = CofactorOracle::rigidity(8, 3);
  auto c = CofactorOracle::cofactor(8);
  EXPECT_EQ(r3.full_rank(), 18);
  EdgeSet k5 = complete_edges(8, {0, 1, 2, 3, 4});
  EXPECT_EQ(r3.rank(k5), 9);
  // double banana: dependent in both, rank 17
  EdgeSet db = (k5 | complete_edges(8, {0, 1, 5, 6, 7})).without(Edge(0, 1));
  EXPECT_EQ(r3.rank(db), 17);
  EXPECT_EQ(c.rank(db), 17);
}

TEST(CofactorOracle, DescribeAndConfiguration) {
  auto o = CofactorOracle::cofactor(4, 2, {7, {5}});
  EXPECT_EQ(o.describe(), "cofactor n=4 s=2 seeds=5 modulus=7");
  EXPECT_EQ(o.width(), 12);
  // configuration stream is x0, y0, x1, y1, ..., then z
  auto draws = random_field_elements(12, 5, o.field());
  const auto& cfg = o.configuration(0);
  EXPECT_EQ(cfg.points[1].first, draws[2]);
  EXPECT_EQ(cfg.points[1].second, draws[3]);
  EXPECT_EQ(cfg.z[0], draws[8]);
}
