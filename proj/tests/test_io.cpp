#include <gtest/gtest.h>

#include <sstream>

#include "cofmat/io.hpp"

using namespace cofmat;

TEST(EdgeList, ParsesCommentsAndHeader) {
  EdgeSet f = parse_edge_list("# a path\n\n0 1\n1 2   # trailing\n  2 3\n");
  EXPECT_EQ(f.ambient(), 4);
  EXPECT_EQ(f.size(), 3);
  EXPECT_TRUE(f.contains(Edge(2, 3)));

  EdgeSet g = parse_edge_list("n=9\n3 1\n");
  EXPECT_EQ(g.ambient(), 9);
  EXPECT_EQ(g.edges().front(), Edge(1, 3));
  EXPECT_EQ(parse_edge_list("n=5\n").size(), 0);
  EXPECT_EQ(parse_edge_list("").ambient(), 0);
  // repeated edges collapse
  EXPECT_EQ(parse_edge_list("0 1\n1 0\n").size(), 1);
}

TEST(EdgeList, RejectsMalformedInput) {
  EXPECT_THROW(parse_edge_list("1 two\n"), ParseError);
  EXPECT_THROW(parse_edge_list("1 2 3\n"), ParseError);
  EXPECT_THROW(parse_edge_list("4 4\n"), ParseError);
  EXPECT_THROW(parse_edge_list("-1 2\n"), ParseError);
  EXPECT_THROW(parse_edge_list("n=3\n0 3\n"), ParseError);
  EXPECT_THROW(parse_edge_list("n=3\nn=4\n"), ParseError);
  EXPECT_THROW(parse_edge_list("n=x\n"), ParseError);
  EXPECT_THROW(parse_edge_list("0 16\n"), CapExceeded);
}

TEST(EdgeList, WriteThenReadRoundTrips) {
  EdgeSet f(7, {{0, 6}, {2, 3}, {1, 5}});
  std::ostringstream os;
  write_edge_list(os, f);
  EXPECT_EQ(os.str(), "n=7\n0 6\n1 5\n2 3\n");
  EXPECT_EQ(parse_edge_list(os.str()), f);
}

TEST(MatroidFile, BasesRoundTrip) {
  auto u = ExplicitMatroid::uniform(2, 4);
  std::ostringstream os;
  write_matroid(os, u);
  EXPECT_EQ(os.str(), "ground_size 4\nrank 2\nbases 6\n3\n5\n6\n9\n10\n12\n");
  auto back = parse_matroid(os.str());
  EXPECT_TRUE(back.same_rank_function(u));

  auto r6 = k5_paving_matroid(6);
  std::ostringstream big;
  write_matroid(big, r6);
  EXPECT_TRUE(parse_matroid(big.str()).same_rank_function(r6));
  EXPECT_EQ(bases(r6).size(), 2997u);  // C(15,10) minus the six K5 copies
}

TEST(MatroidFile, OracleLine) {
  auto m = parse_matroid("ground_size 15\n# the cofactor matroid of K6\noracle:cofactor n=6 s=2 seeds=1,2,3\n");
  EXPECT_EQ(m.rank(), 12);
  auto t = parse_matroid("ground_size 15\noracle:cofactor n=6 s=2 seeds=1,2,3 truncate=10\n");
  EXPECT_TRUE(t.same_rank_function(k5_paving_matroid(6)));
  auto spec = parse_oracle_line("oracle:cofactor n=5 s=1 seeds=4,9 modulus=1000003", 1);
  EXPECT_EQ(spec.n, 5);
  EXPECT_EQ(spec.s, 1);
  EXPECT_EQ(spec.options.seeds, (std::vector<std::uint64_t>{4, 9}));
  EXPECT_EQ(spec.options.modulus, 1000003u);
  EXPECT_EQ(spec.truncate, -1);
}

TEST(MatroidFile, RejectsBadFiles) {
  // fails basis exchange: {0,1} and {2,3}
  EXPECT_THROW(parse_matroid("ground_size 4\nrank 2\nbases 2\n3\n12\n"), ParseError);
  EXPECT_THROW(parse_matroid("ground_size 4\nrank 2\nbases 2\n3\n"), ParseError);
  EXPECT_THROW(parse_matroid("ground_size 4\nrank 2\nbases 1\n7\n"), ParseError);
  EXPECT_THROW(parse_matroid("ground_size 4\nrank 2\nbases 2\n3\n3\n"), ParseError);
  EXPECT_THROW(parse_matroid("ground_size 4\nrank 2\nbases 1\n48\n"), ParseError);
  EXPECT_THROW(parse_matroid("ground_size 4\nrank 2\n"), ParseError);
  EXPECT_THROW(parse_matroid("rank 2\n"), ParseError);
  EXPECT_THROW(parse_matroid("ground_size 20\nrank 1\nbases 1\n1\n"), CapExceeded);
  EXPECT_THROW(parse_matroid("ground_size 30\nrank 1\nbases 1\n1\n"), CapExceeded);
  EXPECT_THROW(parse_matroid("ground_size 10\noracle:cofactor n=6 s=2 seeds=1\n"), ParseError);
  EXPECT_THROW(parse_matroid("ground_size 15\noracle:cofactor s=2 seeds=1\n"), ParseError);
  EXPECT_THROW(parse_matroid("ground_size 15\noracle:cofactor n=6 colour=red\n"), ParseError);
  EXPECT_THROW(parse_matroid("ground_size 15\noracle:cofactor n=6 truncate=13\n"), ParseError);
  EXPECT_THROW(parse_matroid("ground_size 15\noracle:cofactor n=6\nextra\n"), ParseError);
  EXPECT_THROW(parse_matroid("ground_size 15\noracle:grassmann n=6\n"), ParseError);
}
