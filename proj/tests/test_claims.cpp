#include "cm2/claims.hpp"
#include "cm2/indices.hpp"
#include "fixtures.hpp"

#include <gtest/gtest.h>

using namespace cm2;

TEST(Claims, CompleteSplitGraphsPassEverything) {
  for (std::size_t n = 2; n <= 10; ++n)
    for (std::size_t m = 1; m < n; ++m) {
      const auto report = check_claims(complete_split(m, n));
      EXPECT_TRUE(report.all_passed()) << "m=" << m << " n=" << n;
    }
}

TEST(Claims, EdgelessPairPasses) {
  EXPECT_TRUE(check_claims(new_graph(2)).all_passed());
}

TEST(Claims, PathOnFourVerticesBreaksNesting) {
  const auto report = check_claims(fixtures::path(4));
  const auto &c6 = report[Claim::out_sets_equal];
  EXPECT_FALSE(c6.passed);
  ASSERT_EQ(c6.counterexample.size(), 3U);
  EXPECT_EQ(c6.counterexample[0], 1U);
  EXPECT_EQ(c6.counterexample[1], 2U);
  EXPECT_FALSE(report[Claim::out_sets_nested].passed);
  EXPECT_FALSE(report[Claim::x_dominates_y].passed);
  EXPECT_TRUE(report[Claim::y_independent].passed);
  EXPECT_TRUE(report[Claim::x_to_y_arcs].passed);
}

TEST(Claims, NonadjacentXPairWithDifferentDegrees) {
  // P3 on 0-1-2 plus isolated 3: 1 and 3 are both in X.
  const auto g = fixtures::from_edges(4, {{0, 1}, {1, 2}});
  const auto c1 = check_claims(g)[Claim::nonadjacent_x_pairs];
  EXPECT_FALSE(c1.passed);
  EXPECT_EQ(c1.counterexample, (std::vector<Vertex>{1, 3}));
}

TEST(Claims, NonadjacentXPairWithRepeatedDegree) {
  // K̄3: every pair is nonadjacent and all three share degree 0.
  const auto c1 = check_claims(new_graph(3))[Claim::nonadjacent_x_pairs];
  EXPECT_FALSE(c1.passed);
  EXPECT_EQ(c1.counterexample, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_FALSE(check_claims(new_graph(4))[Claim::x_nearly_complete].passed);
}

TEST(Claims, EdgeInsideY) {
  // Hubs 0,1 each see u=2, v=3 and two private leaves; u-v is undirected inside Y.
  const auto g = fixtures::from_edges(8, {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 6}, {1, 7}, {2, 3}});
  const auto ctx = orient(g);
  ASSERT_TRUE(ctx.is_y(2));
  ASSERT_TRUE(ctx.is_y(3));
  const auto report = check_claims(g);
  EXPECT_EQ(report[Claim::no_edge_inside_y].counterexample, (std::vector<Vertex>{2, 3}));
  EXPECT_EQ(report[Claim::y_independent].counterexample, (std::vector<Vertex>{2, 3}));
}

TEST(Claims, ArcFromYIntoX) {
  // Hubs 0,1 (degree 4) feed v=2, which points at u=3; u points at leaf 4.
  // u ends up in X with an arc arriving from the Y vertex v.
  const auto g = fixtures::from_edges(
      11, {{0, 2}, {0, 5}, {0, 6}, {0, 7}, {1, 2}, {1, 8}, {1, 9}, {1, 10}, {2, 3}, {3, 4}});
  const auto ctx = orient(g);
  ASSERT_TRUE(ctx.is_y(2));
  ASSERT_TRUE(ctx.is_x(3));
  ASSERT_TRUE(ctx.mixed.has_arc(2, 3));
  const auto report = check_claims(g);
  EXPECT_EQ(report[Claim::x_to_y_arcs].counterexample, (std::vector<Vertex>{3, 2}));
  EXPECT_EQ(report[Claim::y_entered_from_x].counterexample, (std::vector<Vertex>{3, 2}));
  EXPECT_TRUE(report[Claim::y_independent].passed);
}

TEST(Claims, LabelsAreStable) {
  EXPECT_EQ(claim_label(Claim::nonadjacent_x_pairs), "claim1");
  EXPECT_EQ(claim_label(Claim::x_dominates_y), "corollary3");
  const auto report = check_claims(fixtures::path(4));
  for (std::size_t i = 0; i < claim_count; ++i)
    EXPECT_EQ(static_cast<std::size_t>(report.results[i].claim), i);
}
