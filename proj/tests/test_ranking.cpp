#include <algorithm>
#include <array>
#include <limits>

#include <gtest/gtest.h>

#include "support.hpp"
#include "underdog/ranking.hpp"

using namespace underdog;
using testing_support::corpus;
using testing_support::names;

namespace
{
EditionRanking only_edition(const MatchScoreDataset& d)
{
   return compute_edition_ranking(d, d.editions().front());
}
} // namespace

TEST(EditionRanking, WinnerFirst)
{
   EXPECT_EQ(names(only_edition(corpus({"2000 A 1 0 B"}))), (std::vector<std::string>{"A", "B"}));
}

TEST(EditionRanking, ThreeTeamsMatchesExhaustiveComparatorCheck)
{
   const auto d = corpus({"2000 A 2 1 B", "2000 A 1 0 C", "2000 B 3 2 C"});
   const auto r = only_edition(d);
   EXPECT_EQ(names(r), (std::vector<std::string>{"A", "B", "C"}));

   // Among all 3! orderings exactly one is sorted under the comparator.
   std::array<int, 3> idx{0, 1, 2};
   int sorted_count = 0;
   do {
      std::vector<TeamTally> order{r.entries[static_cast<std::size_t>(idx[0])], r.entries[static_cast<std::size_t>(idx[1])],
                                   r.entries[static_cast<std::size_t>(idx[2])]};
      bool ok = true;
      for (std::size_t k = 0; k + 1 < order.size(); ++k) ok = ok && ranks_above(order[k], order[k + 1]);
      if (ok) {
         ++sorted_count;
         EXPECT_EQ(idx, (std::array<int, 3>{0, 1, 2}));
      }
   } while (std::next_permutation(idx.begin(), idx.end()));
   EXPECT_EQ(sorted_count, 1);
}

TEST(EditionRanking, TotalScoreThenNameTieBreak)
{
   const auto r = only_edition(corpus({"2000 A 1 0 B", "2000 C 5 0 D"}));
   EXPECT_EQ(names(r), (std::vector<std::string>{"C", "A", "B", "D"}));
}

TEST(EditionRanking, NameTieBreakIgnoresCase)
{
   const auto r = only_edition(corpus({"2000 zeta 0 0 Alpha", "2000 beta 0 0 Gamma"}));
   EXPECT_EQ(names(r), (std::vector<std::string>{"Alpha", "beta", "Gamma", "zeta"}));
}

TEST(EditionRanking, TallyCounts)
{
   const auto r = only_edition(corpus({"2000 A 2 1 B", "2000 A 1 1 C", "2000 B 0 3 C"}));
   // A and C both go 1-1-0; C scored more.
   EXPECT_EQ(names(r), (std::vector<std::string>{"C", "A", "B"}));
   const auto& a = r.entries[1];
   EXPECT_EQ(a.team, TeamId("A"));
   EXPECT_EQ(a.played, 2);
   EXPECT_EQ(a.wins, 1);
   EXPECT_EQ(a.draws, 1);
   EXPECT_EQ(a.losses, 0);
   EXPECT_EQ(a.total_score, 3);
}

TEST(EditionRanking, EmptyEditionErrors)
{
   const auto d = corpus({"2000 A 1 0 B"});
   EXPECT_THROW(compute_edition_ranking(d, {"Soccer", "Cup", 2004}), Error);
   try {
      compute_edition_ranking(d, {"Soccer", "Cup", 2004});
   }
   catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::EmptyEdition);
   }
}

TEST(WeightedRanking, SingleEditionBaseCase)
{
   const auto d = corpus({"2000 A 1 0 B", "2000 A 1 0 C", "2000 B 1 0 C"});
   const auto rankings = compute_edition_rankings(d, "Soccer");
   const auto w = compute_weighted_ranking(rankings, 0.7);
   ASSERT_EQ(w.entries.size(), 3u);
   EXPECT_EQ(names(w), (std::vector<std::string>{"A", "B", "C"}));
   EXPECT_EQ(w.entries[0].weight, 2.0);
   EXPECT_EQ(w.entries[1].weight, 1.0);
   EXPECT_EQ(w.entries[2].weight, 0.0);
}

TEST(WeightedRanking, AbsentTeamResetAndNameTieBreak)
{
   // E1: (A, B, C); E2 without A: (C, B).
   const auto d = corpus({"2000 A 1 0 B", "2000 A 1 0 C", "2000 B 1 0 C", "2004 C 1 0 B"});
   const auto rankings = compute_edition_rankings(d, "Soccer");
   EXPECT_EQ(names(rankings[1]), (std::vector<std::string>{"C", "B"}));
   const auto w = compute_weighted_ranking(rankings, 1.0);
   EXPECT_EQ(names(w), (std::vector<std::string>{"B", "C", "A"}));
   EXPECT_EQ(w.entries[0].weight, 1.0);
   EXPECT_EQ(w.entries[1].weight, 1.0);
   EXPECT_EQ(w.entries[2].weight, 0.0);
   EXPECT_EQ(rank_position(TeamId("B"), w), 1u);
}

TEST(WeightedRanking, CarryAbsentKeepsDecayedWeight)
{
   const auto d = corpus({"2000 A 1 0 B", "2000 A 1 0 C", "2000 B 1 0 C", "2004 C 1 0 B"});
   const auto rankings = compute_edition_rankings(d, "Soccer");
   const auto w = compute_weighted_ranking(rankings, 0.5, {true});
   EXPECT_EQ(names(w), (std::vector<std::string>{"A", "C", "B"}));
   EXPECT_EQ(w.entries[0].weight, 1.0);  // 0.5 * 2
   EXPECT_EQ(w.entries[1].weight, 1.0);  // 1 + 0.5 * 0
   EXPECT_EQ(w.entries[2].weight, 0.5);  // 0 + 0.5 * 1
}

TEST(WeightedRanking, LambdaZeroFollowsLastEdition)
{
   const auto d = corpus({"2000 A 1 0 B", "2000 A 1 0 C", "2000 B 1 0 C", "2004 C 1 0 B", "2004 D 0 2 C"});
   const auto rankings = compute_edition_rankings(d, "Soccer");
   const auto w = compute_weighted_ranking(rankings, 0.0);
   EXPECT_EQ(names(rankings.back()), (std::vector<std::string>{"C", "B", "D"}));
   EXPECT_EQ(names(w), (std::vector<std::string>{"C", "B", "A", "D"}));
   EXPECT_EQ(w.entries[2].weight, 0.0);
}

TEST(WeightedRanking, HistoryHasOneRankingPerPrefix)
{
   const auto d = corpus({"2000 A 1 0 B", "2004 B 1 0 A", "2008 A 1 1 B"});
   const auto h = weighted_ranking_history(compute_edition_rankings(d, "Soccer"), 1.0);
   ASSERT_EQ(h.size(), 3u);
   EXPECT_EQ(h[0].up_to.year, 2000);
   EXPECT_EQ(h[2].up_to.year, 2008);
   // 1 + 0 each after two editions; the tie falls back to names.
   EXPECT_EQ(h[1].entries[0].weight, h[1].entries[1].weight);
   EXPECT_EQ(names(h[1]), (std::vector<std::string>{"A", "B"}));
   // The 2008 draw leaves A ahead on score.
   EXPECT_EQ(names(h[2]), (std::vector<std::string>{"A", "B"}));
}

TEST(WeightedRanking, InvalidLambda)
{
   const auto rankings = compute_edition_rankings(corpus({"2000 A 1 0 B"}), "Soccer");
   for (double bad : {-0.1, 1.5, std::numeric_limits<double>::quiet_NaN()}) {
      try {
         compute_weighted_ranking(rankings, bad);
         FAIL();
      }
      catch (const Error& e) {
         EXPECT_EQ(e.kind(), ErrorKind::InvalidLambda);
         EXPECT_NE(std::string(e.what()).find("[0, 1]"), std::string::npos);
      }
   }
   EXPECT_THROW(compute_weighted_ranking(std::vector<EditionRanking>{}, 0.5), Error);
}

TEST(RankPosition, TopBottomAndMissing)
{
   const auto r = only_edition(corpus({"2000 A 1 0 B", "2000 A 1 0 C", "2000 B 1 0 C"}));
   EXPECT_EQ(rank_position(TeamId("a"), r), 1u);
   EXPECT_EQ(rank_position(TeamId("C"), r), 3u);
   EXPECT_THROW(rank_position(TeamId("Z"), r), Error);
}

TEST(RankDifference, Basics)
{
   std::vector<std::string> specs;
   for (int k = 1; k <= 10; ++k)
      for (int j = k + 1; j <= 10; ++j) specs.push_back("2000 T" + std::to_string(k + 10) + " 1 0 T" + std::to_string(j + 10));
   const auto r = only_edition(corpus(specs));
   EXPECT_EQ(rank_difference(TeamId("T12"), TeamId("T20"), r), 8u);
   EXPECT_EQ(rank_difference(TeamId("T12"), TeamId("T13"), r), 1u);
   EXPECT_EQ(rank_difference(TeamId("T15"), TeamId("T15"), r), 0u);
}
