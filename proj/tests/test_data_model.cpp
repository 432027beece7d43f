#include <gtest/gtest.h>

#include "support.hpp"
#include "underdog/csv.hpp"
#include "underdog/types.hpp"

using namespace underdog;
using testing_support::match;

TEST(TeamId, ComparesCaseInsensitivelyAndKeepsSpelling)
{
   const TeamId a("URUGUAY");
   const TeamId b(" Uruguay ");
   EXPECT_EQ(a, b);
   EXPECT_EQ(a.name(), "URUGUAY");
   EXPECT_EQ(b.name(), "Uruguay");
   EXPECT_EQ(a.key(), "uruguay");
   EXPECT_LT(TeamId("alpha"), TeamId("Beta"));
}

TEST(TeamId, EmptyNameRejected)
{
   EXPECT_THROW(TeamId("   "), ValidationError);
}

TEST(Stage, ParsesCaseInsensitively)
{
   EXPECT_EQ(parse_stage("group"), Stage::Group);
   EXPECT_EQ(parse_stage(" FINAL "), Stage::Final);
   EXPECT_FALSE(parse_stage("round of 3").has_value());
   for (auto s : {Stage::Group, Stage::RoundOf16, Stage::Quarterfinal, Stage::Semifinal, Stage::Final, Stage::Other})
      EXPECT_EQ(parse_stage(to_string(s)), s);
}

TEST(MatchRecord, WonOrDrew)
{
   const auto m = match("1930 Uruguay 1 0 Peru");
   EXPECT_TRUE(m.won_or_drew(TeamId("uruguay")));
   EXPECT_FALSE(m.won_or_drew(TeamId("PERU")));
   const auto d = match("1930 A 2 2 B");
   EXPECT_TRUE(d.is_draw());
   EXPECT_TRUE(d.won_or_drew(TeamId("A")));
   EXPECT_TRUE(d.won_or_drew(TeamId("B")));
}

TEST(MatchRecord, ValidationRejectsBadRecords)
{
   auto self = match("1930 A 1 0 B");
   self.team_j = TeamId("a");
   EXPECT_THROW(validate_record(self), ValidationError);
   auto neg = match("1930 A 1 0 B");
   neg.score_i = -1;
   EXPECT_THROW(validate_record(neg, 7), ValidationError);
   try {
      validate_record(neg, 7);
   }
   catch (const ValidationError& e) {
      EXPECT_EQ(e.line(), 7u);
      EXPECT_NE(std::string(e.what()).find("line 7"), std::string::npos);
   }
}

TEST(Dataset, GroupsByEditionInFirstAppearanceOrder)
{
   const auto d = testing_support::corpus({"1934 A 1 0 B", "1930 C 2 1 D", "1934 B 0 0 C"});
   ASSERT_EQ(d.editions().size(), 2u);
   EXPECT_EQ(d.editions()[0].year, 1934);
   EXPECT_EQ(d.matches(d.editions()[0]).size(), 2u);
   const auto chrono = d.chronological("Soccer");
   EXPECT_EQ(chrono.front().year, 1930);
   EXPECT_EQ(d.size(), 3u);
   EXPECT_TRUE(d.matches({"Soccer", "Cup", 1999}).empty());
   EXPECT_TRUE(d.chronological("Rugby").empty());
}

TEST(Dataset, DuplicateRecordRejected)
{
   EXPECT_THROW(testing_support::corpus({"1930 A 1 0 B", "1930 A 1 0 B"}), ValidationError);
}

TEST(Dataset, SportSubsetAndSports)
{
   std::vector<MatchRecord> recs{match("2000 A 1 0 B", "Soccer"), match("2000 A 1 0 B", "Rugby"), match("2004 C 1 0 B", "Soccer")};
   const MatchScoreDataset d(recs);
   EXPECT_EQ(d.sports(), (std::vector<std::string>{"Soccer", "Rugby"}));
   EXPECT_EQ(d.sport("Soccer").size(), 2u);
   EXPECT_EQ(d.sport("Rugby").size(), 1u);
}

TEST(FactorsTable, LookupIsCaseInsensitive)
{
   FactorsTable t{{"Soccer", "Rugby"}, {"BL", "SI"}, {{0.5, std::nullopt}, {1.0, 0.25}}};
   EXPECT_EQ(t.at("soccer", "bl"), Cell(0.5));
   EXPECT_FALSE(t.at("Soccer", "SI").has_value());
   EXPECT_EQ(t.column("SI")[1], Cell(0.25));
   EXPECT_FALSE(t.sport_index("Cricket").has_value());
}

TEST(Csv, SplitsQuotedFields)
{
   const auto rows = csv::parse("a,\"b,c\",\"d\"\"e\"\r\n\n x ,y,\n");
   ASSERT_EQ(rows.size(), 2u);
   EXPECT_EQ(rows[0].fields, (std::vector<std::string>{"a", "b,c", "d\"e"}));
   EXPECT_EQ(rows[1].line, 3u);
   EXPECT_EQ(rows[1].fields.size(), 3u);
}

TEST(Csv, UnterminatedQuoteIsParseError)
{
   EXPECT_THROW(csv::parse("a,\"b\n"), ParseError);
}

TEST(Csv, NumberFormatting)
{
   EXPECT_EQ(csv::format_fixed(0.5), "0.500000");
   EXPECT_EQ(csv::format_fixed(-0.0000001), "0.000000");
   EXPECT_EQ(csv::format_exact(0.1), "0.1");
   EXPECT_EQ(csv::format_cell(std::nullopt), "NA");
   EXPECT_EQ(csv::parse_cell("na", 1), std::nullopt);
   EXPECT_EQ(csv::parse_cell(" 2.5 ", 1), Cell(2.5));
   EXPECT_THROW(csv::parse_cell("x1", 1), ParseError);
   EXPECT_FALSE(csv::parse_int("1.5").has_value());
   EXPECT_EQ(csv::quote("a,b"), "\"a,b\"");
}
