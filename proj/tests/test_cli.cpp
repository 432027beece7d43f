#include <filesystem>

#include <gtest/gtest.h>

#include "cli_runner.hpp"
#include "underdog/csv.hpp"
#include "underdog/ingest.hpp"

using testing_support::run_cli;
namespace fs = std::filesystem;

namespace
{
const std::string corpus = std::string(UNDERDOG_DATA_DIR) + "/synthetic_corpus.csv";

fs::path scratch(const std::string& name)
{
   const auto p = fs::temp_directory_path() / ("underdog_cli_" + name);
   fs::remove_all(p);
   return p;
}
} // namespace

TEST(Cli, HelpExitsZero)
{
   EXPECT_EQ(run_cli("--help").exit_code, 0);
   EXPECT_EQ(run_cli("uas --help").exit_code, 0);
}

TEST(Cli, UsageErrorsExitTwo)
{
   EXPECT_EQ(run_cli("").exit_code, 2);
   EXPECT_EQ(run_cli("frobnicate").exit_code, 2);
   EXPECT_EQ(run_cli("rank").exit_code, 2);
   EXPECT_EQ(run_cli("rank /nonexistent.csv").exit_code, 2);
   EXPECT_EQ(run_cli("factors --policy median").exit_code, 2);
   EXPECT_EQ(run_cli("simulate --teams 2").exit_code, 2);
}

TEST(Cli, LambdaOutOfRangeNamesValidRange)
{
   const auto r = run_cli("rank \"" + corpus + "\" --lambda 1.5", true);
   EXPECT_EQ(r.exit_code, 2);
   EXPECT_NE(r.out.find("[0, 1]"), std::string::npos) << r.out;
}

TEST(Cli, RankIsByteDeterministic)
{
   const auto a = run_cli("rank \"" + corpus + "\"");
   const auto b = run_cli("rank \"" + corpus + "\"");
   ASSERT_EQ(a.exit_code, 0);
   EXPECT_EQ(a.out, b.out);
   EXPECT_TRUE(a.out.starts_with("sport,competition,edition_year,position,team,"));
}

TEST(Cli, UasThreeLambdasGiveThreeColumns)
{
   const auto r = run_cli("uas \"" + corpus + "\" --lambda 1 0.5 0");
   ASSERT_EQ(r.exit_code, 0);
   EXPECT_TRUE(r.out.starts_with("sport,tau,uas_lambda_1,uas_lambda_0.5,uas_lambda_0\n")) << r.out;
   const auto rows = underdog::csv::parse(r.out);
   ASSERT_EQ(rows.size(), 4u);
   for (std::size_t k = 1; k < rows.size(); ++k)
      for (std::size_t c = 2; c < 5; ++c) {
         const double v = *underdog::csv::parse_double(rows[k].fields[c]);
         EXPECT_GE(v, 0.0);
         EXPECT_LE(v, 1.0);
      }
}

TEST(Cli, UasJsonAndOutputDirectory)
{
   const auto dir = scratch("uas");
   const auto r = run_cli("uas \"" + corpus + "\" --format json --output \"" + dir.string() + "\"");
   ASSERT_EQ(r.exit_code, 0);
   EXPECT_TRUE(r.out.empty());
   EXPECT_TRUE(fs::exists(dir / "uas_report.json"));
   EXPECT_TRUE(fs::exists(dir / "uas_table.csv"));
   EXPECT_TRUE(fs::exists(dir / "uas_editions.csv"));
}

TEST(Cli, DeterministicCorpusAveragesZero)
{
   const auto dir = scratch("det");
   const auto sim = run_cli("simulate --seed 4 --upset 0 --draw 0 --teams 6 --editions 4 --output \"" + dir.string() + "\"");
   ASSERT_EQ(sim.exit_code, 0);
   const auto r = run_cli("uas \"" + (dir / "corpus.csv").string() + "\" --tau 1");
   ASSERT_EQ(r.exit_code, 0);
   EXPECT_EQ(r.out, "sport,tau,uas_lambda_1\nSynthetic,1.000000,0.000000\n");
}

TEST(Cli, StatsEmitsAllTables)
{
   const auto dir = scratch("stats");
   const auto r = run_cli("stats \"" + corpus + "\" --output \"" + dir.string() + "\"");
   ASSERT_EQ(r.exit_code, 0);
   for (const char* f : {"stats.json", "confidence_intervals.csv", "kruskal_wallis.csv", "dunn_bonferroni.csv", "laney.csv"})
      EXPECT_TRUE(fs::exists(dir / f)) << f;
   const auto laney = underdog::csv::read_file((dir / "laney.csv").string());
   EXPECT_TRUE(laney.starts_with("label,proportion,n,center,sigma_z,ucl,lcl\n"));
   const auto dunn = underdog::csv::parse(underdog::csv::read_file((dir / "dunn_bonferroni.csv").string()));
   for (std::size_t k = 2; k < dunn.size(); ++k)
      EXPECT_LE(std::stod(dunn[k - 1].fields[4]), std::stod(dunn[k].fields[4]));
}

TEST(Cli, StatsNeedsTwoSports)
{
   const auto dir = scratch("one");
   ASSERT_EQ(run_cli("simulate --seed 1 --output \"" + dir.string() + "\"").exit_code, 0);
   EXPECT_EQ(run_cli("stats \"" + (dir / "corpus.csv").string() + "\"").exit_code, 2);
}

TEST(Cli, LaneyPointsFile)
{
   const auto dir = scratch("laney");
   fs::create_directories(dir);
   const auto file = (dir / "points.csv").string();
   underdog::csv::write_file(file, "label,successes,n\na,10,50\nb,12,40\nc,15,60\nd,12,30\n");
   const auto r = run_cli("laney \"" + file + "\"");
   ASSERT_EQ(r.exit_code, 0);
   EXPECT_EQ(r.out, "label,proportion,n,center,sigma_z,ucl,lcl\n"
                    "a,0.200000,50.000000,0.272222,1.265533,0.511207,0.033237\n"
                    "b,0.300000,40.000000,0.272222,1.265533,0.539416,0.005029\n"
                    "c,0.250000,60.000000,0.272222,1.265533,0.490385,0.054060\n"
                    "d,0.400000,30.000000,0.272222,1.265533,0.580751,0.000000\n");
}

TEST(Cli, CorrWithUasRanksCorrelates)
{
   const auto dir = scratch("corr");
   const auto r = run_cli("corr --with-uas --output \"" + dir.string() + "\"");
   ASSERT_EQ(r.exit_code, 0);
   const auto rows = underdog::csv::parse(underdog::csv::read_file((dir / "uas_correlates.csv").string()));
   ASSERT_EQ(rows.size(), 15u);
   EXPECT_EQ(rows.front().fields[0], "factor");
   // Rows are sorted by correlation, strongest positive first.
   for (std::size_t k = 2; k < rows.size(); ++k)
      EXPECT_GE(std::stod(rows[k - 1].fields[1]), std::stod(rows[k].fields[1]));
}

TEST(Cli, PcaScreeAndBiplot)
{
   const auto dir = scratch("pca");
   const auto r = run_cli("pca --output \"" + dir.string() + "\"");
   ASSERT_EQ(r.exit_code, 0);
   const auto scree = underdog::csv::parse(underdog::csv::read_file((dir / "scree.csv").string()));
   EXPECT_EQ(underdog::csv::join(scree.front().fields), "component,eigenvalue,explained_ratio,cumulative_ratio");
   EXPECT_EQ(scree[2].fields[3], "0.557819");
   EXPECT_TRUE(fs::exists(dir / "loadings.csv"));
   EXPECT_TRUE(fs::exists(dir / "scores.csv"));
   EXPECT_TRUE(underdog::csv::read_file((dir / "biplot.svg").string()).starts_with("<svg"));
}

TEST(Cli, FactorPoliciesDifferOnlyInCricketImputedCells)
{
   const auto pub = underdog::csv::parse(run_cli("factors --policy published").out);
   const auto raw = underdog::csv::parse(run_cli("factors --policy mean-raw").out);
   ASSERT_EQ(pub.size(), raw.size());
   std::vector<std::string> differing;
   for (std::size_t r = 1; r < pub.size(); ++r)
      for (std::size_t c = 1; c < pub[r].fields.size(); ++c)
         if (pub[r].fields[c] != raw[r].fields[c]) differing.push_back(pub[r].fields[0] + ":" + pub[0].fields[c]);
   EXPECT_EQ(differing, (std::vector<std::string>{"Cricket:GS/BS", "Cricket:GS/NPG", "Cricket:SI"}));
}

TEST(Cli, DataDirectoryOverride)
{
   const auto dir = scratch("data");
   fs::create_directories(dir);
   for (const char* f : {"factors_normalized.csv", "factors_raw.csv", "companion_factors.csv", "uas_table.csv", "editions.csv"})
      fs::copy_file(fs::path(UNDERDOG_DATA_DIR) / f, dir / f);
   const std::string env = "UNDERDOG_DATA_DIR=\"" + dir.string() + "\"";
   const auto base = run_cli("corr");
   const auto over = run_cli("corr", false, env);
   EXPECT_EQ(over.exit_code, 0);
   EXPECT_EQ(over.out, base.out);
   fs::remove(dir / "factors_normalized.csv");
   EXPECT_EQ(run_cli("corr", false, env).exit_code, 2);
}

TEST(Cli, SimulateJsonRoundTrips)
{
   const auto csv_out = run_cli("simulate --seed 9 --teams 8 --tournament groups");
   const auto json_out = run_cli("simulate --seed 9 --teams 8 --tournament groups --format json");
   ASSERT_EQ(csv_out.exit_code, 0);
   ASSERT_EQ(json_out.exit_code, 0);
   EXPECT_EQ(underdog::parse_matches_csv(csv_out.out), underdog::parse_matches_json(json_out.out));
}
