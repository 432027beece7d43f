// underdog: command-line driver for rankings, underdog scores, factor
// tables, PCA, correlation and control-chart data.
//
// Exit codes: 0 success, 1 internal error, 2 input or validation error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "underdog/csv.hpp"
#include "underdog/factors.hpp"
#include "underdog/ingest.hpp"
#include "underdog/multivariate.hpp"
#include "underdog/report.hpp"
#include "underdog/simulate.hpp"
#include "underdog/stats.hpp"

namespace fs = std::filesystem;
using namespace underdog;

namespace
{

enum class OutFormat
{
   CSV,
   JSON,
};

struct RunConfig
{
   std::vector<std::string> inputs;
   std::vector<double> lambdas;
   std::optional<double> tau;
   double ci_level = 0.95;
   std::optional<std::uint64_t> seed;
   OutFormat format = OutFormat::CSV;
   std::string policy = "published";
   std::string table;
   std::string output;
   bool carry_absent = false;
   bool exclude_unseen = false;
   bool strict_mean = false;
   bool standardize = false;
   bool ci_normal = false;
   bool with_uas = false;

   // simulate
   int teams = 8;
   int editions = 6;
   double upset = 0.2;
   double draw = 0.1;
   double participation = 1.0;
   std::string tournament = "round-robin";
   std::string sport = "Synthetic";
};

class UsageError : public std::runtime_error
{
  public:
   using std::runtime_error::runtime_error;
};

std::optional<std::string> data_dir()
{
   if (const char* d = std::getenv("UNDERDOG_DATA_DIR"); d && *d) return std::string(d);
   return std::nullopt;
}

/// Writes `content` to <output>/<name>, or to stdout when no directory is set
/// and `primary` holds.
void emit(const RunConfig& cfg, const std::string& name, const std::string& content, bool primary)
{
   if (cfg.output.empty()) {
      if (primary) std::cout << content;
      return;
   }
   fs::create_directories(cfg.output);
   csv::write_file((fs::path(cfg.output) / name).string(), content);
}

MatchScoreDataset load_inputs(const RunConfig& cfg)
{
   if (cfg.inputs.empty()) throw UsageError("no corpus file given");
   std::vector<MatchRecord> all;
   for (const auto& path : cfg.inputs) {
      const auto d = load_matches(path);
      const auto recs = d.records();
      all.insert(all.end(), recs.begin(), recs.end());
   }
   return MatchScoreDataset(std::move(all));
}

double single_lambda(const RunConfig& cfg)
{
   if (cfg.lambdas.size() > 1) throw UsageError("this command takes one --lambda");
   return cfg.lambdas.empty() ? 1.0 : cfg.lambdas.front();
}

std::vector<double> lambda_list(const RunConfig& cfg)
{
   return cfg.lambdas.empty() ? std::vector<double>{1.0} : cfg.lambdas;
}

UnderdogOptions underdog_options(const RunConfig& cfg) { return {cfg.carry_absent, cfg.exclude_unseen, cfg.strict_mean}; }

FactorsTable input_table(const RunConfig& cfg)
{
   if (!cfg.table.empty()) return parse_factors_table(csv::read_file(cfg.table));
   return load_bundled_factors(data_dir()).normalized;
}

void cmd_rank(const RunConfig& cfg)
{
   const auto data = load_inputs(cfg);
   const auto runs = report::run_rank(data, single_lambda(cfg), {cfg.carry_absent});
   if (cfg.format == OutFormat::JSON) {
      emit(cfg, "rank.json", report::dump(report::rank_json(runs)), true);
      return;
   }
   emit(cfg, "edition_rankings.csv", report::edition_rankings_csv(runs), true);
   emit(cfg, "weighted_rankings.csv", report::weighted_rankings_csv(runs), true);
}

void cmd_uas(const RunConfig& cfg)
{
   const auto data = load_inputs(cfg);
   const auto lambdas = lambda_list(cfg);
   const auto runs = report::run_uas(data, {lambdas, cfg.tau, underdog_options(cfg)});
   emit(cfg, "uas_report.json", report::dump(report::uas_json(runs)), cfg.format == OutFormat::JSON);
   emit(cfg, "uas_table.csv", report::uas_table_csv(runs, lambdas), cfg.format == OutFormat::CSV);
   emit(cfg, "uas_editions.csv", report::uas_editions_csv(runs), false);
}

void cmd_stats(const RunConfig& cfg)
{
   if (!(cfg.ci_level > 0.0 && cfg.ci_level < 1.0)) throw UsageError("--ci-level must lie in (0, 1)");
   const auto data = load_inputs(cfg);
   const auto runs = report::run_uas(data, {{single_lambda(cfg)}, cfg.tau, underdog_options(cfg)});
   const auto s = report::run_stats(runs, cfg.ci_level, cfg.ci_normal);
   emit(cfg, "stats.json", report::dump(report::stats_json(s, cfg.ci_level)), cfg.format == OutFormat::JSON);
   const bool csv_out = cfg.format == OutFormat::CSV;
   emit(cfg, "confidence_intervals.csv", report::ci_csv(s), csv_out);
   emit(cfg, "kruskal_wallis.csv", report::kruskal_csv(s.kruskal), csv_out);
   emit(cfg, "dunn_bonferroni.csv", report::dunn_csv(s), csv_out);
   emit(cfg, "laney.csv", report::laney_csv(s.laney, s.laney_rows), csv_out);
}

/// Input is a points file (header label,successes,n or label,proportion,n) or a corpus.
void cmd_laney(const RunConfig& cfg)
{
   if (cfg.inputs.size() == 1) {
      const auto text = csv::read_file(cfg.inputs.front());
      const auto rows = csv::parse(text);
      const auto header = rows.empty() ? std::string() : csv::join(rows.front().fields);
      const bool as_proportion = header == "label,proportion,n";
      if (as_proportion || header == "label,successes,n") {
         std::vector<std::tuple<std::string, double, double>> counts;
         for (std::size_t k = 1; k < rows.size(); ++k) {
            const auto& f = rows[k].fields;
            if (f.size() != 3) throw ParseError(rows[k].line, "expected 3 fields");
            const auto v = csv::parse_double(f[1]);
            const auto n = csv::parse_double(f[2]);
            if (!v || !n) throw ParseError(rows[k].line, "expected numbers");
            const double s = as_proportion ? *v * *n : *v;
            if (s < 0.0 || s > *n) throw ValidationError(rows[k].line, "need 0 <= successes <= n");
            counts.push_back({f[0], s, *n});
         }
         const auto [chart, out] = report::laney_from_counts(counts);
         emit(cfg, "laney.json", report::dump(report::laney_json(chart, out)), cfg.format == OutFormat::JSON);
         emit(cfg, "laney.csv", report::laney_csv(chart, out), cfg.format == OutFormat::CSV);
         return;
      }
   }
   const auto data = load_inputs(cfg);
   const auto runs = report::run_uas(data, {{single_lambda(cfg)}, cfg.tau, underdog_options(cfg)});
   const auto [chart, out] = report::laney_from_counts(report::aggregated_counts(runs));
   emit(cfg, "laney.json", report::dump(report::laney_json(chart, out)), cfg.format == OutFormat::JSON);
   emit(cfg, "laney.csv", report::laney_csv(chart, out), cfg.format == OutFormat::CSV);
}

void cmd_factors(const RunConfig& cfg)
{
   const auto policy = factors::parse_policy(cfg.policy);
   if (!policy) throw UsageError("--policy must be published, mean-raw or mean-normalized");
   const auto bundled = load_bundled_factors(data_dir());
   const auto raw = cfg.table.empty() ? bundled.raw : parse_factors_table(csv::read_file(cfg.table));
   const auto table = factors::build_factors_pipeline(raw, bundled.companions, *policy, bundled.normalized);
   emit(cfg, "factors_normalized.csv", report::table_csv(table), true);
}

void cmd_pca(const RunConfig& cfg)
{
   auto table = input_table(cfg);
   std::vector<double> uas_values;
   const auto uas = load_bundled_uas(data_dir());
   if (cfg.with_uas) table = report::join_uas(table, uas);
   for (const auto& sport : table.sports) {
      const auto* row = uas.find(sport);
      uas_values.push_back(row ? row->uas.front() : 0.0);
   }
   const auto result = pca(to_matrix(table), cfg.standardize);
   emit(cfg, "scree.csv", report::scree_csv(result), true);
   emit(cfg, "loadings.csv", report::loadings_csv(result, table.factors), false);
   emit(cfg, "scores.csv", report::scores_csv(result, table.sports), false);
   emit(cfg, "biplot.svg", biplot_svg(biplot_data(result, 2.0), table.sports, table.factors, tercile_shades(uas_values)), false);
}

void cmd_corr(const RunConfig& cfg)
{
   auto table = input_table(cfg);
   if (cfg.with_uas) table = report::join_uas(table, load_bundled_uas(data_dir()));
   const auto m = stats::pearson_matrix(table);
   emit(cfg, "correlation.csv", report::correlation_csv(m), true);
   if (cfg.with_uas) {
      std::string ranked = "factor,correlation_with_uas\n";
      for (const auto& [name, r] : report::correlates_of(m, "UAS")) ranked += csv::join({name, report::fx(r)}) + "\n";
      emit(cfg, "uas_correlates.csv", ranked, false);
   }
}

void cmd_simulate(const RunConfig& cfg)
{
   sim::SimConfig sc;
   sc.n_teams = cfg.teams;
   sc.n_editions = cfg.editions;
   sc.upset_probability = cfg.upset;
   sc.draw_probability = cfg.draw;
   sc.participation = cfg.participation;
   sc.seed = cfg.seed.value_or(0);
   sc.sport = cfg.sport;
   if (cfg.tournament == "round-robin") sc.format = sim::TournamentFormat::RoundRobin;
   else if (cfg.tournament == "groups") sc.format = sim::TournamentFormat::GroupsPlusKnockout;
   else throw UsageError("--tournament must be round-robin or groups");
   const auto corpus = sim::generate_corpus(sc);
   if (cfg.format == OutFormat::JSON)
      emit(cfg, "corpus.json", write_matches_json(corpus), true);
   else
      emit(cfg, "corpus.csv", write_matches_csv(corpus), true);
}

} // namespace

int main(int argc, char** argv)
{
   CLI::App app{"Team rankings, underdog achievement scores and randomness-factor analysis"};
   app.require_subcommand(1);
   RunConfig cfg;
   std::string format = "csv";

   const auto common = [&](CLI::App* sub) {
      sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
      sub->add_option("--output", cfg.output, "Directory for output files (default: primary output to stdout)");
   };
   const auto corpus_opts = [&](CLI::App* sub, bool many_lambdas) {
      sub->add_option("inputs", cfg.inputs, "Match corpus files (CSV or .json)")->required();
      auto* lam = sub->add_option("--lambda", cfg.lambdas, "Decay factor in [0, 1]");
      if (many_lambdas) lam->expected(1, -1);
      sub->add_flag("--carry-absent", cfg.carry_absent, "Decay instead of resetting absent teams");
   };
   const auto underdog_opts = [&](CLI::App* sub) {
      sub->add_option("--tau", cfg.tau, "Weak-team threshold (default: median rank difference)");
      sub->add_flag("--exclude-unseen", cfg.exclude_unseen, "Skip matches with teams absent from the prior ranking");
      sub->add_flag("--strict-mean", cfg.strict_mean, "Average over all editions, undefined ones as 0");
   };

   auto* rank = app.add_subcommand("rank", "Per-edition and decay-weighted rankings");
   corpus_opts(rank, false);
   common(rank);

   auto* uas = app.add_subcommand("uas", "Underdog achievement scores per sport");
   corpus_opts(uas, true);
   underdog_opts(uas);
   common(uas);

   auto* st = app.add_subcommand("stats", "Confidence intervals, Kruskal-Wallis, Dunn and Laney chart");
   corpus_opts(st, false);
   underdog_opts(st);
   st->add_option("--ci-level", cfg.ci_level, "Confidence level");
   st->add_flag("--ci-normal", cfg.ci_normal, "Normal instead of Student-t intervals");
   common(st);

   auto* laney = app.add_subcommand("laney", "Laney p'-chart limits");
   corpus_opts(laney, false);
   underdog_opts(laney);
   common(laney);

   auto* fac = app.add_subcommand("factors", "Normalized randomness-factor table");
   fac->add_option("--policy", cfg.policy, "Imputation: published, mean-raw, mean-normalized");
   fac->add_option("--table", cfg.table, "Raw factor table (default: bundled)");
   common(fac);

   auto* pc = app.add_subcommand("pca", "Principal components of the factor table");
   pc->add_flag("--standardize", cfg.standardize, "Scale columns to unit variance");
   pc->add_flag("--with-uas", cfg.with_uas, "Append the published lambda = 1 scores");
   pc->add_option("--table", cfg.table, "Normalized factor table (default: bundled)");
   common(pc);

   auto* corr = app.add_subcommand("corr", "Pearson correlation matrix of the factor table");
   corr->add_flag("--with-uas", cfg.with_uas, "Append the published lambda = 1 scores");
   corr->add_option("--table", cfg.table, "Normalized factor table (default: bundled)");
   common(corr);

   auto* simc = app.add_subcommand("simulate", "Generate a seeded synthetic corpus");
   simc->add_option("--seed", cfg.seed, "PRNG seed");
   simc->add_option("--teams", cfg.teams, "Number of teams");
   simc->add_option("--editions", cfg.editions, "Number of editions");
   simc->add_option("--upset", cfg.upset, "Upset probability in [0, 0.5]");
   simc->add_option("--draw", cfg.draw, "Draw probability");
   simc->add_option("--participation", cfg.participation, "Round robin: chance each team enters an edition");
   simc->add_option("--tournament", cfg.tournament, "round-robin or groups");
   simc->add_option("--sport", cfg.sport, "Sport label");
   common(simc);

   try {
      app.parse(argc, argv);
   }
   catch (const CLI::ParseError& e) {
      if (e.get_exit_code() == 0) return app.exit(e);
      app.exit(e);
      return 2;
   }
   cfg.format = format == "json" ? OutFormat::JSON : OutFormat::CSV;

   try {
      for (double l : cfg.lambdas) check_lambda(l);
      if (rank->parsed()) cmd_rank(cfg);
      else if (uas->parsed()) cmd_uas(cfg);
      else if (st->parsed()) cmd_stats(cfg);
      else if (laney->parsed()) cmd_laney(cfg);
      else if (fac->parsed()) cmd_factors(cfg);
      else if (pc->parsed()) cmd_pca(cfg);
      else if (corr->parsed()) cmd_corr(cfg);
      else if (simc->parsed()) cmd_simulate(cfg);
   }
   catch (const UsageError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
   }
   catch (const Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return e.kind() == ErrorKind::Internal ? 1 : 2;
   }
   catch (const std::exception& e) {
      std::cerr << "internal error: " << e.what() << "\n";
      return 1;
   }
   return 0;
}
