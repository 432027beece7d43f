#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "underdog/types.hpp"

namespace testing_support
{

using namespace underdog;

/// Match from "YEAR TEAM_I SCORE_I SCORE_J TEAM_J".
inline MatchRecord match(const std::string& spec, const std::string& sport = "Soccer", const std::string& comp = "Cup")
{
   std::istringstream in(spec);
   int year = 0, si = 0, sj = 0;
   std::string a, b;
   in >> year >> a >> si >> sj >> b;
   MatchRecord r;
   r.edition = {sport, comp, year};
   r.team_i = TeamId(a);
   r.team_j = TeamId(b);
   r.score_i = si;
   r.score_j = sj;
   return r;
}

inline MatchScoreDataset corpus(const std::vector<std::string>& specs, const std::string& sport = "Soccer")
{
   std::vector<MatchRecord> recs;
   for (const auto& s : specs) recs.push_back(match(s, sport));
   return MatchScoreDataset(std::move(recs));
}

inline std::vector<std::string> names(const EditionRanking& r)
{
   std::vector<std::string> out;
   for (const auto& e : r.entries) out.push_back(e.team.name());
   return out;
}

inline std::vector<std::string> names(const WeightedRanking& r)
{
   std::vector<std::string> out;
   for (const auto& e : r.entries) out.push_back(e.team.name());
   return out;
}

/// Random multi-edition corpus of one sport: every edition draws a random
/// subset of `pool` teams and a random set of pairings with random scores.
inline MatchScoreDataset random_corpus(std::mt19937_64& rng, const std::string& sport = "Soccer", int max_editions = 5,
                                       int pool = 8)
{
   std::uniform_int_distribution<int> n_ed(2, max_editions);
   std::uniform_int_distribution<int> score(0, 4);
   std::bernoulli_distribution coin(0.6);
   const int editions = n_ed(rng);
   std::vector<MatchRecord> recs;
   for (int h = 0; h < editions; ++h) {
      std::vector<int> teams;
      for (int t = 0; t < pool; ++t)
         if (coin(rng)) teams.push_back(t);
      while (teams.size() < 2) {
         const int t = static_cast<int>(rng() % static_cast<std::uint64_t>(pool));
         if (std::find(teams.begin(), teams.end(), t) == teams.end()) teams.push_back(t);
      }
      for (std::size_t a = 0; a < teams.size(); ++a)
         for (std::size_t b = a + 1; b < teams.size(); ++b) {
            if (!coin(rng) && !(a == 0 && b == 1)) continue;
            MatchRecord r;
            r.edition = {sport, "Cup", 1990 + 4 * h};
            r.team_i = TeamId("T" + std::to_string(teams[a]));
            r.team_j = TeamId("T" + std::to_string(teams[b]));
            r.score_i = score(rng);
            r.score_j = score(rng);
            recs.push_back(r);
         }
   }
   return MatchScoreDataset(std::move(recs));
}

} // namespace testing_support
