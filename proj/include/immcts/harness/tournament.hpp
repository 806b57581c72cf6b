#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "immcts/harness/match.hpp"

namespace immcts {

struct BracketMatch {
  std::string winner;
  std::string loser;
  std::int64_t winner_wins = 0;
  std::int64_t loser_wins = 0;
};

struct BracketRound {
  std::vector<BracketMatch> matches;
  std::optional<std::string> bye;
};

struct TournamentResult {
  std::vector<BracketRound> rounds;
  std::string winner;
  std::string log;
};

/// Pairings of one round: first against last, second against second to last,
/// and so on. With an odd count the middle entry gets a bye.
inline std::vector<std::pair<std::size_t, std::size_t>> fold_pairings(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n / 2; ++i) out.emplace_back(i, n - 1 - i);
  return out;
}

/// Round sizes of a single-elimination bracket with byes, starting at n.
inline std::vector<std::size_t> bracket_sizes(std::size_t n) {
  std::vector<std::size_t> sizes{n};
  while (n > 1) {
    n = (n + 1) / 2;
    sizes.push_back(n);
  }
  return sizes;
}

inline std::string format_round(int number, const BracketRound& round) {
  std::string out = "round " + std::to_string(number) + "\n";
  for (const auto& m : round.matches)
    out += "winner " + m.winner + " (" + std::to_string(m.winner_wins) + ") vs. loser " + m.loser + " (" +
           std::to_string(m.loser_wins) + ")\n";
  if (round.bye) out += *round.bye + " gets a by\n";
  return out;
}

using MatchRunner = std::function<WinRateReport(const MatchSpec&)>;

/// Single elimination seeded by input order. Each pairing is one match built
/// from `base` (game, budget, protocol, workers) with the two engines
/// substituted; the side with more wins advances, the earlier entry on ties.
/// Winners keep their match order, and a bye goes to the back of the list.
inline TournamentResult run_elimination_tournament(const std::vector<EngineSpec>& engines, const MatchSpec& base,
                                                   int games_per_round, MatchRunner runner = {}) {
  if (engines.size() < 2) throw std::invalid_argument("tournament needs at least two engines");
  if (!runner) runner = [](const MatchSpec& s) { return run_match(s).report; };
  TournamentResult result;
  std::vector<EngineSpec> alive = engines;
  int round_no = 0;
  while (alive.size() > 1) {
    ++round_no;
    BracketRound round;
    std::vector<EngineSpec> next;
    const auto pairs = fold_pairings(alive.size());
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const auto [i, j] = pairs[k];
      MatchSpec spec = base;
      spec.a = alive[i];
      spec.b = alive[j];
      spec.games = games_per_round;
      spec.seed = mix_seed(base.seed, static_cast<std::uint64_t>(round_no) * 1000 + k);
      const WinRateReport rep = runner(spec);
      const bool a_wins = rep.wins_a >= rep.wins_b;
      round.matches.push_back({a_wins ? alive[i].name : alive[j].name, a_wins ? alive[j].name : alive[i].name,
                               a_wins ? rep.wins_a : rep.wins_b, a_wins ? rep.wins_b : rep.wins_a});
      next.push_back(a_wins ? alive[i] : alive[j]);
    }
    if (alive.size() % 2 == 1) {
      const auto& bye = alive[alive.size() / 2];
      round.bye = bye.name;
      next.push_back(bye);
    }
    result.log += format_round(round_no, round) + "\n";
    result.rounds.push_back(std::move(round));
    alive = std::move(next);
  }
  result.winner = alive.front().name;
  result.log += "Winner: " + result.winner + "\n";
  return result;
}

}  // namespace immcts
