#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "immcts/core/game.hpp"
#include "immcts/core/rng.hpp"
#include "immcts/games/breakthrough.hpp"
#include "immcts/games/kalah.hpp"
#include "immcts/games/loa.hpp"
#include "immcts/harness/engine.hpp"
#include "immcts/harness/engine_spec.hpp"
#include "immcts/harness/report.hpp"

namespace immcts {

enum class Protocol { SwapSeats, KalahPaired };

inline std::string to_string(Protocol p) { return p == Protocol::SwapSeats ? "swap_seats" : "kalah_paired"; }

inline Protocol protocol_from_string(const std::string& s) {
  if (s == "swap_seats") return Protocol::SwapSeats;
  if (s == "kalah_paired") return Protocol::KalahPaired;
  throw std::invalid_argument("unknown protocol '" + s + "'");
}

enum class Outcome { A, B, Draw, Discarded };

inline std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::A: return "A";
    case Outcome::B: return "B";
    case Outcome::Draw: return "draw";
    case Outcome::Discarded: return "discarded";
  }
  return "?";
}

struct GameRecord {
  std::vector<std::string> moves;
  std::vector<std::string> stats;  // per-move engine summary
  int plies = 0;
  double reward_p1 = 0;
  std::optional<Player> forfeit;  // player that forfeited or resigned
  std::string diagnostic;
};

/// Plays one game from `start`; `p1` moves for P1 and `p2` for P2. Engines
/// get a per-move seed derived from `seed` and the ply, so replays match.
template <Game G>
GameRecord play_game(const G& start, Engine<G>& p1, Engine<G>& p2, std::uint64_t seed) {
  G g = start;
  GameRecord rec;
  std::vector<typename G::Move> legal;
  while (!g.is_terminal()) {
    const Player mover = g.to_move();
    Engine<G>& eng = mover == Player::P1 ? p1 : p2;
    const auto choice = eng.choose_move(g, mix_seed(seed, static_cast<std::uint64_t>(rec.plies)));
    if (!choice) {
      rec.forfeit = mover;
      rec.diagnostic = eng.name() + " resigned at ply " + std::to_string(rec.plies);
      break;
    }
    g.legal_moves(legal);
    if (std::find(legal.begin(), legal.end(), *choice) == legal.end()) {
      rec.forfeit = mover;
      rec.diagnostic = eng.name() + " played an illegal move at ply " + std::to_string(rec.plies);
      break;
    }
    rec.moves.push_back(g.move_to_string(*choice));
    rec.stats.push_back(eng.last_summary());
    g.apply(*choice);
    ++rec.plies;
  }
  rec.reward_p1 = rec.forfeit ? Reward::win_for(opponent(*rec.forfeit)).p1() : g.terminal_reward().p1();
  return rec;
}

/// Replays a record's move list from `start` and returns the final state.
template <Game G>
G replay(const G& start, const std::vector<std::string>& moves) {
  G g = start;
  for (const auto& text : moves) {
    const auto m = parse_move(g, text);
    if (!m) throw IllegalMoveError("replay: '" + text + "' is not legal at ply " + std::to_string(g.ply()));
    g.apply(*m);
  }
  return g;
}

struct MatchSpec {
  GameId game = GameId::Breakthrough;
  EngineSpec a;
  EngineSpec b;
  int games = 200;                  // swap_seats: total games; kalah_paired: 2 x pairs
  std::optional<std::int64_t> sims; // overrides the simulation budget of MCTS engines
  std::uint64_t seed = 1;
  Protocol protocol = Protocol::SwapSeats;
  int workers = 1;
  std::int64_t target_counted = 0;  // kalah_paired: play until this many decided pairs
  std::int64_t max_pairs = 0;       // cap used with target_counted; 0 means 4 x target
  int kalah_stones = 48;
  CiMethod ci = CiMethod::Normal;

  void validate() const {
    if (workers < 1) throw std::invalid_argument("workers must be >= 1");
    if (protocol == Protocol::KalahPaired && game != GameId::Kalah)
      throw std::invalid_argument("kalah_paired protocol requires game kalah");
    if (target_counted < 0 || max_pairs < 0) throw std::invalid_argument("pair counts must be >= 0");
    if (target_counted == 0 && (games < 2 || games % 2 != 0))
      throw std::invalid_argument("games must be even and >= 2 so seats can be swapped");
    if (sims && *sims <= 0) throw std::invalid_argument("sims must be > 0");
  }
};

struct MatchRecord {
  int game = 0;            // index in play order
  int board = 0;           // seed index (swap_seats) or pair index (kalah_paired)
  std::uint64_t seed = 0;  // game seed
  Player a_seat = Player::P1;
  Outcome winner = Outcome::Draw;
  std::optional<Outcome> pair_outcome;  // kalah_paired only
  GameRecord record;
};

struct MatchResult {
  std::vector<MatchRecord> records;
  WinRateReport report;
};

inline Outcome outcome_for_a(double reward_p1, Player a_seat) {
  const double a = reward_p1 * sign(a_seat);
  return a > 0 ? Outcome::A : a < 0 ? Outcome::B : Outcome::Draw;
}

/// Pair rule: a side scores the pair by winning one game and at least tying
/// the other. When each side wins once the same seat won both, so the pair
/// is discarded.
inline Outcome pair_outcome(Outcome first, Outcome second) {
  const int a = (first == Outcome::A) + (second == Outcome::A);
  const int b = (first == Outcome::B) + (second == Outcome::B);
  if (a > 0 && b > 0) return Outcome::Discarded;
  if (a > 0) return Outcome::A;
  if (b > 0) return Outcome::B;
  return Outcome::Draw;
}

namespace detail {

inline EngineSpec with_budget(EngineSpec s, const std::optional<std::int64_t>& sims) {
  if (sims && s.kind == EngineSpec::Kind::Mcts) s.mcts.budget = Budget::simulations(*sims);
  return s;
}

// Runs job(index, engine_a, engine_b) for indices [begin, end) on `workers`
// threads, each owning its own engines.
template <Game G, class Job>
void run_parallel(const MatchSpec& spec, int begin, int end, Job job) {
  const EngineSpec ea = with_budget(spec.a, spec.sims);
  const EngineSpec eb = with_budget(spec.b, spec.sims);
  std::atomic<int> next{begin};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    try {
      auto a = make_engine<G>(ea);
      auto b = make_engine<G>(eb);
      for (int i = next++; i < end; i = next++) job(i, *a, *b);
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next = end;
    }
  };
  const int n = std::max(1, std::min(spec.workers, end - begin));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < n; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  if (error) std::rethrow_exception(error);
}

template <Game G>
G standard_start(const MatchSpec& spec) {
  if constexpr (std::is_same_v<G, Kalah>) return Kalah(KalahRules{}, spec.kalah_stones / 12);
  else return G{};
}

}  // namespace detail

template <Game G>
MatchResult run_swap_match(const MatchSpec& spec) {
  spec.validate();
  const int half = spec.games / 2;
  const G start = detail::standard_start<G>(spec);
  MatchResult out;
  out.records.resize(static_cast<std::size_t>(spec.games));
  detail::run_parallel<G>(spec, 0, spec.games, [&](int i, Engine<G>& a, Engine<G>& b) {
    MatchRecord& m = out.records[static_cast<std::size_t>(i)];
    m.game = i;
    m.board = i % half;
    m.seed = mix_seed(spec.seed, static_cast<std::uint64_t>(m.board));
    m.a_seat = i < half ? Player::P1 : Player::P2;
    m.record = m.a_seat == Player::P1 ? play_game(start, a, b, m.seed) : play_game(start, b, a, m.seed);
    m.winner = outcome_for_a(m.record.reward_p1, m.a_seat);
  });
  out.report.method = spec.ci;
  for (const auto& m : out.records) {
    if (m.winner == Outcome::A) ++out.report.wins_a;
    else if (m.winner == Outcome::B) ++out.report.wins_b;
    else ++out.report.draws;
  }
  return out;
}

/// Paired-board Kalah: each random board is played twice with seats swapped.
inline MatchResult run_kalah_paired(const MatchSpec& spec) {
  spec.validate();
  if (spec.game != GameId::Kalah) throw std::invalid_argument("run_kalah_paired requires game kalah");
  const bool until_target = spec.target_counted > 0;
  const std::int64_t cap = until_target ? (spec.max_pairs > 0 ? spec.max_pairs : 4 * spec.target_counted)
                                        : spec.games / 2;
  std::vector<std::pair<MatchRecord, MatchRecord>> pairs;
  MatchResult out;
  out.report.method = spec.ci;
  std::int64_t played = 0;
  bool done = false;
  while (!done && played < cap) {
    std::int64_t batch = until_target ? std::max<std::int64_t>(spec.target_counted - out.report.decided(), spec.workers)
                                      : cap;
    batch = std::min(batch, cap - played);
    const int begin = static_cast<int>(played);
    const int end = static_cast<int>(played + batch);
    pairs.resize(static_cast<std::size_t>(end));
    detail::run_parallel<Kalah>(spec, begin, end, [&](int p, Engine<Kalah>& a, Engine<Kalah>& b) {
      const std::uint64_t seed = mix_seed(spec.seed, static_cast<std::uint64_t>(p));
      const Kalah board = Kalah::random_start(seed, spec.kalah_stones);
      auto& [g1, g2] = pairs[static_cast<std::size_t>(p)];
      g1.game = 2 * p;
      g2.game = 2 * p + 1;
      g1.board = g2.board = p;
      g1.seed = g2.seed = seed;
      g1.a_seat = Player::P1;
      g2.a_seat = Player::P2;
      g1.record = play_game(board, a, b, seed);
      g2.record = play_game(board, b, a, seed);
      g1.winner = outcome_for_a(g1.record.reward_p1, g1.a_seat);
      g2.winner = outcome_for_a(g2.record.reward_p1, g2.a_seat);
      g1.pair_outcome = g2.pair_outcome = pair_outcome(g1.winner, g2.winner);
    });
    for (int p = begin; p < end; ++p) {
      const auto& [g1, g2] = pairs[static_cast<std::size_t>(p)];
      switch (*g1.pair_outcome) {
        case Outcome::A: ++out.report.wins_a; break;
        case Outcome::B: ++out.report.wins_b; break;
        case Outcome::Draw: ++out.report.draws; break;
        case Outcome::Discarded: ++out.report.discards; break;
      }
      out.records.push_back(g1);
      out.records.push_back(g2);
      ++played;
      if (until_target && out.report.decided() >= spec.target_counted) {
        done = true;
        break;
      }
    }
  }
  return out;
}

template <Game G>
MatchResult run_match_for(const MatchSpec& spec) {
  if (spec.protocol == Protocol::KalahPaired) {
    if constexpr (std::is_same_v<G, Kalah>) return run_kalah_paired(spec);
    else throw std::invalid_argument("kalah_paired protocol requires game kalah");
  }
  return run_swap_match<G>(spec);
}

inline MatchResult run_match(const MatchSpec& spec) {
  switch (spec.game) {
    case GameId::Kalah: return run_match_for<Kalah>(spec);
    case GameId::Breakthrough: return run_match_for<Breakthrough>(spec);
    case GameId::Loa: return run_match_for<Loa>(spec);
  }
  throw std::invalid_argument("unknown game");
}

inline nlohmann::json to_json(const MatchSpec& s) {
  nlohmann::json j{{"game", to_string(s.game)},
                   {"engine_a", to_json(s.a)},
                   {"engine_b", to_json(s.b)},
                   {"games", s.games},
                   {"seed", s.seed},
                   {"protocol", to_string(s.protocol)},
                   {"workers", s.workers},
                   {"kalah_stones", s.kalah_stones},
                   {"ci", s.ci == CiMethod::Normal ? "normal" : "wilson"}};
  j["sims"] = s.sims ? nlohmann::json(*s.sims) : nlohmann::json(nullptr);
  if (s.target_counted > 0) j["target_counted"] = s.target_counted;
  if (s.max_pairs > 0) j["max_pairs"] = s.max_pairs;
  return j;
}

/// Engines may be given as inline labels or JSON objects.
inline MatchSpec match_spec_from_json(const nlohmann::json& j) {
  MatchSpec s;
  s.game = game_id_from_string(j.at("game").get<std::string>());
  auto engine = [&](const char* key) {
    const auto& e = j.at(key);
    return e.is_string() ? load_engine_spec(e.get<std::string>(), s.game) : engine_from_json(e, s.game);
  };
  s.a = engine("engine_a");
  s.b = engine("engine_b");
  s.games = j.value("games", s.games);
  if (j.contains("sims") && !j.at("sims").is_null()) s.sims = j.at("sims").get<std::int64_t>();
  s.seed = j.value("seed", s.seed);
  s.protocol = protocol_from_string(j.value("protocol", std::string("swap_seats")));
  s.workers = j.value("workers", s.workers);
  s.target_counted = j.value("target_counted", s.target_counted);
  s.max_pairs = j.value("max_pairs", s.max_pairs);
  s.kalah_stones = j.value("kalah_stones", s.kalah_stones);
  s.ci = j.value("ci", std::string("normal")) == "wilson" ? CiMethod::Wilson : CiMethod::Normal;
  s.validate();
  return s;
}

}  // namespace immcts
