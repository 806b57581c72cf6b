// immcts: play, match, paired-kalah, sweep-alpha, tournament, dump-tree.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "immcts/immcts.hpp"

namespace {

using namespace immcts;

struct CommonOpts {
  std::string game = "breakthrough";
  std::string engine_a = "mcts:ipp,im0.4";
  std::string engine_b = "mcts:ipp";
  int games = 200;
  std::int64_t sims = 0;
  std::uint64_t seed = 1;
  int workers = 1;
  std::string out;
  bool wilson = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_engines = true) {
  cmd->add_option("--game", o.game, "kalah | breakthrough | loa")->capture_default_str();
  if (with_engines) {
    cmd->add_option("--engine-a,-a", o.engine_a, "engine A: config.json or inline label")->capture_default_str();
    cmd->add_option("--engine-b,-b", o.engine_b, "engine B: config.json or inline label")->capture_default_str();
  }
  cmd->add_option("--sims", o.sims, "simulations per move for MCTS engines (0 keeps the engine setting)");
  cmd->add_option("--seed", o.seed, "master seed")->capture_default_str();
  cmd->add_option("--workers", o.workers, "parallel game workers")->capture_default_str();
  cmd->add_option("--out", o.out, "output directory for CSV and JSON results");
  cmd->add_flag("--wilson", o.wilson, "report Wilson intervals instead of the normal approximation");
}

MatchSpec spec_from(const CommonOpts& o) {
  MatchSpec s;
  s.game = game_id_from_string(o.game);
  s.a = load_engine_spec(o.engine_a, s.game);
  s.b = load_engine_spec(o.engine_b, s.game);
  s.games = o.games;
  if (o.sims > 0) s.sims = o.sims;
  s.seed = o.seed;
  s.workers = o.workers;
  s.ci = o.wilson ? CiMethod::Wilson : CiMethod::Normal;
  return s;
}

void print_report(const std::string& a, const std::string& b, const WinRateReport& r) {
  std::printf("%s vs %s: A %lld  B %lld  draws %lld  discarded %lld  win rate %.2f%% +- %.2f%%\n", a.c_str(),
              b.c_str(), static_cast<long long>(r.wins_a), static_cast<long long>(r.wins_b),
              static_cast<long long>(r.draws), static_cast<long long>(r.discards), 100 * r.p_hat(),
              100 * r.ci95());
}

void finish_match(const CommonOpts& o, const MatchSpec& spec, const MatchResult& res) {
  print_report(spec.a.name, spec.b.name, res.report);
  if (!o.out.empty()) {
    save_match(o.out, "match", spec, res);
    std::printf("wrote %s/match.csv and %s/match.json\n", o.out.c_str(), o.out.c_str());
  }
}

template <Game G>
G start_position(const std::string& position_file, std::uint64_t seed, bool random_kalah) {
  if (!position_file.empty()) {
    std::ifstream in(position_file);
    if (!in) throw std::runtime_error("cannot open position file " + position_file);
    std::stringstream ss;
    ss << in.rdbuf();
    return G::from_text(ss.str());
  }
  if constexpr (std::is_same_v<G, Kalah>) {
    if (random_kalah) return Kalah::random_start(seed);
    return Kalah(KalahRules{}, 4);
  } else {
    (void)seed;
    (void)random_kalah;
    return G{};
  }
}

template <Game G>
int play_one(const CommonOpts& o, const std::string& position_file, bool random_kalah) {
  const MatchSpec spec = spec_from(o);
  const G start = start_position<G>(position_file, o.seed, random_kalah);
  auto a = make_engine<G>(detail::with_budget(spec.a, spec.sims));
  auto b = make_engine<G>(detail::with_budget(spec.b, spec.sims));
  const GameRecord rec = play_game(start, *a, *b, mix_seed(o.seed, 0));
  std::printf("%s\n", start.to_text().c_str());
  for (std::size_t i = 0; i < rec.moves.size(); ++i)
    std::printf("%3zu. %-8s %s\n", i + 1, rec.moves[i].c_str(), rec.stats[i].c_str());
  const G end = replay(start, rec.moves);
  std::printf("%s\n", end.to_text().c_str());
  if (!rec.diagnostic.empty()) std::printf("%s\n", rec.diagnostic.c_str());
  const char* result = rec.reward_p1 > 0 ? "P1 (engine A) wins" : rec.reward_p1 < 0 ? "P2 (engine B) wins" : "draw";
  std::printf("result: %s, reward_p1 %g, %d plies\n", result, rec.reward_p1, rec.plies);
  return 0;
}

template <Game G>
int dump_one(const CommonOpts& o, const std::string& position_file) {
  const GameId gid = game_id_from_string(o.game);
  EngineSpec spec = load_engine_spec(o.engine_a, gid);
  if (spec.kind != EngineSpec::Kind::Mcts) throw std::invalid_argument("dump-tree needs an MCTS engine");
  if (o.sims > 0) spec.mcts.budget = Budget::simulations(o.sims);
  spec.mcts.seed = o.seed;
  const G start = start_position<G>(position_file, o.seed, false);
  Mcts<G, EvalFor<G>> mcts(spec.mcts, make_eval<G>(spec.eval));
  const auto res = mcts.search(start);
  std::fputs(dump_tree(start, mcts.tree()).c_str(), stdout);
  std::printf("best %s after %lld simulations\n", start.move_to_string(res.move).c_str(),
              static_cast<long long>(res.simulations));
  return 0;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  for (std::string t; std::getline(ss, t, ',');)
    if (!t.empty()) out.push_back(std::stod(t));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monte Carlo tree search with implicit minimax backups: engines and experiment harness"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string position;
  bool random_kalah = false;
  std::string spec_file;
  std::int64_t target_counted = 0;
  std::string alphas;
  std::vector<std::string> entrants;

  auto* play = app.add_subcommand("play", "play one game and print its moves");
  add_common(play, o);
  play->add_option("--position", position, "start position file in the game's text format");
  play->add_flag("--random-board", random_kalah, "kalah: start from a random board drawn from --seed");

  auto* match = app.add_subcommand("match", "seat-swapped head-to-head match");
  add_common(match, o);
  match->add_option("--games", o.games, "number of games (even)")->capture_default_str();
  match->add_option("--spec", spec_file, "MatchSpec JSON; replaces the other match flags");

  auto* paired = app.add_subcommand("paired-kalah", "kalah paired-board match");
  add_common(paired, o);
  paired->add_option("--games", o.games, "number of games, two per board")->capture_default_str();
  paired->add_option("--target-counted", target_counted, "play until this many pairs are decided");

  auto* sweep = app.add_subcommand("sweep-alpha", "engine A with implicit minimax at each alpha against engine B");
  add_common(sweep, o);
  sweep->add_option("--games", o.games, "games per alpha")->capture_default_str();
  sweep->add_option("--alphas", alphas, "comma separated alphas (default: the published grid)");
  bool sweep_paired = false;
  sweep->add_flag("--paired", sweep_paired, "kalah: use the paired-board protocol");

  auto* tour = app.add_subcommand("tournament", "single-elimination tournament");
  add_common(tour, o, false);
  tour->add_option("--engine,-e", entrants, "entrant (repeat); seeded by order")->required();
  tour->add_option("--games", o.games, "games per pairing")->capture_default_str();
  bool tour_paired = false;
  tour->add_flag("--paired", tour_paired, "kalah: use the paired-board protocol");

  auto* dump = app.add_subcommand("dump-tree", "run one MCTS search and print the tree");
  add_common(dump, o);
  dump->add_option("--position", position, "position file in the game's text format");

  CLI11_PARSE(app, argc, argv);

  try {
    if (play->parsed()) {
      switch (game_id_from_string(o.game)) {
        case GameId::Kalah: return play_one<Kalah>(o, position, random_kalah);
        case GameId::Breakthrough: return play_one<Breakthrough>(o, position, random_kalah);
        case GameId::Loa: return play_one<Loa>(o, position, random_kalah);
      }
    }
    if (dump->parsed()) {
      switch (game_id_from_string(o.game)) {
        case GameId::Kalah: return dump_one<Kalah>(o, position);
        case GameId::Breakthrough: return dump_one<Breakthrough>(o, position);
        case GameId::Loa: return dump_one<Loa>(o, position);
      }
    }
    if (match->parsed()) {
      MatchSpec spec;
      if (!spec_file.empty()) {
        std::ifstream in(spec_file);
        if (!in) throw std::runtime_error("cannot open " + spec_file);
        spec = match_spec_from_json(nlohmann::json::parse(in));
      } else {
        spec = spec_from(o);
      }
      finish_match(o, spec, run_match(spec));
      return 0;
    }
    if (paired->parsed()) {
      o.game = "kalah";
      MatchSpec spec = spec_from(o);
      spec.protocol = Protocol::KalahPaired;
      spec.target_counted = target_counted;
      finish_match(o, spec, run_match(spec));
      return 0;
    }
    if (sweep->parsed()) {
      MatchSpec spec = spec_from(o);
      if (sweep_paired) spec.protocol = Protocol::KalahPaired;
      const auto grid = alphas.empty() ? default_alpha_grid() : parse_list(alphas);
      const auto rows = sweep_alpha(spec, grid);
      const std::string csv = sweep_csv(rows);
      std::fputs(csv.c_str(), stdout);
      if (!o.out.empty()) save_text(std::filesystem::path(o.out) / "sweep.csv", csv);
      return 0;
    }
    if (tour->parsed()) {
      MatchSpec base;
      base.game = game_id_from_string(o.game);
      if (o.sims > 0) base.sims = o.sims;
      base.seed = o.seed;
      base.workers = o.workers;
      base.ci = o.wilson ? CiMethod::Wilson : CiMethod::Normal;
      if (tour_paired) base.protocol = Protocol::KalahPaired;
      std::vector<EngineSpec> engines;
      for (const auto& e : entrants) engines.push_back(load_engine_spec(e, base.game));
      const auto res = run_elimination_tournament(engines, base, o.games);
      std::fputs(res.log.c_str(), stdout);
      if (!o.out.empty()) save_text(std::filesystem::path(o.out) / "bracket.log", res.log);
      return 0;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
