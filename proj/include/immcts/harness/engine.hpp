#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>

#include "immcts/alphabeta/search.hpp"
#include "immcts/core/game.hpp"
#include "immcts/core/rng.hpp"
#include "immcts/games/breakthrough.hpp"
#include "immcts/games/evals.hpp"
#include "immcts/games/kalah.hpp"
#include "immcts/games/loa.hpp"
#include "immcts/games/square_table.hpp"
#include "immcts/harness/engine_spec.hpp"
#include "immcts/mcts/search.hpp"

namespace immcts {

/// A move-choosing player. nullopt means resign.
template <Game G>
class Engine {
 public:
  using Move = typename G::Move;
  virtual ~Engine() = default;
  virtual std::optional<Move> choose_move(const G& state, std::uint64_t seed) = 0;
  virtual std::string name() const = 0;
  /// One-line statistics of the last choose_move call.
  virtual std::string last_summary() const { return {}; }
};

template <Game G>
constexpr GameId game_id_of() {
  if constexpr (std::is_same_v<G, Kalah>) return GameId::Kalah;
  else if constexpr (std::is_same_v<G, Breakthrough>) return GameId::Breakthrough;
  else return GameId::Loa;
}

template <Game G>
auto make_eval(const EvalSpec& e) {
  if constexpr (std::is_same_v<G, Kalah>) {
    if (e.id != "efK") throw std::invalid_argument("kalah supports only the efK evaluation (got '" + e.id + "')");
    return KalahEval(e.k.value_or(KalahEval::kDefaultSlope), e.exact_sigmoid);
  } else if constexpr (std::is_same_v<G, Breakthrough>) {
    const double k = e.k.value_or(BreakthroughEval::kDefaultSlope);
    if (e.id == "efMS") return BreakthroughEval::material(k, e.exact_sigmoid);
    if (e.id == "efLH") {
      SquareTable table = e.table_path.empty() ? SquareTable::placeholder() : SquareTable::load(e.table_path);
      return BreakthroughEval::square_table(std::move(table), k, e.exact_sigmoid);
    }
    throw std::invalid_argument("breakthrough supports efMS and efLH (got '" + e.id + "')");
  } else {
    static_assert(std::is_same_v<G, Loa>);
    if (e.id != "loa-simple") throw std::invalid_argument("loa supports only loa-simple (got '" + e.id + "')");
    return LoaEval(e.k.value_or(LoaEval::kDefaultSlope), e.exact_sigmoid);
  }
}

template <Game G>
using EvalFor = decltype(make_eval<G>(EvalSpec{}));

template <Game G>
class MctsEngine final : public Engine<G> {
 public:
  using Move = typename G::Move;
  MctsEngine(std::string name, SearchConfig config, EvalFor<G> eval)
      : name_(std::move(name)), base_seed_(config.seed), mcts_(std::move(config), std::move(eval)) {}

  std::optional<Move> choose_move(const G& state, std::uint64_t seed) override {
    mcts_.mutable_config().seed = mix_seed(base_seed_, seed);
    const auto res = mcts_.search(state);
    std::ostringstream os;
    os << "sims=" << res.simulations << " nodes=" << res.nodes << " proven=" << proven_name(res.root_proven);
    summary_ = os.str();
    return res.move;
  }
  std::string name() const override { return name_; }
  std::string last_summary() const override { return summary_; }
  Mcts<G, EvalFor<G>>& search() noexcept { return mcts_; }

 private:
  static const char* proven_name(Proven p) {
    switch (p) {
      case Proven::Win: return "win";
      case Proven::Loss: return "loss";
      case Proven::Draw: return "draw";
      default: return "-";
    }
  }
  std::string name_;
  std::uint64_t base_seed_;
  Mcts<G, EvalFor<G>> mcts_;
  std::string summary_;
};

template <Game G>
class AbEngine final : public Engine<G> {
 public:
  using Move = typename G::Move;
  AbEngine(std::string name, AbConfig config, EvalFor<G> eval)
      : name_(std::move(name)), ab_(config, std::move(eval)) {}

  std::optional<Move> choose_move(const G& state, std::uint64_t) override {
    const auto res = ab_.iterative_deepening(state);
    std::ostringstream os;
    os << "depth=" << res.depth << " nodes=" << res.nodes << " value=" << res.value;
    summary_ = os.str();
    return res.move;
  }
  std::string name() const override { return name_; }
  std::string last_summary() const override { return summary_; }

 private:
  std::string name_;
  AlphaBeta<G, EvalFor<G>> ab_;
  std::string summary_;
};

template <Game G>
std::unique_ptr<Engine<G>> make_engine(const EngineSpec& spec) {
  auto eval = make_eval<G>(spec.eval);
  if (spec.kind == EngineSpec::Kind::Mcts) return std::make_unique<MctsEngine<G>>(spec.name, spec.mcts, std::move(eval));
  return std::make_unique<AbEngine<G>>(spec.name, spec.ab, std::move(eval));
}

}  // namespace immcts
