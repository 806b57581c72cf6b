#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "immcts/alphabeta/ordering.hpp"
#include "immcts/core/game.hpp"

namespace immcts {

struct AbConfig {
  enum class Budget { Depth, Millis, Nodes };
  Budget budget = Budget::Depth;
  int depth = 4;                 // used by the Depth budget
  int max_depth = 64;            // cap for the Millis and Nodes budgets
  std::int64_t millis = 1000;
  std::int64_t nodes = 100000;
  MoveOrdering ordering = MoveOrdering::None;

  void validate() const {
    if (budget == Budget::Depth && depth < 1) throw std::invalid_argument("alpha-beta depth must be >= 1");
    if (budget == Budget::Millis && millis <= 0) throw std::invalid_argument("alpha-beta millis must be > 0");
    if (budget == Budget::Nodes && nodes <= 0) throw std::invalid_argument("alpha-beta node budget must be > 0");
  }
};

template <class Move>
struct AbResult {
  Move move{};
  double value = 0;  // root player's view
  int depth = 0;     // last completed iteration
  std::uint64_t nodes = 0;
};

// Fail-soft negamax alpha-beta over the same sigmoid-scaled evaluation the
// MCTS engine uses. When a move keeps the same player on turn (Kalah extra
// turns) the child value is taken without negation.
template <Game G, class Eval>
class AlphaBeta {
 public:
  using Move = typename G::Move;
  static constexpr double kInf = 2.0;  // all values lie in [-1, 1]
  static constexpr int kMaxDepth = 64;

  AlphaBeta(AbConfig config, Eval eval) : config_(config), eval_(std::move(eval)) { config_.validate(); }

  const AbConfig& config() const noexcept { return config_; }
  std::uint64_t nodes() const noexcept { return nodes_; }
  void reset_nodes() noexcept { nodes_ = 0; }

  /// Value of g for its player to move, searched to `depth` plies.
  double alphabeta(G& g, int depth, double alpha, double beta) {
    ++nodes_;
    check_abort();
    if (g.is_terminal()) return g.terminal_reward().for_player(g.to_move());
    if (depth <= 0) return sign(g.to_move()) * eval_(g);
    std::vector<Move> moves;
    g.legal_moves(moves);
    order_moves(g, moves, config_.ordering);
    const Player me = g.to_move();
    double best = -kInf;
    for (const auto& m : moves) {
      g.apply(m);
      const double value = g.to_move() == me ? alphabeta(g, depth - 1, alpha, beta)
                                             : -alphabeta(g, depth - 1, -beta, -alpha);
      g.undo();
      if (value > best) {
        best = value;
        if (best > alpha) alpha = best;
        if (alpha >= beta) break;
      }
    }
    return best;
  }

  AbResult<Move> iterative_deepening(const G& root) {
    G g = root;
    if (g.is_terminal()) throw GameStateError("alpha-beta: search from a terminal state");
    nodes_ = 0;
    start_ = std::chrono::steady_clock::now();
    std::vector<Move> moves;
    g.legal_moves(moves);
    order_moves(g, moves, config_.ordering);

    const int max_depth = config_.budget == AbConfig::Budget::Depth ? config_.depth : config_.max_depth;
    AbResult<Move> result;
    result.move = moves.front();
    for (int depth = 1; depth <= std::min(max_depth, kMaxDepth); ++depth) {
      abort_enabled_ = depth > 1 && config_.budget != AbConfig::Budget::Depth;
      try {
        const auto [value, best] = search_root(g, moves, depth);
        result.value = value;
        result.move = best;
        result.depth = depth;
      } catch (const Aborted&) {
        while (g.history_size() > root.history_size()) g.undo();
        break;
      }
      // Searching the previous best first lets alpha-beta cut the rest sooner.
      for (std::size_t i = 0; i < moves.size(); ++i)
        if (moves[i] == result.move) {
          std::rotate(moves.begin(), moves.begin() + static_cast<std::ptrdiff_t>(i),
                      moves.begin() + static_cast<std::ptrdiff_t>(i) + 1);
          break;
        }
      if (result.value >= 1.0 || result.value <= -1.0) {
        // Proven result; deeper iterations cannot change the value.
        if (config_.budget != AbConfig::Budget::Depth) break;
      }
      if (budget_exhausted()) break;
    }
    abort_enabled_ = false;
    result.nodes = nodes_;
    return result;
  }

 private:
  struct Aborted {};

  std::pair<double, Move> search_root(G& g, const std::vector<Move>& moves, int depth) {
    const Player me = g.to_move();
    double alpha = -kInf, best = -kInf;
    Move best_move = moves.front();
    ++nodes_;
    for (const auto& m : moves) {
      g.apply(m);
      const double value = g.to_move() == me ? alphabeta(g, depth - 1, alpha, kInf)
                                             : -alphabeta(g, depth - 1, -kInf, -alpha);
      g.undo();
      if (value > best) {
        best = value;
        best_move = m;
        if (best > alpha) alpha = best;
      }
    }
    return {best, best_move};
  }

  bool budget_exhausted() const {
    switch (config_.budget) {
      case AbConfig::Budget::Depth: return false;
      case AbConfig::Budget::Nodes: return nodes_ >= static_cast<std::uint64_t>(config_.nodes);
      case AbConfig::Budget::Millis:
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_)
                   .count() >= config_.millis;
    }
    return false;
  }

  void check_abort() {
    if (!abort_enabled_) return;
    if (config_.budget == AbConfig::Budget::Nodes) {
      if (nodes_ > static_cast<std::uint64_t>(config_.nodes)) throw Aborted{};
    } else if ((nodes_ & 1023) == 0 && budget_exhausted()) {
      throw Aborted{};
    }
  }

  AbConfig config_;
  Eval eval_;
  std::uint64_t nodes_ = 0;
  bool abort_enabled_ = false;
  std::chrono::steady_clock::time_point start_{};
};

}  // namespace immcts
