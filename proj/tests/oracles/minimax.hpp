#pragma once

#include <algorithm>
#include <string>
#include <unordered_map>
#include <vector>

#include "immcts/core/game.hpp"

namespace oracle {

/// Exact game value for the player to move, by exhaustive search with a
/// memo keyed on the state encoding.
template <immcts::Game G>
class GameValue {
 public:
  int operator()(G& g) {
    const std::string key = g.encode();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    int best;
    if (g.is_terminal()) {
      best = g.terminal_reward().for_player(g.to_move());
    } else {
      best = -2;
      std::vector<typename G::Move> moves;
      g.legal_moves(moves);
      const immcts::Player me = g.to_move();
      for (const auto& m : moves) {
        g.apply(m);
        const int v = g.to_move() == me ? (*this)(g) : -(*this)(g);
        g.undo();
        best = std::max(best, v);
        if (best == 1) break;
      }
    }
    memo_.emplace(key, best);
    return best;
  }
  std::size_t states() const { return memo_.size(); }

 private:
  std::unordered_map<std::string, int> memo_;
};

/// Depth-limited minimax without pruning; leaves use `eval` (P1 view).
template <immcts::Game G, class Eval>
double plain_minimax(G& g, int depth, const Eval& eval) {
  if (g.is_terminal()) return g.terminal_reward().for_player(g.to_move());
  if (depth == 0) return immcts::sign(g.to_move()) * eval(g);
  std::vector<typename G::Move> moves;
  g.legal_moves(moves);
  const immcts::Player me = g.to_move();
  double best = -2;
  for (const auto& m : moves) {
    g.apply(m);
    const double v = g.to_move() == me ? plain_minimax(g, depth - 1, eval) : -plain_minimax(g, depth - 1, eval);
    g.undo();
    best = std::max(best, v);
  }
  return best;
}

}  // namespace oracle
