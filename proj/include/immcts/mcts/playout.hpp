#pragma once

#include <limits>
#include <vector>

#include "immcts/core/game.hpp"
#include "immcts/core/rng.hpp"
#include "immcts/mcts/config.hpp"

namespace immcts {

// Out-of-tree simulation. Moves are played on the given state and undone
// before returning, so the caller's state is unchanged afterwards.
template <Game G, class Eval>
class Playout {
 public:
  using Move = typename G::Move;

  Playout(PlayoutPolicy policy, Termination termination, const Eval& eval)
      : policy_(policy), termination_(termination), eval_(&eval) {}

  /// Reward in P1's view: the true outcome, v0 after a fixed cut-off, or +-1
  /// once |v0| crosses the dynamic threshold.
  double run(G& g, Rng& rng) {
    int played = 0;
    double result = 0.0;
    for (;;) {
      if (g.is_terminal()) {
        result = g.terminal_reward().p1();
        break;
      }
      if (termination_.kind == TerminationKind::Fixed && played >= termination_.plies) {
        result = (*eval_)(g);
        break;
      }
      g.apply(choose(g, rng));
      ++played;
      if (termination_.kind == TerminationKind::Dynamic && played % termination_.stride == 0 &&
          !g.is_terminal()) {
        const double v = (*eval_)(g);
        if (v >= termination_.threshold) { result = 1.0; break; }
        if (v <= -termination_.threshold) { result = -1.0; break; }
      }
    }
    for (int i = 0; i < played; ++i) g.undo();
    return result;
  }

  /// One playout move for the side to move. g must be nonterminal.
  Move choose(G& g, Rng& rng) {
    g.legal_moves(moves_);
    const std::vector<Move>* candidates = &moves_;

    if (policy_.improved) {
      for (const auto& m : moves_)
        if (is_decisive(g, m)) return m;
      safe_.clear();
      for (const auto& m : moves_) {
        g.apply(m);
        const bool gives_win = has_decisive_move(g);
        g.undo();
        if (!gives_win) safe_.push_back(m);
      }
      if (!safe_.empty()) candidates = &safe_;
    }

    if (policy_.epsilon && !rng.bernoulli(*policy_.epsilon)) return greedy(g, *candidates, rng);
    return random_move(g, *candidates, rng);
  }

 private:
  Move random_move(const G& g, const std::vector<Move>& moves, Rng& rng) {
    if (!policy_.improved) return moves[rng.index(moves.size())];
    weights_.clear();
    bool weighted = false;
    for (const auto& m : moves) {
      const bool favoured = captures_undefended(g, m);
      weighted |= favoured;
      weights_.push_back(favoured ? policy_.undefended_capture_weight : 1.0);
    }
    if (!weighted) return moves[rng.index(moves.size())];
    return moves[rng.weighted(weights_)];
  }

  Move greedy(G& g, const std::vector<Move>& moves, Rng& rng) {
    const int s = sign(g.to_move());
    double best = -std::numeric_limits<double>::infinity();
    ties_.clear();
    for (std::size_t i = 0; i < moves.size(); ++i) {
      g.apply(moves[i]);
      const double v = s * (*eval_)(g);
      g.undo();
      if (v > best) {
        best = v;
        ties_.clear();
        ties_.push_back(i);
      } else if (v == best) {
        ties_.push_back(i);
      }
    }
    return moves[ties_.size() == 1 ? ties_[0] : ties_[rng.index(ties_.size())]];
  }

  PlayoutPolicy policy_;
  Termination termination_;
  const Eval* eval_;
  std::vector<Move> moves_, safe_;
  std::vector<double> weights_;
  std::vector<std::size_t> ties_;
};

}  // namespace immcts
