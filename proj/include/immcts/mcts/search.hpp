#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "immcts/core/game.hpp"
#include "immcts/core/rng.hpp"
#include "immcts/mcts/config.hpp"
#include "immcts/mcts/playout.hpp"
#include "immcts/mcts/select.hpp"

namespace immcts {

template <class Move>
struct SearchNode {
  Move move{};
  double r = 0;            // cumulative reward, P1 view (includes prior reward)
  double n = 0;            // visits (includes prior visits)
  double v = 0;            // implicit minimax value, view of `mover`
  double v0 = 0;           // static evaluation at creation, view of `mover`
  double prior_wins = 0;
  double prior_visits = 0;
  std::uint32_t own_visits = 0;  // simulations that ended at this node
  std::int32_t first_child = -1;
  std::int32_t next_sibling = -1;
  std::uint16_t num_children = 0;
  Player mover = Player::P1;     // player to move in this node's state
  Proven proven = Proven::None;  // view of `mover`
  bool expanded = false;         // every legal move has a child
  bool terminal = false;
};

template <class Move>
struct ChildSummary {
  Move move{};
  double n = 0;
  double mean = 0;  // r / n in the root player's view
  double v = 0;     // root player's view
  Proven proven = Proven::None;  // root player's view
};

template <class Move>
struct SearchResult {
  Move move{};
  std::vector<ChildSummary<Move>> children;
  Proven root_proven = Proven::None;
  std::int64_t simulations = 0;
  std::size_t nodes = 0;
};

/// Value `x` held in `from`'s view, expressed in `to`'s view.
constexpr double to_view(double x, Player from, Player to) noexcept { return from == to ? x : -x; }

// Node priors are available for games that provide node_prior_strength().
template <class G>
concept HasNodePriors = requires(const G& g) {
  { node_prior_strength(g) } -> std::convertible_to<double>;
};

// MCTS with implicit minimax backups and MCTS-Solver. Each node keeps the
// usual reward sum and visit count plus a heuristic minimax value v that is
// kept equal to the max over its children (in the node player's view)
// whenever the node is updated; unexpanded leaves hold their static value.
template <Game G, class Eval>
class Mcts {
 public:
  using Move = typename G::Move;
  using Node = SearchNode<Move>;

  Mcts(SearchConfig config, Eval eval) : config_(std::move(config)), eval_(std::move(eval)) {
    config_.validate();
    if (config_.priors.enabled && !HasNodePriors<G>)
      throw std::invalid_argument("node priors are not available for this game");
  }

  const SearchConfig& config() const noexcept { return config_; }
  SearchConfig& mutable_config() noexcept { return config_; }
  const Eval& eval() const noexcept { return eval_; }
  const std::vector<Node>& tree() const noexcept { return nodes_; }

  SearchResult<Move> search(const G& root_state) {
    G g = root_state;
    if (g.is_terminal()) throw GameStateError("mcts: search from a terminal state");
    nodes_.clear();
    rng_ = Rng(config_.seed);
    Playout<G, Eval> playout(config_.playout, config_.termination, eval_);
    playout_ = &playout;

    Node root;
    root.mover = g.to_move();
    root.v0 = root.v = sign(root.mover) * eval_(g);
    nodes_.push_back(root);

    const auto start = std::chrono::steady_clock::now();
    std::int64_t sims = 0;
    for (;;) {
      if (config_.budget.kind == Budget::Kind::Simulations) {
        if (sims >= config_.budget.amount) break;
      } else if (sims > 0) {
        const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start).count();
        if (elapsed >= config_.budget.amount) break;
      }
      simulate(g, 0);
      ++sims;
      if (nodes_[0].proven != Proven::None) break;
    }
    playout_ = nullptr;
    return summarize(sims);
  }

 private:
  double proven_reward_p1(const Node& nd) const { return proven_value(nd.proven) * sign(nd.mover); }

  EdgeStats edge(const Node& parent, const Node& child) const {
    EdgeStats e;
    e.n = child.n;
    e.mean = child.n > 0 ? sign(parent.mover) * child.r / child.n : 0.0;
    e.v = to_view(child.v, child.mover, parent.mover);
    e.v0 = to_view(child.v0, child.mover, parent.mover);
    if (child.proven != Proven::None)
      e.proven = proven_from_value(static_cast<int>(to_view(proven_value(child.proven), child.mover, parent.mover)));
    return e;
  }

  double simulate(G& g, int id) {
    if (nodes_[id].proven != Proven::None) {
      const double r = proven_reward_p1(nodes_[id]);
      nodes_[id].r += r;
      nodes_[id].n += 1;
      nodes_[id].own_visits += 1;
      return r;
    }

    if (!nodes_[id].expanded) {
      if (config_.expand == ExpandMode::AllChildren) return expand_and_playout(g, id);
      return expand_one_and_playout(g, id);
    }

    const int child = select(id);
    g.apply(nodes_[child].move);
    const double r = simulate(g, child);
    g.undo();
    update(id, r);
    if (nodes_[child].proven != Proven::None) solver_backup(id);
    if (nodes_[id].proven != Proven::None) return proven_reward_p1(nodes_[id]);
    return backprop_return(id, r);
  }

  double expand_and_playout(G& g, int id) {
    g.legal_moves(moves_scratch_);
    const std::vector<Move> moves = moves_scratch_;
    const int first = static_cast<int>(nodes_.size());
    for (const auto& m : moves) make_child(g, id, m);
    for (std::size_t i = 0; i + 1 < moves.size(); ++i) nodes_[first + i].next_sibling = first + static_cast<int>(i) + 1;
    nodes_[id].first_child = first;
    nodes_[id].num_children = static_cast<std::uint16_t>(moves.size());
    nodes_[id].expanded = true;
    recompute_v(id);
    solver_backup(id);

    double r;
    if (nodes_[id].proven != Proven::None) {
      r = proven_reward_p1(nodes_[id]);
      update(id, r);
      nodes_[id].own_visits += 1;
      return r;
    }
    r = playout_->run(g, rng_);
    update(id, r);
    nodes_[id].own_visits += 1;
    return backprop_return(id, r);
  }

  // Single-child expansion: one new child per visit, played out from the
  // child. The one-ply backup only sees the children created so far.
  double expand_one_and_playout(G& g, int id) {
    g.legal_moves(moves_scratch_);
    untried_.clear();
    for (const auto& m : moves_scratch_) {
      bool seen = false;
      for (int c = nodes_[id].first_child; c >= 0 && !seen; c = nodes_[c].next_sibling) seen = nodes_[c].move == m;
      if (!seen) untried_.push_back(m);
    }
    const Move m = untried_[rng_.index(untried_.size())];
    const int child = static_cast<int>(nodes_.size());
    make_child(g, id, m);
    // Append so children stay in creation order.
    if (nodes_[id].first_child < 0) {
      nodes_[id].first_child = child;
    } else {
      int last = nodes_[id].first_child;
      while (nodes_[last].next_sibling >= 0) last = nodes_[last].next_sibling;
      nodes_[last].next_sibling = child;
    }
    nodes_[id].num_children += 1;
    if (untried_.size() == 1) nodes_[id].expanded = true;

    double r;
    g.apply(m);
    if (nodes_[child].proven != Proven::None) {
      r = proven_reward_p1(nodes_[child]);
    } else {
      r = playout_->run(g, rng_);
    }
    g.undo();
    update(child, r);
    nodes_[child].own_visits += 1;
    update(id, r);
    solver_backup(id);
    if (nodes_[id].proven != Proven::None) return proven_reward_p1(nodes_[id]);
    return backprop_return(id, r);
  }

  void make_child(G& g, int parent, const Move& m) {
    Node c;
    c.move = m;
    const Player parent_mover = nodes_[parent].mover;
    g.apply(m);
    c.mover = g.to_move();
    if (g.is_terminal()) {
      c.terminal = true;
      c.expanded = true;
      const int reward = g.terminal_reward().for_player(c.mover);
      c.proven = proven_from_value(reward);
      c.v0 = c.v = reward;
    } else {
      c.v0 = c.v = sign(c.mover) * eval_(g);
      if constexpr (HasNodePriors<G>) {
        if (config_.priors.enabled) {
          c.prior_visits = config_.priors.scale;
          c.prior_wins = config_.priors.scale * node_prior_strength(static_cast<const G&>(g));
          // Virtual wins are credited to the player who chose this child.
          c.r = sign(parent_mover) * c.prior_wins;
          c.n = c.prior_visits;
        }
      }
    }
    g.undo();
    nodes_.push_back(c);
  }

  int select(int id) {
    const Node& parent = nodes_[id];
    edges_.clear();
    ids_.clear();
    for (int c = parent.first_child; c >= 0; c = nodes_[c].next_sibling) {
      edges_.push_back(edge(parent, nodes_[c]));
      ids_.push_back(c);
    }
    return ids_[select_index(edges_, parent.n, config_, rng_)];
  }

  void update(int id, double r) {
    nodes_[id].r += r;
    nodes_[id].n += 1;
    recompute_v(id);
  }

  void recompute_v(int id) {
    Node& nd = nodes_[id];
    if (nd.first_child < 0) return;
    double best = -std::numeric_limits<double>::infinity();
    for (int c = nd.first_child; c >= 0; c = nodes_[c].next_sibling)
      best = std::max(best, to_view(nodes_[c].v, nodes_[c].mover, nd.mover));
    nd.v = best;
  }

  void solver_backup(int id) {
    Node& nd = nodes_[id];
    if (nd.proven != Proven::None || nd.first_child < 0) return;
    bool all_proven = nd.expanded;
    int best = -2;
    for (int c = nd.first_child; c >= 0; c = nodes_[c].next_sibling) {
      const Node& ch = nodes_[c];
      if (ch.proven == Proven::None) {
        all_proven = false;
        continue;
      }
      const int value = static_cast<int>(to_view(proven_value(ch.proven), ch.mover, nd.mover));
      if (value == 1) {
        nd.proven = Proven::Win;
        return;
      }
      best = std::max(best, value);
    }
    if (all_proven) nd.proven = proven_from_value(best);
  }

  double backprop_return(int id, double r) {
    if (!config_.max_backprop_T || nodes_[id].n < *config_.max_backprop_T) return r;
    const Node& nd = nodes_[id];
    edges_.clear();
    for (int c = nd.first_child; c >= 0; c = nodes_[c].next_sibling) edges_.push_back(edge(nd, nodes_[c]));
    return max_backprop(r, nd.n, config_.max_backprop_T, edges_, config_.variant, config_.alpha, sign(nd.mover));
  }

  SearchResult<Move> summarize(std::int64_t sims) {
    SearchResult<Move> res;
    const Node& root = nodes_[0];
    res.simulations = sims;
    res.nodes = nodes_.size();
    res.root_proven = root.proven;
    std::vector<int> ids;
    for (int c = root.first_child; c >= 0; c = nodes_[c].next_sibling) {
      const EdgeStats e = edge(root, nodes_[c]);
      res.children.push_back({nodes_[c].move, e.n, e.mean, e.v, e.proven});
      ids.push_back(c);
    }
    if (ids.empty()) throw GameStateError("mcts: root has no children after search");

    if (root.proven == Proven::Win) {
      for (const auto& ch : res.children)
        if (ch.proven == Proven::Win) {
          res.move = ch.move;
          return res;
        }
    }
    // Visit-max among unproven children. A proven draw is preferred when the
    // root is a proven draw or every unproven child looks worse than a draw.
    int draw = -1;
    double best_open_mean = -std::numeric_limits<double>::infinity();
    bool any_open = false;
    for (std::size_t i = 0; i < res.children.size(); ++i) {
      const auto& ch = res.children[i];
      if (ch.proven == Proven::Draw && draw < 0) draw = static_cast<int>(i);
      if (ch.proven == Proven::None) {
        any_open = true;
        if (ch.n > 0) best_open_mean = std::max(best_open_mean, ch.mean);
      }
    }
    if (draw >= 0 && (!any_open || best_open_mean < 0.0)) {
      res.move = res.children[static_cast<std::size_t>(draw)].move;
      return res;
    }
    double best = -1;
    std::vector<std::size_t> ties;
    for (std::size_t i = 0; i < res.children.size(); ++i) {
      const auto& ch = res.children[i];
      if (any_open && ch.proven != Proven::None) continue;
      if (ch.n > best) {
        best = ch.n;
        ties.assign(1, i);
      } else if (ch.n == best) {
        ties.push_back(i);
      }
    }
    res.move = res.children[ties.size() == 1 ? ties[0] : ties[rng_.index(ties.size())]].move;
    return res;
  }

  SearchConfig config_;
  Eval eval_;
  std::vector<Node> nodes_;
  Rng rng_;
  Playout<G, Eval>* playout_ = nullptr;
  std::vector<Move> moves_scratch_, untried_;
  std::vector<EdgeStats> edges_;
  std::vector<int> ids_;
};

}  // namespace immcts
