#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "immcts/core/player.hpp"

namespace immcts {

class IllegalMoveError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class GameStateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Two-player, zero-sum, deterministic, perfect-information game with in-place
// apply/undo. legal_moves() is empty exactly on terminal states.
template <class G>
concept Game = std::copyable<G> && requires(G g, const G cg, typename G::Move m,
                                            std::vector<typename G::Move>& out) {
  typename G::Move;
  requires std::equality_comparable<typename G::Move>;
  { cg.to_move() } -> std::same_as<Player>;
  { cg.is_terminal() } -> std::same_as<bool>;
  { cg.legal_moves(out) } -> std::same_as<void>;
  { cg.terminal_reward() } -> std::same_as<Reward>;
  { cg.encode() } -> std::convertible_to<std::string>;
  { cg.to_text() } -> std::convertible_to<std::string>;
  { cg.move_to_string(m) } -> std::convertible_to<std::string>;
  { cg.ply() } -> std::convertible_to<int>;
  { cg.history_size() } -> std::convertible_to<std::size_t>;
  g.apply(m);
  g.undo();
};

template <Game G>
std::vector<typename G::Move> legal_moves(const G& g) {
  std::vector<typename G::Move> out;
  g.legal_moves(out);
  return out;
}

/// Looks a move up by its printed form among the legal moves.
template <Game G>
std::optional<typename G::Move> parse_move(const G& g, std::string_view text) {
  std::vector<typename G::Move> moves;
  g.legal_moves(moves);
  for (const auto& m : moves)
    if (g.move_to_string(m) == text) return m;
  return std::nullopt;
}

template <Game G>
std::uint64_t perft(G& g, int depth) {
  if (depth <= 0) return 1;
  std::vector<typename G::Move> moves;
  g.legal_moves(moves);
  if (depth == 1) return moves.size();
  std::uint64_t total = 0;
  for (const auto& m : moves) {
    g.apply(m);
    total += perft(g, depth - 1);
    g.undo();
  }
  return total;
}

// Optional game hooks used by playout policies and move ordering. Games that
// provide the member get a fast path; the rest fall back on apply/undo.

template <Game G>
bool is_decisive(G& g, const typename G::Move& m) {
  if constexpr (requires(const G& cg, const typename G::Move& mm) { { cg.is_decisive(mm) } -> std::same_as<bool>; }) {
    return static_cast<const G&>(g).is_decisive(m);
  } else {
    const Player mover = g.to_move();
    g.apply(m);
    const bool win = g.is_terminal() && g.terminal_reward().for_player(mover) > 0;
    g.undo();
    return win;
  }
}

/// True iff the player to move has a move that wins on the spot.
template <Game G>
bool has_decisive_move(G& g) {
  if constexpr (requires(const G& cg) { { cg.has_decisive_move() } -> std::same_as<bool>; }) {
    return static_cast<const G&>(g).has_decisive_move();
  } else {
    std::vector<typename G::Move> moves;
    g.legal_moves(moves);
    for (const auto& m : moves)
      if (is_decisive(g, m)) return true;
    return false;
  }
}

template <Game G>
bool is_capture(const G& g, const typename G::Move& m) {
  if constexpr (requires(const G& cg, const typename G::Move& mm) { { cg.is_capture(mm) } -> std::same_as<bool>; })
    return g.is_capture(m);
  else
    return false;
}

template <Game G>
bool captures_undefended(const G& g, const typename G::Move& m) {
  if constexpr (requires(const G& cg, const typename G::Move& mm) { { cg.captures_undefended(mm) } -> std::same_as<bool>; })
    return g.captures_undefended(m);
  else
    return false;
}

template <Game G>
bool grants_extra_turn(const G& g, const typename G::Move& m) {
  if constexpr (requires(const G& cg, const typename G::Move& mm) { { cg.grants_extra_turn(mm) } -> std::same_as<bool>; })
    return g.grants_extra_turn(m);
  else
    return false;
}

}  // namespace immcts
