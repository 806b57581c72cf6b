#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "immcts/core/game.hpp"

namespace immcts {

enum class MoveOrdering {
  None,
  StaticBreakthrough,  // decisive/anti-decisive, undefended captures, other captures, quiet
  StaticLoa,           // captures, then quiet moves
  StaticKalah,         // extra-turn moves first
};

inline std::string to_string(MoveOrdering o) {
  switch (o) {
    case MoveOrdering::None: return "none";
    case MoveOrdering::StaticBreakthrough: return "static_bt";
    case MoveOrdering::StaticLoa: return "static_loa";
    case MoveOrdering::StaticKalah: return "static_kalah";
  }
  return "?";
}

inline MoveOrdering move_ordering_from_string(const std::string& s) {
  if (s == "none") return MoveOrdering::None;
  if (s == "static_bt") return MoveOrdering::StaticBreakthrough;
  if (s == "static_loa") return MoveOrdering::StaticLoa;
  if (s == "static_kalah") return MoveOrdering::StaticKalah;
  throw std::invalid_argument("unknown move ordering '" + s + "'");
}

/// Ordering class of each move; lower classes are searched first.
template <Game G>
std::vector<int> move_classes(G& g, const std::vector<typename G::Move>& moves, MoveOrdering ordering) {
  std::vector<int> cls(moves.size(), 0);
  switch (ordering) {
    case MoveOrdering::None:
      break;
    case MoveOrdering::StaticKalah:
      for (std::size_t i = 0; i < moves.size(); ++i) cls[i] = grants_extra_turn(g, moves[i]) ? 0 : 1;
      break;
    case MoveOrdering::StaticLoa:
      for (std::size_t i = 0; i < moves.size(); ++i) cls[i] = is_capture(g, moves[i]) ? 0 : 1;
      break;
    case MoveOrdering::StaticBreakthrough: {
      // A move is anti-decisive when some other move would hand the opponent
      // an immediate win and this one does not.
      std::vector<char> safe(moves.size(), 1);
      bool any_unsafe = false;
      for (std::size_t i = 0; i < moves.size(); ++i) {
        g.apply(moves[i]);
        safe[i] = !has_decisive_move(g);
        g.undo();
        any_unsafe |= !safe[i];
      }
      for (std::size_t i = 0; i < moves.size(); ++i) {
        const auto& m = moves[i];
        if (is_decisive(g, m) || (any_unsafe && safe[i])) cls[i] = 0;
        else if (captures_undefended(g, m)) cls[i] = 1;
        else if (is_capture(g, m)) cls[i] = 2;
        else cls[i] = 3;
      }
      break;
    }
  }
  return cls;
}

/// Stable partition of `moves` by ordering class.
template <Game G>
void order_moves(G& g, std::vector<typename G::Move>& moves, MoveOrdering ordering) {
  if (ordering == MoveOrdering::None || moves.size() < 2) return;
  const auto cls = move_classes(g, moves, ordering);
  std::vector<std::size_t> idx(moves.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return cls[a] < cls[b]; });
  std::vector<typename G::Move> sorted;
  sorted.reserve(moves.size());
  for (auto i : idx) sorted.push_back(moves[i]);
  moves = std::move(sorted);
}

}  // namespace immcts
