#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include "immcts/core/game.hpp"
#include "immcts/mcts/search.hpp"

namespace immcts {

inline const char* proven_name(Proven p) {
  switch (p) {
    case Proven::None: return "-";
    case Proven::Win: return "win";
    case Proven::Loss: return "loss";
    case Proven::Draw: return "draw";
  }
  return "?";
}

namespace detail {

template <Game G>
void dump_node(G& g, const std::vector<SearchNode<typename G::Move>>& nodes, int id, int depth,
               const std::string& move_text, std::string& out) {
  const auto& nd = nodes[id];
  char buf[160];
  std::snprintf(buf, sizeof buf, " %.17g %.17g %.17g %s\n", nd.n, nd.r, nd.v, proven_name(nd.proven));
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  out += move_text;
  out += buf;
  for (int c = nd.first_child; c >= 0; c = nodes[c].next_sibling) {
    const std::string text = g.move_to_string(nodes[c].move);
    g.apply(nodes[c].move);
    dump_node(g, nodes, c, depth + 1, text, out);
    g.undo();
  }
}

}  // namespace detail

/// Depth-first dump, one node per line: `<indent><move> n r v proven`. The
/// root prints as `root`; doubles use %.17g so equal dumps mean equal trees.
template <Game G>
std::string dump_tree(const G& root_state, const std::vector<SearchNode<typename G::Move>>& nodes) {
  std::string out;
  if (nodes.empty()) return out;
  G g = root_state;
  detail::dump_node(g, nodes, 0, 0, "root", out);
  return out;
}

}  // namespace immcts
