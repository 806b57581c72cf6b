#pragma once

#include <cmath>
#include <cstddef>
#include <algorithm>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "immcts/core/rng.hpp"
#include "immcts/mcts/config.hpp"

namespace immcts {

/// Proof status of a node, from the point of view of the player to move there.
enum class Proven : std::uint8_t { None, Win, Loss, Draw };

constexpr int proven_value(Proven p) noexcept {
  return p == Proven::Win ? 1 : (p == Proven::Loss ? -1 : 0);
}
constexpr Proven proven_from_value(int v) noexcept {
  return v > 0 ? Proven::Win : (v < 0 ? Proven::Loss : Proven::Draw);
}

/// Statistics of one child as seen by the parent's player to move.
struct EdgeStats {
  double n = 0;      // visits (including virtual prior visits)
  double mean = 0;   // r / n in the parent's view
  double v = 0;      // implicit minimax value in the parent's view
  double v0 = 0;     // static evaluation of the child in the parent's view
  Proven proven = Proven::None;  // child's proof status, in the parent's view
};

inline double q_hat(const EdgeStats& e, SelectionVariant variant, double alpha) {
  switch (variant) {
    case SelectionVariant::Plain: return e.mean;
    case SelectionVariant::ImplicitMinimax: return (1.0 - alpha) * e.mean + alpha * e.v;
    case SelectionVariant::ConstantBias: return (1.0 - alpha) * e.mean + alpha * e.v0;
    case SelectionVariant::ProgressiveBias: return (1.0 - alpha) * e.mean + alpha * e.v / (e.n + 1.0);
  }
  return e.mean;
}

// UCB selection with proof handling: a proven win is taken at once, proven
// draws and losses are skipped while unproven children remain (draws before
// losses), children without visits go first, and ties are broken uniformly at
// random.
inline std::size_t select_index(std::span<const EdgeStats> children, double parent_n, const SearchConfig& cfg,
                                Rng& rng) {
  const std::size_t count = children.size();
  for (std::size_t i = 0; i < count; ++i)
    if (children[i].proven == Proven::Win) return i;

  // Preference by proof status: unproven, then proven draws, then losses.
  auto rank = [](Proven p) { return p == Proven::None ? 0 : (p == Proven::Draw ? 1 : 2); };
  int best_rank = 2;
  for (const auto& c : children) best_rank = std::min(best_rank, rank(c.proven));
  auto eligible = [&](const EdgeStats& c) { return rank(c.proven) == best_rank; };

  thread_local std::vector<std::size_t> ties;
  ties.clear();
  for (std::size_t i = 0; i < count; ++i)
    if (eligible(children[i]) && children[i].n <= 0) ties.push_back(i);
  if (!ties.empty()) return ties[rng.index(ties.size())];

  const double log_n = std::log(parent_n);
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < count; ++i) {
    const auto& c = children[i];
    if (!eligible(c)) continue;
    const double score = q_hat(c, cfg.variant, cfg.alpha) + cfg.C * std::sqrt(log_n / c.n);
    if (score > best) {
      best = score;
      ties.clear();
      ties.push_back(i);
    } else if (score == best) {
      ties.push_back(i);
    }
  }
  return ties.size() == 1 ? ties[0] : ties[rng.index(ties.size())];
}

/// Max-backprop return value. Below the threshold (or without one) the
/// playout reward `r` passes through; from n >= T on, the best Q-hat over the
/// visited children, converted to P1's view with `parent_sign`.
inline double max_backprop(double r, double n, const std::optional<double>& T, std::span<const EdgeStats> children,
                           SelectionVariant variant, double alpha, int parent_sign) {
  if (!T || n < *T) return r;
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& c : children)
    if (c.n > 0) best = std::max(best, q_hat(c, variant, alpha));
  if (best == -std::numeric_limits<double>::infinity()) return r;
  return parent_sign * best;
}

}  // namespace immcts
