#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>

#include "immcts/games/breakthrough.hpp"
#include "immcts/games/kalah.hpp"
#include "immcts/games/loa.hpp"
#include "immcts/games/sigmoid.hpp"
#include "immcts/games/square_table.hpp"

namespace immcts {

// Every evaluator returns v0(s) from P1's point of view: terminal states give
// the exact reward, other states a sigmoid-scaled score in (-1, 1).

/// Store difference ("efK").
class KalahEval {
 public:
  static constexpr double kDefaultSlope = 10.0;
  explicit KalahEval(double k = kDefaultSlope, bool exact_sigmoid = false) : sigmoid_(k, exact_sigmoid) {}

  double raw(const Kalah& b) const { return b.store(Player::P1) - b.store(Player::P2); }
  double operator()(const Kalah& b) const {
    if (b.is_terminal()) return b.terminal_reward().p1();
    return sigmoid_(raw(b));
  }
  const Sigmoid& sigmoid() const noexcept { return sigmoid_; }
  std::string id() const { return "efK"; }

 private:
  Sigmoid sigmoid_;
};

enum class BreakthroughEvalKind { MaterialAdvance, SquareTable };

class BreakthroughEval {
 public:
  static constexpr double kDefaultSlope = 40.0;

  /// efMS: 10 per piece plus 2.5 per row of the furthest advanced piece.
  static BreakthroughEval material(double k = kDefaultSlope, bool exact_sigmoid = false) {
    return BreakthroughEval(BreakthroughEvalKind::MaterialAdvance, nullptr, k, exact_sigmoid);
  }
  /// efLH: sum of per-square values.
  static BreakthroughEval square_table(SquareTable table, double k = kDefaultSlope, bool exact_sigmoid = false) {
    return BreakthroughEval(BreakthroughEvalKind::SquareTable, std::make_shared<const SquareTable>(std::move(table)),
                            k, exact_sigmoid);
  }

  static double material_score(const Breakthrough& b, Player p) {
    const int adv = b.rows_advanced(p);
    return 10.0 * b.piece_count(p) + 2.5 * (adv < 0 ? 0 : adv);
  }

  static double table_score(const Breakthrough& b, const SquareTable& t, Player p) {
    const auto& values = p == Player::P1 ? t.p1 : t.p2;
    double s = 0;
    for (auto bits = b.pieces(p); bits; bits &= bits - 1) s += values[std::countr_zero(bits)];
    return s;
  }

  double raw(const Breakthrough& b) const {
    if (kind_ == BreakthroughEvalKind::MaterialAdvance)
      return material_score(b, Player::P1) - material_score(b, Player::P2);
    return table_score(b, *table_, Player::P1) - table_score(b, *table_, Player::P2);
  }

  double operator()(const Breakthrough& b) const {
    if (b.is_terminal()) return b.terminal_reward().p1();
    return sigmoid_(raw(b));
  }

  BreakthroughEvalKind kind() const noexcept { return kind_; }
  const Sigmoid& sigmoid() const noexcept { return sigmoid_; }
  std::string id() const { return kind_ == BreakthroughEvalKind::MaterialAdvance ? "efMS" : "efLH"; }

 private:
  BreakthroughEval(BreakthroughEvalKind kind, std::shared_ptr<const SquareTable> table, double k, bool exact)
      : kind_(kind), table_(std::move(table)), sigmoid_(k, exact) {}

  BreakthroughEvalKind kind_;
  std::shared_ptr<const SquareTable> table_;
  Sigmoid sigmoid_;
};

/// "loa-simple": concentration proxy. Each side scores minus the mean
/// Chebyshev distance of its pieces to their centroid.
class LoaEval {
 public:
  static constexpr double kDefaultSlope = 1.0;
  explicit LoaEval(double k = kDefaultSlope, bool exact_sigmoid = false) : sigmoid_(k, exact_sigmoid) {}

  static double mean_centroid_distance(Loa::Bitboard pieces) {
    const int n = std::popcount(pieces);
    if (n == 0) return 0.0;
    double sr = 0, sc = 0;
    for (auto b = pieces; b; b &= b - 1) {
      const int sq = std::countr_zero(b);
      sr += Loa::row_of(sq);
      sc += Loa::col_of(sq);
    }
    const double cr = sr / n, cc = sc / n;
    double total = 0;
    for (auto b = pieces; b; b &= b - 1) {
      const int sq = std::countr_zero(b);
      total += std::max(std::abs(Loa::row_of(sq) - cr), std::abs(Loa::col_of(sq) - cc));
    }
    return total / n;
  }

  double raw(const Loa& b) const {
    return mean_centroid_distance(b.pieces(Player::P2)) - mean_centroid_distance(b.pieces(Player::P1));
  }

  double operator()(const Loa& b) const {
    if (b.is_terminal()) return b.terminal_reward().p1();
    return sigmoid_(raw(b));
  }

  const Sigmoid& sigmoid() const noexcept { return sigmoid_; }
  std::string id() const { return "loa-simple"; }

 private:
  Sigmoid sigmoid_;
};

/// Prior strength of the position just reached, for the player who made the
/// last move: 0.5 * (defended share of that player's pieces) + 0.25.
inline double node_prior_strength(const Breakthrough& child) {
  const Player mover = opponent(child.to_move());
  return 0.5 * child.defended_fraction(mover) + 0.5 * 0.5;
}

}  // namespace immcts
