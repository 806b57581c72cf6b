#pragma once

#include <bit>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "immcts/core/game.hpp"
#include "immcts/core/player.hpp"

namespace immcts {

// 8x8 Breakthrough. Square index = row * 8 + col; row 0 is P1's back rank.
// P1 moves towards row 7, P2 towards row 0.
class Breakthrough {
 public:
  struct Move {
    std::uint8_t from = 0;
    std::uint8_t to = 0;
    friend bool operator==(Move, Move) = default;
  };

  using Bitboard = std::uint64_t;
  static constexpr Bitboard kRow0 = 0xFFULL;
  static constexpr Bitboard kRow7 = 0xFFULL << 56;
  static constexpr Bitboard kColA = 0x0101010101010101ULL;
  static constexpr Bitboard kColH = kColA << 7;

  /// Standard start: each side fills its first two rows, P1 to move.
  Breakthrough() {
    pieces_[0] = 0xFFFFULL;
    pieces_[1] = 0xFFFFULL << 48;
  }

  static Breakthrough empty(Player to_move = Player::P1) {
    Breakthrough b;
    b.pieces_[0] = b.pieces_[1] = 0;
    b.to_move_ = to_move;
    return b;
  }

  static constexpr int square(int row, int col) noexcept { return row * 8 + col; }
  static constexpr int row_of(int sq) noexcept { return sq >> 3; }
  static constexpr int col_of(int sq) noexcept { return sq & 7; }

  void place(Player p, int row, int col) {
    const Bitboard bit = 1ULL << square(row, col);
    pieces_[0] &= ~bit;
    pieces_[1] &= ~bit;
    pieces_[index(p)] |= bit;
  }
  void set_to_move(Player p) noexcept { to_move_ = p; }

  Bitboard pieces(Player p) const noexcept { return pieces_[index(p)]; }
  int piece_count(Player p) const noexcept { return std::popcount(pieces(p)); }
  /// 0 = empty, 1 = P1, 2 = P2.
  int at(int sq) const noexcept {
    const Bitboard bit = 1ULL << sq;
    return (pieces_[0] & bit) ? 1 : ((pieces_[1] & bit) ? 2 : 0);
  }

  Player to_move() const noexcept { return to_move_; }
  int ply() const noexcept { return static_cast<int>(history_.size()); }
  std::size_t history_size() const noexcept { return history_.size(); }

  /// Rows the furthest piece of p has advanced past p's back rank (0..7); -1 if p has no pieces.
  int rows_advanced(Player p) const noexcept {
    const Bitboard b = pieces(p);
    if (!b) return -1;
    if (p == Player::P1) return row_of(63 - std::countl_zero(b));
    return 7 - row_of(std::countr_zero(b));
  }

  bool is_terminal() const noexcept {
    if ((pieces_[0] & kRow7) || (pieces_[1] & kRow0)) return true;
    if (!pieces_[0] || !pieces_[1]) return true;
    return mobile_pieces(to_move_) == 0;
  }

  Reward terminal_reward() const {
    if (pieces_[0] & kRow7) return Reward::win_for(Player::P1);
    if (pieces_[1] & kRow0) return Reward::win_for(Player::P2);
    if (!pieces_[1]) return Reward::win_for(Player::P1);
    if (!pieces_[0]) return Reward::win_for(Player::P2);
    if (mobile_pieces(to_move_) == 0) return Reward::win_for(opponent(to_move_));
    throw GameStateError("breakthrough: terminal_reward on nonterminal state");
  }

  void legal_moves(std::vector<Move>& out) const {
    out.clear();
    if (is_terminal()) return;
    const Bitboard own = pieces(to_move_);
    const Bitboard enemy = pieces(opponent(to_move_));
    const Bitboard empty = ~(own | enemy);
    const bool up = to_move_ == Player::P1;
    for (Bitboard b = own; b; b &= b - 1) {
      const int from = std::countr_zero(b);
      const int col = col_of(from);
      // Targets in ascending square order.
      const int lo = up ? from + 7 : from - 9;  // towards column a
      const int mid = up ? from + 8 : from - 8;
      const int hi = up ? from + 9 : from - 7;  // towards column h
      if (col > 0 && !(own & (1ULL << lo))) out.push_back({std::uint8_t(from), std::uint8_t(lo)});
      if (empty & (1ULL << mid)) out.push_back({std::uint8_t(from), std::uint8_t(mid)});
      if (col < 7 && !(own & (1ULL << hi))) out.push_back({std::uint8_t(from), std::uint8_t(hi)});
    }
  }

  bool is_legal(const Move& m) const {
    if (is_terminal() || m.from > 63 || m.to > 63) return false;
    const Bitboard own = pieces(to_move_);
    const Bitboard enemy = pieces(opponent(to_move_));
    if (!(own & (1ULL << m.from))) return false;
    const int dr = row_of(m.to) - row_of(m.from);
    const int dc = col_of(m.to) - col_of(m.from);
    if (dr != (to_move_ == Player::P1 ? 1 : -1) || dc < -1 || dc > 1) return false;
    const Bitboard to = 1ULL << m.to;
    if (dc == 0) return !((own | enemy) & to);
    return !(own & to);
  }

  void apply(const Move& m) {
    if (!is_legal(m)) throw IllegalMoveError("breakthrough: illegal move " + move_to_string(m));
    const int me = index(to_move_);
    const Bitboard to = 1ULL << m.to;
    const bool captured = (pieces_[1 - me] & to) != 0;
    pieces_[me] ^= (1ULL << m.from) | to;
    pieces_[1 - me] &= ~to;
    history_.push_back({m, captured});
    to_move_ = opponent(to_move_);
  }

  void undo() {
    if (history_.empty()) throw GameStateError("breakthrough: undo with empty history");
    const auto [m, captured] = history_.back();
    history_.pop_back();
    to_move_ = opponent(to_move_);
    const int me = index(to_move_);
    pieces_[me] ^= (1ULL << m.from) | (1ULL << m.to);
    if (captured) pieces_[1 - me] |= 1ULL << m.to;
  }

  bool is_capture(const Move& m) const noexcept {
    return (pieces(opponent(to_move_)) >> m.to) & 1ULL;
  }

  /// Whether an own piece of `owner` could recapture on sq.
  bool is_defended(int sq, Player owner) const noexcept {
    const int col = col_of(sq);
    const Bitboard own = pieces(owner);
    if (owner == Player::P1) {
      if (col < 7 && sq >= 7 && ((own >> (sq - 7)) & 1ULL)) return true;
      if (col > 0 && sq >= 9 && ((own >> (sq - 9)) & 1ULL)) return true;
    } else {
      if (col < 7 && sq + 9 <= 63 && ((own >> (sq + 9)) & 1ULL)) return true;
      if (col > 0 && sq + 7 <= 63 && ((own >> (sq + 7)) & 1ULL)) return true;
    }
    return false;
  }

  bool captures_undefended(const Move& m) const noexcept {
    return is_capture(m) && !is_defended(m.to, opponent(to_move_));
  }

  /// Share of p's pieces that are defended (0 if p has none).
  double defended_fraction(Player p) const noexcept {
    int total = 0, defended = 0;
    for (Bitboard b = pieces(p); b; b &= b - 1) {
      ++total;
      if (is_defended(std::countr_zero(b), p)) ++defended;
    }
    return total ? static_cast<double>(defended) / total : 0.0;
  }

  bool is_decisive(const Move& m) const noexcept {
    const Player me = to_move_;
    const Bitboard to = 1ULL << m.to;
    if (to & (me == Player::P1 ? kRow7 : kRow0)) return true;
    Bitboard own = pieces(me);
    Bitboard enemy = pieces(opponent(me));
    own ^= (1ULL << m.from) | to;
    enemy &= ~to;
    if (!enemy) return true;
    return mobile_pieces(opponent(me), enemy, own) == 0;
  }

  bool has_decisive_move() const {
    if (is_terminal()) return false;
    const Player me = to_move_;
    const Bitboard own = pieces(me);
    if (own & (me == Player::P1 ? (kRow7 >> 8) : (kRow0 << 8))) return true;
    // One move removes at most one enemy piece and blocks at most one straight
    // push, so stalemating or wiping out the enemy needs <= 2 mobile pieces.
    if (std::popcount(mobile_pieces(opponent(me))) > 2) return false;
    std::vector<Move> moves;
    legal_moves(moves);
    for (const auto& m : moves)
      if (is_decisive(m)) return true;
    return false;
  }

  /// Pieces of p that have at least one legal move, given explicit boards.
  static Bitboard mobile_pieces(Player p, Bitboard own, Bitboard enemy) noexcept {
    const Bitboard empty = ~(own | enemy);
    const Bitboard not_own = ~own;
    if (p == Player::P1) {
      const Bitboard straight = (empty >> 8) & own;
      const Bitboard lo = ((not_own & ~kColH) >> 7) & own;  // to from+7, col > 0
      const Bitboard hi = ((not_own & ~kColA) >> 9) & own;  // to from+9, col < 7
      return straight | lo | hi;
    }
    const Bitboard straight = (empty << 8) & own;
    const Bitboard lo = ((not_own & ~kColH) << 9) & own;  // to from-9, col > 0
    const Bitboard hi = ((not_own & ~kColA) << 7) & own;  // to from-7, col < 7
    return straight | lo | hi;
  }
  Bitboard mobile_pieces(Player p) const noexcept {
    return mobile_pieces(p, pieces(p), pieces(opponent(p)));
  }

  /// Board flipped top-to-bottom with colours and side to move swapped.
  Breakthrough mirrored() const {
    Breakthrough b = empty(opponent(to_move_));
    for (int sq = 0; sq < 64; ++sq) {
      const int who = at(sq);
      if (who) b.place(who == 1 ? Player::P2 : Player::P1, 7 - row_of(sq), col_of(sq));
    }
    return b;
  }

  std::string move_to_string(const Move& m) const {
    std::string s;
    s += char('a' + col_of(m.from));
    s += char('1' + row_of(m.from));
    s += is_capture(m) ? 'x' : '-';
    s += char('a' + col_of(m.to));
    s += char('1' + row_of(m.to));
    return s;
  }

  std::string encode() const {
    std::string out(65, '.');
    for (int sq = 0; sq < 64; ++sq) out[sq] = "012"[at(sq)];
    out[64] = player_char(to_move_);
    return out;
  }

  /// Eight rank lines, rank 8 first, then `to_move: <1|2>`.
  std::string to_text() const {
    std::string out;
    for (int row = 7; row >= 0; --row) {
      for (int col = 0; col < 8; ++col) out += ".12"[at(square(row, col))];
      out += '\n';
    }
    out += "to_move: ";
    out += player_char(to_move_);
    out += '\n';
    return out;
  }

  static Breakthrough from_text(const std::string& text) {
    std::istringstream is(text);
    Breakthrough b = empty();
    std::string line;
    for (int row = 7; row >= 0; --row) {
      if (!std::getline(is, line) || line.size() != 8)
        throw std::invalid_argument("breakthrough text: expected 8 rank lines of 8 squares");
      for (int col = 0; col < 8; ++col) {
        const char c = line[col];
        if (c == '1') b.place(Player::P1, row, col);
        else if (c == '2') b.place(Player::P2, row, col);
        else if (c != '.') throw std::invalid_argument("breakthrough text: bad square character");
      }
    }
    if (!std::getline(is, line) || line.rfind("to_move: ", 0) != 0 || line.size() != 10)
      throw std::invalid_argument("breakthrough text: missing to_move line");
    b.to_move_ = player_from_char(line[9]);
    return b;
  }

  friend bool operator==(const Breakthrough& a, const Breakthrough& b) {
    return a.pieces_[0] == b.pieces_[0] && a.pieces_[1] == b.pieces_[1] && a.to_move_ == b.to_move_;
  }

 private:
  struct Undo {
    Move move;
    bool captured;
  };

  Bitboard pieces_[2] = {0, 0};
  Player to_move_ = Player::P1;
  std::vector<Undo> history_;
};

}  // namespace immcts
