#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "immcts/core/game.hpp"
#include "immcts/core/player.hpp"

namespace immcts {

struct LoaRules {
  /// Plies after which an unfinished game is scored as a draw, counted from
  /// the position the board was created with.
  int max_plies = 300;
};

// Lines of Action on 8x8. Square index = row * 8 + col. In the standard start
// P1 holds b1-g1 and b8-g8, P2 holds a2-a7 and h2-h7, and P1 moves first.
class Loa {
 public:
  struct Move {
    std::uint8_t from = 0;
    std::uint8_t to = 0;
    friend bool operator==(Move, Move) = default;
  };
  using Bitboard = std::uint64_t;

  static constexpr std::array<std::array<int, 2>, 8> kDirections = {{
      {-1, -1}, {-1, 0}, {-1, 1}, {0, -1}, {0, 1}, {1, -1}, {1, 0}, {1, 1}}};

  explicit Loa(LoaRules rules = {}) : rules_(rules) {
    for (int c = 1; c <= 6; ++c) {
      put(Player::P1, square(0, c));
      put(Player::P1, square(7, c));
    }
    for (int r = 1; r <= 6; ++r) {
      put(Player::P2, square(r, 0));
      put(Player::P2, square(r, 7));
    }
  }

  static Loa empty(Player to_move = Player::P1, LoaRules rules = {}) {
    Loa b(rules);
    b.pieces_ = {0, 0};
    b.row_count_.fill(0);
    b.col_count_.fill(0);
    b.diag_count_.fill(0);
    b.anti_count_.fill(0);
    b.to_move_ = to_move;
    return b;
  }

  static constexpr int square(int row, int col) noexcept { return row * 8 + col; }
  static constexpr int row_of(int sq) noexcept { return sq >> 3; }
  static constexpr int col_of(int sq) noexcept { return sq & 7; }

  /// Setup helper; call finish_setup() after the last placement.
  void place(Player p, int row, int col) {
    const int sq = square(row, col);
    if (at(sq)) remove(at(sq) == 1 ? Player::P1 : Player::P2, sq);
    put(p, sq);
  }
  void set_to_move(Player p) { to_move_ = p; }
  void finish_setup() { status_ = evaluate_status(opponent(to_move_)); }

  Bitboard pieces(Player p) const noexcept { return pieces_[index(p)]; }
  int piece_count(Player p) const noexcept { return std::popcount(pieces(p)); }
  int at(int sq) const noexcept {
    const Bitboard bit = 1ULL << sq;
    return (pieces_[0] & bit) ? 1 : ((pieces_[1] & bit) ? 2 : 0);
  }
  Player to_move() const noexcept { return to_move_; }
  int ply() const noexcept { return static_cast<int>(history_.size()); }
  std::size_t history_size() const noexcept { return history_.size(); }
  const LoaRules& rules() const noexcept { return rules_; }

  /// Pieces (both colours) on the full line through sq along direction d.
  int line_count(int sq, int d) const noexcept {
    const int r = row_of(sq), c = col_of(sq);
    const auto [dr, dc] = kDirections[d];
    if (dr == 0) return row_count_[r];
    if (dc == 0) return col_count_[c];
    if (dr == dc) return diag_count_[r - c + 7];
    return anti_count_[r + c];
  }

  bool is_terminal() const noexcept { return status_ != Status::Ongoing || ply() >= rules_.max_plies; }

  Reward terminal_reward() const {
    switch (status_) {
      case Status::P1Win: return Reward::win_for(Player::P1);
      case Status::P2Win: return Reward::win_for(Player::P2);
      case Status::Draw: return Reward::draw();
      case Status::Ongoing: break;
    }
    if (ply() >= rules_.max_plies) return Reward::draw();
    throw GameStateError("loa: terminal_reward on nonterminal state");
  }

  void legal_moves(std::vector<Move>& out) const {
    out.clear();
    if (is_terminal()) return;
    generate(out, false);
  }

  bool is_legal(const Move& m) const {
    if (is_terminal() || m.from > 63 || m.to > 63 || m.from == m.to) return false;
    const Bitboard own = pieces(to_move_);
    const Bitboard enemy = pieces(opponent(to_move_));
    if (!((own >> m.from) & 1ULL) || ((own >> m.to) & 1ULL)) return false;
    const int r = row_of(m.from), c = col_of(m.from);
    const int dr = row_of(m.to) - r, dc = col_of(m.to) - c;
    if (dr != 0 && dc != 0 && dr != dc && dr != -dc) return false;
    const int k = std::max(std::abs(dr), std::abs(dc));
    const int sr = (dr > 0) - (dr < 0), sc = (dc > 0) - (dc < 0);
    int d = 0;
    while (kDirections[d][0] != sr || kDirections[d][1] != sc) ++d;
    if (line_count(m.from, d) != k) return false;
    for (int i = 1; i < k; ++i)
      if ((enemy >> square(r + sr * i, c + sc * i)) & 1ULL) return false;
    return true;
  }

  void apply(const Move& m) {
    if (!is_legal(m)) throw IllegalMoveError("loa: illegal move " + move_to_string(m));
    const Player me = to_move_;
    const bool captured = (pieces(opponent(me)) >> m.to) & 1ULL;
    history_.push_back({m, captured, status_});
    if (captured) remove(opponent(me), m.to);
    remove(me, m.from);
    put(me, m.to);
    to_move_ = opponent(me);
    status_ = evaluate_status(me);
  }

  void undo() {
    if (history_.empty()) throw GameStateError("loa: undo with empty history");
    const auto h = history_.back();
    history_.pop_back();
    to_move_ = opponent(to_move_);
    const Player me = to_move_;
    remove(me, h.move.to);
    put(me, h.move.from);
    if (h.captured) put(opponent(me), h.move.to);
    status_ = h.status;
  }

  bool is_capture(const Move& m) const noexcept { return (pieces(opponent(to_move_)) >> m.to) & 1ULL; }

  /// All of p's pieces in one 8-connected group. Vacuously true for 0 pieces.
  static bool connected(Bitboard b) noexcept {
    if (!b) return true;
    Bitboard group = b & (0 - b);
    for (;;) {
      const Bitboard grown = dilate(group) & b;
      if (grown == group) return group == b;
      group = grown;
    }
  }
  bool connected(Player p) const noexcept { return connected(pieces(p)); }

  static Bitboard dilate(Bitboard x) noexcept {
    constexpr Bitboard notA = ~0x0101010101010101ULL;
    constexpr Bitboard notH = ~0x8080808080808080ULL;
    const Bitboard east = (x << 1) & notA;
    const Bitboard west = (x >> 1) & notH;
    Bitboard h = x | east | west;
    return h | (h << 8) | (h >> 8);
  }

  Loa mirrored() const {
    Loa b = empty(opponent(to_move_), rules_);
    for (int sq = 0; sq < 64; ++sq) {
      const int who = at(sq);
      if (who) b.put(who == 1 ? Player::P2 : Player::P1, square(7 - row_of(sq), col_of(sq)));
    }
    b.finish_setup();
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
    out += std::to_string(ply());
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

  static Loa from_text(const std::string& text, LoaRules rules = {}) {
    std::istringstream is(text);
    Loa b = empty(Player::P1, rules);
    std::string line;
    for (int row = 7; row >= 0; --row) {
      if (!std::getline(is, line) || line.size() != 8)
        throw std::invalid_argument("loa text: expected 8 rank lines of 8 squares");
      for (int col = 0; col < 8; ++col) {
        const char c = line[col];
        if (c == '1') b.put(Player::P1, square(row, col));
        else if (c == '2') b.put(Player::P2, square(row, col));
        else if (c != '.') throw std::invalid_argument("loa text: bad square character");
      }
    }
    if (!std::getline(is, line) || line.rfind("to_move: ", 0) != 0 || line.size() != 10)
      throw std::invalid_argument("loa text: missing to_move line");
    b.to_move_ = player_from_char(line[9]);
    b.finish_setup();
    return b;
  }

  friend bool operator==(const Loa& a, const Loa& b) { return a.encode() == b.encode(); }

 private:
  enum class Status : std::uint8_t { Ongoing, P1Win, P2Win, Draw };
  struct Undo {
    Move move;
    bool captured;
    Status status;
  };

  void put(Player p, int sq) {
    pieces_[index(p)] |= 1ULL << sq;
    adjust_counts(sq, +1);
  }
  void remove(Player p, int sq) {
    pieces_[index(p)] &= ~(1ULL << sq);
    adjust_counts(sq, -1);
  }
  void adjust_counts(int sq, int delta) {
    const int r = row_of(sq), c = col_of(sq);
    row_count_[r] = static_cast<std::uint8_t>(row_count_[r] + delta);
    col_count_[c] = static_cast<std::uint8_t>(col_count_[c] + delta);
    diag_count_[r - c + 7] = static_cast<std::uint8_t>(diag_count_[r - c + 7] + delta);
    anti_count_[r + c] = static_cast<std::uint8_t>(anti_count_[r + c] + delta);
  }

  // Result after `mover` has just moved (to_move_ is already the opponent). A
  // move that connects both groups at once is scored for the mover.
  Status evaluate_status(Player mover) const {
    const auto win = [](Player p) { return p == Player::P1 ? Status::P1Win : Status::P2Win; };
    if (connected(mover) && piece_count(mover) > 0) return win(mover);
    if (connected(opponent(mover)) && piece_count(opponent(mover)) > 0) return win(opponent(mover));
    std::vector<Move> probe;
    if (!generate(probe, true)) return win(mover);
    return Status::Ongoing;
  }

  // Returns true if at least one move exists; stops early when first_only.
  bool generate(std::vector<Move>& out, bool first_only) const {
    const Bitboard own = pieces(to_move_);
    const Bitboard enemy = pieces(opponent(to_move_));
    for (Bitboard b = own; b; b &= b - 1) {
      const int from = std::countr_zero(b);
      const int r = row_of(from), c = col_of(from);
      for (int d = 0; d < 8; ++d) {
        const auto [dr, dc] = kDirections[d];
        const int k = line_count(from, d);
        const int tr = r + dr * k, tc = c + dc * k;
        if (tr < 0 || tr > 7 || tc < 0 || tc > 7) continue;
        const int to = square(tr, tc);
        if ((own >> to) & 1ULL) continue;
        bool blocked = false;
        for (int i = 1; i < k && !blocked; ++i)
          blocked = (enemy >> square(r + dr * i, c + dc * i)) & 1ULL;
        if (blocked) continue;
        if (first_only) return true;
        out.push_back({std::uint8_t(from), std::uint8_t(to)});
      }
    }
    return !out.empty();
  }

  LoaRules rules_;
  std::array<Bitboard, 2> pieces_{0, 0};
  std::array<std::uint8_t, 8> row_count_{};
  std::array<std::uint8_t, 8> col_count_{};
  std::array<std::uint8_t, 15> diag_count_{};
  std::array<std::uint8_t, 15> anti_count_{};
  Player to_move_ = Player::P1;
  Status status_ = Status::Ongoing;
  std::vector<Undo> history_;
};

}  // namespace immcts
