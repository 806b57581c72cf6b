#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "immcts/core/game.hpp"
#include "immcts/core/player.hpp"
#include "immcts/core/rng.hpp"

namespace immcts {

struct KalahRules {
  int houses = 6;
  /// When false, landing in an own empty house captures only if the opposite
  /// house holds stones.
  bool capture_empty_opposite = false;
};

// Pit layout: P1 houses [0, h), P1 store h, P2 houses [h+1, 2h], P2 store
// 2h+1. Sowing runs in increasing index order (counter-clockwise), wrapping.
class Kalah {
 public:
  using Move = std::uint8_t;  // house index 0..houses-1, relative to the mover
  static constexpr int kMaxHouses = 6;
  static constexpr int kMaxPits = 2 * kMaxHouses + 2;

  explicit Kalah(KalahRules rules = {}, int stones_per_house = 4) : rules_(rules) {
    if (rules_.houses < 1 || rules_.houses > kMaxHouses)
      throw std::invalid_argument("kalah: houses must be in 1..6");
    for (int i = 0; i < rules_.houses; ++i) {
      pits_[house_pit(Player::P1, i)] = static_cast<std::uint8_t>(stones_per_house);
      pits_[house_pit(Player::P2, i)] = static_cast<std::uint8_t>(stones_per_house);
    }
  }

  /// Board from explicit house/store contents; houses[p][i] is p's i-th house.
  static Kalah from_counts(const std::vector<int>& p1_houses, int p1_store,
                           const std::vector<int>& p2_houses, int p2_store,
                           Player to_move = Player::P1, KalahRules rules = {}) {
    if (p1_houses.size() != p2_houses.size())
      throw std::invalid_argument("kalah: both sides need the same number of houses");
    rules.houses = static_cast<int>(p1_houses.size());
    Kalah k(rules, 0);
    for (int i = 0; i < rules.houses; ++i) {
      k.pits_[k.house_pit(Player::P1, i)] = checked_count(p1_houses[i]);
      k.pits_[k.house_pit(Player::P2, i)] = checked_count(p2_houses[i]);
    }
    k.pits_[k.store_pit(Player::P1)] = checked_count(p1_store);
    k.pits_[k.store_pit(Player::P2)] = checked_count(p2_store);
    k.to_move_ = to_move;
    return k;
  }

  /// Uniform multinomial placement of `stones` over all 2h houses, stores
  /// empty. Boards where a side starts empty are redrawn.
  static Kalah random_start(std::uint64_t seed, int stones = 48, KalahRules rules = {}) {
    Rng rng(seed);
    Kalah k(rules, 0);
    const int h = rules.houses;
    for (;;) {
      k.pits_.fill(0);
      for (int s = 0; s < stones; ++s) {
        const auto slot = static_cast<int>(rng.index(2 * static_cast<std::size_t>(h)));
        const Player side = slot < h ? Player::P1 : Player::P2;
        ++k.pits_[k.house_pit(side, slot % h)];
      }
      if (!k.side_empty(Player::P1) && !k.side_empty(Player::P2)) break;
    }
    return k;
  }

  Player to_move() const noexcept { return to_move_; }
  int ply() const noexcept { return static_cast<int>(history_.size()); }
  std::size_t history_size() const noexcept { return history_.size(); }
  const KalahRules& rules() const noexcept { return rules_; }
  int houses() const noexcept { return rules_.houses; }

  int house(Player p, int i) const { return pits_[house_pit(p, i)]; }
  int store(Player p) const { return pits_[store_pit(p)]; }
  int side_stones(Player p) const {
    int total = 0;
    for (int i = 0; i < rules_.houses; ++i) total += house(p, i);
    return total;
  }
  int total_stones() const { return side_stones(Player::P1) + side_stones(Player::P2) + store(Player::P1) + store(Player::P2); }

  bool is_terminal() const noexcept { return side_empty(Player::P1) || side_empty(Player::P2); }

  void legal_moves(std::vector<Move>& out) const {
    out.clear();
    if (is_terminal()) return;
    for (int i = 0; i < rules_.houses; ++i)
      if (pits_[house_pit(to_move_, i)] > 0) out.push_back(static_cast<Move>(i));
  }

  bool is_legal(Move m) const {
    return !is_terminal() && m < rules_.houses && pits_[house_pit(to_move_, m)] > 0;
  }

  void apply(Move m) {
    if (!is_legal(m)) throw IllegalMoveError("kalah: illegal house " + std::to_string(int(m)));
    history_.push_back({pits_, to_move_});

    const Player me = to_move_;
    const int skip = store_pit(opponent(me));
    const int n = num_pits();
    int pos = house_pit(me, m);
    int stones = pits_[pos];
    pits_[pos] = 0;
    while (stones > 0) {
      pos = (pos + 1) % n;
      if (pos == skip) continue;
      ++pits_[pos];
      --stones;
    }

    bool extra_turn = pos == store_pit(me);
    if (!extra_turn && owns_house(me, pos) && pits_[pos] == 1) {
      const int opp = opposite(pos);
      if (pits_[opp] > 0 || rules_.capture_empty_opposite) {
        pits_[store_pit(me)] += pits_[opp] + 1;
        pits_[opp] = 0;
        pits_[pos] = 0;
      }
    }

    if (side_empty(Player::P1) || side_empty(Player::P2)) {
      sweep(Player::P1);
      sweep(Player::P2);
      extra_turn = false;
    }
    if (!extra_turn) to_move_ = opponent(me);
  }

  void undo() {
    if (history_.empty()) throw GameStateError("kalah: undo with empty history");
    pits_ = history_.back().pits;
    to_move_ = history_.back().to_move;
    history_.pop_back();
  }

  /// Remaining house stones count for their owner, so boards given in an
  /// unswept final position score correctly.
  Reward terminal_reward() const {
    if (!is_terminal()) throw GameStateError("kalah: terminal_reward on nonterminal state");
    const int p1 = store(Player::P1) + side_stones(Player::P1);
    const int p2 = store(Player::P2) + side_stones(Player::P2);
    return Reward(p1 > p2 ? 1 : (p1 < p2 ? -1 : 0));
  }

  bool grants_extra_turn(Move m) const {
    const int stones = pits_[house_pit(to_move_, m)];
    const int n = num_pits() - 1;  // opponent store is skipped
    const int distance = rules_.houses - m;
    return stones % n == distance % n;
  }

  std::string move_to_string(Move m) const { return "h" + std::to_string(int(m) + 1); }

  std::string encode() const {
    std::string out;
    out.reserve(num_pits() + 2);
    out.push_back(static_cast<char>(rules_.houses));
    for (int i = 0; i < num_pits(); ++i) out.push_back(static_cast<char>(pits_[i]));
    out.push_back(player_char(to_move_));
    return out;
  }

  /// `h1 .. hn / S1 | h1 .. hn / S2 | to_move`
  std::string to_text() const {
    std::ostringstream os;
    for (Player p : {Player::P1, Player::P2}) {
      for (int i = 0; i < rules_.houses; ++i) os << house(p, i) << ' ';
      os << "/ " << store(p) << " | ";
    }
    os << player_char(to_move_);
    return os.str();
  }

  static Kalah from_text(const std::string& text, KalahRules rules = {}) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (;;) {
      const auto bar = text.find('|', start);
      parts.push_back(text.substr(start, bar == std::string::npos ? std::string::npos : bar - start));
      if (bar == std::string::npos) break;
      start = bar + 1;
    }
    if (parts.size() != 3) throw std::invalid_argument("kalah text: expected 3 '|'-separated fields");
    auto side = [](const std::string& s, std::vector<int>& houses, int& store) {
      const auto slash = s.find('/');
      if (slash == std::string::npos) throw std::invalid_argument("kalah text: missing '/'");
      std::istringstream hs(s.substr(0, slash));
      for (int v; hs >> v;) houses.push_back(v);
      std::istringstream ss(s.substr(slash + 1));
      if (!(ss >> store)) throw std::invalid_argument("kalah text: missing store");
    };
    std::vector<int> h1, h2;
    int s1 = 0, s2 = 0;
    side(parts[0], h1, s1);
    side(parts[1], h2, s2);
    std::istringstream ts(parts[2]);
    char c = 0;
    if (!(ts >> c)) throw std::invalid_argument("kalah text: missing side to move");
    return from_counts(h1, s1, h2, s2, player_from_char(c), rules);
  }

  friend bool operator==(const Kalah& a, const Kalah& b) { return a.encode() == b.encode(); }

 private:
  struct Snapshot {
    std::array<std::uint8_t, kMaxPits> pits;
    Player to_move;
  };

  static std::uint8_t checked_count(int v) {
    if (v < 0 || v > 255) throw std::invalid_argument("kalah: stone count out of range");
    return static_cast<std::uint8_t>(v);
  }

  int num_pits() const noexcept { return 2 * rules_.houses + 2; }
  int house_pit(Player p, int i) const noexcept { return p == Player::P1 ? i : rules_.houses + 1 + i; }
  int store_pit(Player p) const noexcept { return p == Player::P1 ? rules_.houses : 2 * rules_.houses + 1; }
  int opposite(int pit) const noexcept { return 2 * rules_.houses - pit; }
  bool owns_house(Player p, int pit) const noexcept {
    return p == Player::P1 ? pit < rules_.houses : (pit > rules_.houses && pit <= 2 * rules_.houses);
  }
  bool side_empty(Player p) const noexcept {
    for (int i = 0; i < rules_.houses; ++i)
      if (pits_[house_pit(p, i)]) return false;
    return true;
  }
  void sweep(Player p) {
    for (int i = 0; i < rules_.houses; ++i) {
      pits_[store_pit(p)] += pits_[house_pit(p, i)];
      pits_[house_pit(p, i)] = 0;
    }
  }

  KalahRules rules_;
  std::array<std::uint8_t, kMaxPits> pits_{};
  Player to_move_ = Player::P1;
  std::vector<Snapshot> history_;
};

}  // namespace immcts
