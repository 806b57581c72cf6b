#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace immcts {

enum class Player : std::uint8_t { P1 = 0, P2 = 1 };

constexpr Player opponent(Player p) noexcept {
  return p == Player::P1 ? Player::P2 : Player::P1;
}

/// +1 for P1, -1 for P2. Multiplying a P1-view value by sign(p) gives p's view.
constexpr int sign(Player p) noexcept { return p == Player::P1 ? 1 : -1; }

constexpr int index(Player p) noexcept { return static_cast<int>(p); }

inline char player_char(Player p) { return p == Player::P1 ? '1' : '2'; }

inline Player player_from_char(char c) {
  if (c == '1') return Player::P1;
  if (c == '2') return Player::P2;
  throw std::invalid_argument(std::string("bad player token '") + c + "'");
}

/// Terminal outcome, always stored from P1's point of view.
class Reward {
 public:
  constexpr Reward() = default;
  constexpr explicit Reward(int p1_value) : value_(p1_value) {
    if (p1_value < -1 || p1_value > 1)
      throw std::invalid_argument("reward must be -1, 0 or +1");
  }

  static constexpr Reward win_for(Player p) { return Reward(sign(p)); }
  static constexpr Reward draw() { return Reward(0); }

  constexpr int p1() const noexcept { return value_; }
  constexpr int for_player(Player p) const noexcept { return value_ * sign(p); }

  friend constexpr bool operator==(Reward, Reward) = default;

 private:
  int value_ = 0;
};

}  // namespace immcts
