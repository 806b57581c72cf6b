#pragma once

// Deliberately plain reference implementations on char grids, written
// without reference to the bitboard engines.

#include <array>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

namespace oracle {

// ---------------------------------------------------------------- Breakthrough

struct NaiveBt {
  // grid[row][col]: '.', '1', '2'; row 0 is player 1's back rank.
  std::array<std::array<char, 8>, 8> grid{};
  int to_move = 1;

  static NaiveBt start() {
    NaiveBt b;
    for (auto& row : b.grid) row.fill('.');
    for (int c = 0; c < 8; ++c) {
      b.grid[0][c] = b.grid[1][c] = '1';
      b.grid[6][c] = b.grid[7][c] = '2';
    }
    return b;
  }

  struct Move {
    int fr, fc, tr, tc;
  };

  int count(char who) const {
    int n = 0;
    for (const auto& row : grid)
      for (char x : row) n += x == who;
    return n;
  }

  std::vector<Move> raw_moves(int player) const {
    std::vector<Move> out;
    const char me = player == 1 ? '1' : '2';
    const char them = player == 1 ? '2' : '1';
    const int dir = player == 1 ? 1 : -1;
    for (int r = 0; r < 8; ++r)
      for (int c = 0; c < 8; ++c) {
        if (grid[r][c] != me) continue;
        const int nr = r + dir;
        if (nr < 0 || nr > 7) continue;
        for (int dc = -1; dc <= 1; ++dc) {
          const int nc = c + dc;
          if (nc < 0 || nc > 7) continue;
          const char t = grid[nr][nc];
          if (t == '.' || (dc != 0 && t == them)) out.push_back({r, c, nr, nc});
        }
      }
    return out;
  }

  bool terminal() const {
    for (int c = 0; c < 8; ++c)
      if (grid[7][c] == '1' || grid[0][c] == '2') return true;
    if (count('1') == 0 || count('2') == 0) return true;
    return raw_moves(to_move).empty();
  }

  /// Winner (1 or 2) of a terminal position.
  int winner() const {
    for (int c = 0; c < 8; ++c) {
      if (grid[7][c] == '1') return 1;
      if (grid[0][c] == '2') return 2;
    }
    if (count('1') == 0) return 2;
    if (count('2') == 0) return 1;
    return 3 - to_move;
  }

  std::vector<Move> moves() const { return terminal() ? std::vector<Move>{} : raw_moves(to_move); }

  NaiveBt after(const Move& m) const {
    NaiveBt b = *this;
    b.grid[m.tr][m.tc] = b.grid[m.fr][m.fc];
    b.grid[m.fr][m.fc] = '.';
    b.to_move = 3 - to_move;
    return b;
  }
};

inline std::uint64_t perft(const NaiveBt& b, int depth) {
  if (depth == 0) return 1;
  const auto ms = b.moves();
  if (depth == 1) return ms.size();
  std::uint64_t n = 0;
  for (const auto& m : ms) n += perft(b.after(m), depth - 1);
  return n;
}

// ---------------------------------------------------------------- Lines of Action

struct NaiveLoa {
  std::array<std::array<char, 8>, 8> grid{};
  int to_move = 1;
  int plies = 0;
  int max_plies = 300;
  int status = 0;  // 0 ongoing, 1 or 2 winner

  static NaiveLoa start() {
    NaiveLoa b;
    for (auto& row : b.grid) row.fill('.');
    for (int i = 1; i <= 6; ++i) {
      b.grid[0][i] = b.grid[7][i] = '1';
      b.grid[i][0] = b.grid[i][7] = '2';
    }
    return b;
  }

  struct Move {
    int fr, fc, tr, tc;
  };

  static bool connected(const std::array<std::array<char, 8>, 8>& g, char who) {
    int total = 0, sr = -1, sc = -1;
    for (int r = 0; r < 8; ++r)
      for (int c = 0; c < 8; ++c)
        if (g[r][c] == who) {
          ++total;
          sr = r;
          sc = c;
        }
    if (total == 0) return false;
    std::array<std::array<bool, 8>, 8> seen{};
    std::vector<std::pair<int, int>> stack{{sr, sc}};
    seen[sr][sc] = true;
    int reached = 0;
    while (!stack.empty()) {
      const auto [r, c] = stack.back();
      stack.pop_back();
      ++reached;
      for (int dr = -1; dr <= 1; ++dr)
        for (int dc = -1; dc <= 1; ++dc) {
          const int nr = r + dr, nc = c + dc;
          if (nr < 0 || nr > 7 || nc < 0 || nc > 7 || seen[nr][nc] || g[nr][nc] != who) continue;
          seen[nr][nc] = true;
          stack.push_back({nr, nc});
        }
    }
    return reached == total;
  }

  int line_pieces(int r, int c, int dr, int dc) const {
    // Walk to one end of the line, then count along the whole line.
    while (r - dr >= 0 && r - dr < 8 && c - dc >= 0 && c - dc < 8) {
      r -= dr;
      c -= dc;
    }
    int n = 0;
    for (; r >= 0 && r < 8 && c >= 0 && c < 8; r += dr, c += dc) n += grid[r][c] != '.';
    return n;
  }

  std::vector<Move> raw_moves(int player) const {
    std::vector<Move> out;
    const char me = player == 1 ? '1' : '2';
    const char them = player == 1 ? '2' : '1';
    static const int dirs[8][2] = {{-1, -1}, {-1, 0}, {-1, 1}, {0, -1}, {0, 1}, {1, -1}, {1, 0}, {1, 1}};
    for (int r = 0; r < 8; ++r)
      for (int c = 0; c < 8; ++c) {
        if (grid[r][c] != me) continue;
        for (const auto& d : dirs) {
          const int k = line_pieces(r, c, d[0], d[1]);
          const int tr = r + k * d[0], tc = c + k * d[1];
          if (tr < 0 || tr > 7 || tc < 0 || tc > 7) continue;
          bool blocked = false;
          for (int s = 1; s < k; ++s)
            if (grid[r + s * d[0]][c + s * d[1]] == them) blocked = true;
          if (blocked || grid[tr][tc] == me) continue;
          out.push_back({r, c, tr, tc});
        }
      }
    return out;
  }

  bool terminal() const { return status != 0 || plies >= max_plies; }

  /// 1, 2, or 0 for a draw.
  int winner() const { return status; }

  std::vector<Move> moves() const { return terminal() ? std::vector<Move>{} : raw_moves(to_move); }

  NaiveLoa after(const Move& m) const {
    NaiveLoa b = *this;
    const char me = b.grid[m.fr][m.fc];
    b.grid[m.tr][m.tc] = me;
    b.grid[m.fr][m.fc] = '.';
    b.to_move = 3 - to_move;
    b.plies = plies + 1;
    const int mover = to_move;
    const char mine = mover == 1 ? '1' : '2';
    const char theirs = mover == 1 ? '2' : '1';
    if (connected(b.grid, mine)) b.status = mover;
    else if (connected(b.grid, theirs)) b.status = 3 - mover;
    else if (b.raw_moves(b.to_move).empty()) b.status = mover;
    return b;
  }
};

inline std::uint64_t perft(const NaiveLoa& b, int depth) {
  if (depth == 0) return 1;
  const auto ms = b.moves();
  if (depth == 1) return ms.size();
  std::uint64_t n = 0;
  for (const auto& m : ms) n += perft(b.after(m), depth - 1);
  return n;
}

// ---------------------------------------------------------------- Kalah

struct NaiveKalah {
  // houses[p][i]: player p's i-th house in sowing order; stores[p].
  int h = 6;
  std::vector<std::vector<int>> houses{2, std::vector<int>(6, 4)};
  std::array<int, 2> stores{0, 0};
  int to_move = 0;  // 0 = P1, 1 = P2

  static int side_sum(const std::vector<int>& v) {
    int s = 0;
    for (int x : v) s += x;
    return s;
  }

  bool terminal() const { return side_sum(houses[0]) == 0 || side_sum(houses[1]) == 0; }

  /// P1-view reward of a terminal position.
  int reward() const {
    const int a = stores[0] + side_sum(houses[0]);
    const int b = stores[1] + side_sum(houses[1]);
    return a > b ? 1 : a < b ? -1 : 0;
  }

  std::vector<int> moves() const {
    std::vector<int> out;
    if (terminal()) return out;
    for (int i = 0; i < h; ++i)
      if (houses[to_move][i] > 0) out.push_back(i);
    return out;
  }

  // The ring walk below visits: own houses i+1.., own store, opponent
  // houses 0.., (opponent store skipped), own houses 0..
  NaiveKalah after(int house) const {
    NaiveKalah k = *this;
    const int me = to_move, op = 1 - to_move;
    int stones = k.houses[me][house];
    k.houses[me][house] = 0;
    int side = me, idx = house;  // idx == h means the store of `side`
    while (stones > 0) {
      ++idx;
      if (idx > h || (idx == h && side != me)) {
        side = 1 - side;
        idx = 0;
      }
      if (idx == h) k.stores[me] += 1;
      else k.houses[side][idx] += 1;
      --stones;
    }
    bool extra = side == me && idx == h;
    if (!extra && side == me && k.houses[me][idx] == 1 && k.houses[op][h - 1 - idx] > 0) {
      k.stores[me] += 1 + k.houses[op][h - 1 - idx];
      k.houses[me][idx] = 0;
      k.houses[op][h - 1 - idx] = 0;
    }
    if (k.terminal()) {
      for (int p = 0; p < 2; ++p) {
        k.stores[p] += side_sum(k.houses[p]);
        for (auto& x : k.houses[p]) x = 0;
      }
    }
    k.to_move = extra ? me : op;
    return k;
  }
};

inline std::uint64_t perft(const NaiveKalah& k, int depth) {
  if (depth == 0) return 1;
  const auto ms = k.moves();
  if (depth == 1) return ms.size();
  std::uint64_t n = 0;
  for (int m : ms) n += perft(k.after(m), depth - 1);
  return n;
}

}  // namespace oracle
