#include <gtest/gtest.h>

#include <map>
#include <set>

#include "immcts/core/game.hpp"
#include "immcts/core/player.hpp"
#include "immcts/core/rng.hpp"
#include "immcts/games/breakthrough.hpp"
#include "immcts/games/kalah.hpp"
#include "immcts/games/loa.hpp"

using namespace immcts;

TEST(Player, OpponentIsAnInvolution) {
  for (Player p : {Player::P1, Player::P2}) {
    EXPECT_EQ(opponent(opponent(p)), p);
    EXPECT_NE(opponent(p), p);
  }
  EXPECT_EQ(sign(Player::P1), 1);
  EXPECT_EQ(sign(Player::P2), -1);
  EXPECT_EQ(player_from_char(player_char(Player::P2)), Player::P2);
}

TEST(Reward, ZeroSumViews) {
  for (int v : {-1, 0, 1}) {
    const Reward r(v);
    EXPECT_EQ(r.for_player(Player::P1), -r.for_player(Player::P2));
    EXPECT_EQ(r.p1(), v);
  }
  EXPECT_EQ(Reward::win_for(Player::P2).p1(), -1);
  EXPECT_EQ(Reward::draw().p1(), 0);
  EXPECT_THROW(Reward(2), std::invalid_argument);
}

TEST(Rng, SameSeedSameStream) {
  Rng a(42), b(42), c(43);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next();
    EXPECT_EQ(x, b.next());
    differs |= x != c.next();
  }
  EXPECT_TRUE(differs);
}

TEST(Rng, IndexStaysInRangeAndCoversIt) {
  Rng r(7);
  std::map<std::size_t, int> seen;
  for (int i = 0; i < 7000; ++i) {
    const auto k = r.index(7);
    ASSERT_LT(k, 7u);
    ++seen[k];
  }
  EXPECT_EQ(seen.size(), 7u);
  for (const auto& [k, n] : seen) EXPECT_NEAR(n, 1000, 150);
}

TEST(Rng, UniformInUnitInterval) {
  Rng r(1);
  double sum = 0;
  for (int i = 0; i < 20000; ++i) {
    const double u = r.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  EXPECT_NEAR(sum / 20000, 0.5, 0.01);
}

TEST(Rng, WeightedFollowsWeights) {
  Rng r(3);
  const std::vector<double> w{1, 4, 0, 5};
  std::vector<int> hits(4, 0);
  for (int i = 0; i < 100000; ++i) ++hits[r.weighted(w)];
  EXPECT_EQ(hits[2], 0);
  EXPECT_NEAR(hits[0] / 1e5, 0.1, 0.01);
  EXPECT_NEAR(hits[1] / 1e5, 0.4, 0.01);
  EXPECT_NEAR(hits[3] / 1e5, 0.5, 0.01);
}

TEST(Rng, MixSeedSeparatesStreams) {
  std::set<std::uint64_t> values;
  for (std::uint64_t s = 0; s < 1000; ++s) values.insert(mix_seed(9, s));
  EXPECT_EQ(values.size(), 1000u);
  EXPECT_EQ(mix_seed(9, 3), mix_seed(9, 3));
}

namespace {

template <Game G>
std::size_t random_round_trips(G start, std::uint64_t seed, int walks, int max_len) {
  Rng rng(seed);
  std::size_t pairs = 0;
  std::vector<typename G::Move> moves;
  for (int w = 0; w < walks; ++w) {
    G g = start;
    std::vector<std::string> encodings{g.encode()};
    while (!g.is_terminal() && static_cast<int>(encodings.size()) <= max_len) {
      g.legal_moves(moves);
      EXPECT_FALSE(moves.empty());
      const auto m = moves[rng.index(moves.size())];
      // Single-step round trip.
      {
        const std::string before = g.encode();
        g.apply(m);
        g.undo();
        EXPECT_EQ(g.encode(), before);
        ++pairs;
      }
      g.apply(m);
      encodings.push_back(g.encode());
    }
    if (g.is_terminal()) {
      g.legal_moves(moves);
      EXPECT_TRUE(moves.empty());
      const Reward r = g.terminal_reward();
      EXPECT_EQ(r.for_player(Player::P1), -r.for_player(Player::P2));
    }
    for (std::size_t i = encodings.size() - 1; i > 0; --i) {
      g.undo();
      EXPECT_EQ(g.encode(), encodings[i - 1]);
    }
    EXPECT_THROW(g.undo(), GameStateError);
  }
  return pairs;
}

template <Game G>
void replay_is_deterministic(G start, std::uint64_t seed) {
  Rng rng(seed);
  G g = start;
  std::vector<typename G::Move> played, moves;
  while (!g.is_terminal() && played.size() < 200) {
    g.legal_moves(moves);
    played.push_back(moves[rng.index(moves.size())]);
    g.apply(played.back());
  }
  G a = start, b = start;
  for (const auto& m : played) a.apply(m);
  for (const auto& m : played) b.apply(m);
  EXPECT_EQ(a.encode(), b.encode());
  EXPECT_EQ(a.encode(), g.encode());
}

}  // namespace

TEST(GameCore, UndoOnFreshStateThrows) {
  Breakthrough bt;
  Kalah k;
  Loa l;
  EXPECT_THROW(bt.undo(), GameStateError);
  EXPECT_THROW(k.undo(), GameStateError);
  EXPECT_THROW(l.undo(), GameStateError);
}

TEST(GameCore, ApplyUndoRoundTripKalah) {
  std::size_t pairs = random_round_trips(Kalah(), 11, 2000, 400);
  for (std::uint64_t s = 0; s < 400; ++s) pairs += random_round_trips(Kalah::random_start(s), s, 5, 400);
  EXPECT_GE(pairs, 100000u);
}
TEST(GameCore, ApplyUndoRoundTripBreakthrough) { EXPECT_GE(random_round_trips(Breakthrough(), 12, 2000, 400), 100000u); }
TEST(GameCore, ApplyUndoRoundTripLoa) { EXPECT_GE(random_round_trips(Loa(), 13, 1000, 400), 100000u); }

TEST(GameCore, ReplayIsDeterministic) {
  replay_is_deterministic(Kalah(), 1);
  replay_is_deterministic(Breakthrough(), 2);
  replay_is_deterministic(Loa(), 3);
}

TEST(GameCore, ParseMoveFindsPrintedMoves) {
  Breakthrough bt;
  for (const auto& m : legal_moves(bt)) {
    const auto parsed = parse_move(bt, bt.move_to_string(m));
    ASSERT_TRUE(parsed);
    EXPECT_EQ(*parsed, m);
  }
  EXPECT_FALSE(parse_move(bt, "a1-a5"));
}

TEST(GameCore, TerminalRewardOnNonterminalThrows) {
  EXPECT_THROW(Breakthrough().terminal_reward(), GameStateError);
  EXPECT_THROW(Kalah().terminal_reward(), GameStateError);
  EXPECT_THROW(Loa().terminal_reward(), GameStateError);
}
