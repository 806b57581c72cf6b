#include <gtest/gtest.h>

#include <algorithm>

#include "immcts/alphabeta/search.hpp"
#include "immcts/games/breakthrough.hpp"
#include "immcts/games/evals.hpp"
#include "immcts/games/kalah.hpp"
#include "immcts/games/loa.hpp"
#include "oracles/minimax.hpp"
#include "support/positions.hpp"

using namespace immcts;

namespace {

AbConfig depth(int d, MoveOrdering o = MoveOrdering::None) {
  AbConfig c;
  c.budget = AbConfig::Budget::Depth;
  c.depth = d;
  c.ordering = o;
  return c;
}

Breakthrough bt(const std::string& rows, Player to_move) {
  std::string text = rows;
  std::replace(text.begin(), text.end(), '/', '\n');
  return Breakthrough::from_text(text + "\nto_move: " + player_char(to_move) + "\n");
}

}  // namespace

TEST(AlphaBeta, ValueEqualsPlainMinimax) {
  const auto bte = BreakthroughEval::material();
  const KalahEval ke;
  const LoaEval le;
  for (std::uint64_t s = 1; s <= 8; ++s) {
    auto b = fixtures::random_position<Breakthrough>(s, 30);
    for (int d = 1; d <= 3; ++d) {
      AlphaBeta<Breakthrough, BreakthroughEval> ab(depth(d), bte);
      EXPECT_NEAR(ab.iterative_deepening(b).value, oracle::plain_minimax(b, d, bte), 1e-12);
    }
    auto k = fixtures::random_position<Kalah>(s, 20);
    for (int d = 1; d <= 5; ++d) {
      AlphaBeta<Kalah, KalahEval> ab(depth(d), ke);
      EXPECT_NEAR(ab.iterative_deepening(k).value, oracle::plain_minimax(k, d, ke), 1e-12);
    }
    auto l = fixtures::random_position<Loa>(s, 20);
    AlphaBeta<Loa, LoaEval> ab(depth(2), le);
    EXPECT_NEAR(ab.iterative_deepening(l).value, oracle::plain_minimax(l, 2, le), 1e-12);
  }
}

TEST(AlphaBeta, OrderingChangesNodesNotValue) {
  const auto eval = BreakthroughEval::material();
  for (std::uint64_t s = 1; s <= 10; ++s) {
    const auto b = fixtures::random_position<Breakthrough>(s, 40);
    AlphaBeta<Breakthrough, BreakthroughEval> plain(depth(4), eval);
    AlphaBeta<Breakthrough, BreakthroughEval> ordered(depth(4, MoveOrdering::StaticBreakthrough), eval);
    EXPECT_NEAR(plain.iterative_deepening(b).value, ordered.iterative_deepening(b).value, 1e-12);
  }
  const KalahEval ke;
  for (std::uint64_t s = 1; s <= 10; ++s) {
    const auto k = fixtures::random_position<Kalah>(s, 10);
    AlphaBeta<Kalah, KalahEval> plain(depth(6), ke);
    AlphaBeta<Kalah, KalahEval> ordered(depth(6, MoveOrdering::StaticKalah), ke);
    EXPECT_NEAR(plain.iterative_deepening(k).value, ordered.iterative_deepening(k).value, 1e-12);
  }
  const LoaEval le;
  for (std::uint64_t s = 1; s <= 4; ++s) {
    const auto l = fixtures::random_position<Loa>(s, 20);
    AlphaBeta<Loa, LoaEval> plain(depth(3), le);
    AlphaBeta<Loa, LoaEval> ordered(depth(3, MoveOrdering::StaticLoa), le);
    EXPECT_NEAR(plain.iterative_deepening(l).value, ordered.iterative_deepening(l).value, 1e-12);
  }
}

TEST(AlphaBeta, DepthOneIsStaticArgmax) {
  const auto eval = BreakthroughEval::material();
  for (std::uint64_t s = 1; s <= 10; ++s) {
    Breakthrough b = fixtures::random_position<Breakthrough>(s, 30);
    AlphaBeta<Breakthrough, BreakthroughEval> ab(depth(1), eval);
    const auto res = ab.iterative_deepening(b);
    const int me = sign(b.to_move());
    double best = -2;
    for (const auto& m : legal_moves(b)) {
      b.apply(m);
      const double v = b.is_terminal() ? b.terminal_reward().for_player(opponent(b.to_move())) : me * eval(b);
      b.undo();
      best = std::max(best, v);
    }
    EXPECT_DOUBLE_EQ(res.value, best);
    b.apply(res.move);
    const double chosen = b.is_terminal() ? b.terminal_reward().for_player(opponent(b.to_move())) : me * eval(b);
    EXPECT_DOUBLE_EQ(chosen, best);
  }
}

TEST(AlphaBeta, SmallKalahFullDepthMatchesExhaustiveValue) {
  KalahRules rules;
  rules.houses = 2;
  const Kalah k(rules, 2);
  oracle::GameValue<Kalah> value;
  Kalah copy = k;
  const int exact = value(copy);
  AlphaBeta<Kalah, KalahEval> ab(depth(40), KalahEval{});
  EXPECT_EQ(ab.iterative_deepening(k).value, exact);
  for (std::uint64_t s = 1; s <= 20; ++s) {
    Kalah m = fixtures::mini_kalah(s);
    if (m.is_terminal()) continue;
    oracle::GameValue<Kalah> v;
    AlphaBeta<Kalah, KalahEval> full(depth(60), KalahEval{});
    EXPECT_EQ(full.iterative_deepening(m).value, v(m)) << m.to_text();
  }
}

TEST(AlphaBeta, FindsForcedWinInThree) {
  // P1 pawns on a6 and h6; the P2 pawns are too far away to stop either.
  const Breakthrough b = bt("....22../...2..../1......1/......../......../......../......../........", Player::P1);
  Breakthrough copy = b;
  oracle::GameValue<Breakthrough> value;
  ASSERT_EQ(value(copy), 1);
  AlphaBeta<Breakthrough, BreakthroughEval> ab(depth(3), BreakthroughEval::material());
  const auto res = ab.iterative_deepening(b);
  EXPECT_EQ(res.value, 1.0);
  Breakthrough after = b;
  after.apply(res.move);
  EXPECT_EQ(-value(after), 1);
}

TEST(AlphaBeta, FixedDepthIsDeterministic) {
  const auto b = fixtures::random_position<Breakthrough>(21, 20);
  AlphaBeta<Breakthrough, BreakthroughEval> a(depth(4, MoveOrdering::StaticBreakthrough), BreakthroughEval::material());
  AlphaBeta<Breakthrough, BreakthroughEval> c(depth(4, MoveOrdering::StaticBreakthrough), BreakthroughEval::material());
  const auto ra = a.iterative_deepening(b);
  const auto rc = c.iterative_deepening(b);
  EXPECT_EQ(ra.move, rc.move);
  EXPECT_EQ(ra.value, rc.value);
  EXPECT_EQ(ra.nodes, rc.nodes);
  EXPECT_EQ(ra.depth, 4);
}

TEST(AlphaBeta, NodesGrowWithDepth) {
  const auto b = fixtures::random_position<Breakthrough>(4, 20);
  std::uint64_t last = 0;
  for (int d = 1; d <= 4; ++d) {
    AlphaBeta<Breakthrough, BreakthroughEval> ab(depth(d), BreakthroughEval::material());
    const auto nodes = ab.iterative_deepening(b).nodes;
    EXPECT_GT(nodes, last);
    last = nodes;
  }
}

TEST(AlphaBeta, StaticOrderingPrunesMore) {
  const auto eval = BreakthroughEval::material();
  int better_or_equal = 0;
  const int positions = 30;
  for (std::uint64_t s = 1; s <= positions; ++s) {
    auto b = fixtures::random_position<Breakthrough>(s + 300, 40);
    AlphaBeta<Breakthrough, BreakthroughEval> plain(depth(3), eval);
    AlphaBeta<Breakthrough, BreakthroughEval> ordered(depth(3, MoveOrdering::StaticBreakthrough), eval);
    plain.alphabeta(b, 3, -2, 2);
    ordered.alphabeta(b, 3, -2, 2);
    better_or_equal += ordered.nodes() <= plain.nodes();
  }
  EXPECT_GE(better_or_equal, positions * 9 / 10);
}

TEST(AlphaBeta, NodeBudgetStopsSearch) {
  AbConfig c;
  c.budget = AbConfig::Budget::Nodes;
  c.nodes = 5000;
  AlphaBeta<Breakthrough, BreakthroughEval> ab(c, BreakthroughEval::material());
  const auto res = ab.iterative_deepening(Breakthrough{});
  EXPECT_GE(res.depth, 1);
  EXPECT_LE(res.nodes, 5001u + 5000u);
  Breakthrough g;
  EXPECT_NO_THROW(g.apply(res.move));
}

TEST(AlphaBeta, TimeBudgetCompletesDepthOne) {
  AbConfig c;
  c.budget = AbConfig::Budget::Millis;
  c.millis = 1;
  AlphaBeta<Loa, LoaEval> ab(c, LoaEval{});
  const auto res = ab.iterative_deepening(Loa{});
  EXPECT_GE(res.depth, 1);
}

TEST(AlphaBeta, SearchFromTerminalThrows) {
  const Kalah g = Kalah::from_counts({0, 0, 0, 0, 0, 0}, 30, {0, 0, 0, 0, 0, 0}, 18);
  AlphaBeta<Kalah, KalahEval> ab(depth(2), KalahEval{});
  EXPECT_THROW(ab.iterative_deepening(g), GameStateError);
  EXPECT_THROW((AlphaBeta<Kalah, KalahEval>(depth(0), KalahEval{})), std::invalid_argument);
}

TEST(MoveOrdering, WinningMoveFirst) {
  Breakthrough b = bt("2......./......1./......../......../......../...2..../1......./........", Player::P1);
  auto moves = legal_moves(b);
  order_moves(b, moves, MoveOrdering::StaticBreakthrough);
  EXPECT_TRUE(b.is_decisive(moves.front()));
}

TEST(MoveOrdering, StableWithoutSpecialMoves) {
  Breakthrough b;
  auto moves = legal_moves(b);
  const auto original = moves;
  order_moves(b, moves, MoveOrdering::StaticBreakthrough);
  EXPECT_EQ(moves, original);
  order_moves(b, moves, MoveOrdering::None);
  EXPECT_EQ(moves, original);
}

TEST(MoveOrdering, CaptureClasses) {
  // P1 d4 can take an undefended c5 or a defended e5; the pawns on b2, g2 and h1 add
  // quiet moves.
  Breakthrough b = bt("......../......../.....2../..2.2.../...1..../......../.1....1./.......1", Player::P1);
  auto moves = legal_moves(b);
  const auto cls = move_classes(b, moves, MoveOrdering::StaticBreakthrough);
  int undefended = 0, defended = 0, quiet = 0;
  for (std::size_t i = 0; i < moves.size(); ++i) {
    if (cls[i] == 1) ++undefended;
    else if (cls[i] == 2) ++defended;
    else if (cls[i] == 3) ++quiet;
  }
  EXPECT_EQ(undefended, 1);
  EXPECT_EQ(defended, 1);
  EXPECT_GT(quiet, 0);
  order_moves(b, moves, MoveOrdering::StaticBreakthrough);
  const auto sorted = move_classes(b, moves, MoveOrdering::StaticBreakthrough);
  EXPECT_TRUE(std::is_sorted(sorted.begin(), sorted.end()));
}

TEST(MoveOrdering, KalahExtraTurnsFirst) {
  Kalah k = Kalah::from_counts({1, 0, 0, 3, 0, 2}, 5, {2, 2, 0, 1, 3, 1}, 4, Player::P1);
  auto moves = legal_moves(k);
  order_moves(k, moves, MoveOrdering::StaticKalah);
  EXPECT_TRUE(grants_extra_turn(k, moves.front()));
}
