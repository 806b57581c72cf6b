#pragma once

#include "immcts/core/game.hpp"
#include "immcts/core/player.hpp"
#include "immcts/core/rng.hpp"

#include "immcts/games/breakthrough.hpp"
#include "immcts/games/evals.hpp"
#include "immcts/games/kalah.hpp"
#include "immcts/games/loa.hpp"
#include "immcts/games/sigmoid.hpp"
#include "immcts/games/square_table.hpp"

#include "immcts/mcts/config.hpp"
#include "immcts/mcts/playout.hpp"
#include "immcts/mcts/search.hpp"
#include "immcts/mcts/select.hpp"
#include "immcts/mcts/tree_dump.hpp"

#include "immcts/alphabeta/ordering.hpp"
#include "immcts/alphabeta/search.hpp"

#include "immcts/harness/engine.hpp"
#include "immcts/harness/engine_spec.hpp"
#include "immcts/harness/match.hpp"
#include "immcts/harness/persist.hpp"
#include "immcts/harness/report.hpp"
#include "immcts/harness/sweep.hpp"
#include "immcts/harness/tournament.hpp"
