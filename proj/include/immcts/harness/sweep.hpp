#pragma once

#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "immcts/harness/match.hpp"

namespace immcts {

/// The grid used for the published alpha sweeps.
inline std::vector<double> default_alpha_grid() {
  return {0, 0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45, 0.5, 0.6, 0.75, 1};
}

struct SweepRow {
  double alpha = 0;
  WinRateReport report;
};

/// One match per alpha: engine A of `base` switched to implicit minimax with
/// that alpha, against the unchanged engine B.
inline std::vector<SweepRow> sweep_alpha(const MatchSpec& base, const std::vector<double>& alphas) {
  if (base.a.kind != EngineSpec::Kind::Mcts) throw std::invalid_argument("sweep_alpha: engine A must be an MCTS engine");
  std::vector<SweepRow> rows;
  rows.reserve(alphas.size());
  for (double alpha : alphas) {
    MatchSpec spec = base;
    spec.a.mcts.variant = SelectionVariant::ImplicitMinimax;
    spec.a.mcts.alpha = alpha;
    spec.a.mcts.validate();
    std::ostringstream name;
    name << spec.a.name << "@im" << alpha;
    spec.a.name = name.str();
    rows.push_back({alpha, run_match(spec).report});
  }
  return rows;
}

inline std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "alpha,wins_a,wins_b,draws,discards,win_rate,ci95\n";
  char buf[256];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.17g,%lld,%lld,%lld,%lld,%.17g,%.17g\n", r.alpha,
                  static_cast<long long>(r.report.wins_a), static_cast<long long>(r.report.wins_b),
                  static_cast<long long>(r.report.draws), static_cast<long long>(r.report.discards),
                  r.report.p_hat(), r.report.ci95());
    out += buf;
  }
  return out;
}

}  // namespace immcts
