#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace immcts {

enum class SelectionVariant {
  Plain,            // Q
  ImplicitMinimax,  // (1-a) Q + a v
  ConstantBias,     // (1-a) Q + a v0(s')
  ProgressiveBias,  // (1-a) Q + a v / (n + 1)
};

enum class TerminationKind { None, Fixed, Dynamic };

/// Exactly one playout termination rule.
struct Termination {
  TerminationKind kind = TerminationKind::None;
  int plies = 0;          // Fixed: plies played before returning v0
  double threshold = 0;   // Dynamic: |v0| >= threshold ends the playout
  int stride = 1;         // Dynamic: plies between checks

  static Termination none() { return {}; }
  static Termination fixed(int plies) { return {TerminationKind::Fixed, plies, 0.0, 1}; }
  static Termination dynamic(double threshold, int stride = 1) {
    return {TerminationKind::Dynamic, 0, threshold, stride};
  }
};

struct PlayoutPolicy {
  bool improved = false;           // ipp: decisive / anti-decisive / weighted captures
  std::optional<double> epsilon;   // ege: greedy on v0 with probability 1 - epsilon
  double undefended_capture_weight = 4.0;
};

struct NodePriors {
  bool enabled = false;
  double scale = 10.0;  // virtual visits per new node
};

enum class ExpandMode { AllChildren, SingleChild };

struct Budget {
  enum class Kind { Simulations, Millis };
  Kind kind = Kind::Simulations;
  std::int64_t amount = 1000;

  static Budget simulations(std::int64_t n) { return {Kind::Simulations, n}; }
  static Budget millis(std::int64_t ms) { return {Kind::Millis, ms}; }
};

struct SearchConfig {
  double C = 0.8;
  double alpha = 0.0;
  SelectionVariant variant = SelectionVariant::Plain;
  PlayoutPolicy playout;
  Termination termination;
  NodePriors priors;
  std::optional<double> max_backprop_T;
  Budget budget;
  std::uint64_t seed = 0;
  ExpandMode expand = ExpandMode::AllChildren;

  void validate() const {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must lie in [0, 1]");
    if (!(C >= 0.0)) throw std::invalid_argument("exploration constant C must be >= 0");
    if (playout.epsilon && !(*playout.epsilon >= 0.0 && *playout.epsilon <= 1.0))
      throw std::invalid_argument("ege epsilon must lie in [0, 1]");
    if (termination.kind == TerminationKind::Fixed && termination.plies < 0)
      throw std::invalid_argument("fet plies must be >= 0");
    if (termination.kind == TerminationKind::Dynamic &&
        !(termination.threshold > 0.0 && termination.threshold <= 1.0))
      throw std::invalid_argument("det threshold must lie in (0, 1]");
    if (termination.kind == TerminationKind::Dynamic && termination.stride < 1)
      throw std::invalid_argument("det stride must be >= 1");
    if (priors.enabled && !(priors.scale > 0.0)) throw std::invalid_argument("node prior scale must be > 0");
    if (max_backprop_T && !(*max_backprop_T >= 0.0)) throw std::invalid_argument("max-backprop T must be >= 0");
    if (budget.amount <= 0) throw std::invalid_argument("search budget must be positive");
  }
};

inline std::string to_string(SelectionVariant v) {
  switch (v) {
    case SelectionVariant::Plain: return "PLAIN";
    case SelectionVariant::ImplicitMinimax: return "IM";
    case SelectionVariant::ConstantBias: return "CB";
    case SelectionVariant::ProgressiveBias: return "PB";
  }
  return "?";
}

inline SelectionVariant selection_variant_from_string(const std::string& s) {
  if (s == "PLAIN") return SelectionVariant::Plain;
  if (s == "IM") return SelectionVariant::ImplicitMinimax;
  if (s == "CB") return SelectionVariant::ConstantBias;
  if (s == "PB") return SelectionVariant::ProgressiveBias;
  throw std::invalid_argument("unknown selection variant '" + s + "'");
}

}  // namespace immcts
