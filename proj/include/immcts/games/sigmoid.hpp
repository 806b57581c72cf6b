#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

namespace immcts {

/// 2 / (1 + e^(-raw/k)) - 1, i.e. tanh(raw / 2k).
inline double sigmoid_exact(double raw, double k) {
  return 2.0 / (1.0 + std::exp(-raw / k)) - 1.0;
}

namespace detail {

struct SigmoidTable {
  static constexpr int kStepsPerUnit = 64;
  static constexpr double kMaxUnits = 16.0;
  static constexpr int kSize = static_cast<int>(kMaxUnits) * kStepsPerUnit + 1;

  std::array<double, kSize> values{};

  SigmoidTable() {
    for (int i = 0; i < kSize; ++i)
      values[i] = sigmoid_exact(static_cast<double>(i) / kStepsPerUnit, 1.0);
  }

  // Tabulated for u >= 0 only; the negative half is mirrored so the result is
  // exactly antisymmetric.
  double at(double u) const {
    const bool negative = u < 0;
    const double a = negative ? -u : u;
    double out;
    if (a >= kMaxUnits) {
      out = sigmoid_exact(a, 1.0);
    } else {
      const double pos = a * kStepsPerUnit;
      const int i = static_cast<int>(pos);
      const double frac = pos - i;
      out = values[i] + (values[i + 1] - values[i]) * frac;
    }
    return negative ? -out : out;
  }
};

inline const SigmoidTable& sigmoid_table() {
  static const SigmoidTable table;
  return table;
}

}  // namespace detail

/// Maps a raw score difference into (-1, 1). The default path is a lookup
/// table with linear interpolation (|error| < 1e-5 against the exact formula).
class Sigmoid {
 public:
  explicit Sigmoid(double k = 1.0, bool exact = false) : inv_k_(1.0 / k), k_(k), exact_(exact) {
    if (!(k > 0.0)) throw std::invalid_argument("sigmoid slope k must be > 0");
  }

  double operator()(double raw) const {
    if (exact_) return sigmoid_exact(raw, k_);
    return detail::sigmoid_table().at(raw * inv_k_);
  }

  double k() const noexcept { return k_; }
  bool exact() const noexcept { return exact_; }

 private:
  double inv_k_;
  double k_;
  bool exact_;
};

}  // namespace immcts
