#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace immcts {

enum class CiMethod { Normal, Wilson };

struct WinRateReport {
  std::int64_t wins_a = 0;
  std::int64_t wins_b = 0;
  std::int64_t draws = 0;
  std::int64_t discards = 0;
  CiMethod method = CiMethod::Normal;

  std::int64_t decided() const noexcept { return wins_a + wins_b; }
  std::int64_t total() const noexcept { return wins_a + wins_b + draws + discards; }

  /// wins_A / (wins_A + wins_B); 0.5 when nothing was decided.
  double p_hat() const noexcept { return decided() > 0 ? static_cast<double>(wins_a) / decided() : 0.5; }

  /// 95% half-width. The Wilson variant reports half the interval length.
  double ci95() const noexcept {
    const double n = static_cast<double>(decided());
    if (n == 0) return 0.0;
    const double p = p_hat();
    constexpr double z = 1.96;
    if (method == CiMethod::Normal) return z * std::sqrt(p * (1 - p) / n);
    const double denom = 1 + z * z / n;
    return z * std::sqrt(p * (1 - p) / n + z * z / (4 * n * n)) / denom;
  }

  /// Interval centre; p_hat for the normal method.
  double centre() const noexcept {
    const double n = static_cast<double>(decided());
    if (method == CiMethod::Normal || n == 0) return p_hat();
    constexpr double z = 1.96;
    return (p_hat() + z * z / (2 * n)) / (1 + z * z / n);
  }
};

/// Report with the given counts and no draws or discards; handy for CI lookups.
inline WinRateReport report_from_rate(double p_hat, std::int64_t n) {
  if (n <= 0 || p_hat < 0 || p_hat > 1) throw std::invalid_argument("report_from_rate: bad arguments");
  WinRateReport r;
  r.wins_a = static_cast<std::int64_t>(std::llround(p_hat * static_cast<double>(n)));
  r.wins_b = n - r.wins_a;
  return r;
}

/// P(X >= k) for X ~ Binomial(n, p).
inline double binomial_upper_tail(std::int64_t k, std::int64_t n, double p) {
  if (k <= 0) return 1.0;
  if (k > n) return 0.0;
  double total = 0;
  for (std::int64_t i = k; i <= n; ++i) {
    const double log_term = std::lgamma(n + 1.0) - std::lgamma(i + 1.0) - std::lgamma(n - i + 1.0) +
                            i * std::log(p) + (n - i) * std::log1p(-p);
    total += std::exp(log_term);
  }
  return total < 1.0 ? total : 1.0;
}

/// One-sided test of H0: p <= p0 against p > p0 at level `level`.
inline bool exceeds_rate(std::int64_t wins, std::int64_t n, double p0, double level = 0.05) {
  return n > 0 && binomial_upper_tail(wins, n, p0) < level;
}

inline nlohmann::json to_json(const WinRateReport& r) {
  return {{"wins_a", r.wins_a},
          {"wins_b", r.wins_b},
          {"draws", r.draws},
          {"discards", r.discards},
          {"p_hat", r.p_hat()},
          {"ci95", r.ci95()},
          {"ci_method", r.method == CiMethod::Normal ? "normal" : "wilson"}};
}

}  // namespace immcts
