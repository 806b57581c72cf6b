#pragma once

#include <array>
#include <fstream>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

namespace immcts {

/// Per-square, per-player piece values for the Breakthrough piece-square
/// evaluation. Both arrays are row-major with row 0 = P1's back rank.
struct SquareTable {
  std::array<double, 64> p1{};
  std::array<double, 64> p2{};

  /// NOT published values: a stand-in that rewards advancement and central
  /// files. Load a real table from JSON for anything serious.
  static SquareTable placeholder() {
    SquareTable t;
    for (int row = 0; row < 8; ++row) {
      for (int col = 0; col < 8; ++col) {
        const int centre = col < 4 ? col : 7 - col;  // 0 on the edge, 3 in the middle
        const double v = 10.0 + 1.5 * row + 0.5 * centre + (row >= 5 ? 2.0 * (row - 4) : 0.0);
        t.p1[row * 8 + col] = v;
        t.p2[(7 - row) * 8 + col] = v;
      }
    }
    return t;
  }

  static SquareTable uniform(double value) {
    SquareTable t;
    t.p1.fill(value);
    t.p2.fill(value);
    return t;
  }

  static SquareTable from_json(const nlohmann::json& j) {
    SquareTable t;
    auto read = [&](const char* key, std::array<double, 64>& out) {
      if (!j.contains(key) || !j.at(key).is_array() || j.at(key).size() != 64)
        throw std::invalid_argument(std::string("square table: '") + key + "' must be an array of 64 numbers");
      for (std::size_t i = 0; i < 64; ++i) {
        const auto& v = j.at(key)[i];
        if (!v.is_number()) throw std::invalid_argument("square table: non-numeric entry");
        out[i] = v.get<double>();
      }
    };
    read("p1", t.p1);
    read("p2", t.p2);
    return t;
  }

  static SquareTable load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("square table: cannot open " + path);
    return from_json(nlohmann::json::parse(in));
  }

  nlohmann::json to_json() const { return {{"p1", p1}, {"p2", p2}}; }
};

}  // namespace immcts
