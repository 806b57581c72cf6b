#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "immcts/harness/match.hpp"
#include "immcts/harness/tournament.hpp"

namespace immcts {

namespace detail {

inline std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

inline void write_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

}  // namespace detail

/// One row per game, sorted by game index.
inline std::string match_csv(std::vector<MatchRecord> records) {
  std::sort(records.begin(), records.end(), [](const auto& x, const auto& y) { return x.game < y.game; });
  std::string out = "game,board,seed,a_seat,winner,pair_outcome,plies,reward_p1,forfeit,moves,stats\n";
  char buf[128];
  for (const auto& m : records) {
    std::snprintf(buf, sizeof buf, "%d,%d,%llu,%c,", m.game, m.board, static_cast<unsigned long long>(m.seed),
                  player_char(m.a_seat));
    out += buf;
    out += to_string(m.winner) + ",";
    out += (m.pair_outcome ? to_string(*m.pair_outcome) : std::string{}) + ",";
    std::snprintf(buf, sizeof buf, "%d,%.17g,", m.record.plies, m.record.reward_p1);
    out += buf;
    out += detail::csv_field(m.record.diagnostic) + ",";
    out += detail::csv_field(detail::join(m.record.moves, ' ')) + ",";
    out += detail::csv_field(detail::join(m.record.stats, ';')) + "\n";
  }
  return out;
}

inline nlohmann::json match_summary(const MatchSpec& spec, const MatchResult& result) {
  return {{"spec", to_json(spec)}, {"report", to_json(result.report)}, {"records", result.records.size()}};
}

/// Writes `<dir>/<name>.csv` and `<dir>/<name>.json`.
inline void save_match(const std::filesystem::path& dir, const std::string& name, const MatchSpec& spec,
                       const MatchResult& result) {
  detail::write_file(dir / (name + ".csv"), match_csv(result.records));
  detail::write_file(dir / (name + ".json"), match_summary(spec, result).dump(2) + "\n");
}

inline void save_text(const std::filesystem::path& path, const std::string& text) { detail::write_file(path, text); }

}  // namespace immcts
