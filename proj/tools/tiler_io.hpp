#pragma once

// Text and JSON forms of tilings for the command-line tool.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tiler/tiler.hpp"

namespace tiler::io {

using json = nlohmann::json;

inline constexpr int json_format = 1;

/// One letter per domino, cycling a..z; cells outside the figure are spaces.
/// The top row comes first, matching the figure file layout.
inline std::string render_ascii(const figure& f, const tiling& t) {
  const auto w = static_cast<std::size_t>(f.width());
  std::vector<std::string> rows(static_cast<std::size_t>(f.height()), std::string(w, ' '));
  auto put = [&](cell c, char ch) {
    rows[static_cast<std::size_t>(f.max_y() - c.y)][static_cast<std::size_t>(c.x - f.min_x())] = ch;
  };
  std::size_t i = 0;
  for (const domino& d : t.dominoes()) {
    const char ch = static_cast<char>('a' + i++ % 26);
    put(d.first, ch);
    put(d.second, ch);
  }
  std::string out;
  for (const auto& r : rows) out += r + "\n";
  return out;
}

inline json dominoes_json(const tiling& t) {
  json arr = json::array();
  for (const domino& d : t.dominoes())
    arr.push_back(json::array({json::array({d.first.x, d.first.y}),
                               json::array({d.second.x, d.second.y})}));
  return arr;
}

inline json tiling_json(const tiling& t) {
  return {{"format", json_format}, {"dominoes", dominoes_json(t)}};
}

/// Accepts any object with a "dominoes" array of cell pairs.
inline std::vector<domino> parse_tiling_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw error(error_code::parse_error, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("dominoes") || !doc["dominoes"].is_array())
    throw error(error_code::parse_error, "expected an object with a \"dominoes\" array");
  std::vector<domino> out;
  try {
    for (const auto& d : doc["dominoes"]) {
      if (!d.is_array() || d.size() != 2 || d[0].size() != 2 || d[1].size() != 2)
        throw error(error_code::parse_error, "a domino is a pair of [x, y] cells");
      out.emplace_back(cell{d[0][0].get<int>(), d[0][1].get<int>()},
                       cell{d[1][0].get<int>(), d[1][1].get<int>()});
    }
  } catch (const json::exception& e) {
    throw error(error_code::parse_error, std::string("bad domino: ") + e.what());
  }
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline const char* to_string(flip_direction d) noexcept {
  return d == flip_direction::up ? "up" : "down";
}

inline std::string point_string(const grid_vertex& v) {
  return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

}  // namespace tiler::io
