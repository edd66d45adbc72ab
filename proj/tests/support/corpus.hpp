#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "tiler/grid_geometry.hpp"

namespace tiler::testing {

struct corpus_entry {
  std::string name;
  std::string file;            // under figures/
  std::uint64_t tilings;       // frozen from the brute-force oracle
};

// Counts were produced by oracle::brute_count and an independent
// transfer-matrix count, then frozen here.
inline const std::vector<corpus_entry>& corpus() {
  static const std::vector<corpus_entry> entries = {
      {"1x2", "domino_1x2.txt", 1},
      {"2x2", "square_2x2.txt", 2},
      {"2x3", "rect_2x3.txt", 3},
      {"2x4", "rect_2x4.txt", 5},
      {"3x3-ring", "ring_3x3.txt", 2},
      {"3x4", "rect_3x4.txt", 11},
      {"4x4", "square_4x4.txt", 36},
      {"4x4-minus-2x2", "ring_4x4.txt", 2},
      {"8x8-two-holes", "punched_8x8.txt", 562720},
      {"T-tetromino", "t_tetromino.txt", 0},
      {"L-tromino", "l_tromino.txt", 0},
  };
  return entries;
}

inline std::string figure_path(const std::string& file) {
  return std::string(TILER_FIGURE_DIR) + "/" + file;
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline figure load_figure(const std::string& file) {
  return parse_figure(read_text(figure_path(file)));
}

}  // namespace tiler::testing
