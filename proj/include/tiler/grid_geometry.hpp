#pragma once

// Figures on the square grid and their duplicated-vertex graph.
//
// Cell (x, y) is the unit square with lower-left corner (x, y); it is black
// iff x + y is even. A lattice point where exactly two diagonally opposite
// cells of the figure meet is split into two vertices: copy 0 carries the
// sides of the northern cell of the pair, copy 1 those of the southern one.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tiler/error.hpp"

namespace tiler {

using vertex_id = std::uint32_t;
using arc_id = std::uint32_t;
using edge_id = std::uint32_t;
using height_t = std::int64_t;

inline constexpr vertex_id no_vertex = ~vertex_id{0};
inline constexpr arc_id no_arc = ~arc_id{0};
inline constexpr int max_extent = 4096;

struct cell {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const cell&, const cell&) = default;
};

inline bool is_black(cell c) noexcept { return ((c.x + c.y) & 1) == 0; }

class figure {
 public:
  static figure from_cells(std::vector<cell> cells) {
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    if (cells.empty()) throw error(error_code::empty);

    figure f;
    f.min_x_ = f.max_x_ = cells.front().x;
    f.min_y_ = f.max_y_ = cells.front().y;
    for (const cell& c : cells) {
      f.min_x_ = std::min(f.min_x_, c.x);
      f.max_x_ = std::max(f.max_x_, c.x);
      f.min_y_ = std::min(f.min_y_, c.y);
      f.max_y_ = std::max(f.max_y_, c.y);
    }
    if (f.width() > max_extent || f.height() > max_extent)
      throw error(error_code::too_large, "bounding box exceeds 4096x4096");

    f.occupied_.assign(static_cast<std::size_t>(f.width()) * f.height(), 0);
    for (const cell& c : cells) f.occupied_[f.offset(c.x, c.y)] = 1;
    f.cells_ = std::move(cells);

    // 4-connectivity
    std::vector<char> seen(f.occupied_.size(), 0);
    std::vector<cell> stack{f.cells_.front()};
    seen[f.offset(stack.back().x, stack.back().y)] = 1;
    std::size_t reached = 0;
    while (!stack.empty()) {
      const cell c = stack.back();
      stack.pop_back();
      ++reached;
      for (const auto& [dx, dy] : kNeighbours4) {
        const cell n{c.x + dx, c.y + dy};
        if (!f.contains(n)) continue;
        char& s = seen[f.offset(n.x, n.y)];
        if (s) continue;
        s = 1;
        stack.push_back(n);
      }
    }
    if (reached != f.cells_.size()) throw error(error_code::not_connected);

    std::uint64_t hash = 1469598103934665603ull;
    for (const cell& c : f.cells_) {
      for (int v : {c.x, c.y}) {
        auto u = static_cast<std::uint32_t>(v);
        for (int i = 0; i < 4; ++i) {
          hash ^= (u >> (8 * i)) & 0xffu;
          hash *= 1099511628211ull;
        }
      }
    }
    f.fingerprint_ = hash;
    return f;
  }

  std::span<const cell> cells() const noexcept { return cells_; }
  std::size_t size() const noexcept { return cells_.size(); }

  bool contains(int x, int y) const noexcept {
    if (x < min_x_ || x > max_x_ || y < min_y_ || y > max_y_) return false;
    return occupied_[offset(x, y)] != 0;
  }
  bool contains(cell c) const noexcept { return contains(c.x, c.y); }

  int min_x() const noexcept { return min_x_; }
  int min_y() const noexcept { return min_y_; }
  int max_x() const noexcept { return max_x_; }
  int max_y() const noexcept { return max_y_; }
  int width() const noexcept { return max_x_ - min_x_ + 1; }
  int height() const noexcept { return max_y_ - min_y_ + 1; }

  std::size_t black_count() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(cells_.begin(), cells_.end(), is_black));
  }
  std::size_t white_count() const noexcept { return size() - black_count(); }

  std::uint64_t fingerprint() const noexcept { return fingerprint_; }

  friend bool operator==(const figure& a, const figure& b) {
    return a.cells_ == b.cells_;
  }

 private:
  static constexpr std::array<std::pair<int, int>, 4> kNeighbours4{
      {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};

  figure() = default;

  std::size_t offset(int x, int y) const noexcept {
    return static_cast<std::size_t>(x - min_x_) +
           static_cast<std::size_t>(y - min_y_) * static_cast<std::size_t>(width());
  }

  std::vector<cell> cells_;
  std::vector<char> occupied_;
  int min_x_ = 0, min_y_ = 0, max_x_ = 0, max_y_ = 0;
  std::uint64_t fingerprint_ = 0;
};

/// Rows of '#' (cell) and '.' (no cell); the first row is the top one.
/// Row r of R rows, column c becomes cell (c, R - 1 - r).
inline figure parse_figure(std::string_view text) {
  std::vector<std::string_view> rows;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view row = text.substr(pos, nl - pos);
    if (!row.empty() && row.back() == '\r') row.remove_suffix(1);
    rows.push_back(row);
    pos = nl + 1;
  }
  if (rows.empty()) throw error(error_code::empty);
  if (rows.size() > static_cast<std::size_t>(max_extent))
    throw error(error_code::too_large, "more than 4096 rows");

  const std::size_t cols = rows.front().size();
  if (cols > static_cast<std::size_t>(max_extent))
    throw error(error_code::too_large, "more than 4096 columns");
  std::vector<cell> cells;
  const int nrows = static_cast<int>(rows.size());
  for (int r = 0; r < nrows; ++r) {
    const std::string_view row = rows[static_cast<std::size_t>(r)];
    if (row.size() != cols)
      throw error(error_code::parse_error,
                  "row " + std::to_string(r + 1) + " has length " +
                      std::to_string(row.size()) + ", expected " +
                      std::to_string(cols));
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] == '#') {
        cells.push_back({static_cast<int>(c), nrows - 1 - r});
      } else if (row[c] != '.') {
        throw error(error_code::parse_error,
                    "unexpected character at row " + std::to_string(r + 1) +
                        ", column " + std::to_string(c + 1));
      }
    }
  }
  return figure::from_cells(std::move(cells));
}

enum class direction : std::uint8_t { east, north, west, south };

struct grid_vertex {
  int x = 0;
  int y = 0;
  int copy = 0;
  friend auto operator<=>(const grid_vertex&, const grid_vertex&) = default;
};

/// An arc given by its endpoints; see figure_graph::find_arc.
struct arc {
  vertex_id from = no_vertex;
  vertex_id to = no_vertex;
  friend bool operator==(const arc&, const arc&) = default;
};

/// Closed vertex sequence, first == last.
using cycle = std::vector<vertex_id>;

inline constexpr int infinity_component = -1;
inline constexpr int figure_component = -2;

struct hole {
  int id = 0;
  std::vector<cell> cells;
  cycle clockwise_contour;
};

class figure_graph {
 public:
  explicit figure_graph(figure f) : figure_(std::move(f)) { build(); }

  const figure& shape() const noexcept { return figure_; }
  std::uint64_t fingerprint() const noexcept { return figure_.fingerprint(); }

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t arc_count() const noexcept { return 2 * edges_.size(); }

  std::span<const grid_vertex> vertices() const noexcept { return vertices_; }
  const grid_vertex& vertex(vertex_id v) const { return vertices_[v]; }

  /// Arcs 2e and 2e+1 are the two orientations of edge e; 2e points east
  /// or north.
  static constexpr arc_id reverse(arc_id a) noexcept { return a ^ 1u; }
  static constexpr edge_id edge_of(arc_id a) noexcept { return a >> 1; }

  vertex_id tail(arc_id a) const noexcept {
    const auto& e = edges_[edge_of(a)];
    return (a & 1u) ? e.hi : e.lo;
  }
  vertex_id head(arc_id a) const noexcept {
    const auto& e = edges_[edge_of(a)];
    return (a & 1u) ? e.lo : e.hi;
  }
  arc endpoints(arc_id a) const noexcept { return {tail(a), head(a)}; }

  direction dir(arc_id a) const noexcept {
    const bool horizontal = edges_[edge_of(a)].horizontal;
    if (a & 1u) return horizontal ? direction::west : direction::south;
    return horizontal ? direction::east : direction::north;
  }

  /// +1 when the cell on the left of the move is white.
  int spin(arc_id a) const noexcept { return is_black(left_cell(a)) ? -1 : 1; }

  cell left_cell(arc_id a) const noexcept {
    const grid_vertex& p = vertices_[tail(a)];
    switch (dir(a)) {
      case direction::east: return {p.x, p.y};
      case direction::north: return {p.x - 1, p.y};
      case direction::west: return {p.x - 1, p.y - 1};
      case direction::south: return {p.x, p.y - 1};
    }
    return {};
  }
  cell right_cell(arc_id a) const noexcept {
    const grid_vertex& p = vertices_[tail(a)];
    switch (dir(a)) {
      case direction::east: return {p.x, p.y - 1};
      case direction::north: return {p.x, p.y};
      case direction::west: return {p.x - 1, p.y};
      case direction::south: return {p.x - 1, p.y - 1};
    }
    return {};
  }

  bool is_boundary(arc_id a) const noexcept { return edges_[edge_of(a)].boundary; }
  bool is_outer_boundary(arc_id a) const noexcept {
    return edges_[edge_of(a)].outer;
  }

  std::span<const arc_id> out_arcs(vertex_id v) const noexcept {
    return {out_.data() + out_begin_[v], out_.data() + out_begin_[v + 1]};
  }

  std::optional<arc_id> find_arc(vertex_id from, vertex_id to) const noexcept {
    if (from >= vertex_count()) return std::nullopt;
    for (arc_id a : out_arcs(from))
      if (head(a) == to) return a;
    return std::nullopt;
  }

  std::optional<vertex_id> find_vertex(grid_vertex gv) const noexcept {
    if (gv.copy < 0 || gv.copy > 1) return std::nullopt;
    const vertex_id base = point_vertex(gv.x, gv.y);
    if (base == no_vertex) return std::nullopt;
    if (gv.copy == 1 && pinch_at(gv.x, gv.y) == pinch::none) return std::nullopt;
    return base + static_cast<vertex_id>(gv.copy);
  }

  /// Lexicographically smallest outer-boundary vertex.
  vertex_id base_vertex() const noexcept { return 0; }

  bool on_boundary(vertex_id v) const noexcept { return on_boundary_[v] != 0; }
  bool on_outer_boundary(vertex_id v) const noexcept {
    return on_outer_boundary_[v] != 0;
  }

  std::span<const hole> holes() const noexcept { return holes_; }

  /// Clockwise contour of the figure (figure on the right), from w0.
  const cycle& outer_contour() const noexcept { return outer_contour_; }

  /// infinity_component, figure_component, or a hole id.
  int complement_component(cell c) const noexcept {
    if (figure_.contains(c)) return figure_component;
    const int lx = c.x - figure_.min_x() + 1;
    const int ly = c.y - figure_.min_y() + 1;
    if (lx < 0 || ly < 0 || lx >= figure_.width() + 2 || ly >= figure_.height() + 2)
      return infinity_component;
    return labels_[static_cast<std::size_t>(lx) +
                   static_cast<std::size_t>(ly) * (figure_.width() + 2)];
  }

  /// Hole id of a vertex on a hole contour, infinity_component otherwise.
  int hole_of_vertex(vertex_id v) const noexcept { return vertex_hole_[v]; }

  /// Vertex at a corner of a figure cell, resolving duplicated points.
  /// corner: 0 = SW, 1 = NW, 2 = NE, 3 = SE.
  vertex_id corner(cell c, int which) const noexcept {
    static constexpr std::array<std::pair<int, int>, 4> d{
        {{0, 0}, {0, 1}, {1, 1}, {1, 0}}};
    const int px = c.x + d[static_cast<std::size_t>(which)].first;
    const int py = c.y + d[static_cast<std::size_t>(which)].second;
    const vertex_id base = point_vertex(px, py);
    if (base == no_vertex || pinch_at(px, py) == pinch::none) return base;
    return c.y == py ? base : base + 1;
  }

  /// Clockwise 4-cycle around a cell of the figure.
  cycle cell_cycle(cell c) const {
    const vertex_id sw = corner(c, 0), nw = corner(c, 1), ne = corner(c, 2),
                    se = corner(c, 3);
    return {sw, nw, ne, se, sw};
  }

  /// Edge shared by two 4-adjacent cells (an interior edge when both are in
  /// the figure).
  std::optional<edge_id> edge_between(cell a, cell b) const noexcept {
    if (b < a) std::swap(a, b);
    if (b.x == a.x + 1 && b.y == a.y) return vertical_edge(b.x, a.y);
    if (b.x == a.x && b.y == a.y + 1) return horizontal_edge(a.x, b.y);
    return std::nullopt;
  }

  /// The two cells on either side of an edge: (below, above) for horizontal
  /// edges, (left, right) for vertical ones.
  std::pair<cell, cell> edge_cells(edge_id e) const noexcept {
    const auto& ed = edges_[e];
    if (ed.horizontal) return {cell{ed.x, ed.y - 1}, cell{ed.x, ed.y}};
    return {cell{ed.x - 1, ed.y}, cell{ed.x, ed.y}};
  }

  /// Edge from (x, y) to (x + 1, y), if it is a side of a figure cell.
  std::optional<edge_id> horizontal_edge(int x, int y) const noexcept {
    if (!in_points(x, y)) return std::nullopt;
    const edge_id e = east_edge_[point_offset(x, y)];
    if (e == no_edge) return std::nullopt;
    return e;
  }
  /// Edge from (x, y) to (x, y + 1), if it is a side of a figure cell.
  std::optional<edge_id> vertical_edge(int x, int y) const noexcept {
    if (!in_points(x, y)) return std::nullopt;
    const edge_id e = north_edge_[point_offset(x, y)];
    if (e == no_edge) return std::nullopt;
    return e;
  }

 private:
  enum class pinch : std::uint8_t { none, ne_sw, nw_se };
  static constexpr edge_id no_edge = ~edge_id{0};

  struct edge_record {
    vertex_id lo = no_vertex;  // west / south endpoint
    vertex_id hi = no_vertex;
    int x = 0, y = 0;          // coordinates of lo
    bool horizontal = false;
    bool boundary = false;
    bool outer = false;
  };

  bool in_points(int x, int y) const noexcept {
    return x >= figure_.min_x() && x <= figure_.max_x() + 1 &&
           y >= figure_.min_y() && y <= figure_.max_y() + 1;
  }
  std::size_t point_offset(int x, int y) const noexcept {
    return static_cast<std::size_t>(y - figure_.min_y()) +
           static_cast<std::size_t>(x - figure_.min_x()) *
               static_cast<std::size_t>(figure_.height() + 1);
  }
  vertex_id point_vertex(int x, int y) const noexcept {
    if (!in_points(x, y)) return no_vertex;
    return point_vertex_[point_offset(x, y)];
  }
  pinch pinch_at(int x, int y) const noexcept {
    if (!in_points(x, y)) return pinch::none;
    return pinch_[point_offset(x, y)];
  }

  // Vertex at point (x, y) as seen from the edge leaving it toward d.
  vertex_id endpoint(int x, int y, direction d) const noexcept {
    const vertex_id base = point_vertex(x, y);
    switch (pinch_at(x, y)) {
      case pinch::none: return base;
      case pinch::ne_sw:
        return base + ((d == direction::east || d == direction::north) ? 0 : 1);
      case pinch::nw_se:
        return base + ((d == direction::west || d == direction::north) ? 0 : 1);
    }
    return base;
  }

  void build() {
    label_complement();
    create_vertices();
    create_edges();
    create_adjacency();
    trace_contours();
  }

  void label_complement() {
    const int w = figure_.width() + 2, h = figure_.height() + 2;
    labels_.assign(static_cast<std::size_t>(w) * h, figure_component - 1);
    const int ox = figure_.min_x() - 1, oy = figure_.min_y() - 1;
    auto at = [&](int lx, int ly) -> int& {
      return labels_[static_cast<std::size_t>(lx) + static_cast<std::size_t>(ly) * w];
    };
    for (int ly = 0; ly < h; ++ly)
      for (int lx = 0; lx < w; ++lx)
        if (figure_.contains(lx + ox, ly + oy)) at(lx, ly) = figure_component;

    auto flood = [&](int sx, int sy, int label, std::vector<cell>* out) {
      std::vector<std::pair<int, int>> stack{{sx, sy}};
      at(sx, sy) = label;
      while (!stack.empty()) {
        auto [x, y] = stack.back();
        stack.pop_back();
        if (out) out->push_back({x + ox, y + oy});
        for (int dx = -1; dx <= 1; ++dx)
          for (int dy = -1; dy <= 1; ++dy) {
            const int nx = x + dx, ny = y + dy;
            if ((dx == 0 && dy == 0) || nx < 0 || ny < 0 || nx >= w || ny >= h)
              continue;
            if (at(nx, ny) != figure_component - 1) continue;
            at(nx, ny) = label;
            stack.push_back({nx, ny});
          }
      }
    };
    flood(0, 0, infinity_component, nullptr);
    for (int lx = 0; lx < w; ++lx)
      for (int ly = 0; ly < h; ++ly)
        if (at(lx, ly) == figure_component - 1) {
          hole hl;
          hl.id = static_cast<int>(holes_.size());
          flood(lx, ly, hl.id, &hl.cells);
          std::sort(hl.cells.begin(), hl.cells.end());
          holes_.push_back(std::move(hl));
        }
  }

  void create_vertices() {
    const std::size_t npoints = static_cast<std::size_t>(figure_.width() + 1) *
                                static_cast<std::size_t>(figure_.height() + 1);
    point_vertex_.assign(npoints, no_vertex);
    pinch_.assign(npoints, pinch::none);
    for (int x = figure_.min_x(); x <= figure_.max_x() + 1; ++x)
      for (int y = figure_.min_y(); y <= figure_.max_y() + 1; ++y) {
        const bool ne = figure_.contains(x, y), nw = figure_.contains(x - 1, y),
                   sw = figure_.contains(x - 1, y - 1), se = figure_.contains(x, y - 1);
        if (!(ne || nw || sw || se)) continue;
        const std::size_t off = point_offset(x, y);
        point_vertex_[off] = static_cast<vertex_id>(vertices_.size());
        vertices_.push_back({x, y, 0});
        if (ne && sw && !nw && !se) pinch_[off] = pinch::ne_sw;
        if (nw && se && !ne && !sw) pinch_[off] = pinch::nw_se;
        if (pinch_[off] != pinch::none) vertices_.push_back({x, y, 1});
      }
  }

  void create_edges() {
    const std::size_t npoints = point_vertex_.size();
    east_edge_.assign(npoints, no_edge);
    north_edge_.assign(npoints, no_edge);
    for (int x = figure_.min_x(); x <= figure_.max_x() + 1; ++x)
      for (int y = figure_.min_y(); y <= figure_.max_y() + 1; ++y) {
        if (point_vertex(x, y) == no_vertex) continue;
        // east edge: cells above (x, y) and below (x, y - 1)
        add_edge(x, y, true, cell{x, y - 1}, cell{x, y});
        // north edge: cells left (x - 1, y) and right (x, y)
        add_edge(x, y, false, cell{x - 1, y}, cell{x, y});
      }
  }

  void add_edge(int x, int y, bool horizontal, cell first, cell second) {
    const bool a = figure_.contains(first), b = figure_.contains(second);
    if (!a && !b) return;
    edge_record e;
    e.x = x;
    e.y = y;
    e.horizontal = horizontal;
    e.lo = endpoint(x, y, horizontal ? direction::east : direction::north);
    e.hi = horizontal ? endpoint(x + 1, y, direction::west)
                      : endpoint(x, y + 1, direction::south);
    e.boundary = a != b;
    if (e.boundary)
      e.outer = complement_component(a ? second : first) == infinity_component;
    const std::size_t off = point_offset(x, y);
    (horizontal ? east_edge_ : north_edge_)[off] = static_cast<edge_id>(edges_.size());
    edges_.push_back(e);
  }

  void create_adjacency() {
    const std::size_t nv = vertices_.size();
    std::vector<std::uint32_t> degree(nv, 0);
    for (arc_id a = 0; a < arc_count(); ++a) ++degree[tail(a)];
    out_begin_.assign(nv + 1, 0);
    for (std::size_t v = 0; v < nv; ++v) out_begin_[v + 1] = out_begin_[v] + degree[v];
    out_.assign(arc_count(), no_arc);
    std::vector<std::uint32_t> fill(out_begin_.begin(), out_begin_.end() - 1);
    for (arc_id a = 0; a < arc_count(); ++a) out_[fill[tail(a)]++] = a;

    on_boundary_.assign(nv, 0);
    on_outer_boundary_.assign(nv, 0);
    for (arc_id a = 0; a < arc_count(); ++a) {
      if (is_boundary(a)) on_boundary_[tail(a)] = 1;
      if (is_outer_boundary(a)) on_outer_boundary_[tail(a)] = 1;
    }
  }

  template <class Pred>
  cycle trace(vertex_id start, Pred&& follows) const {
    cycle c{start};
    vertex_id v = start;
    do {
      arc_id next = no_arc;
      for (arc_id a : out_arcs(v))
        if (follows(a)) {
          next = a;
          break;
        }
      if (next == no_arc || c.size() > arc_count())
        throw error(error_code::inconsistent_cycle, "contour tracing failed");
      v = head(next);
      c.push_back(v);
    } while (v != start);
    return c;
  }

  void trace_contours() {
    vertex_hole_.assign(vertices_.size(), infinity_component);
    for (hole& hl : holes_) {
      vertex_id start = no_vertex;
      for (arc_id a = 0; a < arc_count(); ++a) {
        if (!is_boundary(a) || !figure_.contains(left_cell(a))) continue;
        if (complement_component(right_cell(a)) != hl.id) continue;
        start = std::min(start, tail(a));
      }
      hl.clockwise_contour = trace(start, [&](arc_id a) {
        return figure_.contains(left_cell(a)) &&
               complement_component(right_cell(a)) == hl.id;
      });
      for (vertex_id v : hl.clockwise_contour) vertex_hole_[v] = hl.id;
    }
    outer_contour_ = trace(base_vertex(), [&](arc_id a) {
      return figure_.contains(right_cell(a)) &&
             complement_component(left_cell(a)) == infinity_component;
    });
  }

  figure figure_;
  std::vector<grid_vertex> vertices_;
  std::vector<edge_record> edges_;
  std::vector<vertex_id> point_vertex_;
  std::vector<pinch> pinch_;
  std::vector<edge_id> east_edge_, north_edge_;
  std::vector<std::uint32_t> out_begin_;
  std::vector<arc_id> out_;
  std::vector<char> on_boundary_, on_outer_boundary_;
  std::vector<int> labels_;
  std::vector<int> vertex_hole_;
  std::vector<hole> holes_;
  cycle outer_contour_;
};

inline figure_graph build_graph(figure f) { return figure_graph(std::move(f)); }

inline int spin(const figure_graph& g, arc a) {
  const auto id = g.find_arc(a.from, a.to);
  if (!id) throw error(error_code::arc_not_in_figure);
  return g.spin(*id);
}

/// Arcs of a closed walk; throws not_a_cycle when a step is not an arc.
inline std::vector<arc_id> cycle_arcs(const figure_graph& g, const cycle& c) {
  if (c.size() < 2 || c.front() != c.back())
    throw error(error_code::not_a_cycle, "first and last vertices differ");
  std::vector<arc_id> arcs;
  arcs.reserve(c.size() - 1);
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    const auto a = g.find_arc(c[i], c[i + 1]);
    if (!a) throw error(error_code::not_a_cycle, "consecutive vertices are not adjacent");
    arcs.push_back(*a);
  }
  return arcs;
}

inline bool is_elementary(const cycle& c) {
  if (c.size() < 2) return false;
  std::vector<vertex_id> inner(c.begin(), c.end() - 1);
  std::sort(inner.begin(), inner.end());
  return std::adjacent_find(inner.begin(), inner.end()) == inner.end();
}

template <class Weights>
height_t cycle_sum(const std::vector<arc_id>& arcs, const Weights& w) {
  height_t s = 0;
  for (arc_id a : arcs) s += static_cast<height_t>(w[a]);
  return s;
}

inline int spin_sum(const figure_graph& g, const cycle& c) {
  int s = 0;
  for (arc_id a : cycle_arcs(g, c)) s += g.spin(a);
  return s;
}

/// Twice the signed area; negative for clockwise cycles.
inline std::int64_t signed_area2(const figure_graph& g, const cycle& c) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    const grid_vertex& p = g.vertex(c[i]);
    const grid_vertex& q = g.vertex(c[i + 1]);
    s += static_cast<std::int64_t>(p.x) * q.y - static_cast<std::int64_t>(q.x) * p.y;
  }
  return s;
}

/// Figure cells enclosed by a cycle (winding number nonzero), any order.
inline std::vector<cell> enclosed_cells(const figure_graph& g, const cycle& c) {
  const figure& f = g.shape();
  const int w = f.width() + 2;
  std::vector<int> winding(static_cast<std::size_t>(w) * f.height(), 0);
  // A vertical arc at abscissa x on row r is crossed by the rightward ray
  // from every cell (cx, r) with cx < x.
  for (arc_id a : cycle_arcs(g, c)) {
    const direction d = g.dir(a);
    if (d != direction::north && d != direction::south) continue;
    const grid_vertex& p = g.vertex(g.tail(a));
    const int row = d == direction::north ? p.y : p.y - 1;
    if (row < f.min_y() || row > f.max_y()) continue;
    const int col = std::clamp(p.x - f.min_x(), 0, w - 1);
    winding[static_cast<std::size_t>(col) +
            static_cast<std::size_t>(row - f.min_y()) * w] += d == direction::north ? 1 : -1;
  }
  std::vector<cell> inside;
  for (int row = 0; row < f.height(); ++row) {
    int acc = 0;
    for (int col = w - 1; col >= 0; --col) {
      // cell at column col sees arcs at abscissa > its left edge, i.e. col + 1..
      const int cx = col + f.min_x();
      if (acc != 0 && f.contains(cx, row + f.min_y())) inside.push_back({cx, row + f.min_y()});
      acc += winding[static_cast<std::size_t>(col) + static_cast<std::size_t>(row) * w];
    }
  }
  return inside;
}

/// Black minus white figure cells enclosed by an elementary clockwise cycle.
inline int disequilibrium(const figure_graph& g, const cycle& c) {
  cycle_arcs(g, c);
  if (!is_elementary(c)) throw error(error_code::not_elementary);
  if (signed_area2(g, c) >= 0) throw error(error_code::not_clockwise);
  int dis = 0;
  for (const cell& x : enclosed_cells(g, c)) dis += is_black(x) ? 1 : -1;
  return dis;
}

}  // namespace tiler
