#pragma once

// Equilibrium functions built from cut lines and step values, and the arc
// weights eq_r, t and b derived from them.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <vector>

#include "tiler/grid_geometry.hpp"

namespace tiler {

/// Vertical segment from the centre of a hole's highest (leftmost) cell up to
/// the centre of the first cell above it that is not in the figure.
struct cut_line {
  int hole_id = 0;
  cell start;
  cell end;
  int predecessor = infinity_component;  // hole id or infinity_component
  std::vector<edge_id> crossed_edges;    // bottom to top

  double x_half() const noexcept { return start.x + 0.5; }
  double y_start() const noexcept { return start.y + 0.5; }
  double y_end() const noexcept { return end.y + 0.5; }
};

struct equilibrium_function {
  std::vector<height_t> eq;    // per arc
  std::vector<height_t> step;  // per hole

  height_t operator[](arc_id a) const noexcept { return eq[a]; }
};

/// BFS tree rooted at w0: parent_arc[v] enters v (no_arc for the root);
/// order lists vertices root first.
struct spanning_tree {
  std::vector<arc_id> parent_arc;
  std::vector<vertex_id> order;
};

struct arc_weights {
  std::vector<height_t> eq, eq_r, t, b;
  spanning_tree tree;
  bool tree_uses_zero_arcs = false;

  /// Derives eq_r, t and b from eq; the tree uses eq = 0 arcs when those
  /// span the graph and falls back to all arcs otherwise.
  static arc_weights derive(const figure_graph& g, const std::vector<height_t>& eq) {
    arc_weights w;
    const std::size_t na = g.arc_count();
    w.eq = eq;
    w.eq_r.resize(na);
    w.t.resize(na);
    w.b.resize(na);
    for (arc_id a = 0; a < na; ++a) {
      const height_t sp = g.spin(a);
      w.eq_r[a] = eq[a] - sp;
      if (g.is_boundary(a)) {
        w.t[a] = w.b[a] = eq[a] + sp;
      } else {
        w.t[a] = w.eq_r[a] + 2;
        w.b[a] = w.eq_r[a] - 2;
      }
    }
    w.tree = bfs_tree(g, [&](arc_id a) { return eq[a] == 0; });
    w.tree_uses_zero_arcs = w.tree.order.size() == g.vertex_count();
    if (!w.tree_uses_zero_arcs) w.tree = bfs_tree(g, [](arc_id) { return true; });
    return w;
  }

  template <class Allowed>
  static spanning_tree bfs_tree(const figure_graph& g, Allowed&& allowed) {
    spanning_tree tr;
    tr.parent_arc.assign(g.vertex_count(), no_arc);
    std::vector<char> seen(g.vertex_count(), 0);
    std::deque<vertex_id> queue{g.base_vertex()};
    seen[g.base_vertex()] = 1;
    while (!queue.empty()) {
      const vertex_id v = queue.front();
      queue.pop_front();
      tr.order.push_back(v);
      for (arc_id a : g.out_arcs(v)) {
        const vertex_id u = g.head(a);
        if (seen[u] || !allowed(a)) continue;
        seen[u] = 1;
        tr.parent_arc[u] = a;
        queue.push_back(u);
      }
    }
    return tr;
  }
};

inline std::vector<cut_line> build_cut_lines(const figure_graph& g) {
  const figure& f = g.shape();
  std::vector<cut_line> lines;
  for (const hole& hl : g.holes()) {
    cut_line line;
    line.hole_id = hl.id;
    line.start = hl.cells.front();
    for (const cell& c : hl.cells)
      if (c.y > line.start.y || (c.y == line.start.y && c.x < line.start.x))
        line.start = c;
    cell c{line.start.x, line.start.y + 1};
    line.crossed_edges.push_back(*g.horizontal_edge(c.x, c.y));
    while (f.contains(c)) {
      ++c.y;
      line.crossed_edges.push_back(*g.horizontal_edge(c.x, c.y));
    }
    line.end = c;
    line.predecessor = g.complement_component(c);
    lines.push_back(std::move(line));
  }
  return lines;
}

/// step(i) = sum of the children's steps - sp(C_i), children before parents.
inline std::vector<height_t> step_values(const figure_graph& g,
                                         const std::vector<cut_line>& lines) {
  std::vector<height_t> step(lines.size(), 0);
  std::vector<std::size_t> order(lines.size());
  std::iota(order.begin(), order.end(), 0);
  // a predecessor owns a cell strictly above its child's highest cell
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return lines[a].start.y < lines[b].start.y;
  });
  std::vector<height_t> child_sum(lines.size(), 0);
  for (std::size_t i : order) {
    const auto& hl = g.holes()[static_cast<std::size_t>(lines[i].hole_id)];
    step[i] = child_sum[i] - spin_sum(g, hl.clockwise_contour);
    if (lines[i].predecessor != infinity_component)
      child_sum[static_cast<std::size_t>(lines[i].predecessor)] += step[i];
  }
  return step;
}

struct equilibrium {
  equilibrium_function function;
  arc_weights weights;
  std::vector<cut_line> cut_lines;
};

inline equilibrium build_equilibrium(const figure_graph& g) {
  equilibrium result;
  result.cut_lines = build_cut_lines(g);
  result.function.step = step_values(g, result.cut_lines);
  result.function.eq.assign(g.arc_count(), 0);
  for (const cut_line& line : result.cut_lines) {
    const height_t s = result.function.step[static_cast<std::size_t>(line.hole_id)];
    for (edge_id e : line.crossed_edges) {
      result.function.eq[2 * e] = s;        // eastward
      result.function.eq[2 * e + 1] = -s;   // westward
    }
  }
  result.weights = arc_weights::derive(g, result.function.eq);
  return result;
}

inline bool verify_equilibrium(const figure_graph& g, const std::vector<height_t>& eq) {
  if (eq.size() != g.arc_count()) return false;
  for (arc_id a = 0; a < g.arc_count(); a += 2)
    if (eq[a] != -eq[a + 1]) return false;
  for (const cell& c : g.shape().cells())
    if (cycle_sum(cycle_arcs(g, g.cell_cycle(c)), eq) != 0) return false;
  for (const hole& hl : g.holes())
    if (cycle_sum(cycle_arcs(g, hl.clockwise_contour), eq) !=
        -spin_sum(g, hl.clockwise_contour))
      return false;
  return true;
}

inline bool verify_equilibrium(const figure_graph& g, const equilibrium_function& f) {
  return verify_equilibrium(g, f.eq);
}

}  // namespace tiler
