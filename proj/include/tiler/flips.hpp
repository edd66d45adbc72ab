#pragma once

// Generalised flips: raising (up) or lowering (down) the heights of a whole
// forced component by 4. A flip on a single-vertex component is the usual
// 2x2 domino rotation; on a hole component it moves dominoes all around the
// hole.

#include <compare>
#include <cstdint>
#include <vector>

#include "tiler/forced_components.hpp"
#include "tiler/lattice_order.hpp"

namespace tiler {

enum class flip_direction { up, down };

struct flip {
  component_id component = 0;
  flip_direction direction = flip_direction::up;
  friend auto operator<=>(const flip&, const flip&) = default;
};

/// Up: no arc of G_h enters the component. Down: none leaves it.
/// Works on raw height vectors so samplers can avoid copies.
inline bool can_flip(const figure_graph& g, const arc_weights& w, const component_graph& cg,
                     std::span<const height_t> h, flip f) {
  if (f.component == component_graph::infinity() || f.component >= cg.size()) return false;
  for (arc_id a : cg.incoming_arcs(f.component)) {
    const height_t d = h[g.head(a)] - h[g.tail(a)];
    const bool blocked = f.direction == flip_direction::up
                             ? d == w.t[a]
                             : -d == w.t[figure_graph::reverse(a)];
    if (blocked) return false;
  }
  return true;
}

inline void apply_flip_in_place(const component_graph& cg, std::span<height_t> h, flip f) {
  const height_t d = f.direction == flip_direction::up ? 4 : -4;
  for (vertex_id v : cg[f.component].vertices) h[v] += d;
}

inline std::vector<flip> available_flips(const figure_graph& g, const arc_weights& w,
                                         const component_graph& cg,
                                         const height_function& h) {
  std::vector<flip> out;
  for (component_id c = 1; c < cg.size(); ++c)
    for (flip_direction d : {flip_direction::up, flip_direction::down})
      if (can_flip(g, w, cg, h.values(), {c, d})) out.push_back({c, d});
  return out;
}

inline height_function apply_flip(const figure_graph& g, const arc_weights& w,
                                  const component_graph& cg, const height_function& h,
                                  flip f) {
  if (!can_flip(g, w, cg, h.values(), f)) throw error(error_code::flip_not_available);
  std::vector<height_t> out(h.values().begin(), h.values().end());
  apply_flip_in_place(cg, out, f);
  return height_function(h.fingerprint(), std::move(out));
}

inline height_t flip_distance(const height_function& a, const height_function& b,
                              const component_graph& cg) {
  return delta(a, b, cg) / 4;
}

/// Shortest flip sequence from `from` to `to`: down flips to inf(from, to),
/// then up flips to `to`. Each step flips a component whose height still
/// differs from the waypoint.
inline std::vector<flip> flip_path(const figure_graph& g, const arc_weights& w,
                                   const component_graph& cg, const height_function& from,
                                   const height_function& to) {
  require_same_figure(from, to);
  const height_function meet = inf(from, to);
  std::vector<flip> path;
  std::vector<height_t> cur(from.values().begin(), from.values().end());

  auto walk = [&](const height_function& target, flip_direction dir) {
    for (;;) {
      bool moved = false, pending = false;
      for (component_id c = 1; c < cg.size(); ++c) {
        const vertex_id r = cg[c].representative;
        const bool needs = dir == flip_direction::up ? cur[r] < target[r] : cur[r] > target[r];
        if (!needs) continue;
        pending = true;
        const flip f{c, dir};
        if (can_flip(g, w, cg, cur, f)) {
          apply_flip_in_place(cg, cur, f);
          path.push_back(f);
          moved = true;
        }
      }
      if (!pending) return;
      if (!moved) throw error(error_code::unreachable, "no flip makes progress");
    }
  };
  walk(meet, flip_direction::down);
  walk(to, flip_direction::up);
  return path;
}

struct local_flip_report {
  bool connected = false;
  height_t local_flips = 0;  // sum over vertices of |h - h'| / 4, when connected
};

/// Local flips alone connect two tilings iff their heights agree on every
/// boundary vertex.
inline local_flip_report local_flip_connected(const figure_graph& g,
                                              const height_function& a,
                                              const height_function& b) {
  require_same_figure(a, b);
  local_flip_report r;
  for (vertex_id v = 0; v < a.size(); ++v)
    if (g.on_boundary(v) && a[v] != b[v]) return r;
  r.connected = true;
  for (vertex_id v = 0; v < a.size(); ++v) {
    const height_t d = a[v] - b[v];
    r.local_flips += (d < 0 ? -d : d) / 4;
  }
  return r;
}

}  // namespace tiler
