#pragma once

// The distributive lattice of height functions, and the worklist algorithm
// computing the minimal (or maximal) height function, optionally with some
// vertices pinned to prescribed values.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <vector>

#include "tiler/forced_components.hpp"
#include "tiler/tiling_core.hpp"

namespace tiler {

enum class order_relation { less, equal, greater, incomparable };

inline height_function inf(const height_function& a, const height_function& b) {
  require_same_figure(a, b);
  std::vector<height_t> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = std::min(a[static_cast<vertex_id>(i)], b[static_cast<vertex_id>(i)]);
  return height_function(a.fingerprint(), std::move(out));
}

inline height_function sup(const height_function& a, const height_function& b) {
  require_same_figure(a, b);
  std::vector<height_t> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = std::max(a[static_cast<vertex_id>(i)], b[static_cast<vertex_id>(i)]);
  return height_function(a.fingerprint(), std::move(out));
}

inline order_relation compare(const height_function& a, const height_function& b) {
  require_same_figure(a, b);
  bool some_less = false, some_greater = false;
  for (vertex_id v = 0; v < a.size(); ++v) {
    some_less |= a[v] < b[v];
    some_greater |= a[v] > b[v];
  }
  if (some_less && some_greater) return order_relation::incomparable;
  if (some_less) return order_relation::less;
  if (some_greater) return order_relation::greater;
  return order_relation::equal;
}

/// Sum over forced components of |h(v_U) - h'(v_U)|.
inline height_t delta(const height_function& a, const height_function& b,
                      const component_graph& cg) {
  require_same_figure(a, b);
  if (cg.fingerprint() != a.fingerprint()) throw error(error_code::different_figures);
  height_t d = 0;
  for (const auto& comp : cg.components()) {
    const height_t x = a[comp.representative] - b[comp.representative];
    d += x < 0 ? -x : x;
  }
  return d;
}

struct pin {
  vertex_id vertex = no_vertex;
  height_t value = 0;
};

struct extremal_result {
  std::optional<height_function> height;  // empty when untileable
  std::uint64_t passes = 0;               // +-4 updates performed
};

/// Generalised Thurston algorithm. Construction fixes h on the outer
/// boundary by integrating g_F = eq + sp from w0, and sets
/// sup(v) = t(T_F v), low(v) = b(T_F v) elsewhere.
class extremal_solver {
 public:
  extremal_solver(const figure_graph& g, const arc_weights& w) : g_(&g), w_(&w) {
    const std::size_t n = g.vertex_count();
    low_.assign(n, 0);
    sup_.assign(n, 0);
    for (vertex_id v : w.tree.order) {
      const arc_id a = w.tree.parent_arc[v];
      if (a == no_arc) continue;
      sup_[v] = sup_[g.tail(a)] + w.t[a];
      low_[v] = low_[g.tail(a)] + w.b[a];
    }

    const cycle& outer = g.outer_contour();
    std::vector<height_t> boundary(n, 0);
    height_t h = 0;
    for (std::size_t i = 0; i + 1 < outer.size(); ++i) {
      boundary[outer[i]] = h;
      h += w.eq[*g.find_arc(outer[i], outer[i + 1])] +
           g.spin(*g.find_arc(outer[i], outer[i + 1]));
    }
    consistent_ = h == 0;
    for (std::size_t i = 0; i + 1 < outer.size(); ++i)
      low_[outer[i]] = sup_[outer[i]] = boundary[outer[i]];
  }

  /// False when g_F does not sum to zero around the outer contour.
  bool boundary_consistent() const noexcept { return consistent_; }
  std::span<const height_t> low() const noexcept { return low_; }
  std::span<const height_t> sup() const noexcept { return sup_; }

  /// Least height function above `floor` (if given) agreeing with the pins.
  extremal_result minimal(std::span<const pin> pins = {},
                          std::span<const height_t> floor = {}) const {
    return run(pins, floor, true);
  }

  /// Greatest height function below `ceiling` (if given) agreeing with the pins.
  extremal_result maximal(std::span<const pin> pins = {},
                          std::span<const height_t> ceiling = {}) const {
    return run(pins, ceiling, false);
  }

 private:
  extremal_result run(std::span<const pin> pins, std::span<const height_t> bound,
                      bool minimal) const {
    extremal_result result;
    if (!consistent_) return result;
    const figure_graph& g = *g_;
    const auto& t = w_->t;
    const std::size_t n = g.vertex_count();

    // every height function agrees with low_ modulo 4
    auto congruent = [&](vertex_id v, height_t x) { return (x - low_[v]) % 4 == 0; };
    std::vector<height_t> lo(low_), hi(sup_);
    for (const pin& p : pins) {
      if (p.vertex >= n || !congruent(p.vertex, p.value)) return result;
      if (p.value < lo[p.vertex] || p.value > hi[p.vertex]) return result;
      lo[p.vertex] = hi[p.vertex] = p.value;
    }
    std::vector<height_t> h = minimal ? lo : hi;
    if (!bound.empty()) {
      if (bound.size() != n) return result;
      for (vertex_id v = 0; v < n; ++v) {
        if (!congruent(v, bound[v])) return result;
        h[v] = minimal ? std::max(h[v], bound[v]) : std::min(h[v], bound[v]);
        if (h[v] < lo[v] || h[v] > hi[v]) return result;
      }
    }

    // minimal: v violates when h(v) + t(v, v') < h(v') for some arc.
    // maximal: v violates when h(v'') + t(v'', v) < h(v) for some arc.
    auto violates = [&](vertex_id v) {
      for (arc_id a : g.out_arcs(v)) {
        const vertex_id u = g.head(a);
        if (minimal ? h[v] + t[a] < h[u]
                    : h[u] + t[figure_graph::reverse(a)] < h[v])
          return true;
      }
      return false;
    };

    std::deque<vertex_id> queue;
    std::vector<char> queued(n, 0);
    for (vertex_id v = 0; v < n; ++v)
      if (violates(v)) {
        queue.push_back(v);
        queued[v] = 1;
      }

    while (!queue.empty()) {
      const vertex_id v = queue.front();
      queue.pop_front();
      queued[v] = 0;
      if (!violates(v)) continue;
      h[v] += minimal ? 4 : -4;
      ++result.passes;
      if (minimal ? h[v] > hi[v] : h[v] < lo[v]) return result;
      if (violates(v)) {
        queue.push_back(v);
        queued[v] = 1;
      }
      for (arc_id a : g.out_arcs(v)) {
        const vertex_id u = g.head(a);
        if (queued[u]) continue;
        const bool bad = minimal ? h[u] + t[figure_graph::reverse(a)] < h[v]
                                 : h[v] + t[a] < h[u];
        if (bad) {
          queue.push_back(u);
          queued[u] = 1;
        }
      }
    }
    result.height = height_function(g.fingerprint(), std::move(h));
    return result;
  }

  const figure_graph* g_;
  const arc_weights* w_;
  std::vector<height_t> low_, sup_;
  bool consistent_ = false;
};

inline extremal_result minimal_height(const figure_graph& g, const arc_weights& w) {
  return extremal_solver(g, w).minimal();
}

inline extremal_result maximal_height(const figure_graph& g, const arc_weights& w) {
  return extremal_solver(g, w).maximal();
}

inline std::optional<tiling> min_tiling(const figure_graph& g, const arc_weights& w) {
  auto r = minimal_height(g, w);
  if (!r.height) return std::nullopt;
  return tiling_of_height(g, w, *r.height);
}

inline std::optional<tiling> max_tiling(const figure_graph& g, const arc_weights& w) {
  auto r = maximal_height(g, w);
  if (!r.height) return std::nullopt;
  return tiling_of_height(g, w, *r.height);
}

}  // namespace tiler
