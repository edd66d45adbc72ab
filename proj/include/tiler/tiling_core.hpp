#pragma once

// Tilings, height differences g_T and height functions h_T.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <deque>
#include <span>
#include <vector>

#include "tiler/equilibrium.hpp"
#include "tiler/grid_geometry.hpp"

namespace tiler {

struct domino {
  cell first;   // first < second
  cell second;

  domino() = default;
  domino(cell a, cell b) : first(std::min(a, b)), second(std::max(a, b)) {}

  bool horizontal() const noexcept { return first.y == second.y; }
  friend auto operator<=>(const domino&, const domino&) = default;
};

/// A tiling as its sorted domino list; each domino stands for its central
/// axis, so equality is equality of axis sets.
class tiling {
 public:
  tiling() = default;
  explicit tiling(std::vector<domino> dominoes) : dominoes_(std::move(dominoes)) {
    std::sort(dominoes_.begin(), dominoes_.end());
  }

  std::span<const domino> dominoes() const noexcept { return dominoes_; }
  std::size_t size() const noexcept { return dominoes_.size(); }

  friend auto operator<=>(const tiling&, const tiling&) = default;
  friend bool operator==(const tiling&, const tiling&) = default;

 private:
  std::vector<domino> dominoes_;
};

class height_function {
 public:
  height_function() = default;
  height_function(std::uint64_t fingerprint, std::vector<height_t> values)
      : fingerprint_(fingerprint), values_(std::move(values)) {}

  height_t operator[](vertex_id v) const noexcept { return values_[v]; }
  std::span<const height_t> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::uint64_t fingerprint() const noexcept { return fingerprint_; }

  friend bool operator==(const height_function& a, const height_function& b) {
    return a.fingerprint_ == b.fingerprint_ && a.values_ == b.values_;
  }

 private:
  std::uint64_t fingerprint_ = 0;
  std::vector<height_t> values_;
};

inline void require_same_figure(const height_function& a, const height_function& b) {
  if (a.fingerprint() != b.fingerprint() || a.size() != b.size())
    throw error(error_code::different_figures);
}

/// Checks that the dominoes cover the figure exactly.
inline tiling validate_tiling(const figure_graph& g, std::vector<domino> dominoes) {
  const figure& f = g.shape();
  std::vector<char> covered(f.size(), 0);
  auto index_of = [&](cell c) {
    const auto cells = f.cells();
    return static_cast<std::size_t>(std::lower_bound(cells.begin(), cells.end(), c) -
                                    cells.begin());
  };
  for (const domino& d : dominoes) {
    if (!(d.second == cell{d.first.x + 1, d.first.y}) &&
        !(d.second == cell{d.first.x, d.first.y + 1}))
      throw error(error_code::not_a_domino);
    if (!f.contains(d.first) || !f.contains(d.second))
      throw error(error_code::domino_outside_figure);
    for (const cell& c : {d.first, d.second}) {
      char& cov = covered[index_of(c)];
      if (cov) throw error(error_code::overlap);
      cov = 1;
    }
  }
  if (std::find(covered.begin(), covered.end(), 0) != covered.end())
    throw error(error_code::gap);
  return tiling(std::move(dominoes));
}

/// chi_T per edge: 1 when the edge is a central axis.
inline std::vector<char> axis_mask(const figure_graph& g, const tiling& t) {
  std::vector<char> chi(g.edge_count(), 0);
  for (const domino& d : t.dominoes()) chi[*g.edge_between(d.first, d.second)] = 1;
  return chi;
}

/// g_T(a) = eq_r(a) + 2 sp(a) (1 - 2 chi_T(a)).
inline std::vector<height_t> height_difference(const figure_graph& g,
                                               const arc_weights& w, const tiling& t) {
  const auto chi = axis_mask(g, t);
  std::vector<height_t> gt(g.arc_count());
  for (arc_id a = 0; a < g.arc_count(); ++a) {
    const height_t c = chi[figure_graph::edge_of(a)];
    gt[a] = w.eq_r[a] + 2 * g.spin(a) * (1 - 2 * c);
  }
  return gt;
}

/// Integrates an arc function from w0 (h(w0) = 0) along BFS order.
inline std::vector<height_t> integrate(const figure_graph& g,
                                       const std::vector<height_t>& diff) {
  std::vector<height_t> h(g.vertex_count(), 0);
  std::vector<char> seen(g.vertex_count(), 0);
  std::deque<vertex_id> queue{g.base_vertex()};
  seen[g.base_vertex()] = 1;
  while (!queue.empty()) {
    const vertex_id v = queue.front();
    queue.pop_front();
    for (arc_id a : g.out_arcs(v)) {
      const vertex_id u = g.head(a);
      if (seen[u]) continue;
      seen[u] = 1;
      h[u] = h[v] + diff[a];
      queue.push_back(u);
    }
  }
  return h;
}

inline height_function height_of_tiling(const figure_graph& g, const arc_weights& w,
                                        const tiling& t) {
  const auto gt = height_difference(g, w, t);
  auto h = integrate(g, gt);
  for (arc_id a = 0; a < g.arc_count(); ++a) {
    if (h[g.head(a)] - h[g.tail(a)] != gt[a])
      throw error(error_code::inconsistent_cycle,
                  "height difference does not vanish on some cycle");
    if (gt[a] != w.t[a] && gt[a] != w.b[a])
      throw error(error_code::inconsistent_cycle, "height difference outside {b, t}");
    if (g.is_boundary(a) && gt[a] != w.eq[a] + g.spin(a))
      throw error(error_code::inconsistent_cycle, "boundary arc is not rigid");
  }
  return height_function(g.fingerprint(), std::move(h));
}

/// True when D(h)(a) lies in {b(a), t(a)} on every arc and h(w0) = 0.
inline bool is_height_function(const figure_graph& g, const arc_weights& w,
                               std::span<const height_t> h) {
  if (h.size() != g.vertex_count() || h[g.base_vertex()] != 0) return false;
  for (arc_id a = 0; a < g.arc_count(); ++a) {
    const height_t d = h[g.head(a)] - h[g.tail(a)];
    if (d != w.t[a] && d != w.b[a]) return false;
  }
  return true;
}

inline tiling tiling_of_height(const figure_graph& g, const arc_weights& w,
                               const height_function& h) {
  if (h.fingerprint() != g.fingerprint() || !is_height_function(g, w, h.values()))
    throw error(error_code::not_a_height_function);
  std::vector<domino> dominoes;
  for (arc_id a = 0; a < g.arc_count(); a += 2) {
    if (g.is_boundary(a)) continue;
    const height_t d = h[g.head(a)] - h[g.tail(a)];
    if (d - w.eq_r[a] == -2 * g.spin(a)) {
      const auto [c0, c1] = g.edge_cells(figure_graph::edge_of(a));
      dominoes.emplace_back(c0, c1);
    }
  }
  try {
    return validate_tiling(g, std::move(dominoes));
  } catch (const error&) {
    throw error(error_code::not_a_height_function, "selected axes do not tile");
  }
}

}  // namespace tiler
