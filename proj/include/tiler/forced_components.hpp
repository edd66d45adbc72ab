#pragma once

// The tiling graph G_T, its strongly connected components (the forced
// components of the figure), critical cycles and the acyclic orientation
// G_h induced on the component graph.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "tiler/tiling_core.hpp"

namespace tiler {

using component_id = std::uint32_t;

/// Membership of each arc in G_T: g_T(a) = t(a).
inline std::vector<char> tiling_graph(const figure_graph& g, const arc_weights& w,
                                      const height_function& h) {
  std::vector<char> in(g.arc_count(), 0);
  for (arc_id a = 0; a < g.arc_count(); ++a)
    in[a] = (h[g.head(a)] - h[g.tail(a)]) == w.t[a];
  return in;
}

inline std::vector<char> tiling_graph(const figure_graph& g, const arc_weights& w,
                                      const tiling& t) {
  const auto gt = height_difference(g, w, t);
  std::vector<char> in(g.arc_count(), 0);
  for (arc_id a = 0; a < g.arc_count(); ++a) in[a] = gt[a] == w.t[a];
  return in;
}

/// Strongly connected components (iterative Tarjan). Returns the component
/// index of every vertex, in order of discovery.
inline std::vector<std::uint32_t> strongly_connected_components(
    const figure_graph& g, const std::vector<char>& arc_present, std::uint32_t* count) {
  constexpr std::uint32_t unvisited = ~std::uint32_t{0};
  const std::size_t n = g.vertex_count();
  std::vector<std::uint32_t> index(n, unvisited), low(n, 0), comp(n, unvisited);
  std::vector<vertex_id> stack;
  std::vector<char> on_stack(n, 0);
  std::vector<std::pair<vertex_id, std::uint32_t>> call;  // vertex, next arc slot
  std::uint32_t next_index = 0, ncomp = 0;

  for (vertex_id root = 0; root < n; ++root) {
    if (index[root] != unvisited) continue;
    call.push_back({root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      auto& [v, slot] = call.back();
      const auto arcs = g.out_arcs(v);
      if (slot < arcs.size()) {
        const arc_id a = arcs[slot++];
        if (!arc_present[a]) continue;
        const vertex_id u = g.head(a);
        if (index[u] == unvisited) {
          index[u] = low[u] = next_index++;
          stack.push_back(u);
          on_stack[u] = 1;
          call.push_back({u, 0});
        } else if (on_stack[u]) {
          low[v] = std::min(low[v], index[u]);
        }
        continue;
      }
      const vertex_id done = v;
      call.pop_back();
      if (!call.empty()) {
        const vertex_id parent = call.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        vertex_id u;
        do {
          u = stack.back();
          stack.pop_back();
          on_stack[u] = 0;
          comp[u] = ncomp;
        } while (u != done);
        ++ncomp;
      }
    }
  }
  if (count) *count = ncomp;
  return comp;
}

enum class component_kind { infinity, single, hole };

inline const char* to_string(component_kind k) noexcept {
  switch (k) {
    case component_kind::infinity: return "infinity";
    case component_kind::single: return "single";
    case component_kind::hole: return "hole";
  }
  return "?";
}

struct forced_component {
  component_kind kind = component_kind::single;
  std::vector<vertex_id> vertices;  // sorted
  vertex_id representative = no_vertex;
};

/// Forced components, numbered by representative (smallest vertex); the
/// infinity component holds w0 and is always component 0.
class component_graph {
 public:
  static component_graph from_tiling_graph(const figure_graph& g,
                                           const std::vector<char>& g_t) {
    std::uint32_t count = 0;
    const auto raw = strongly_connected_components(g, g_t, &count);
    std::vector<vertex_id> rep(count, no_vertex);
    for (vertex_id v = 0; v < g.vertex_count(); ++v)
      rep[raw[v]] = std::min(rep[raw[v]], v);
    std::vector<std::uint32_t> order(count);
    for (std::uint32_t i = 0; i < count; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::uint32_t a, std::uint32_t b) { return rep[a] < rep[b]; });
    std::vector<component_id> rank(count);
    for (std::uint32_t i = 0; i < count; ++i) rank[order[i]] = i;

    component_graph cg;
    cg.fingerprint_ = g.fingerprint();
    cg.of_vertex_.resize(g.vertex_count());
    cg.components_.resize(count);
    for (vertex_id v = 0; v < g.vertex_count(); ++v) {
      const component_id c = rank[raw[v]];
      cg.of_vertex_[v] = c;
      cg.components_[c].vertices.push_back(v);
    }
    for (component_id c = 0; c < count; ++c) {
      auto& comp = cg.components_[c];
      comp.representative = comp.vertices.front();
      const bool touches_hole = std::any_of(
          comp.vertices.begin(), comp.vertices.end(),
          [&](vertex_id v) { return g.hole_of_vertex(v) != infinity_component; });
      comp.kind = c == 0 ? component_kind::infinity
                         : (touches_hole ? component_kind::hole : component_kind::single);
    }

    std::vector<std::uint32_t> degree(count, 0);
    for (arc_id a = 0; a < g.arc_count(); ++a) {
      const component_id from = cg.of_vertex_[g.tail(a)], to = cg.of_vertex_[g.head(a)];
      if (from == to) continue;
      ++degree[to];
      if (from < to) cg.edges_.push_back({from, to});
    }
    std::sort(cg.edges_.begin(), cg.edges_.end());
    cg.edges_.erase(std::unique(cg.edges_.begin(), cg.edges_.end()), cg.edges_.end());
    cg.incoming_begin_.assign(count + 1, 0);
    for (component_id c = 0; c < count; ++c)
      cg.incoming_begin_[c + 1] = cg.incoming_begin_[c] + degree[c];
    cg.incoming_.resize(cg.incoming_begin_.back());
    std::vector<std::uint32_t> fill(cg.incoming_begin_.begin(), cg.incoming_begin_.end() - 1);
    for (arc_id a = 0; a < g.arc_count(); ++a) {
      const component_id from = cg.of_vertex_[g.tail(a)], to = cg.of_vertex_[g.head(a)];
      if (from != to) cg.incoming_[fill[to]++] = a;
    }
    return cg;
  }

  std::size_t size() const noexcept { return components_.size(); }
  const forced_component& operator[](component_id c) const { return components_[c]; }
  std::span<const forced_component> components() const noexcept { return components_; }
  component_id of(vertex_id v) const noexcept { return of_vertex_[v]; }
  std::span<const component_id> vertex_map() const noexcept { return of_vertex_; }
  static constexpr component_id infinity() noexcept { return 0; }
  std::uint64_t fingerprint() const noexcept { return fingerprint_; }

  /// Undirected quotient edges (U, U') with U < U'.
  std::span<const std::pair<component_id, component_id>> edges() const noexcept {
    return edges_;
  }

  /// Arcs of G_F entering component c from another component.
  std::span<const arc_id> incoming_arcs(component_id c) const noexcept {
    return {incoming_.data() + incoming_begin_[c],
            incoming_.data() + incoming_begin_[c + 1]};
  }

  std::vector<vertex_id> representatives() const {
    std::vector<vertex_id> reps;
    reps.reserve(size());
    for (const auto& c : components_) reps.push_back(c.representative);
    return reps;
  }

 private:
  std::uint64_t fingerprint_ = 0;
  std::vector<component_id> of_vertex_;
  std::vector<forced_component> components_;
  std::vector<std::pair<component_id, component_id>> edges_;
  std::vector<std::uint32_t> incoming_begin_;
  std::vector<arc_id> incoming_;
};

inline component_graph forced_components(const figure_graph& g, const arc_weights& w,
                                         const height_function& h) {
  return component_graph::from_tiling_graph(g, tiling_graph(g, w, h));
}

inline component_graph forced_components(const figure_graph& g, const arc_weights& w,
                                         const tiling& t) {
  return component_graph::from_tiling_graph(g, tiling_graph(g, w, t));
}

inline std::vector<arc_id> elementary_cycle_arcs(const figure_graph& g, const cycle& c) {
  const auto arcs = cycle_arcs(g, c);
  if (!is_elementary(c)) throw error(error_code::not_a_cycle, "cycle is not elementary");
  return arcs;
}

/// t(C) = 0.
inline bool is_critical(const figure_graph& g, const arc_weights& w, const cycle& c) {
  return cycle_sum(elementary_cycle_arcs(g, c), w.t) == 0;
}

/// Critical, and every interior arc has spin +1.
inline bool is_strongly_critical(const figure_graph& g, const arc_weights& w,
                                 const cycle& c) {
  const auto arcs = elementary_cycle_arcs(g, c);
  if (cycle_sum(arcs, w.t) != 0) return false;
  return std::all_of(arcs.begin(), arcs.end(),
                     [&](arc_id a) { return g.is_boundary(a) || g.spin(a) == 1; });
}

/// Diagnostic for the untileability criterion: a strongly critical cycle
/// made only of interior edges rules out every tiling.
inline bool proves_untileable(const figure_graph& g, const arc_weights& w, const cycle& c) {
  const auto arcs = elementary_cycle_arcs(g, c);
  return is_strongly_critical(g, w, c) &&
         std::none_of(arcs.begin(), arcs.end(), [&](arc_id a) { return g.is_boundary(a); });
}

/// G_h: the component graph oriented by the arcs of G_T.
class orientation {
 public:
  orientation(std::size_t components, std::vector<std::pair<component_id, component_id>> arcs)
      : arcs_(std::move(arcs)), in_degree_(components, 0), out_degree_(components, 0) {
    std::sort(arcs_.begin(), arcs_.end());
    arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
    for (const auto& [from, to] : arcs_) {
      ++out_degree_[from];
      ++in_degree_[to];
    }
  }

  std::span<const std::pair<component_id, component_id>> arcs() const noexcept {
    return arcs_;
  }
  std::size_t in_degree(component_id c) const noexcept { return in_degree_[c]; }
  std::size_t out_degree(component_id c) const noexcept { return out_degree_[c]; }
  std::size_t size() const noexcept { return in_degree_.size(); }

  bool is_acyclic() const {
    auto indeg = in_degree_;
    std::vector<component_id> ready;
    for (component_id c = 0; c < indeg.size(); ++c)
      if (indeg[c] == 0) ready.push_back(c);
    std::size_t removed = 0;
    while (!ready.empty()) {
      const component_id c = ready.back();
      ready.pop_back();
      ++removed;
      auto it = std::lower_bound(arcs_.begin(), arcs_.end(), std::pair{c, component_id{0}});
      for (; it != arcs_.end() && it->first == c; ++it)
        if (--indeg[it->second] == 0) ready.push_back(it->second);
    }
    return removed == indeg.size();
  }

  /// Components reachable from `from` (forward) or reaching it (backward).
  std::vector<char> reach(component_id from, bool forward) const {
    std::vector<char> seen(size(), 0);
    std::vector<component_id> stack{from};
    seen[from] = 1;
    while (!stack.empty()) {
      const component_id c = stack.back();
      stack.pop_back();
      for (const auto& [a, b] : arcs_) {
        const component_id src = forward ? a : b, dst = forward ? b : a;
        if (src == c && !seen[dst]) {
          seen[dst] = 1;
          stack.push_back(dst);
        }
      }
    }
    return seen;
  }

  friend bool operator==(const orientation& a, const orientation& b) {
    return a.arcs_ == b.arcs_;
  }

 private:
  std::vector<std::pair<component_id, component_id>> arcs_;
  std::vector<std::size_t> in_degree_, out_degree_;
};

inline orientation to_orientation(const figure_graph& g, const arc_weights& w,
                                  const component_graph& cg, const height_function& h) {
  std::vector<std::pair<component_id, component_id>> arcs;
  for (arc_id a = 0; a < g.arc_count(); ++a) {
    const component_id from = cg.of(g.tail(a)), to = cg.of(g.head(a));
    if (from != to && h[g.head(a)] - h[g.tail(a)] == w.t[a]) arcs.push_back({from, to});
  }
  return orientation(cg.size(), std::move(arcs));
}

/// On every fundamental cycle C of G_F (w.r.t. the weights' spanning tree),
/// the number of interior arcs of C lying in G_T equals -b(C)/4.
inline bool satisfies_cycle_count(const figure_graph& g, const arc_weights& w,
                                  const height_function& h) {
  const auto& parent = w.tree.parent_arc;
  std::vector<std::size_t> depth(g.vertex_count(), 0);
  for (vertex_id v : w.tree.order)
    if (parent[v] != no_arc) depth[v] = depth[g.tail(parent[v])] + 1;
  auto path_to_root = [&](vertex_id v) {
    std::vector<arc_id> up;  // arcs from v toward the root
    while (parent[v] != no_arc) {
      up.push_back(figure_graph::reverse(parent[v]));
      v = g.tail(parent[v]);
    }
    return up;
  };
  for (arc_id a = 0; a < g.arc_count(); ++a) {
    const vertex_id u = g.tail(a), v = g.head(a);
    if (parent[v] == a || parent[u] == figure_graph::reverse(a)) continue;
    // cycle: root -> u, a, v -> root
    std::vector<arc_id> arcs;
    auto up_u = path_to_root(u);
    for (auto it = up_u.rbegin(); it != up_u.rend(); ++it)
      arcs.push_back(figure_graph::reverse(*it));
    arcs.push_back(a);
    auto up_v = path_to_root(v);
    arcs.insert(arcs.end(), up_v.begin(), up_v.end());
    height_t b_sum = 0, count = 0;
    for (arc_id x : arcs) {
      b_sum += w.b[x];
      if (!g.is_boundary(x) && h[g.head(x)] - h[g.tail(x)] == w.t[x]) ++count;
    }
    if (b_sum % 4 != 0 || count != -b_sum / 4) return false;
  }
  return true;
}

}  // namespace tiler
