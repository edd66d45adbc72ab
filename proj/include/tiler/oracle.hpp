#pragma once

// Brute-force ground truth. brute_enumerate only looks at the figure's cell
// set; it shares no code with the height-function machinery.

#include <algorithm>
#include <climits>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "tiler/equilibrium.hpp"
#include "tiler/flips.hpp"
#include "tiler/forced_components.hpp"
#include "tiler/tiling_core.hpp"

namespace tiler::oracle {

using tiling_set = std::vector<tiling>;

inline constexpr std::size_t default_cell_cap = 24;

/// Backtracking over exact covers: always cover the first uncovered cell (in
/// (x, y) order) with a horizontal or a vertical domino. Calls
/// visit(std::span<const domino>) per tiling; returns the number found.
template <class Visit>
std::uint64_t brute_force_visit(const figure& f, Visit&& visit) {
  const auto cells = f.cells();
  const std::size_t n = cells.size();
  auto index_of = [&](cell c) -> std::size_t {
    if (!f.contains(c)) return n;
    return static_cast<std::size_t>(std::lower_bound(cells.begin(), cells.end(), c) -
                                    cells.begin());
  };
  std::vector<std::size_t> right(n), up(n);
  for (std::size_t i = 0; i < n; ++i) {
    right[i] = index_of({cells[i].x + 1, cells[i].y});
    up[i] = index_of({cells[i].x, cells[i].y + 1});
  }
  std::vector<char> covered(n, 0);
  std::vector<domino> placed;
  placed.reserve(n / 2);
  std::uint64_t found = 0;

  std::function<void(std::size_t)> search = [&](std::size_t from) {
    while (from < n && covered[from]) ++from;
    if (from == n) {
      ++found;
      visit(std::span<const domino>(placed));
      return;
    }
    covered[from] = 1;
    for (std::size_t partner : {right[from], up[from]}) {
      if (partner == n || covered[partner]) continue;
      covered[partner] = 1;
      placed.emplace_back(cells[from], cells[partner]);
      search(from + 1);
      placed.pop_back();
      covered[partner] = 0;
    }
    covered[from] = 0;
  };
  if (n % 2 == 0) search(0);
  return found;
}

inline tiling_set brute_enumerate(const figure& f,
                                  std::size_t cell_cap = default_cell_cap) {
  if (f.size() > cell_cap)
    throw error(error_code::too_large,
                std::to_string(f.size()) + " cells exceed the oracle cap of " +
                    std::to_string(cell_cap));
  tiling_set out;
  brute_force_visit(f, [&](std::span<const domino> ds) {
    out.emplace_back(std::vector<domino>(ds.begin(), ds.end()));
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::uint64_t brute_count(const figure& f) {
  return brute_force_visit(f, [](std::span<const domino>) {});
}

/// Graph whose nodes are height functions, stored as per-component offsets
/// (h(v_U) - h_ref(v_U)) / 4, and whose edges join functions that differ by
/// exactly 4 on one forced component and agree elsewhere.
class flip_graph {
 public:
  using offset = std::int16_t;

  flip_graph(const figure_graph& g, const arc_weights& w, const component_graph& cg,
             height_function reference)
      : g_(&g), w_(&w), cg_(&cg), ref_(std::move(reference)), width_(cg.size()) {
    slots_.assign(1024, empty_slot);
  }

  /// Adds a height function; returns its node index.
  std::uint32_t add(const height_function& h) {
    std::vector<offset> k(width_);
    for (component_id c = 0; c < width_; ++c) {
      const vertex_id r = (*cg_)[c].representative;
      const height_t d = (h[r] - ref_[r]) / 4;
      if (d < INT16_MIN || d > INT16_MAX) throw error(error_code::too_large, "offset overflow");
      k[c] = static_cast<offset>(d);
    }
    const std::uint64_t hash = hash_of(k);
    if (auto found = find(k, hash)) return *found;
    const auto id = static_cast<std::uint32_t>(hashes_.size());
    pool_.insert(pool_.end(), k.begin(), k.end());
    hashes_.push_back(hash);
    if (2 * hashes_.size() > slots_.size()) rehash(2 * slots_.size());
    insert_slot(id);
    return id;
  }

  std::size_t size() const noexcept { return hashes_.size(); }

  std::span<const offset> key(std::uint32_t node) const {
    return {pool_.data() + static_cast<std::size_t>(node) * width_, width_};
  }

  std::optional<std::uint32_t> find(std::span<const offset> k) const {
    return find(k, hash_of(k));
  }

  height_function height(std::uint32_t node) const {
    const auto k = key(node);
    std::vector<height_t> h(ref_.values().begin(), ref_.values().end());
    for (vertex_id v = 0; v < h.size(); ++v) h[v] += 4 * static_cast<height_t>(k[cg_->of(v)]);
    return height_function(ref_.fingerprint(), std::move(h));
  }

  /// Neighbours by the height criterion; `local_only` keeps single-vertex
  /// components only.
  std::vector<std::uint32_t> neighbours(std::uint32_t node, bool local_only = false) const {
    std::vector<std::uint32_t> out;
    const auto k = key(node);
    for (component_id c = 1; c < width_; ++c) {
      if (local_only && (*cg_)[c].kind != component_kind::single) continue;
      for (int step : {-1, 1}) {
        const auto moved = static_cast<offset>(k[c] + step);
        const std::uint64_t hash = hashes_[node] - mix(c, k[c]) + mix(c, moved);
        for (std::size_t i = hash & (slots_.size() - 1);; i = (i + 1) & (slots_.size() - 1)) {
          const std::uint32_t other = slots_[i];
          if (other == empty_slot) break;
          if (hashes_[other] != hash) continue;
          const auto ok = key(other);
          bool same = ok[c] == moved;
          for (component_id j = 0; same && j < width_; ++j)
            if (j != c && ok[j] != k[j]) same = false;
          if (same) {
            out.push_back(other);
            break;
          }
        }
      }
    }
    return out;
  }

  /// True when available_flips/apply_flip reach exactly the neighbours.
  bool flips_match_neighbours(std::uint32_t node) const {
    const height_function h = height(node);
    std::vector<std::uint32_t> via_flips;
    for (const flip& f : available_flips(*g_, *w_, *cg_, h)) {
      const height_function next = apply_flip(*g_, *w_, *cg_, h, f);
      std::vector<offset> k(key(node).begin(), key(node).end());
      k[f.component] = static_cast<offset>(k[f.component] + (f.direction == flip_direction::up ? 1 : -1));
      const auto other = find(k);
      if (!other || !(height(*other) == next)) return false;
      via_flips.push_back(*other);
    }
    auto direct = neighbours(node);
    std::sort(direct.begin(), direct.end());
    std::sort(via_flips.begin(), via_flips.end());
    return direct == via_flips;
  }

  /// BFS distances from `source`; -1 for unreachable nodes.
  std::vector<std::int32_t> distances(std::uint32_t source, bool local_only = false) const {
    std::vector<std::int32_t> dist(size(), -1);
    std::deque<std::uint32_t> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
      const std::uint32_t u = queue.front();
      queue.pop_front();
      for (std::uint32_t v : neighbours(u, local_only))
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
    }
    return dist;
  }

 private:
  static constexpr std::uint32_t empty_slot = ~std::uint32_t{0};

  // Additive hash, so a one-component change updates it in O(1).
  static std::uint64_t mix(component_id c, offset x) noexcept {
    std::uint64_t z = (static_cast<std::uint64_t>(c) << 16) ^ static_cast<std::uint16_t>(x);
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  std::uint64_t hash_of(std::span<const offset> k) const noexcept {
    std::uint64_t h = 0;
    for (component_id c = 0; c < k.size(); ++c) h += mix(c, k[c]);
    return h;
  }

  std::optional<std::uint32_t> find(std::span<const offset> k, std::uint64_t hash) const {
    for (std::size_t i = hash & (slots_.size() - 1);; i = (i + 1) & (slots_.size() - 1)) {
      const std::uint32_t node = slots_[i];
      if (node == empty_slot) return std::nullopt;
      if (hashes_[node] != hash) continue;
      const auto other = key(node);
      if (std::equal(other.begin(), other.end(), k.begin(), k.end())) return node;
    }
  }

  void insert_slot(std::uint32_t node) {
    std::size_t i = hashes_[node] & (slots_.size() - 1);
    while (slots_[i] != empty_slot) i = (i + 1) & (slots_.size() - 1);
    slots_[i] = node;
  }

  void rehash(std::size_t capacity) {
    slots_.assign(capacity, empty_slot);
    for (std::uint32_t node = 0; node < hashes_.size(); ++node) insert_slot(node);
  }

  const figure_graph* g_;
  const arc_weights* w_;
  const component_graph* cg_;
  height_function ref_;
  std::size_t width_;
  std::vector<offset> pool_;
  std::vector<std::uint64_t> hashes_;
  std::vector<std::uint32_t> slots_;
};

/// Shortest generalised-flip distance between two tilings, by BFS over the
/// flip graph of every brute-force tiling.
inline std::int64_t flip_graph_bfs(const figure& f, const tiling& from, const tiling& to,
                                   std::size_t cell_cap = default_cell_cap) {
  const auto all = brute_enumerate(f, cell_cap);
  const figure_graph g(f);
  const auto eqm = build_equilibrium(g);
  const arc_weights& w = eqm.weights;
  if (!std::binary_search(all.begin(), all.end(), from) ||
      !std::binary_search(all.begin(), all.end(), to))
    throw error(error_code::unreachable, "tiling not found by the oracle");

  std::vector<height_function> heights;
  for (const tiling& t : all) heights.push_back(height_of_tiling(g, w, t));
  std::vector<height_t> lowest(heights.front().values().begin(), heights.front().values().end());
  for (const auto& h : heights)
    for (vertex_id v = 0; v < lowest.size(); ++v) lowest[v] = std::min(lowest[v], h[v]);
  const component_graph cg = forced_components(g, w, heights.front());
  flip_graph fg(g, w, cg, height_function(g.fingerprint(), std::move(lowest)));
  for (const auto& h : heights) fg.add(h);

  const auto src = fg.add(height_of_tiling(g, w, from));
  const auto dst = fg.add(height_of_tiling(g, w, to));
  const auto dist = fg.distances(src);
  if (dist[dst] < 0) throw error(error_code::unreachable);
  return dist[dst];
}

}  // namespace tiler::oracle
