#pragma once

// Exhaustive generation of tilings in lexicographic order over forced
// components, and exact uniform sampling by coupling from the past.

#include <cstdint>
#include <optional>
#include <vector>

#include "tiler/equilibrium.hpp"
#include "tiler/flips.hpp"
#include "tiler/forced_components.hpp"
#include "tiler/lattice_order.hpp"

namespace tiler {

/// T <_lex T' compares heights component by component in the order
/// U_1, ..., U_q (non-infinity components by representative).
inline bool lex_less(const component_graph& cg, const height_function& a,
                     const height_function& b) {
  for (component_id c = 1; c < cg.size(); ++c) {
    const vertex_id r = cg[c].representative;
    if (a[r] != b[r]) return a[r] < b[r];
  }
  return false;
}

/// Streams every tiling, starting at the minimal one, in strictly
/// increasing lexicographic order. The successor of h is the minimal height
/// function equal to h on U_1..U_{i-1} and to h + 4 on U_i, where i is the
/// last component admitting an up flip.
class tiling_enumerator {
 public:
  tiling_enumerator(const figure_graph& g, const arc_weights& w)
      : g_(&g), w_(&w), solver_(g, w) {
    auto first = solver_.minimal();
    if (!first.height) return;
    min_ = std::move(*first.height);
    components_.emplace(forced_components(g, w, min_));
  }

  bool tileable() const noexcept { return components_.has_value(); }

  const component_graph& components() const {
    if (!components_) throw error(error_code::not_tileable);
    return *components_;
  }

  const height_function& minimum() const {
    if (!components_) throw error(error_code::not_tileable);
    return min_;
  }

  std::optional<height_function> next() {
    if (done_ || !components_) {
      done_ = true;
      return std::nullopt;
    }
    if (!current_) {
      current_ = min_;
      ++emitted_;
      return current_;
    }
    const component_graph& cg = *components_;
    const auto h = current_->values();
    component_id last = 0;
    for (component_id c = static_cast<component_id>(cg.size()) - 1; c >= 1; --c)
      if (can_flip(*g_, *w_, cg, h, {c, flip_direction::up})) {
        last = c;
        break;
      }
    if (last == 0) {
      done_ = true;
      return std::nullopt;
    }
    pins_.clear();
    for (component_id c = 1; c <= last; ++c) {
      const height_t shift = c == last ? 4 : 0;
      for (vertex_id v : cg[c].vertices) pins_.push_back({v, h[v] + shift});
    }
    auto r = solver_.minimal(pins_, min_.values());
    if (!r.height)
      throw error(error_code::inconsistent_cycle, "successor construction failed");
    current_ = std::move(r.height);
    ++emitted_;
    return current_;
  }

  std::optional<tiling> next_tiling() {
    auto h = next();
    if (!h) return std::nullopt;
    return tiling_of_height(*g_, *w_, *h);
  }

  std::uint64_t emitted() const noexcept { return emitted_; }

 private:
  const figure_graph* g_;
  const arc_weights* w_;
  extremal_solver solver_;
  height_function min_;
  std::optional<component_graph> components_;
  std::optional<height_function> current_;
  std::vector<pin> pins_;
  std::uint64_t emitted_ = 0;
  bool done_ = false;
};

/// Calls visit(const height_function&) for every tiling in lex order until it
/// returns false. Returns the number visited; 0 for untileable figures.
template <class Visit>
std::uint64_t enumerate(const figure_graph& g, const arc_weights& w, Visit&& visit) {
  tiling_enumerator en(g, w);
  while (auto h = en.next())
    if (!visit(*h)) break;
  return en.emitted();
}

inline std::uint64_t count_tilings(const figure_graph& g, const arc_weights& w) {
  return enumerate(g, w, [](const height_function&) { return true; });
}

/// Counter-based update source: the update used at time -t depends only on
/// (seed, t), so every restart of the coupling replays the same past.
class random_plan {
 public:
  random_plan(std::uint64_t seed, std::size_t flippable_components)
      : seed_(seed), choices_(2 * static_cast<std::uint64_t>(flippable_components)) {}

  /// Update at time -t (t >= 1): a uniform (component, direction) pair over
  /// the non-infinity components.
  flip update(std::uint64_t t) const {
    const std::uint64_t k = uniform(t, choices_);
    return {static_cast<component_id>(1 + k / 2),
            (k & 1u) ? flip_direction::down : flip_direction::up};
  }

  static std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

 private:
  // Unbiased value in [0, range) by rejection over a keyed stream.
  std::uint64_t uniform(std::uint64_t t, std::uint64_t range) const {
    const std::uint64_t limit = range == 0 ? 0 : (~std::uint64_t{0} - range + 1) % range;
    for (std::uint64_t k = 0;; ++k) {
      const std::uint64_t r = splitmix64(splitmix64(seed_ ^ splitmix64(t)) + k);
      if (r >= limit) return r % range;
    }
  }

  std::uint64_t seed_;
  std::uint64_t choices_;
};

struct cftp_options {
  bool verify_sandwich = false;  // check lower <= upper after every update
  std::uint64_t max_window = std::uint64_t{1} << 32;
};

struct cftp_result {
  height_function height;
  std::uint64_t window = 0;  // length of the coalescing window
};

/// Twin chains from the minimal and maximal tilings, run over windows
/// [-1, 0), [-2, 0), [-4, 0), ... until they meet at time 0.
class cftp_sampler {
 public:
  cftp_sampler(const figure_graph& g, const arc_weights& w) : g_(&g), w_(&w) {
    extremal_solver solver(g, w);
    auto lo = solver.minimal();
    auto hi = solver.maximal();
    if (!lo.height || !hi.height) throw error(error_code::not_tileable);
    min_ = std::move(*lo.height);
    max_ = std::move(*hi.height);
    components_.emplace(forced_components(g, w, min_));
  }

  const component_graph& components() const noexcept { return *components_; }

  cftp_result sample(std::uint64_t seed, const cftp_options& options = {}) const {
    const component_graph& cg = *components_;
    if (cg.size() <= 1) return {min_, 0};
    const random_plan plan(seed, cg.size() - 1);
    std::vector<height_t> lower, upper;
    for (std::uint64_t window = 1;; window *= 2) {
      if (window > options.max_window) throw error(error_code::window_cap_exceeded);
      lower.assign(min_.values().begin(), min_.values().end());
      upper.assign(max_.values().begin(), max_.values().end());
      for (std::uint64_t t = window; t >= 1; --t) {
        const flip f = plan.update(t);
        if (can_flip(*g_, *w_, cg, lower, f)) apply_flip_in_place(cg, lower, f);
        if (can_flip(*g_, *w_, cg, upper, f)) apply_flip_in_place(cg, upper, f);
        if (options.verify_sandwich)
          for (std::size_t v = 0; v < lower.size(); ++v)
            if (lower[v] > upper[v]) throw error(error_code::sandwich_violated);
      }
      if (lower == upper) return {height_function(min_.fingerprint(), std::move(lower)), window};
    }
  }

  tiling sample_tiling(std::uint64_t seed) const {
    return tiling_of_height(*g_, *w_, sample(seed).height);
  }

 private:
  const figure_graph* g_;
  const arc_weights* w_;
  height_function min_, max_;
  std::optional<component_graph> components_;
};

inline tiling sample_uniform(const figure_graph& g, const arc_weights& w,
                             std::uint64_t seed) {
  return cftp_sampler(g, w).sample_tiling(seed);
}

}  // namespace tiler
