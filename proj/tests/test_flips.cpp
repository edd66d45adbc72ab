#include <gtest/gtest.h>

#include "corpus.hpp"
#include "tiler/flips.hpp"
#include "tiler/oracle.hpp"

using namespace tiler;
using tiler::testing::load_figure;

namespace {

struct fixture {
  figure f;
  figure_graph g;
  arc_weights w;
  std::vector<height_function> heights;
  component_graph cg;

  explicit fixture(const std::string& file)
      : f(load_figure(file)), g(f), w(build_equilibrium(g).weights) {
    for (const tiling& t : oracle::brute_enumerate(f)) heights.push_back(height_of_tiling(g, w, t));
    cg = forced_components(g, w, heights.front());
  }
};

void expect_error(error_code code, auto&& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << to_string(code);
  } catch (const error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

}  // namespace

TEST(Flips, SquareRotation) {
  const fixture fx("square_2x2.txt");
  const auto lo = *minimal_height(fx.g, fx.w).height;
  const auto hi = *maximal_height(fx.g, fx.w).height;
  EXPECT_EQ(available_flips(fx.g, fx.w, fx.cg, lo),
            (std::vector<flip>{{1, flip_direction::up}}));
  EXPECT_EQ(available_flips(fx.g, fx.w, fx.cg, hi),
            (std::vector<flip>{{1, flip_direction::down}}));
  EXPECT_EQ(apply_flip(fx.g, fx.w, fx.cg, lo, {1, flip_direction::up}), hi);
  EXPECT_EQ(apply_flip(fx.g, fx.w, fx.cg, hi, {1, flip_direction::down}), lo);
  expect_error(error_code::flip_not_available,
               [&] { apply_flip(fx.g, fx.w, fx.cg, lo, {1, flip_direction::down}); });
  EXPECT_FALSE(can_flip(fx.g, fx.w, fx.cg, lo.values(), {0, flip_direction::up}));
  EXPECT_FALSE(can_flip(fx.g, fx.w, fx.cg, lo.values(), {7, flip_direction::up}));
}

TEST(Flips, HoleFlipOnRing) {
  const fixture fx("ring_4x4.txt");
  ASSERT_EQ(fx.heights.size(), 2u);
  ASSERT_EQ(fx.cg.size(), 2u);
  ASSERT_EQ(fx.cg[1].kind, component_kind::hole);
  const auto lo = *minimal_height(fx.g, fx.w).height;
  const auto hi = *maximal_height(fx.g, fx.w).height;
  EXPECT_EQ(apply_flip(fx.g, fx.w, fx.cg, lo, {1, flip_direction::up}), hi);
  EXPECT_EQ(flip_distance(lo, hi, fx.cg), 1);
  const auto local = local_flip_connected(fx.g, lo, hi);
  EXPECT_FALSE(local.connected);
  // the two tilings differ on the hole contour
  bool differs = false;
  for (vertex_id v : fx.g.holes()[0].clockwise_contour) differs |= lo[v] != hi[v];
  EXPECT_TRUE(differs);
}

TEST(Flips, AppliedFlipsStayHeightFunctions) {
  for (const char* file : {"square_4x4.txt", "ring_3x3.txt", "pinch.txt", "rect_3x4.txt"}) {
    const fixture fx(file);
    for (const auto& h : fx.heights)
      for (const flip& f : available_flips(fx.g, fx.w, fx.cg, h)) {
        const auto next = apply_flip(fx.g, fx.w, fx.cg, h, f);
        EXPECT_TRUE(is_height_function(fx.g, fx.w, next.values())) << file;
        EXPECT_EQ(flip_distance(h, next, fx.cg), 1);
        const flip back{f.component, f.direction == flip_direction::up ? flip_direction::down
                                                                        : flip_direction::up};
        EXPECT_TRUE(can_flip(fx.g, fx.w, fx.cg, next.values(), back));
      }
  }
}

TEST(Flips, PathReplaysWithDistanceSteps) {
  for (const char* file : {"square_4x4.txt", "ring_4x4.txt", "rect_3x4.txt", "pinch.txt"}) {
    const fixture fx(file);
    for (const auto& a : fx.heights)
      for (const auto& b : fx.heights) {
        const auto path = flip_path(fx.g, fx.w, fx.cg, a, b);
        EXPECT_EQ(static_cast<height_t>(path.size()), flip_distance(a, b, fx.cg));
        height_function cur = a;
        for (const flip& f : path) cur = apply_flip(fx.g, fx.w, fx.cg, cur, f);
        EXPECT_EQ(cur, b) << file;
      }
  }
}

TEST(Flips, LocalFlipsOnSimplyConnectedFigures) {
  const fixture fx("square_4x4.txt");
  for (const auto& a : fx.heights)
    for (const auto& b : fx.heights) {
      const auto r = local_flip_connected(fx.g, a, b);
      EXPECT_TRUE(r.connected);
      EXPECT_EQ(r.local_flips, flip_distance(a, b, fx.cg));
    }
}

TEST(Flips, DistanceIsAMetric) {
  const fixture fx("rect_3x4.txt");
  for (const auto& a : fx.heights)
    for (const auto& b : fx.heights) {
      EXPECT_EQ(flip_distance(a, b, fx.cg), flip_distance(b, a, fx.cg));
      EXPECT_EQ(flip_distance(a, b, fx.cg) == 0, a == b);
      for (const auto& c : fx.heights)
        EXPECT_LE(flip_distance(a, c, fx.cg),
                  flip_distance(a, b, fx.cg) + flip_distance(b, c, fx.cg));
    }
}
