#include <gtest/gtest.h>

#include "corpus.hpp"
#include "naive_height.hpp"
#include "tiler/oracle.hpp"
#include "tiler/tiling_core.hpp"

using namespace tiler;
using tiler::testing::corpus;
using tiler::testing::load_figure;

namespace {

vertex_id at(const figure_graph& g, int x, int y) { return *g.find_vertex({x, y, 0}); }

void expect_error(error_code code, auto&& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << to_string(code);
  } catch (const error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

const tiling horizontal_2x2{{{{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}}};
const tiling vertical_2x2{{{{0, 0}, {0, 1}}, {{1, 0}, {1, 1}}}};

}  // namespace

TEST(Domino, OrdersCells) {
  const domino d({1, 0}, {0, 0});
  EXPECT_EQ(d.first, (cell{0, 0}));
  EXPECT_EQ(d.second, (cell{1, 0}));
  EXPECT_TRUE(d.horizontal());
  EXPECT_FALSE(domino({0, 1}, {0, 0}).horizontal());
}

TEST(ValidateTiling, AcceptsAndSorts) {
  const figure_graph g(load_figure("square_2x2.txt"));
  const tiling t = validate_tiling(g, {{{0, 1}, {1, 1}}, {{0, 0}, {1, 0}}});
  EXPECT_EQ(t, horizontal_2x2);
}

TEST(ValidateTiling, Errors) {
  const figure_graph g(load_figure("rect_2x3.txt"));
  expect_error(error_code::not_a_domino, [&] {
    validate_tiling(g, {{{0, 0}, {1, 1}}, {{1, 0}, {2, 0}}, {{0, 1}, {2, 1}}});
  });
  expect_error(error_code::domino_outside_figure, [&] {
    validate_tiling(g, {{{2, 0}, {3, 0}}});
  });
  expect_error(error_code::overlap, [&] {
    validate_tiling(g, {{{0, 0}, {1, 0}}, {{1, 0}, {2, 0}}});
  });
  expect_error(error_code::gap, [&] { validate_tiling(g, {{{0, 0}, {1, 0}}}); });
}

TEST(HeightFunction, SquareByHand) {
  const figure_graph g(load_figure("square_2x2.txt"));
  const auto w = build_equilibrium(g).weights;
  const auto hh = height_of_tiling(g, w, horizontal_2x2);
  const auto hv = height_of_tiling(g, w, vertical_2x2);
  const std::vector<std::tuple<int, int, height_t>> boundary = {
      {0, 0, 0}, {0, 1, 1}, {0, 2, 0}, {1, 2, -1}, {2, 2, 0}, {2, 1, 1}, {2, 0, 0}, {1, 0, -1}};
  for (const auto& [x, y, value] : boundary) {
    EXPECT_EQ(hh[at(g, x, y)], value) << x << "," << y;
    EXPECT_EQ(hv[at(g, x, y)], value) << x << "," << y;
  }
  EXPECT_EQ(hh[at(g, 1, 1)], 2);
  EXPECT_EQ(hv[at(g, 1, 1)], -2);
  EXPECT_EQ(tiling_of_height(g, w, hh), horizontal_2x2);
  EXPECT_EQ(tiling_of_height(g, w, hv), vertical_2x2);
}

TEST(HeightFunction, HeightDifferenceOnAxes) {
  const figure_graph g(load_figure("square_2x2.txt"));
  const auto w = build_equilibrium(g).weights;
  const auto gt = height_difference(g, w, horizontal_2x2);
  const auto chi = axis_mask(g, horizontal_2x2);
  for (arc_id a = 0; a < g.arc_count(); ++a) {
    const height_t expected = chi[figure_graph::edge_of(a)] ? -3 * g.spin(a) : g.spin(a);
    EXPECT_EQ(gt[a], expected);
  }
}

TEST(HeightFunction, MatchesCoordinateIntegration) {
  // independent integrator for simply connected figures
  for (const char* file : {"rect_2x3.txt", "rect_2x4.txt", "rect_3x4.txt", "square_4x4.txt"}) {
    const figure f = load_figure(file);
    const figure_graph g(f);
    const auto w = build_equilibrium(g).weights;
    for (const tiling& t : oracle::brute_enumerate(f)) {
      const auto h = height_of_tiling(g, w, t);
      const auto naive = tiler::testing::naive_heights(f, t);
      ASSERT_EQ(naive.size(), g.vertex_count());
      for (vertex_id v = 0; v < g.vertex_count(); ++v)
        EXPECT_EQ(h[v], naive.at({g.vertex(v).x, g.vertex(v).y})) << file;
    }
  }
}

TEST(HeightFunction, RoundTripOnCorpus) {
  for (const auto& entry : corpus()) {
    const figure f = load_figure(entry.file);
    if (f.size() > 24) continue;
    const figure_graph g(f);
    const auto w = build_equilibrium(g).weights;
    for (const tiling& t : oracle::brute_enumerate(f)) {
      const auto h = height_of_tiling(g, w, t);
      EXPECT_TRUE(is_height_function(g, w, h.values()));
      EXPECT_EQ(tiling_of_height(g, w, h), t) << entry.name;
    }
  }
}

TEST(HeightFunction, PinchRoundTrip) {
  const figure f = load_figure("pinch.txt");
  const figure_graph g(f);
  const auto w = build_equilibrium(g).weights;
  const auto all = oracle::brute_enumerate(f);
  ASSERT_EQ(all.size(), 3u);
  for (const tiling& t : all) EXPECT_EQ(tiling_of_height(g, w, height_of_tiling(g, w, t)), t);
}

TEST(HeightFunction, RingBoundaryIsRigid) {
  const figure f = load_figure("ring_4x4.txt");
  const figure_graph g(f);
  const auto w = build_equilibrium(g).weights;
  const auto all = oracle::brute_enumerate(f);
  ASSERT_EQ(all.size(), 2u);
  const auto a = height_of_tiling(g, w, all[0]);
  const auto b = height_of_tiling(g, w, all[1]);
  for (vertex_id v = 0; v < g.vertex_count(); ++v) {
    if (g.on_outer_boundary(v)) EXPECT_EQ(a[v], b[v]);
    EXPECT_EQ((a[v] - b[v]) % 4, 0);
  }
}

TEST(HeightFunction, Rejections) {
  const figure_graph g(load_figure("square_2x2.txt"));
  const auto w = build_equilibrium(g).weights;
  const auto h = height_of_tiling(g, w, horizontal_2x2);
  std::vector<height_t> bad(h.values().begin(), h.values().end());
  bad[at(g, 1, 1)] = 0;
  EXPECT_FALSE(is_height_function(g, w, bad));
  EXPECT_FALSE(is_height_function(g, w, std::vector<height_t>(3, 0)));
  std::vector<height_t> shifted(h.values().begin(), h.values().end());
  for (auto& x : shifted) x += 4;
  EXPECT_FALSE(is_height_function(g, w, shifted));

  expect_error(error_code::not_a_height_function, [&] {
    tiling_of_height(g, w, height_function(g.fingerprint(), bad));
  });
  expect_error(error_code::not_a_height_function, [&] {
    tiling_of_height(g, w, height_function(g.fingerprint() + 1,
                                           {h.values().begin(), h.values().end()}));
  });

  const figure_graph other(load_figure("rect_2x3.txt"));
  expect_error(error_code::different_figures, [&] {
    require_same_figure(h, height_function(other.fingerprint(), std::vector<height_t>(12, 0)));
  });
}
