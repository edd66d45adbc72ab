#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "corpus.hpp"
#include "tiler/grid_geometry.hpp"

using namespace tiler;
using tiler::testing::corpus;
using tiler::testing::load_figure;

namespace {

vertex_id at(const figure_graph& g, int x, int y, int copy = 0) {
  auto v = g.find_vertex({x, y, copy});
  EXPECT_TRUE(v.has_value()) << x << "," << y << "," << copy;
  return v.value_or(no_vertex);
}

void expect_error(error_code code, auto&& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << to_string(code);
  } catch (const error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

}  // namespace

TEST(ParseFigure, RowsTopFirst) {
  const figure f = parse_figure("##.\n###\n");
  EXPECT_EQ(f.size(), 5u);
  EXPECT_TRUE(f.contains(0, 1));
  EXPECT_TRUE(f.contains(1, 1));
  EXPECT_FALSE(f.contains(2, 1));
  EXPECT_TRUE(f.contains(2, 0));
  EXPECT_EQ(f.width(), 3);
  EXPECT_EQ(f.height(), 2);
}

TEST(ParseFigure, AcceptsCrlf) {
  EXPECT_EQ(parse_figure("##\r\n##\r\n"), parse_figure("##\n##\n"));
}

TEST(ParseFigure, Errors) {
  expect_error(error_code::parse_error, [] { parse_figure("##\n#\n"); });
  expect_error(error_code::parse_error, [] { parse_figure("#x\n"); });
  expect_error(error_code::empty, [] { parse_figure(""); });
  expect_error(error_code::empty, [] { parse_figure("..\n..\n"); });
  expect_error(error_code::not_connected, [] { parse_figure("#.#\n"); });
  expect_error(error_code::not_connected, [] { parse_figure("#.\n.#\n"); });
}

TEST(Figure, ColourCounts) {
  const figure f = parse_figure("###\n.#.\n");
  EXPECT_EQ(f.black_count(), 1u);
  EXPECT_EQ(f.white_count(), 3u);
  EXPECT_TRUE(is_black({0, 0}));
  EXPECT_FALSE(is_black({1, 0}));
  EXPECT_FALSE(is_black({-1, 0}));
  EXPECT_TRUE(is_black({-1, -1}));
}

TEST(FigureGraph, SquareCounts) {
  const figure_graph g(parse_figure("##\n##\n"));
  EXPECT_EQ(g.vertex_count(), 9u);
  EXPECT_EQ(g.edge_count(), 12u);
  EXPECT_EQ(g.arc_count(), 24u);
  EXPECT_EQ(g.vertex(g.base_vertex()), (grid_vertex{0, 0, 0}));
  EXPECT_TRUE(g.on_outer_boundary(g.base_vertex()));
  EXPECT_FALSE(g.on_boundary(at(g, 1, 1)));
  EXPECT_TRUE(g.holes().empty());
}

TEST(FigureGraph, SpinOfUnitMoves) {
  const figure_graph g(parse_figure("##\n##\n"));
  // left of (0,0)->(1,0) is the black cell (0,0)
  EXPECT_EQ(spin(g, {at(g, 0, 0), at(g, 1, 0)}), -1);
  // left of (0,0)->(0,1) is the white cell (-1,0)
  EXPECT_EQ(spin(g, {at(g, 0, 0), at(g, 0, 1)}), 1);
  EXPECT_EQ(spin(g, {at(g, 1, 1), at(g, 1, 2)}), 1);
  EXPECT_EQ(spin(g, {at(g, 1, 2), at(g, 1, 1)}), -1);
  expect_error(error_code::arc_not_in_figure, [&] { spin(g, {at(g, 0, 0), at(g, 1, 1)}); });
}

TEST(FigureGraph, ArcConventions) {
  for (const auto& entry : corpus()) {
    const figure_graph g(load_figure(entry.file));
    for (arc_id a = 0; a < g.arc_count(); ++a) {
      const arc_id r = figure_graph::reverse(a);
      EXPECT_EQ(g.tail(a), g.head(r));
      EXPECT_EQ(g.spin(a), -g.spin(r)) << entry.name;
      EXPECT_EQ(g.left_cell(a), g.right_cell(r));
      const direction d = g.dir(a);
      if (a % 2 == 0) EXPECT_TRUE(d == direction::east || d == direction::north);
      const bool l = g.shape().contains(g.left_cell(a));
      const bool r_in = g.shape().contains(g.right_cell(a));
      EXPECT_TRUE(l || r_in);
      EXPECT_EQ(g.is_boundary(a), !(l && r_in));
    }
  }
}

TEST(FigureGraph, VerticesAreSorted) {
  for (const auto& entry : corpus()) {
    const figure_graph g(load_figure(entry.file));
    const auto vs = g.vertices();
    EXPECT_TRUE(std::is_sorted(vs.begin(), vs.end()));
    EXPECT_EQ(std::adjacent_find(vs.begin(), vs.end()), vs.end());
  }
}

TEST(FigureGraph, PinchIsDuplicated) {
  //  ##..
  //  #.##
  //  #.##
  //  ####
  const figure_graph g(load_figure("pinch.txt"));
  EXPECT_EQ(g.vertex_count(), 24u);
  EXPECT_EQ(g.edge_count(), 35u);
  EXPECT_TRUE(g.holes().empty());
  const vertex_id north = at(g, 2, 3, 0);
  const vertex_id south = at(g, 2, 3, 1);
  EXPECT_NE(north, south);
  EXPECT_EQ(g.corner({1, 3}, 3), north);
  EXPECT_EQ(g.corner({2, 2}, 1), south);
  EXPECT_EQ(g.out_arcs(north).size(), 2u);
  EXPECT_EQ(g.out_arcs(south).size(), 2u);
  EXPECT_FALSE(g.find_vertex({1, 1, 1}).has_value());
}

TEST(FigureGraph, DuplicationOnlyAtPinches) {
  for (const auto& entry : corpus()) {
    const figure_graph g(load_figure(entry.file));
    for (vertex_id v = 0; v < g.vertex_count(); ++v) {
      const auto arcs = g.out_arcs(v);
      if (arcs.size() == 4) {
        const bool all_boundary = std::all_of(arcs.begin(), arcs.end(),
                                              [&](arc_id a) { return g.is_boundary(a); });
        EXPECT_FALSE(all_boundary) << entry.name << " vertex " << v;
      }
      if (g.vertex(v).copy == 1) {
        EXPECT_EQ(arcs.size(), 2u);
      }
    }
  }
}

TEST(FigureGraph, EulerCharacteristic) {
  for (const auto& entry : corpus()) {
    const figure_graph g(load_figure(entry.file));
    const auto v = static_cast<long>(g.vertex_count());
    const auto e = static_cast<long>(g.edge_count());
    const auto faces = static_cast<long>(g.shape().size() + 1 + g.holes().size());
    EXPECT_EQ(v - e + faces, 2) << entry.name;
  }
}

TEST(Holes, RingHasOneHole) {
  const figure_graph g(load_figure("ring_3x3.txt"));
  ASSERT_EQ(g.holes().size(), 1u);
  const hole& h = g.holes()[0];
  EXPECT_EQ(h.cells, (std::vector<cell>{{1, 1}}));
  const cycle expected{at(g, 1, 1), at(g, 1, 2), at(g, 2, 2), at(g, 2, 1), at(g, 1, 1)};
  EXPECT_EQ(h.clockwise_contour, expected);
  EXPECT_LT(signed_area2(g, h.clockwise_contour), 0);
  EXPECT_EQ(g.complement_component({1, 1}), 0);
  EXPECT_EQ(g.complement_component({5, 5}), infinity_component);
  EXPECT_EQ(g.complement_component({0, 0}), figure_component);
  EXPECT_EQ(g.hole_of_vertex(at(g, 2, 2)), 0);
  EXPECT_EQ(g.hole_of_vertex(at(g, 0, 0)), infinity_component);
}

TEST(Holes, NumberedBySmallestCell) {
  const figure_graph g(load_figure("punched_8x8.txt"));
  ASSERT_EQ(g.holes().size(), 2u);
  EXPECT_EQ(g.holes()[0].cells, (std::vector<cell>{{1, 2}}));
  EXPECT_EQ(g.holes()[1].cells, (std::vector<cell>{{6, 2}}));
}

TEST(Holes, DiagonalContactReachesInfinity) {
  const figure_graph g(load_figure("pinch.txt"));
  EXPECT_EQ(g.complement_component({1, 1}), infinity_component);
  EXPECT_EQ(g.complement_component({1, 2}), infinity_component);
}

TEST(Holes, EightConnectedHole) {
  // two hole cells touching at a corner form one hole
  const figure_graph g(parse_figure("#####\n#.###\n##.##\n#####\n"));
  ASSERT_EQ(g.holes().size(), 1u);
  EXPECT_EQ(g.holes()[0].cells.size(), 2u);
}

TEST(Contours, OuterIsClockwiseFromBase) {
  for (const auto& entry : corpus()) {
    const figure_graph g(load_figure(entry.file));
    const cycle& c = g.outer_contour();
    ASSERT_GE(c.size(), 5u);
    EXPECT_EQ(c.front(), g.base_vertex());
    EXPECT_EQ(c.front(), c.back());
    EXPECT_LT(signed_area2(g, c), 0) << entry.name;
    for (arc_id a : cycle_arcs(g, c)) {
      EXPECT_TRUE(g.is_outer_boundary(a));
      EXPECT_TRUE(g.shape().contains(g.right_cell(a)));
    }
  }
}

TEST(Disequilibrium, CellsAndContours) {
  const figure_graph g(load_figure("rect_2x3.txt"));
  EXPECT_EQ(disequilibrium(g, g.cell_cycle({0, 0})), 1);
  EXPECT_EQ(disequilibrium(g, g.cell_cycle({1, 0})), -1);
  EXPECT_EQ(disequilibrium(g, g.outer_contour()), 0);

  const figure_graph t(load_figure("t_tetromino.txt"));
  EXPECT_EQ(disequilibrium(t, t.outer_contour()), -2);
}

TEST(Disequilibrium, Errors) {
  const figure_graph g(load_figure("square_2x2.txt"));
  cycle ccw = g.cell_cycle({0, 0});
  std::reverse(ccw.begin(), ccw.end());
  expect_error(error_code::not_clockwise, [&] { disequilibrium(g, ccw); });
  expect_error(error_code::not_a_cycle, [&] {
    disequilibrium(g, {at(g, 0, 0), at(g, 1, 1), at(g, 0, 0)});
  });
  const vertex_id c = at(g, 1, 1);
  const cycle eight{c, at(g, 1, 2), at(g, 2, 2), at(g, 2, 1), c,
                    at(g, 1, 0), at(g, 0, 0), at(g, 0, 1), c};
  expect_error(error_code::not_elementary, [&] { disequilibrium(g, eight); });
}

TEST(Disequilibrium, SpinIdentityOnSimplyConnectedFigures) {
  // sp(C) = 4 Dis(C) on clockwise cycles when there are no holes
  for (const auto& entry : corpus()) {
    const figure_graph g(load_figure(entry.file));
    for (const cell& c : g.shape().cells())
      EXPECT_EQ(spin_sum(g, g.cell_cycle(c)), 4 * disequilibrium(g, g.cell_cycle(c)));
    if (g.holes().empty())
      EXPECT_EQ(spin_sum(g, g.outer_contour()), 4 * disequilibrium(g, g.outer_contour()))
          << entry.name;
  }
}

TEST(EnclosedCells, RingExcludesHole) {
  const figure_graph g(load_figure("ring_4x4.txt"));
  const auto inside = enclosed_cells(g, g.outer_contour());
  EXPECT_EQ(inside.size(), 12u);
  EXPECT_TRUE(enclosed_cells(g, g.holes()[0].clockwise_contour).empty());
}

TEST(Cells, EdgesBetweenNeighbours) {
  const figure_graph g(load_figure("rect_2x3.txt"));
  const auto e = g.edge_between({0, 0}, {1, 0});
  ASSERT_TRUE(e.has_value());
  EXPECT_EQ(g.edge_cells(*e), (std::pair<cell, cell>{{0, 0}, {1, 0}}));
  const auto v = g.edge_between({1, 1}, {1, 0});
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(g.edge_cells(*v), (std::pair<cell, cell>{{1, 0}, {1, 1}}));
  EXPECT_FALSE(g.edge_between({0, 0}, {1, 1}).has_value());
}
