// tiler: command-line front end for domino tilings of figures with holes.
//
// Exit codes: 0 success, 1 untileable figure, 2 usage, file or parse error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tiler/oracle.hpp"
#include "tiler_io.hpp"

using namespace tiler;
using io::json;

namespace {

struct options {
  std::string figure_path;
  std::string first_tiling, second_tiling;
  bool json = false;
  bool path = false;
  std::uint64_t limit = 0;
  std::uint64_t seed = 0;
  std::uint64_t samples = 1;
};

struct context {
  figure_graph g;
  equilibrium eq;

  explicit context(const std::string& path)
      : g(parse_figure(io::read_file(path))), eq(build_equilibrium(g)) {}

  const figure& shape() const { return g.shape(); }
  const arc_weights& w() const { return eq.weights; }
};

[[noreturn]] void untileable() { throw error(error_code::not_tileable); }

void print(const json& j) { std::cout << j.dump() << "\n"; }

std::string component_label(const context& ctx, const component_graph& cg, component_id c) {
  return "U" + std::to_string(c) + " " + io::point_string(ctx.g.vertex(cg[c].representative));
}

int run_check(const options& o) {
  const context ctx(o.figure_path);
  const figure& f = ctx.shape();
  const bool tileable = extremal_solver(ctx.g, ctx.w()).minimal().height.has_value();
  if (o.json) {
    print({{"format", io::json_format},
           {"cells", f.size()},
           {"black", f.black_count()},
           {"white", f.white_count()},
           {"holes", ctx.g.holes().size()},
           {"vertices", ctx.g.vertex_count()},
           {"edges", ctx.g.edge_count()},
           {"tileable", tileable}});
  } else {
    std::cout << "cells: " << f.size() << "\nblack: " << f.black_count()
              << "\nwhite: " << f.white_count() << "\nholes: " << ctx.g.holes().size()
              << "\nvertices: " << ctx.g.vertex_count() << "\nedges: " << ctx.g.edge_count()
              << "\ntileable: " << (tileable ? "yes" : "no") << "\n";
  }
  if (!tileable) untileable();
  return 0;
}

int run_extremal(const options& o, bool minimal) {
  const context ctx(o.figure_path);
  const auto t = minimal ? min_tiling(ctx.g, ctx.w()) : max_tiling(ctx.g, ctx.w());
  if (!t) untileable();
  if (o.json)
    print(io::tiling_json(*t));
  else
    std::cout << io::render_ascii(ctx.shape(), *t);
  return 0;
}

int run_count(const options& o) {
  const context ctx(o.figure_path);
  const std::uint64_t n = count_tilings(ctx.g, ctx.w());
  if (o.json)
    print({{"format", io::json_format}, {"count", n}});
  else
    std::cout << n << "\n";
  return 0;
}

int run_enum(const options& o) {
  const context ctx(o.figure_path);
  tiling_enumerator en(ctx.g, ctx.w());
  if (!en.tileable()) untileable();
  json all = json::array();
  while (o.limit == 0 || en.emitted() < o.limit) {
    const auto t = en.next_tiling();
    if (!t) break;
    if (o.json) {
      all.push_back({{"dominoes", io::dominoes_json(*t)}});
    } else {
      if (en.emitted() > 1) std::cout << "\n";
      std::cout << io::render_ascii(ctx.shape(), *t);
    }
  }
  if (o.json) print({{"format", io::json_format}, {"count", all.size()}, {"tilings", all}});
  return 0;
}

int run_sample(const options& o) {
  const context ctx(o.figure_path);
  std::optional<cftp_sampler> sampler;
  try {
    sampler.emplace(ctx.g, ctx.w());
  } catch (const error& e) {
    if (e.code() == error_code::not_tileable) untileable();
    throw;
  }
  json all = json::array();
  for (std::uint64_t i = 0; i < o.samples; ++i) {
    const std::uint64_t seed = o.seed + i;
    const tiling t = sampler->sample_tiling(seed);
    if (o.json) {
      all.push_back({{"seed", seed}, {"dominoes", io::dominoes_json(t)}});
    } else {
      if (i > 0) std::cout << "\n";
      std::cout << io::render_ascii(ctx.shape(), t);
    }
  }
  if (o.json) print({{"format", io::json_format}, {"samples", all}});
  return 0;
}

int run_dist(const options& o) {
  const context ctx(o.figure_path);
  const auto lo = minimal_height(ctx.g, ctx.w());
  if (!lo.height) untileable();
  const tiling a = validate_tiling(ctx.g, io::parse_tiling_json(io::read_file(o.first_tiling)));
  const tiling b = validate_tiling(ctx.g, io::parse_tiling_json(io::read_file(o.second_tiling)));
  const auto ha = height_of_tiling(ctx.g, ctx.w(), a);
  const auto hb = height_of_tiling(ctx.g, ctx.w(), b);
  const auto cg = forced_components(ctx.g, ctx.w(), *lo.height);
  const height_t d = flip_distance(ha, hb, cg);
  const auto local = local_flip_connected(ctx.g, ha, hb);
  std::vector<flip> path;
  if (o.path) path = flip_path(ctx.g, ctx.w(), cg, ha, hb);

  if (o.json) {
    json j{{"format", io::json_format},
           {"distance", d},
           {"local_flip_connected", local.connected}};
    if (local.connected) j["local_flips"] = local.local_flips;
    if (o.path) {
      json steps = json::array();
      for (const flip& f : path)
        steps.push_back({{"component", f.component},
                         {"direction", io::to_string(f.direction)},
                         {"kind", to_string(cg[f.component].kind)}});
      j["path"] = steps;
    }
    print(j);
    return 0;
  }
  std::cout << "distance: " << d << "\n";
  std::cout << "local-flip connected: " << (local.connected ? "yes" : "no") << "\n";
  if (local.connected) std::cout << "local flips: " << local.local_flips << "\n";
  if (o.path)
    for (const flip& f : path)
      std::cout << io::to_string(f.direction) << " " << component_label(ctx, cg, f.component)
                << " " << to_string(cg[f.component].kind) << "\n";
  return 0;
}

int run_components(const options& o) {
  const context ctx(o.figure_path);
  const auto lo = minimal_height(ctx.g, ctx.w());
  if (!lo.height) untileable();
  const auto cg = forced_components(ctx.g, ctx.w(), *lo.height);
  const orientation orient = to_orientation(ctx.g, ctx.w(), cg, *lo.height);

  if (o.json) {
    json comps = json::array();
    for (component_id c = 0; c < cg.size(); ++c) {
      const grid_vertex& r = ctx.g.vertex(cg[c].representative);
      comps.push_back({{"id", c},
                       {"kind", to_string(cg[c].kind)},
                       {"size", cg[c].vertices.size()},
                       {"representative", {r.x, r.y, r.copy}}});
    }
    json arcs = json::array();
    for (const auto& [from, to] : orient.arcs()) arcs.push_back({from, to});
    print({{"format", io::json_format}, {"components", comps}, {"arcs", arcs}});
    return 0;
  }
  std::cout << "components: " << cg.size() << "\n";
  for (component_id c = 0; c < cg.size(); ++c)
    std::cout << "U" << c << " " << to_string(cg[c].kind) << " size=" << cg[c].vertices.size()
              << " rep=" << io::point_string(ctx.g.vertex(cg[c].representative)) << "\n";
  std::cout << "arcs (minimal tiling):\n";
  for (const auto& [from, to] : orient.arcs()) std::cout << "U" << from << " -> U" << to << "\n";
  return 0;
}

int run_eq(const options& o) {
  const context ctx(o.figure_path);
  const auto& e = ctx.eq;
  if (o.json) {
    json steps = json::array();
    for (const cut_line& line : e.cut_lines)
      steps.push_back({{"hole", line.hole_id},
                       {"start", {line.start.x, line.start.y}},
                       {"step", e.function.step[static_cast<std::size_t>(line.hole_id)]}});
    json arcs = json::array();
    for (arc_id a = 0; a < ctx.g.arc_count(); ++a) {
      if (e.function.eq[a] == 0) continue;
      const grid_vertex& p = ctx.g.vertex(ctx.g.tail(a));
      const grid_vertex& q = ctx.g.vertex(ctx.g.head(a));
      arcs.push_back({{"from", {p.x, p.y}}, {"to", {q.x, q.y}}, {"value", e.function.eq[a]}});
    }
    print({{"format", io::json_format}, {"steps", steps}, {"arcs", arcs}});
    return 0;
  }
  for (const cut_line& line : e.cut_lines)
    std::cout << "hole " << line.hole_id << " at (" << line.start.x << "," << line.start.y
              << "): step " << e.function.step[static_cast<std::size_t>(line.hole_id)] << "\n";
  for (arc_id a = 0; a < ctx.g.arc_count(); ++a) {
    if (e.function.eq[a] == 0) continue;
    std::cout << io::point_string(ctx.g.vertex(ctx.g.tail(a))) << "->"
              << io::point_string(ctx.g.vertex(ctx.g.head(a))) << ": " << e.function.eq[a]
              << "\n";
  }
  return 0;
}

int run_oracle_count(const options& o) {
  const figure f = parse_figure(io::read_file(o.figure_path));
  const std::uint64_t n = oracle::brute_count(f);
  if (o.json)
    print({{"format", io::json_format}, {"count", n}});
  else
    std::cout << n << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Domino tilings of figures with holes"};
  app.require_subcommand(1);
  options o;

  auto figure_arg = [&](CLI::App* sub) {
    sub->add_option("FILE", o.figure_path, "figure file ('#' cells, '.' gaps)")->required();
    sub->add_flag("--json", o.json, "JSON output");
  };

  auto* check = app.add_subcommand("check", "summarise a figure and test tileability");
  auto* min = app.add_subcommand("min", "minimal tiling");
  auto* max = app.add_subcommand("max", "maximal tiling");
  auto* count = app.add_subcommand("count", "number of tilings");
  auto* enumerate = app.add_subcommand("enum", "list tilings in lexicographic order");
  auto* sample = app.add_subcommand("sample", "exact uniform samples");
  auto* dist = app.add_subcommand("dist", "flip distance between two tilings");
  auto* components = app.add_subcommand("components", "forced components");
  auto* eq = app.add_subcommand("eq", "equilibrium function");
  auto* oracle_count = app.add_subcommand("oracle-count", "brute-force count");
  oracle_count->group("");

  for (auto* sub : {check, min, max, count, enumerate, sample, dist, components, eq, oracle_count})
    figure_arg(sub);
  enumerate->add_option("--limit", o.limit, "stop after N tilings");
  sample->add_option("--seed", o.seed, "first seed")->required();
  sample->add_option("-n", o.samples, "number of samples, seeds S, S+1, ...")
      ->check(CLI::PositiveNumber);
  dist->add_option("T1", o.first_tiling, "tiling JSON")->required();
  dist->add_option("T2", o.second_tiling, "tiling JSON")->required();
  dist->add_flag("--path", o.path, "print a shortest flip sequence");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return run_check(o);
    if (min->parsed()) return run_extremal(o, true);
    if (max->parsed()) return run_extremal(o, false);
    if (count->parsed()) return run_count(o);
    if (enumerate->parsed()) return run_enum(o);
    if (sample->parsed()) return run_sample(o);
    if (dist->parsed()) return run_dist(o);
    if (components->parsed()) return run_components(o);
    if (eq->parsed()) return run_eq(o);
    if (oracle_count->parsed()) return run_oracle_count(o);
  } catch (const error& e) {
    if (e.code() == error_code::not_tileable) {
      std::cerr << "untileable\n";
      return 1;
    }
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
