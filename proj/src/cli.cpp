#include "geofrechet/cli.hpp"

#include <cstdio>
#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "geofrechet/hausdorff.hpp"
#include "geofrechet/io.hpp"
#include "geofrechet/optimize.hpp"

namespace geofrechet {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

struct GeodesicContext {
  SimplePolygon polygon;
  Triangulation tri;
  ShortestPathEngine engine;

  explicit GeodesicContext(std::vector<Point> pts)
      : polygon(std::move(pts)), tri(triangulate(polygon)), engine(polygon, tri) {}
};

struct LoadedInstance {
  InstanceFile file;
  std::optional<GeodesicContext> geo;
  std::optional<PolygonalCurve> curve_a, curve_b;
};

LoadedInstance load(const std::string& path, bool need_curves, bool euclidean, std::ostream& err) {
  LoadedInstance inst;
  inst.file = load_instance_file(path);
  if (inst.file.polygon) {
    if (euclidean) {
      err << "warning: --euclidean ignores the polygon in '" << path << "'\n";
    } else {
      inst.geo.emplace(*inst.file.polygon);
    }
  }
  if (need_curves) {
    if (!inst.file.curve_a || !inst.file.curve_b) {
      throw ValidationError("instance needs both curveA and curveB");
    }
    inst.curve_a.emplace(*inst.file.curve_a);
    inst.curve_b.emplace(*inst.file.curve_b);
    if (inst.geo) {
      check_curve_in_polygon(inst.geo->polygon, inst.geo->tri, *inst.curve_a);
      check_curve_in_polygon(inst.geo->polygon, inst.geo->tri, *inst.curve_b);
    }
  }
  return inst;
}

Point parse_xy(const std::string& s) {
  Point p;
  char extra;
  if (std::sscanf(s.c_str(), "%lf,%lf %c", &p.x, &p.y, &extra) != 2 || !finite(p)) {
    throw ValidationError("expected a coordinate pair 'x,y', got '" + s + "'");
  }
  return p;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Frechet and Hausdorff distances inside simple polygons"};
  app.require_subcommand(1);

  std::string file;
  double epsilon = 0.0;
  std::uint64_t seed = 0;
  double tol = 1e-12;
  bool euclidean = false;
  std::string out_path;
  std::string from_str, to_str;

  auto* cmd_decide = app.add_subcommand("decide", "Is the Frechet distance at most epsilon?");
  cmd_decide->add_option("--epsilon", epsilon, "leash length")->required();
  cmd_decide->add_flag("--euclidean", euclidean, "ignore the polygon, use plane distances");
  cmd_decide->add_option("file", file, "instance file")->required();

  auto* cmd_frechet = app.add_subcommand("frechet", "Compute the Frechet distance");
  cmd_frechet->add_flag("--euclidean", euclidean, "ignore the polygon, use plane distances");
  cmd_frechet->add_option("--seed", seed, "random seed");
  cmd_frechet->add_option("--tol", tol, "root tolerance for curve intersections");
  cmd_frechet->add_option("file", file, "instance file")->required();

  auto* cmd_hausdorff = app.add_subcommand("hausdorff", "Geodesic Hausdorff distance of setA/setB");
  cmd_hausdorff->add_option("file", file, "instance file")->required();

  auto* cmd_sp = app.add_subcommand("shortest-path", "Geodesic shortest path inside the polygon");
  cmd_sp->add_option("--from", from_str, "source point x,y")->required();
  cmd_sp->add_option("--to", to_str, "target point x,y")->required();
  cmd_sp->add_option("file", file, "instance file")->required();

  auto* cmd_plot = app.add_subcommand("plot-fsd", "Render the free-space diagram as SVG");
  cmd_plot->add_option("--epsilon", epsilon, "leash length")->required();
  cmd_plot->add_option("--out", out_path, "output SVG path")->required();
  cmd_plot->add_flag("--euclidean", euclidean, "ignore the polygon, use plane distances");
  cmd_plot->add_option("file", file, "instance file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  if (cmd_decide->parsed()) {
    LoadedInstance inst = load(file, true, euclidean, err);
    bool result;
    if (inst.geo) {
      result = decide(inst.geo->engine, *inst.curve_a, *inst.curve_b, epsilon);
    } else {
      result = decide_euclidean(*inst.curve_a, *inst.curve_b, epsilon);
    }
    out << "{\"decision\": " << (result ? "true" : "false") << "}\n";
    return 0;
  }

  if (cmd_frechet->parsed()) {
    LoadedInstance inst = load(file, true, euclidean, err);
    OptimizeOptions options;
    options.seed = seed;
    options.tol = tol;
    FrechetResult r = inst.geo ? frechet_geodesic(inst.geo->engine, *inst.curve_a, *inst.curve_b,
                                                  options)
                               : frechet_euclidean(*inst.curve_a, *inst.curve_b, options);
    out << "{\"epsilon_star\": " << fmt(r.epsilon_star) << ", \"iterations\": " << r.iterations
        << ", \"decision_calls\": " << r.decision_calls << "}\n";
    return 0;
  }

  if (cmd_hausdorff->parsed()) {
    LoadedInstance inst = load(file, false, false, err);
    if (!inst.geo) throw ValidationError("hausdorff needs a polygon");
    if (!inst.file.set_a || !inst.file.set_b) throw ValidationError("hausdorff needs setA and setB");
    PointSet a = PointSet::inside(inst.geo->engine, *inst.file.set_a);
    PointSet b = PointSet::inside(inst.geo->engine, *inst.file.set_b);
    const double ab = directed_hausdorff(inst.geo->engine, a, b);
    const double ba = directed_hausdorff(inst.geo->engine, b, a);
    out << "{\"hausdorff\": " << fmt(std::max(ab, ba)) << ", \"directed_ab\": " << fmt(ab)
        << ", \"directed_ba\": " << fmt(ba) << "}\n";
    return 0;
  }

  if (cmd_sp->parsed()) {
    LoadedInstance inst = load(file, false, false, err);
    if (!inst.geo) throw ValidationError("shortest-path needs a polygon");
    GeodesicPath path = inst.geo->engine.shortest_path(parse_xy(from_str), parse_xy(to_str));
    out << "{\"length\": " << fmt(path.length) << ", \"path\": [";
    for (std::size_t i = 0; i < path.vertices.size(); ++i) {
      if (i) out << ", ";
      out << "[" << fmt(path.vertices[i].x) << ", " << fmt(path.vertices[i].y) << "]";
    }
    out << "]}\n";
    return 0;
  }

  if (cmd_plot->parsed()) {
    LoadedInstance inst = load(file, true, euclidean, err);
    std::function<double(const Point&, const Point&)> metric;
    if (inst.geo) {
      metric = [&inst](const Point& p, const Point& q) { return inst.geo->engine.distance(p, q); };
    } else {
      metric = [](const Point& p, const Point& q) { return dist(p, q); };
    }
    FreeSpaceRaster raster = rasterize_free_space(metric, *inst.curve_a, *inst.curve_b, epsilon);
    FreeSpaceBoundaries boundaries;
    if (inst.geo) {
      GeodesicBoundaryField field(inst.geo->engine, *inst.curve_a, *inst.curve_b);
      boundaries = cell_boundaries(field, epsilon);
    } else {
      EuclideanBoundaryField field(*inst.curve_a, *inst.curve_b);
      boundaries = cell_boundaries(field, epsilon);
    }
    std::ofstream svg(out_path);
    if (!svg) throw ValidationError("cannot open output file '" + out_path + "'");
    svg << render_free_space_svg(raster, boundaries);
    return 0;
  }

  err << "no subcommand given\n";
  return 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const NonTermination& e) {
    err << "internal guard: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace geofrechet
