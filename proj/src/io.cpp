#include "geofrechet/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "geofrechet/parallel.hpp"

namespace geofrechet {

namespace {

std::vector<Point> parse_points(const nlohmann::json& arr, const std::string& key) {
  if (!arr.is_array()) throw ParseError("key '" + key + "' must be a list of [x, y] pairs");
  std::vector<Point> pts;
  pts.reserve(arr.size());
  for (const auto& item : arr) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number() || !item[1].is_number()) {
      throw ParseError("key '" + key + "' must contain [x, y] number pairs");
    }
    pts.push_back({item[0].get<double>(), item[1].get<double>()});
  }
  return pts;
}

void append_points(std::string& out, const char* key, const std::vector<Point>& pts) {
  char buf[64];
  out += "  \"";
  out += key;
  out += "\": [";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ", ";
    std::snprintf(buf, sizeof(buf), "[%.17g, %.17g]", pts[i].x, pts[i].y);
    out += buf;
  }
  out += "]";
}

}  // namespace

InstanceFile parse_instance(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid instance file: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("instance file must be a JSON object");

  InstanceFile out;
  for (const auto& [key, value] : doc.items()) {
    if (key == "polygon") {
      out.polygon = parse_points(value, key);
    } else if (key == "curveA") {
      out.curve_a = parse_points(value, key);
    } else if (key == "curveB") {
      out.curve_b = parse_points(value, key);
    } else if (key == "setA") {
      out.set_a = parse_points(value, key);
    } else if (key == "setB") {
      out.set_b = parse_points(value, key);
    } else {
      throw ParseError("unknown instance key '" + key + "'");
    }
  }
  return out;
}

std::string serialize_instance(const InstanceFile& instance) {
  std::string out = "{\n";
  bool first = true;
  auto emit = [&](const char* key, const std::optional<std::vector<Point>>& pts) {
    if (!pts) return;
    if (!first) out += ",\n";
    first = false;
    append_points(out, key, *pts);
  };
  emit("polygon", instance.polygon);
  emit("curveA", instance.curve_a);
  emit("curveB", instance.curve_b);
  emit("setA", instance.set_a);
  emit("setB", instance.set_b);
  out += "\n}\n";
  return out;
}

InstanceFile load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

void check_curve_in_polygon(const SimplePolygon& polygon, const Triangulation& tri,
                            const PolygonalCurve& curve) {
  for (const Point& p : curve.vertices()) {
    if (!locate(polygon, tri, p)) {
      throw PointOutsidePolygon("curve vertex lies outside the polygon");
    }
  }
  for (std::size_t i = 0; i + 1 < curve.vertices().size(); ++i) {
    if (!segment_in_polygon(polygon, tri, curve.vertices()[i], curve.vertices()[i + 1])) {
      throw PointOutsidePolygon("curve segment leaves the polygon");
    }
  }
}

FreeSpaceRaster rasterize_free_space(const std::function<double(const Point&, const Point&)>& dist,
                                     const PolygonalCurve& a, const PolygonalCurve& b, double eps,
                                     std::size_t samples_per_cell) {
  if (eps < 0.0) throw NegativeEpsilon("epsilon must be nonnegative");
  FreeSpaceRaster r;
  r.columns = a.segments();
  r.rows = b.segments();
  r.samples = samples_per_cell;
  r.free.assign(r.width() * r.height(), 0);

  const std::int64_t h = static_cast<std::int64_t>(r.height());
  parallel_for(h, [&](std::int64_t py) {
    const double v = (static_cast<double>(py) + 0.5) / static_cast<double>(r.samples);
    const std::size_t j = std::min(r.rows - 1, static_cast<std::size_t>(v));
    const Point q = b.point(j, v - static_cast<double>(j));
    for (std::size_t px = 0; px < r.width(); ++px) {
      const double u = (static_cast<double>(px) + 0.5) / static_cast<double>(r.samples);
      const std::size_t i = std::min(r.columns - 1, static_cast<std::size_t>(u));
      const Point p = a.point(i, u - static_cast<double>(i));
      r.free[px + r.width() * py] = dist(p, q) <= eps ? 1 : 0;
    }
  });
  return r;
}

std::string render_free_space_svg(const FreeSpaceRaster& raster,
                                  const FreeSpaceBoundaries& boundaries) {
  const std::size_t w = raster.width();
  const std::size_t h = raster.height();
  const double cell = static_cast<double>(raster.samples);
  std::string svg;
  char buf[256];

  std::snprintf(buf, sizeof(buf),
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%zu\" height=\"%zu\" "
                "viewBox=\"0 0 %zu %zu\">\n",
                w, h, w, h);
  svg += buf;
  std::snprintf(buf, sizeof(buf), "<rect x=\"0\" y=\"0\" width=\"%zu\" height=\"%zu\" fill=\"#9aa7b0\"/>\n",
                w, h);
  svg += buf;

  // Free pixels as horizontal run-length rects; the diagram's origin is the
  // bottom-left corner, so rows are flipped for SVG.
  svg += "<g fill=\"#f5f2e8\">\n";
  for (std::size_t py = 0; py < h; ++py) {
    const std::size_t sy = h - 1 - py;
    std::size_t px = 0;
    while (px < w) {
      if (!raster.at(px, py)) {
        ++px;
        continue;
      }
      std::size_t run = px;
      while (run < w && raster.at(run, py)) ++run;
      std::snprintf(buf, sizeof(buf),
                    "<rect class=\"f\" x=\"%zu\" y=\"%zu\" width=\"%zu\" height=\"1\"/>\n", px, sy,
                    run - px);
      svg += buf;
      px = run;
    }
  }
  svg += "</g>\n";

  svg += "<g stroke=\"#3b4248\" stroke-width=\"0.5\">\n";
  for (std::size_t i = 0; i <= raster.columns; ++i) {
    std::snprintf(buf, sizeof(buf), "<line x1=\"%.1f\" y1=\"0\" x2=\"%.1f\" y2=\"%zu\"/>\n",
                  i * cell, i * cell, h);
    svg += buf;
  }
  for (std::size_t j = 0; j <= raster.rows; ++j) {
    std::snprintf(buf, sizeof(buf), "<line x1=\"0\" y1=\"%.1f\" x2=\"%zu\" y2=\"%.1f\"/>\n",
                  j * cell, w, j * cell);
    svg += buf;
  }
  svg += "</g>\n";

  // Tick marks at the free-interval endpoints of every boundary: lower ends
  // in red, upper ends in blue.
  auto tick_v = [&](double x, double y, const char* color) {
    std::snprintf(buf, sizeof(buf),
                  "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"%s\" "
                  "stroke-width=\"1.2\"/>\n",
                  x - 3.0, static_cast<double>(h) - y, x + 3.0, static_cast<double>(h) - y, color);
    svg += buf;
  };
  auto tick_h = [&](double x, double y, const char* color) {
    std::snprintf(buf, sizeof(buf),
                  "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"%s\" "
                  "stroke-width=\"1.2\"/>\n",
                  x, static_cast<double>(h) - (y - 3.0), x, static_cast<double>(h) - (y + 3.0),
                  color);
    svg += buf;
  };
  for (std::size_t j = 0; j < boundaries.rows; ++j) {
    for (std::size_t i = 0; i <= boundaries.columns; ++i) {
      const Interval& iv = boundaries.vertical_at(i, j);
      if (iv.empty()) continue;
      tick_v(i * cell, (j + iv.lo) * cell, "#c0392b");
      tick_v(i * cell, (j + iv.hi) * cell, "#2874a6");
    }
  }
  for (std::size_t j = 0; j <= boundaries.rows; ++j) {
    for (std::size_t i = 0; i < boundaries.columns; ++i) {
      const Interval& iv = boundaries.horizontal_at(i, j);
      if (iv.empty()) continue;
      tick_h((i + iv.lo) * cell, j * cell, "#c0392b");
      tick_h((i + iv.hi) * cell, j * cell, "#2874a6");
    }
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace geofrechet
