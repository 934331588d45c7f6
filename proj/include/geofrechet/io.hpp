#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "geofrechet/freespace.hpp"

namespace geofrechet {

// One instance document: object with optional keys `polygon`, `curveA`,
// `curveB`, `setA`, `setB`, each a list of [x, y] pairs.
struct InstanceFile {
  std::optional<std::vector<Point>> polygon;
  std::optional<std::vector<Point>> curve_a;
  std::optional<std::vector<Point>> curve_b;
  std::optional<std::vector<Point>> set_a;
  std::optional<std::vector<Point>> set_b;
};

InstanceFile parse_instance(const std::string& text);
std::string serialize_instance(const InstanceFile& instance);
InstanceFile load_instance_file(const std::string& path);

// Validates curve/set membership in the polygon (vertices inside, curve
// segments fully inside).
void check_curve_in_polygon(const SimplePolygon& polygon, const Triangulation& tri,
                            const PolygonalCurve& curve);

struct FreeSpaceRaster {
  std::size_t columns = 0;   // cells along A
  std::size_t rows = 0;      // cells along B
  std::size_t samples = 64;  // pixels per cell side
  std::vector<std::uint8_t> free;

  std::size_t width() const { return columns * samples; }
  std::size_t height() const { return rows * samples; }
  bool at(std::size_t px, std::size_t py) const { return free[px + width() * py] != 0; }
};

// Pixel-center membership of the free space under the given point metric.
FreeSpaceRaster rasterize_free_space(const std::function<double(const Point&, const Point&)>& dist,
                                     const PolygonalCurve& a, const PolygonalCurve& b, double eps,
                                     std::size_t samples_per_cell = 64);

// SVG with the free pixels as run-length rects, the cell grid, and tick marks
// at the free-interval endpoints of every cell boundary.
std::string render_free_space_svg(const FreeSpaceRaster& raster,
                                  const FreeSpaceBoundaries& boundaries);

}  // namespace geofrechet
