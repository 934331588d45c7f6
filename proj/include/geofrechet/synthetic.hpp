#pragma once

#include <vector>

#include "geofrechet/geometry.hpp"
#include "geofrechet/rng.hpp"

namespace geofrechet::synthetic {

// k distinct points on a circle (strictly convex, CCW).
std::vector<Point> convex_polygon(SplitMix64& rng, int k, double radius = 1.0);

// Star-shaped polygon: sorted random angles with radii in [rmin, rmax].
std::vector<Point> star_polygon(SplitMix64& rng, int k, double rmin, double rmax);

Point random_point_inside(SplitMix64& rng, const SimplePolygon& polygon, const Triangulation& tri);

// Random walk of `segments` segments, each staying inside the polygon.
std::vector<Point> random_curve_inside(SplitMix64& rng, const SimplePolygon& polygon,
                                       const Triangulation& tri, int segments);

}  // namespace geofrechet::synthetic
