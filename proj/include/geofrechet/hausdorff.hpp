#pragma once

#include <vector>

#include "geofrechet/geodesic.hpp"

namespace geofrechet {

struct PointSet {
  std::vector<Point> points;

  // Validates: nonempty, every point inside (or on) the polygon.
  static PointSet inside(const ShortestPathEngine& engine, std::vector<Point> points);
};

// sup over a in A of inf over b in B of the geodesic distance; brute force
// over all pairs, pairwise queries run in parallel.
double directed_hausdorff(const ShortestPathEngine& engine, const PointSet& a, const PointSet& b);

double hausdorff(const ShortestPathEngine& engine, const PointSet& a, const PointSet& b);

}  // namespace geofrechet
