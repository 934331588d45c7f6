#include "geofrechet/hausdorff.hpp"

#include <algorithm>
#include <limits>

#include "geofrechet/parallel.hpp"

namespace geofrechet {

PointSet PointSet::inside(const ShortestPathEngine& engine, std::vector<Point> points) {
  if (points.empty()) throw EmptyInput("point set must be nonempty");
  for (const Point& p : points) {
    if (!locate(engine.polygon(), engine.triangulation(), p)) {
      throw PointOutsidePolygon("point-set member lies outside the polygon");
    }
  }
  return {std::move(points)};
}

double directed_hausdorff(const ShortestPathEngine& engine, const PointSet& a, const PointSet& b) {
  if (a.points.empty() || b.points.empty()) throw EmptyInput("point set must be nonempty");
  std::vector<double> nearest(a.points.size(), 0.0);
  parallel_for(static_cast<std::int64_t>(a.points.size()), [&](std::int64_t i) {
    double best = std::numeric_limits<double>::infinity();
    for (const Point& q : b.points) {
      best = std::min(best, engine.distance(a.points[i], q));
    }
    nearest[i] = best;
  });
  return *std::max_element(nearest.begin(), nearest.end());
}

double hausdorff(const ShortestPathEngine& engine, const PointSet& a, const PointSet& b) {
  return std::max(directed_hausdorff(engine, a, b), directed_hausdorff(engine, b, a));
}

}  // namespace geofrechet
