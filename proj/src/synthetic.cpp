#include "geofrechet/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace geofrechet::synthetic {

namespace {

// Jittered regular angles: gaps stay in [0.2, 1.8] * 2*pi/k, so every chord
// remains inside its angular wedge and the polygon is simple.
std::vector<double> sorted_angles(SplitMix64& rng, int k) {
  if (k < 4) throw std::logic_error("need at least 4 vertices for jittered angles");
  std::vector<double> angles(k);
  for (int i = 0; i < k; ++i) {
    angles[i] = 2.0 * M_PI * (i + 0.1 + 0.8 * rng.next_unit()) / k;
  }
  return angles;
}

}  // namespace

std::vector<Point> convex_polygon(SplitMix64& rng, int k, double radius) {
  auto angles = sorted_angles(rng, k);
  std::vector<Point> pts(k);
  for (int i = 0; i < k; ++i) {
    pts[i] = {radius * std::cos(angles[i]), radius * std::sin(angles[i])};
  }
  return pts;
}

std::vector<Point> star_polygon(SplitMix64& rng, int k, double rmin, double rmax) {
  auto angles = sorted_angles(rng, k);
  std::vector<Point> pts(k);
  for (int i = 0; i < k; ++i) {
    double r = rmin + (rmax - rmin) * rng.next_unit();
    pts[i] = {r * std::cos(angles[i]), r * std::sin(angles[i])};
  }
  return pts;
}

Point random_point_inside(SplitMix64& rng, const SimplePolygon& polygon, const Triangulation& tri) {
  double xmin = polygon.vertices()[0].x, xmax = xmin;
  double ymin = polygon.vertices()[0].y, ymax = ymin;
  for (const Point& p : polygon.vertices()) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  for (int tries = 0; tries < 100000; ++tries) {
    Point q{xmin + (xmax - xmin) * rng.next_unit(), ymin + (ymax - ymin) * rng.next_unit()};
    if (locate(polygon, tri, q)) return q;
  }
  throw std::logic_error("rejection sampling failed to find an interior point");
}

std::vector<Point> random_curve_inside(SplitMix64& rng, const SimplePolygon& polygon,
                                       const Triangulation& tri, int segments) {
  const double scale = std::sqrt(polygon.area());
  std::vector<Point> pts{random_point_inside(rng, polygon, tri)};
  double step = 0.6 * scale;
  while (static_cast<int>(pts.size()) <= segments) {
    bool placed = false;
    for (int tries = 0; tries < 200; ++tries) {
      const double ang = 2.0 * M_PI * rng.next_unit();
      const double len = step * (0.2 + 0.8 * rng.next_unit());
      Point cand = pts.back() + Point{len * std::cos(ang), len * std::sin(ang)};
      if (cand == pts.back()) continue;
      if (segment_in_polygon(polygon, tri, pts.back(), cand)) {
        pts.push_back(cand);
        placed = true;
        break;
      }
    }
    if (!placed) {
      step *= 0.5;
      if (step < 1e-9 * scale) throw std::logic_error("curve walk got stuck");
    }
  }
  return pts;
}

}  // namespace geofrechet::synthetic
