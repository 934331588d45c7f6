#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "geofrechet/geometry.hpp"

namespace geofrechet {

struct GeodesicPath {
  std::vector<Point> vertices;  // source to target; interior corners are polygon vertices
  double length = 0.0;
};

// Shortest paths inside a simple polygon: triangulate once, then per query
// walk the dual-tree sleeve between the endpoint triangles and pull the
// funnel taut. O(k) per query. Queries are pure and safe to run concurrently.
class ShortestPathEngine {
 public:
  ShortestPathEngine(const SimplePolygon& polygon, const Triangulation& tri)
      : polygon_(&polygon), tri_(&tri) {}

  GeodesicPath shortest_path(const Point& a, const Point& b) const;
  double distance(const Point& a, const Point& b) const { return shortest_path(a, b).length; }

  const SimplePolygon& polygon() const { return *polygon_; }
  const Triangulation& triangulation() const { return *tri_; }

 private:
  const SimplePolygon* polygon_;
  const Triangulation* tri_;
};

// All shortest paths from an apex point p to a base segment cd. The chains
// are the full geodesics p..c and p..d; the apex is their last common vertex.
struct Funnel {
  Point apex;
  std::size_t apex_index = 0;
  std::vector<Point> left_chain;     // p .. c
  std::vector<Point> right_chain;    // p .. d
  std::vector<double> left_cumlen;   // geodesic length from p to each chain vertex
  std::vector<double> right_cumlen;
  Point base_c, base_d;
};

Funnel build_funnel(const ShortestPathEngine& engine, const Point& p, const Point& c,
                    const Point& d);

struct DistanceArc {
  double t_lo = 0.0;
  double t_hi = 1.0;
  double base_len = 0.0;  // geodesic length from p to `vertex`
  Point vertex;           // chain vertex governing the arc
};

// Piecewise distance function t -> d(p, cd(t)) along one cell boundary.
// Decreasing-then-increasing; each arc evaluates base_len + |cd(t) - vertex|.
class BoundaryDistanceFunction {
 public:
  BoundaryDistanceFunction() = default;  // empty placeholder, e.g. in caches

  static BoundaryDistanceFunction from_funnel(const Funnel& funnel);
  // Single-arc unobstructed variant (base_len = 0).
  static BoundaryDistanceFunction point_to_segment(const Point& p, const Point& c, const Point& d);

  double value(double t) const;
  // Global minimum (t*, value); binary search over arcs.
  std::pair<double, double> minimum() const { return {min_t_, min_val_}; }
  // The at-most-two parameters with value eps, clamped to [0,1]; nullopt when
  // eps is below the minimum. Throws NegativeEpsilon.
  std::optional<std::pair<double, double>> eps_crossings(double eps) const;

  const std::vector<DistanceArc>& arcs() const { return arcs_; }
  Point base_point(double t) const { return lerp(c_, d_, t); }
  const Point& base_c() const { return c_; }
  const Point& base_d() const { return d_; }

 private:
  void finalize();
  double arc_value(std::size_t idx, double t) const;

  std::vector<DistanceArc> arcs_;
  Point c_, d_;
  double min_t_ = 0.0;
  double min_val_ = 0.0;
  std::size_t min_arc_ = 0;
};

}  // namespace geofrechet
