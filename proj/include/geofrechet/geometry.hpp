#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

#include "geofrechet/errors.hpp"

namespace geofrechet {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
inline bool operator!=(const Point& a, const Point& b) { return !(a == b); }
inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, const Point& p) { return {s * p.x, s * p.y}; }

inline double dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline double norm2(const Point& p) { return dot(p, p); }
inline double norm(const Point& p) { return std::sqrt(norm2(p)); }
inline double dist(const Point& a, const Point& b) { return norm(a - b); }
inline Point lerp(const Point& a, const Point& b, double t) {
  if (t == 0.0) return a;  // exact at the endpoints
  if (t == 1.0) return b;
  return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}
inline bool finite(const Point& p) { return std::isfinite(p.x) && std::isfinite(p.y); }

// Sign of the doubled signed area of triangle abc, exact for finite doubles.
// Evaluated in hardware floats with a certified error bound; falls back to
// expansion arithmetic when the bound straddles zero.
double orient_value(const Point& a, const Point& b, const Point& c);
int orient(const Point& a, const Point& b, const Point& c);

// pre: orient(a, b, p) == 0
bool segment_contains_collinear(const Point& a, const Point& b, const Point& p);
bool segments_properly_cross(const Point& a, const Point& b, const Point& c, const Point& d);
bool segments_touch_or_cross(const Point& a, const Point& b, const Point& c, const Point& d);

class PolygonalCurve {
 public:
  explicit PolygonalCurve(std::vector<Point> vertices);

  const std::vector<Point>& vertices() const { return pts_; }
  std::size_t segments() const { return pts_.size() - 1; }
  const Point& front() const { return pts_.front(); }
  const Point& back() const { return pts_.back(); }
  Point point(std::size_t segment, double t) const {
    return lerp(pts_[segment], pts_[segment + 1], t);
  }

 private:
  std::vector<Point> pts_;
};

// Closed, counterclockwise, non-self-intersecting boundary. The constructor
// validates and reorients clockwise input.
class SimplePolygon {
 public:
  explicit SimplePolygon(std::vector<Point> vertices);

  const std::vector<Point>& vertices() const { return pts_; }
  std::size_t size() const { return pts_.size(); }
  double area() const { return area_; }

 private:
  std::vector<Point> pts_;
  double area_ = 0.0;
};

struct Triangulation {
  struct Triangle {
    std::array<int, 3> v;
    // Neighbor across edge (v[e], v[(e+1)%3]); -1 on the polygon boundary.
    std::array<int, 3> neighbor{-1, -1, -1};
  };
  std::vector<Triangle> triangles;
};

// Ear clipping, O(k^2). k-2 triangles whose dual adjacency graph is a tree.
Triangulation triangulate(const SimplePolygon& polygon);

// Index of a triangle containing q (boundary inclusive), nullopt when outside.
std::optional<int> locate(const SimplePolygon& polygon, const Triangulation& tri, const Point& q);

// Whether segment ab stays within the closed polygon.
bool segment_in_polygon(const SimplePolygon& polygon, const Triangulation& tri, const Point& a,
                        const Point& b);

}  // namespace geofrechet
