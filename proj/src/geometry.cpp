#include "geofrechet/geometry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace geofrechet {

bool segment_contains_collinear(const Point& a, const Point& b, const Point& p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

bool segments_properly_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
  int d1 = orient(c, d, a);
  int d2 = orient(c, d, b);
  int d3 = orient(a, b, c);
  int d4 = orient(a, b, d);
  return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
}

bool segments_touch_or_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
  if (segments_properly_cross(a, b, c, d)) return true;
  if (orient(c, d, a) == 0 && segment_contains_collinear(c, d, a)) return true;
  if (orient(c, d, b) == 0 && segment_contains_collinear(c, d, b)) return true;
  if (orient(a, b, c) == 0 && segment_contains_collinear(a, b, c)) return true;
  if (orient(a, b, d) == 0 && segment_contains_collinear(a, b, d)) return true;
  return false;
}

PolygonalCurve::PolygonalCurve(std::vector<Point> vertices) : pts_(std::move(vertices)) {
  if (pts_.empty()) throw ValidationError("curve needs at least one vertex");
  for (const Point& p : pts_) {
    if (!finite(p)) throw ValidationError("curve vertex is not finite");
  }
  for (std::size_t i = 0; i + 1 < pts_.size(); ++i) {
    if (pts_[i] == pts_[i + 1]) throw ValidationError("consecutive duplicate curve vertices");
  }
}

SimplePolygon::SimplePolygon(std::vector<Point> vertices) : pts_(std::move(vertices)) {
  const std::size_t n = pts_.size();
  if (n < 3) throw TooFewVertices("polygon needs at least three vertices");
  for (const Point& p : pts_) {
    if (!finite(p)) throw ValidationError("polygon vertex is not finite");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (pts_[i] == pts_[(i + 1) % n]) throw SelfIntersecting("zero-length polygon edge");
  }

  bool all_collinear = true;
  for (std::size_t i = 2; i < n && all_collinear; ++i) {
    all_collinear = orient(pts_[0], pts_[1], pts_[i]) == 0;
  }
  if (all_collinear) throw DegenerateArea("polygon has zero signed area");

  // O(k^2) simplicity check with exact predicates.
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = pts_[i];
    const Point& b = pts_[(i + 1) % n];
    for (std::size_t j = i + 1; j < n; ++j) {
      const Point& c = pts_[j];
      const Point& d = pts_[(j + 1) % n];
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) {
        const Point& shared = (j == i + 1) ? b : a;
        const Point& tip_i = (j == i + 1) ? a : b;
        const Point& tip_j = (j == i + 1) ? d : c;
        if (orient(shared, tip_i, tip_j) == 0 && dot(tip_i - shared, tip_j - shared) > 0.0) {
          throw SelfIntersecting("adjacent polygon edges overlap");
        }
      } else if (segments_touch_or_cross(a, b, c, d)) {
        throw SelfIntersecting("non-adjacent polygon edges intersect");
      }
    }
  }

  double area2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) area2 += cross(pts_[i], pts_[(i + 1) % n]);
  if (area2 == 0.0) throw DegenerateArea("polygon has zero signed area");
  if (area2 < 0.0) {
    std::reverse(pts_.begin(), pts_.end());
    area2 = -area2;
  }
  area_ = 0.5 * area2;
}

Triangulation triangulate(const SimplePolygon& polygon) {
  const auto& v = polygon.vertices();
  const int n = static_cast<int>(v.size());

  std::vector<int> next(n), prev(n);
  for (int i = 0; i < n; ++i) {
    next[i] = (i + 1) % n;
    prev[i] = (i + n - 1) % n;
  }

  std::vector<std::array<int, 3>> tris;
  tris.reserve(n - 2);

  auto is_ear = [&](int b) {
    int a = prev[b], c = next[b];
    if (orient(v[a], v[b], v[c]) <= 0) return false;
    for (int w = next[c]; w != a; w = next[w]) {
      if (orient(v[a], v[b], v[w]) >= 0 && orient(v[b], v[c], v[w]) >= 0 &&
          orient(v[c], v[a], v[w]) >= 0) {
        return false;
      }
    }
    return true;
  };

  auto clip = [&](int b) {
    tris.push_back({prev[b], b, next[b]});
    next[prev[b]] = next[b];
    prev[next[b]] = prev[b];
    return prev[b];
  };

  int remaining = n;
  int cur = 0;
  while (remaining > 3) {
    bool clipped = false;
    int scan = cur;
    for (int k = 0; k < remaining; ++k, scan = next[scan]) {
      if (is_ear(scan)) {
        cur = clip(scan);
        --remaining;
        clipped = true;
        break;
      }
    }
    if (!clipped) {
      // Only reachable with collinear boundary vertices; emit the degenerate
      // sliver so the triangle count stays k-2.
      int s = cur;
      bool done = false;
      for (int k = 0; k < remaining; ++k, s = next[s]) {
        if (orient(v[prev[s]], v[s], v[next[s]]) == 0) {
          cur = clip(s);
          --remaining;
          done = true;
          break;
        }
      }
      if (!done) throw std::logic_error("ear clipping found no ear in a simple polygon");
    }
  }
  {
    int a = cur, b = next[cur], c = next[next[cur]];
    if (orient(v[a], v[b], v[c]) < 0) std::swap(b, c);
    tris.push_back({a, b, c});
  }

  Triangulation out;
  out.triangles.resize(tris.size());
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> edges;
  for (std::size_t t = 0; t < tris.size(); ++t) {
    out.triangles[t].v = tris[t];
    for (int e = 0; e < 3; ++e) {
      int u = tris[t][e], w = tris[t][(e + 1) % 3];
      edges[{std::min(u, w), std::max(u, w)}].push_back({static_cast<int>(t), e});
    }
  }
  for (const auto& [key, users] : edges) {
    if (users.size() == 2) {
      out.triangles[users[0].first].neighbor[users[0].second] = users[1].first;
      out.triangles[users[1].first].neighbor[users[1].second] = users[0].first;
    }
  }
  return out;
}

std::optional<int> locate(const SimplePolygon& polygon, const Triangulation& tri, const Point& q) {
  const auto& v = polygon.vertices();
  for (std::size_t t = 0; t < tri.triangles.size(); ++t) {
    const auto& tv = tri.triangles[t].v;
    const Point& a = v[tv[0]];
    const Point& b = v[tv[1]];
    const Point& c = v[tv[2]];
    if (orient(a, b, c) > 0) {
      if (orient(a, b, q) >= 0 && orient(b, c, q) >= 0 && orient(c, a, q) >= 0) {
        return static_cast<int>(t);
      }
    } else {
      // Degenerate sliver: containment means lying on one of its edges.
      if ((orient(a, b, q) == 0 && segment_contains_collinear(a, b, q)) ||
          (orient(b, c, q) == 0 && segment_contains_collinear(b, c, q)) ||
          (orient(c, a, q) == 0 && segment_contains_collinear(c, a, q))) {
        return static_cast<int>(t);
      }
    }
  }
  return std::nullopt;
}

namespace {

// Whether moving from polygon vertex `idx` toward `toward` stays in the
// closed polygon locally (interior wedge test with exact orientation).
bool into_closure_at_vertex(const std::vector<Point>& v, std::size_t idx, const Point& toward) {
  const std::size_t n = v.size();
  const Point& u = v[(idx + n - 1) % n];
  const Point& w = v[(idx + 1) % n];
  const Point& p = v[idx];
  int a = orient(u, p, toward);
  int b = orient(p, w, toward);
  int conv = orient(u, p, w);
  if (conv > 0) return a >= 0 && b >= 0;
  if (conv < 0) return a >= 0 || b >= 0;
  return a >= 0;
}

}  // namespace

bool segment_in_polygon(const SimplePolygon& polygon, const Triangulation& tri, const Point& a,
                        const Point& b) {
  if (!locate(polygon, tri, a) || !locate(polygon, tri, b)) return false;
  if (a == b) return true;

  const auto& v = polygon.vertices();
  const std::size_t n = v.size();

  for (std::size_t i = 0; i < n; ++i) {
    if (segments_properly_cross(a, b, v[i], v[(i + 1) % n])) return false;
  }

  // Grazing a vertex must not slip outside through the reflex gap.
  for (std::size_t i = 0; i < n; ++i) {
    const Point& p = v[i];
    if (p == a || p == b) continue;
    if (orient(a, b, p) == 0 && segment_contains_collinear(a, b, p)) {
      if (!into_closure_at_vertex(v, i, a) || !into_closure_at_vertex(v, i, b)) return false;
    }
  }

  auto endpoint_ok = [&](const Point& e, const Point& other) {
    for (std::size_t i = 0; i < n; ++i) {
      if (v[i] == e) return into_closure_at_vertex(v, i, other);
    }
    for (std::size_t i = 0; i < n; ++i) {
      const Point& u = v[i];
      const Point& w = v[(i + 1) % n];
      if (orient(u, w, e) == 0 && segment_contains_collinear(u, w, e)) {
        return orient(u, w, other) >= 0;
      }
    }
    return true;  // strictly interior
  };
  return endpoint_ok(a, b) && endpoint_ok(b, a);
}

}  // namespace geofrechet
