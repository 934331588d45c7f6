#include "geofrechet/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

namespace geofrechet {

namespace {

constexpr double kArcMergeTol = 1e-12;

// Dual-tree path between triangles (the dual of a simple-polygon
// triangulation is a tree, so BFS yields the unique path).
std::vector<int> dual_path(const Triangulation& tri, int from, int to) {
  std::vector<int> parent(tri.triangles.size(), -2);
  std::queue<int> q;
  q.push(from);
  parent[from] = -1;
  while (!q.empty()) {
    int t = q.front();
    q.pop();
    if (t == to) break;
    for (int nb : tri.triangles[t].neighbor) {
      if (nb >= 0 && parent[nb] == -2) {
        parent[nb] = t;
        q.push(nb);
      }
    }
  }
  if (parent[to] == -2) throw std::logic_error("disconnected triangulation dual");
  std::vector<int> path;
  for (int t = to; t != -1; t = parent[t]) path.push_back(t);
  std::reverse(path.begin(), path.end());
  return path;
}

// Taut-string walk over the portal sequence. Left/right portal endpoints are
// oriented as seen walking from the source triangle toward the target.
std::vector<Point> string_pull(const std::vector<Point>& left, const std::vector<Point>& right) {
  const int n = static_cast<int>(left.size());
  std::vector<Point> path;
  Point apex = left[0], pl = left[0], pr = right[0];
  int apex_i = 0, left_i = 0, right_i = 0;
  path.push_back(apex);

  long long guard = 4LL * n * n + 16;
  for (int i = 1; i < n; ++i) {
    if (--guard < 0) throw std::logic_error("funnel walk failed to converge");
    const Point& cl = left[i];
    const Point& cr = right[i];

    if (orient(apex, pr, cr) >= 0) {
      if (apex == pr || orient(apex, pl, cr) < 0) {
        pr = cr;
        right_i = i;
      } else {
        // Right crossed over left: the left endpoint becomes the new apex.
        path.push_back(pl);
        apex = pl;
        apex_i = left_i;
        pl = apex;
        pr = apex;
        left_i = apex_i;
        right_i = apex_i;
        i = apex_i;
        continue;
      }
    }
    if (orient(apex, pl, cl) <= 0) {
      if (apex == pl || orient(apex, pr, cl) > 0) {
        pl = cl;
        left_i = i;
      } else {
        path.push_back(pr);
        apex = pr;
        apex_i = right_i;
        pl = apex;
        pr = apex;
        left_i = apex_i;
        right_i = apex_i;
        i = apex_i;
        continue;
      }
    }
  }
  path.push_back(left[n - 1]);

  std::vector<Point> cleaned;
  for (const Point& p : path) {
    if (cleaned.empty() || cleaned.back() != p) cleaned.push_back(p);
  }
  return cleaned;
}

std::vector<double> cumulative_lengths(const std::vector<Point>& pts) {
  std::vector<double> out(pts.size(), 0.0);
  for (std::size_t i = 1; i < pts.size(); ++i) {
    out[i] = out[i - 1] + dist(pts[i - 1], pts[i]);
  }
  return out;
}

}  // namespace

GeodesicPath ShortestPathEngine::shortest_path(const Point& a, const Point& b) const {
  auto ta = locate(*polygon_, *tri_, a);
  if (!ta) throw PointOutsidePolygon("shortest-path source lies outside the polygon");
  auto tb = locate(*polygon_, *tri_, b);
  if (!tb) throw PointOutsidePolygon("shortest-path target lies outside the polygon");

  if (a == b) return {{a}, 0.0};
  if (*ta == *tb) return {{a, b}, dist(a, b)};

  const auto& verts = polygon_->vertices();
  std::vector<int> tris = dual_path(*tri_, *ta, *tb);

  std::vector<Point> left{a}, right{a};
  for (std::size_t s = 0; s + 1 < tris.size(); ++s) {
    const auto& t = tri_->triangles[tris[s]];
    int e = 0;
    while (e < 3 && t.neighbor[e] != tris[s + 1]) ++e;
    if (e == 3) throw std::logic_error("broken dual adjacency");
    // Crossing the CCW-directed edge (u, w): w is on the walker's left.
    left.push_back(verts[t.v[(e + 1) % 3]]);
    right.push_back(verts[t.v[e]]);
  }
  left.push_back(b);
  right.push_back(b);

  GeodesicPath out;
  out.vertices = string_pull(left, right);
  for (std::size_t i = 1; i < out.vertices.size(); ++i) {
    out.length += dist(out.vertices[i - 1], out.vertices[i]);
  }
  return out;
}

Funnel build_funnel(const ShortestPathEngine& engine, const Point& p, const Point& c,
                    const Point& d) {
  Funnel f;
  f.base_c = c;
  f.base_d = d;
  f.left_chain = engine.shortest_path(p, c).vertices;
  f.right_chain = (c == d) ? f.left_chain : engine.shortest_path(p, d).vertices;
  f.left_cumlen = cumulative_lengths(f.left_chain);
  f.right_cumlen = cumulative_lengths(f.right_chain);

  std::size_t i = 0;
  while (i + 1 < f.left_chain.size() && i + 1 < f.right_chain.size() &&
         f.left_chain[i + 1] == f.right_chain[i + 1]) {
    ++i;
  }
  f.apex_index = i;
  f.apex = f.left_chain[i];
  return f;
}

BoundaryDistanceFunction BoundaryDistanceFunction::from_funnel(const Funnel& funnel) {
  BoundaryDistanceFunction f;
  f.c_ = funnel.base_c;
  f.d_ = funnel.base_d;
  const Point e = f.d_ - f.c_;

  const auto& lc = funnel.left_chain;
  const auto& rc = funnel.right_chain;
  const std::size_t ap = funnel.apex_index;
  const std::size_t r = lc.size() - 1;
  const std::size_t s = rc.size() - 1;

  // Parameter where the extension of chain edge prev->v beyond v meets cd.
  // Near-parallel edges and backward hits (possible when a chain grazes the
  // base line) defer to the edge direction: the transition lies beyond the
  // base on the side the edge points to, and the adjacent governors agree on
  // the ambiguous stretch.
  auto ray_hit = [&](const Point& v, const Point& prev) {
    const Point dir = v - prev;
    const double denom = cross(e, dir);
    const double degenerate = dot(dir, e) > 0.0 ? std::numeric_limits<double>::infinity()
                                                : -std::numeric_limits<double>::infinity();
    if (std::fabs(denom) <= 1e-12 * norm(e) * norm(dir)) return degenerate;
    const double t = cross(v - f.c_, dir) / denom;
    const double s = cross(v - f.c_, e) / denom;  // position along the ray
    if (!(s >= 0.0) || !std::isfinite(t)) return degenerate;
    return t;
  };

  // Governing vertices in order of increasing t: the left chain walked back
  // from c to the apex, then the right chain out toward d. The taut path to
  // cd(t) leaves the boundary at the governor; transitions happen where an
  // extended chain edge meets the base.
  std::vector<DistanceArc> arcs;
  std::vector<double> breaks;  // breaks[k] separates arcs[k] and arcs[k+1]
  if (ap < r) {
    for (std::size_t i = r - 1;; --i) {
      arcs.push_back({0.0, 1.0, funnel.left_cumlen[i], lc[i]});
      if (i == ap) break;
      breaks.push_back(ray_hit(lc[i], lc[i - 1]));
    }
  } else {
    arcs.push_back({0.0, 1.0, funnel.left_cumlen[ap], lc[ap]});
  }
  if (s >= 1) {
    for (std::size_t j = ap + 1; j + 1 <= s; ++j) {
      breaks.push_back(ray_hit(rc[j], rc[j - 1]));
      arcs.push_back({0.0, 1.0, funnel.right_cumlen[j], rc[j]});
    }
  }

  // Assign spans (clamped into monotone order), then drop slivers below the
  // merge tolerance and re-glue so the arcs partition [0,1] exactly.
  double prev = 0.0;
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    double hi = (k + 1 < arcs.size()) ? std::clamp(breaks[k], prev, 1.0) : 1.0;
    arcs[k].t_lo = prev;
    arcs[k].t_hi = hi;
    prev = hi;
  }
  std::vector<DistanceArc> kept;
  for (const DistanceArc& a : arcs) {
    if (a.t_hi - a.t_lo >= kArcMergeTol) kept.push_back(a);
  }
  if (kept.empty()) kept.push_back(arcs.front());
  kept.front().t_lo = 0.0;
  for (std::size_t k = 1; k < kept.size(); ++k) kept[k].t_lo = kept[k - 1].t_hi;
  kept.back().t_hi = 1.0;

  f.arcs_ = std::move(kept);
  f.finalize();
  return f;
}

BoundaryDistanceFunction BoundaryDistanceFunction::point_to_segment(const Point& p, const Point& c,
                                                                    const Point& d) {
  BoundaryDistanceFunction f;
  f.c_ = c;
  f.d_ = d;
  f.arcs_.push_back({0.0, 1.0, 0.0, p});
  f.finalize();
  return f;
}

double BoundaryDistanceFunction::arc_value(std::size_t idx, double t) const {
  const DistanceArc& a = arcs_[idx];
  return a.base_len + dist(base_point(t), a.vertex);
}

double BoundaryDistanceFunction::value(double t) const {
  std::size_t lo = 0, hi = arcs_.size() - 1;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (t <= arcs_[mid].t_hi) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return arc_value(lo, t);
}

void BoundaryDistanceFunction::finalize() {
  const Point e = d_ - c_;
  const double e2 = norm2(e);

  auto deriv_sign = [&](std::size_t idx, double t) {
    double sg = dot(e, base_point(t) - arcs_[idx].vertex);
    return (sg > 0.0) - (sg < 0.0);
  };

  // Bitonic: binary search for the first arc no longer decreasing at its end.
  std::size_t lo = 0, hi = arcs_.size() - 1;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (deriv_sign(mid, arcs_[mid].t_hi) < 0) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  min_arc_ = lo;
  const DistanceArc& a = arcs_[lo];
  double t = a.t_lo;
  if (e2 > 0.0) {
    t = std::clamp(dot(e, a.vertex - c_) / e2, a.t_lo, a.t_hi);
  }
  min_t_ = t;
  min_val_ = arc_value(lo, t);
}

std::optional<std::pair<double, double>> BoundaryDistanceFunction::eps_crossings(
    double eps) const {
  if (eps < 0.0) throw NegativeEpsilon("epsilon must be nonnegative");
  if (eps < min_val_) return std::nullopt;
  if (eps == min_val_) return std::make_pair(min_t_, min_t_);

  const Point e = d_ - c_;
  const double e2 = norm2(e);

  // Closed-form crossing of base_len + |cd(t) - v| = eps within one arc;
  // `low_side` picks the root on the decreasing branch.
  auto solve_arc = [&](std::size_t idx, bool low_side) {
    const DistanceArc& a = arcs_[idx];
    const double r = eps - a.base_len;
    if (e2 == 0.0) return low_side ? a.t_lo : a.t_hi;
    const Point w = c_ - a.vertex;
    const double b = 2.0 * dot(w, e);
    const double cc = norm2(w) - r * r;
    double disc = b * b - 4.0 * e2 * cc;
    if (disc < 0.0) disc = 0.0;
    const double sq = std::sqrt(disc);
    double r1, r2;
    if (b >= 0.0) {
      const double q = -0.5 * (b + sq);
      r1 = q / e2;
      r2 = (q != 0.0) ? cc / q : r1;
    } else {
      const double q = -0.5 * (b - sq);
      r2 = q / e2;
      r1 = (q != 0.0) ? cc / q : r2;
    }
    if (r1 > r2) std::swap(r1, r2);
    return std::clamp(low_side ? r1 : r2, a.t_lo, a.t_hi);
  };

  double t1;
  if (value(0.0) <= eps) {
    t1 = 0.0;
  } else {
    // Decreasing region: first arc whose right end dips to eps.
    std::size_t lo = 0, hi = min_arc_;
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      if (arc_value(mid, arcs_[mid].t_hi) <= eps) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    t1 = solve_arc(lo, true);
  }

  double t2;
  if (value(1.0) <= eps) {
    t2 = 1.0;
  } else {
    // Increasing region: last arc whose left end is still below eps.
    std::size_t lo = min_arc_, hi = arcs_.size() - 1;
    while (lo < hi) {
      std::size_t mid = (lo + hi + 1) / 2;
      if (arc_value(mid, arcs_[mid].t_lo) <= eps) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    t2 = solve_arc(lo, false);
  }

  if (t1 > t2) std::swap(t1, t2);
  return std::make_pair(t1, t2);
}

}  // namespace geofrechet
