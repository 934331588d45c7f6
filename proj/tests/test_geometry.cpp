#include <doctest.h>

#include <cmath>

#include "geofrechet/geometry.hpp"
#include "geofrechet/rng.hpp"
#include "geofrechet/synthetic.hpp"
#include "support/fixtures.hpp"

using namespace geofrechet;

TEST_CASE("orient basic signs") {
  CHECK(orient({0, 0}, {1, 0}, {0, 1}) == 1);
  CHECK(orient({0, 0}, {1, 1}, {2, 2}) == 0);
  CHECK(orient({0, 0}, {0, 1}, {1, 0}) == -1);
}

TEST_CASE("orient exact on collinear and near-collinear inputs") {
  // Exactly collinear regardless of scale.
  for (double x : {0.1, 1e-30, 3.5e17, 12.000000000000071}) {
    CHECK(orient({0, 0}, {x, x}, {2 * x, 2 * x}) == 0);
  }
  // One-ulp perturbations must be caught by the exact fallback.
  const double p = 12.000000000000071;
  const double q = std::nextafter(2 * p, 3 * p);
  const int s = orient({0, 0}, {p, p}, {2 * p, q});
  CHECK(s == (q > 2 * p ? 1 : -1));
  CHECK(orient({0, 0}, {p, p}, {q, 2 * p}) == -s);
}

TEST_CASE("orient antisymmetry on random triples") {
  SplitMix64 rng(11);
  for (int it = 0; it < 500; ++it) {
    Point a{rng.next_unit() * 10 - 5, rng.next_unit() * 10 - 5};
    Point b{rng.next_unit() * 10 - 5, rng.next_unit() * 10 - 5};
    Point c{rng.next_unit() * 10 - 5, rng.next_unit() * 10 - 5};
    if (it % 5 == 0) c = lerp(a, b, 0.5);  // force many degeneracies
    CHECK(orient(a, b, c) == -orient(b, a, c));
  }
}

TEST_CASE("polygon validation") {
  SUBCASE("ccw square accepted unchanged") {
    SimplePolygon p(fixtures::unit_square());
    CHECK(p.vertices() == fixtures::unit_square());
    CHECK(p.area() == doctest::Approx(1.0));
  }
  SUBCASE("cw square reversed to ccw") {
    auto cw = fixtures::unit_square();
    std::reverse(cw.begin(), cw.end());
    SimplePolygon p(cw);
    double area2 = 0;
    const auto& v = p.vertices();
    for (std::size_t i = 0; i < v.size(); ++i) area2 += cross(v[i], v[(i + 1) % v.size()]);
    CHECK(area2 > 0);
  }
  SUBCASE("bowtie rejected") {
    CHECK_THROWS_AS(SimplePolygon({{0, 0}, {1, 1}, {1, 0}, {0, 1}}), SelfIntersecting);
  }
  SUBCASE("too few vertices") {
    CHECK_THROWS_AS(SimplePolygon({{0, 0}, {1, 0}}), TooFewVertices);
  }
  SUBCASE("degenerate area") {
    CHECK_THROWS_AS(SimplePolygon({{0, 0}, {1, 1}, {2, 2}}), DegenerateArea);
  }
  SUBCASE("duplicate adjacent vertices") {
    CHECK_THROWS_AS(SimplePolygon({{0, 0}, {0, 0}, {1, 0}, {1, 1}}), SelfIntersecting);
  }
}

TEST_CASE("curve validation") {
  CHECK_THROWS_AS(PolygonalCurve({}), ValidationError);
  CHECK_THROWS_AS(PolygonalCurve({{0, 0}, {0, 0}}), ValidationError);
  CHECK_THROWS_AS(PolygonalCurve({{0, 0}, {1, std::nan("")}}), ValidationError);
  PolygonalCurve single({{2, 3}});
  CHECK(single.segments() == 0);
}

TEST_CASE("triangulation counts and dual tree") {
  SUBCASE("square") {
    SimplePolygon p(fixtures::unit_square());
    CHECK(triangulate(p).triangles.size() == 2);
  }
  SUBCASE("convex 10-gon") {
    SplitMix64 rng(3);
    SimplePolygon p(synthetic::convex_polygon(rng, 10));
    CHECK(triangulate(p).triangles.size() == 8);
  }
  SUBCASE("l-shape dual tree is a path") {
    SimplePolygon p(fixtures::l_shape());
    Triangulation t = triangulate(p);
    REQUIRE(t.triangles.size() == 4);
    int leaves = 0, internal_edges = 0;
    for (const auto& tr : t.triangles) {
      int deg = 0;
      for (int nb : tr.neighbor) {
        if (nb >= 0) {
          ++deg;
          ++internal_edges;
        }
      }
      CHECK(deg <= 2);  // path
      if (deg == 1) ++leaves;
    }
    CHECK(leaves == 2);
    CHECK(internal_edges == 2 * 3);  // 3 diagonals, each counted twice
  }
}

TEST_CASE("triangulation tiles random star polygons") {
  SplitMix64 rng(17);
  for (int it = 0; it < 25; ++it) {
    const int k = 5 + static_cast<int>(rng.next_below(26));
    SimplePolygon p(synthetic::star_polygon(rng, k, 0.3, 1.0));
    Triangulation t = triangulate(p);
    REQUIRE(t.triangles.size() == static_cast<std::size_t>(k - 2));

    double tri_area = 0.0;
    const auto& v = p.vertices();
    std::size_t internal_pairs = 0;
    for (const auto& tr : t.triangles) {
      tri_area += 0.5 * orient_value(v[tr.v[0]], v[tr.v[1]], v[tr.v[2]]);
      for (int nb : tr.neighbor) {
        if (nb >= 0) ++internal_pairs;
      }
    }
    CHECK(tri_area == doctest::Approx(p.area()).epsilon(1e-12));
    CHECK(internal_pairs == 2 * static_cast<std::size_t>(k - 3));  // dual tree edge count
  }
}

TEST_CASE("locate examples") {
  SimplePolygon p(fixtures::unit_square());
  Triangulation t = triangulate(p);
  CHECK(locate(p, t, {0.5, 0.5}).has_value());
  CHECK(!locate(p, t, {2, 2}).has_value());
  CHECK(locate(p, t, {0.5, 0.0}).has_value());  // on an edge
  CHECK(locate(p, t, {1.0, 1.0}).has_value());  // on a vertex
}

TEST_CASE("locate agrees with orientation tests on random points") {
  SplitMix64 rng(29);
  int found = 0;
  for (int it = 0; it < 20; ++it) {
    const int k = 5 + static_cast<int>(rng.next_below(26));
    SimplePolygon p(synthetic::star_polygon(rng, k, 0.3, 1.0));
    Triangulation t = triangulate(p);
    const auto& v = p.vertices();
    for (int s = 0; s < 50; ++s) {
      Point q = synthetic::random_point_inside(rng, p, t);
      auto idx = locate(p, t, q);
      REQUIRE(idx.has_value());
      const auto& tr = t.triangles[*idx].v;
      CHECK(orient(v[tr[0]], v[tr[1]], q) >= 0);
      CHECK(orient(v[tr[1]], v[tr[2]], q) >= 0);
      CHECK(orient(v[tr[2]], v[tr[0]], q) >= 0);
      ++found;
    }
  }
  CHECK(found == 1000);
}

TEST_CASE("segment_in_polygon handles boundary contact") {
  SimplePolygon p(fixtures::l_shape());
  Triangulation t = triangulate(p);
  // Interior segment.
  CHECK(segment_in_polygon(p, t, {0.2, 0.2}, {1.8, 0.8}));
  // Through the reflex corner, staying in the closure.
  CHECK(segment_in_polygon(p, t, {0.5, 1.5}, {1.5, 0.5}));
  // Clips the removed quadrant.
  CHECK(!segment_in_polygon(p, t, {0.5, 1.6}, {1.6, 0.5}));
  // Along a boundary edge.
  CHECK(segment_in_polygon(p, t, {0, 0.5}, {0, 1.5}));
  // Endpoint on the boundary heading inside vs outside.
  CHECK(segment_in_polygon(p, t, {0, 1.5}, {0.8, 0.8}));
  CHECK(!segment_in_polygon(p, t, {0, 1.5}, {-0.5, 1.5}));
}
