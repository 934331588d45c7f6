#include <doctest.h>

#include <cmath>

#include "geofrechet/hausdorff.hpp"
#include "geofrechet/optimize.hpp"
#include "support/fixtures.hpp"
#include "support/instances.hpp"
#include "support/oracles.hpp"

using namespace geofrechet;
using testsupport::make_instance;
using testsupport::random_instance;

namespace {

// Lower/upper interval-endpoint curve of an unobstructed point-vs-segment
// boundary; closed forms make the expected crossings checkable by hand.
struct PlaneBoundary {
  BoundaryDistanceFunction f;
  explicit PlaneBoundary(const Point& p)
      : f(BoundaryDistanceFunction::point_to_segment(p, {0, 0}, {1, 0})) {}

  BoundaryCurve curve(BoundaryCurve::End end) const {
    auto [t, v] = f.minimum();
    return {end, true, 0, 0, v, t, &f};
  }
};

double bisect_frechet(const BoundaryField& field, double hi, int steps = 60) {
  return oracles::bisect_decide([&](double eps) { return decide(field, eps); }, 0.0, hi, steps);
}

}  // namespace

TEST_CASE("weighted median") {
  CHECK(weighted_median(std::vector<double>{1, 2, 3}, std::vector<double>{1, 1, 1}) == 2);
  CHECK(weighted_median(std::vector<double>{1, 2}, std::vector<double>{3, 1}) == 1);
  CHECK(weighted_median(std::vector<double>{5}, std::vector<double>{2.5}) == 5);
  CHECK_THROWS_AS(weighted_median(std::vector<double>{}, std::vector<double>{}), EmptyInput);
}

TEST_CASE("type a values") {
  SUBCASE("identical curves") {
    PolygonalCurve a({{0.2, 0.2}, {0.8, 0.6}});
    EuclideanBoundaryField field(a, a);
    auto v = type_a_values(field);
    CHECK(v[0] == 0.0);
    CHECK(v[1] == 0.0);
  }
  SUBCASE("parallel segments") {
    PolygonalCurve a(fixtures::parallel_a()), b(fixtures::parallel_b());
    EuclideanBoundaryField field(a, b);
    auto v = type_a_values(field);
    CHECK(v[0] == doctest::Approx(1.0));
    CHECK(v[1] == doctest::Approx(1.0));
  }
  SUBCASE("l-shape endpoint matches the visibility oracle") {
    auto inst = make_instance(fixtures::l_shape());
    PolygonalCurve a({{0.5, 1.8}, {0.2, 1.2}});
    PolygonalCurve b({{1.8, 0.5}, {0.2, 0.8}});
    GeodesicBoundaryField field(inst->engine, a, b);
    const double expected =
        oracles::visibility_dijkstra(inst->polygon, inst->tri, {0.5, 1.8}, {1.8, 0.5});
    CHECK(type_a_values(field)[0] == doctest::Approx(expected).epsilon(1e-12));
    CHECK(expected == doctest::Approx(2.0 * std::sqrt(0.89)).epsilon(1e-12));
  }
}

TEST_CASE("type b values") {
  SUBCASE("point-vs-segment boundary minimum") {
    PolygonalCurve a({{0, 0}, {0.5, 0.5}});
    PolygonalCurve b({{-1, 1}, {1, 1}});
    EuclideanBoundaryField base(a, b);
    CachedBoundaryField field(base);
    auto values = type_b_values(field);
    // Vertical boundary (0, 0) is the point (0,0) against the segment: min 1.
    CHECK(values[0] == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("identical curves contain zero") {
    PolygonalCurve a({{0.2, 0.2}, {0.8, 0.6}, {0.1, 0.9}});
    EuclideanBoundaryField base(a, a);
    CachedBoundaryField field(base);
    auto values = type_b_values(field);
    CHECK(std::count_if(values.begin(), values.end(), [](double v) { return v == 0.0; }) >= 2);
  }
  SUBCASE("random geodesic instance matches dense sweeps") {
    SplitMix64 rng(111);
    auto inst = random_instance(rng, false, 12, 3);
    GeodesicBoundaryField base(inst->engine, *inst->a, *inst->b);
    CachedBoundaryField field(base);
    auto values = type_b_values(field);
    std::size_t idx = 0;
    for (std::size_t j = 0; j < field.rows(); ++j) {
      for (std::size_t i = 0; i <= field.columns(); ++i, ++idx) {
        const auto& f = field.vertical_ref(i, j);
        double best = f.value(0.0);
        for (int s = 1; s <= 2000; ++s) best = std::min(best, f.value(s / 2000.0));
        CHECK(values[idx] <= best + 1e-12);
        CHECK(values[idx] >= best - 1e-6);
      }
    }
  }
}

TEST_CASE("resolve_sorted_values") {
  SUBCASE("single true value short-circuits") {
    auto r = resolve_sorted_values({1.0}, [](double eps) { return eps >= 1.0; });
    CHECK(r.immediate);
    CHECK(r.beta == 1.0);
  }
  SUBCASE("slab between consecutive candidates") {
    auto r = resolve_sorted_values({0.5, 2.0}, [](double eps) { return eps >= 1.2; });
    CHECK(!r.immediate);
    CHECK(r.alpha == 0.5);
    CHECK(r.beta == 2.0);
  }
  SUBCASE("random candidate lists bracket the threshold") {
    SplitMix64 rng(222);
    for (int it = 0; it < 50; ++it) {
      std::vector<double> values;
      const int n = 2 + static_cast<int>(rng.next_below(30));
      for (int i = 0; i < n; ++i) values.push_back(rng.next_unit() * 10.0);
      const double threshold = values[rng.next_below(values.size())];
      auto r = resolve_sorted_values(values, [&](double eps) { return eps >= threshold; });
      CHECK(r.beta == threshold);
      if (!r.immediate) {
        CHECK(r.alpha < threshold);
      }
    }
  }
  SUBCASE("empty input") {
    CHECK_THROWS_AS(resolve_sorted_values({}, [](double) { return true; }), EmptyInput);
  }
}

TEST_CASE("curve_intersection") {
  SUBCASE("closed-form crossing") {
    PlaneBoundary lower_src({0.8, 1.0});  // lower endpoint falls from 0.8
    PlaneBoundary upper_src({0.2, 1.0});  // upper endpoint rises from 0.2
    auto a = lower_src.curve(BoundaryCurve::End::lower);
    auto b = upper_src.curve(BoundaryCurve::End::upper);
    auto x = curve_intersection(a, b, 1.0, 2.0);
    REQUIRE(x.has_value());
    // 0.8 - sqrt(eps^2-1) = 0.2 + sqrt(eps^2-1)  =>  eps = sqrt(1.09)
    CHECK(*x == doctest::Approx(std::sqrt(1.09)).epsilon(1e-9));
  }
  SUBCASE("no crossing when ordered throughout") {
    PlaneBoundary lower_src({0.1, 1.0});
    PlaneBoundary upper_src({0.5, 1.0});
    auto a = lower_src.curve(BoundaryCurve::End::lower);
    auto b = upper_src.curve(BoundaryCurve::End::upper);
    CHECK(!curve_intersection(a, b, 1.0, 2.0).has_value());
  }
  SUBCASE("geodesic pair agrees with a dense sweep") {
    auto inst = make_instance(fixtures::l_shape());
    PolygonalCurve ca({{0.5, 1.8}, {0.3, 1.2}});
    PolygonalCurve cb({{1.8, 0.5}, {0.3, 0.4}, {0.4, 1.6}});
    GeodesicBoundaryField base(inst->engine, ca, cb);
    CachedBoundaryField field(base);

    const auto& f0 = field.vertical_ref(0, 0);
    const auto& f1 = field.vertical_ref(1, 1);
    BoundaryCurve a{BoundaryCurve::End::lower, true, 0, 0, f0.minimum().second,
                    f0.minimum().first, &f0};
    BoundaryCurve b{BoundaryCurve::End::upper, true, 1, 1, f1.minimum().second,
                    f1.minimum().first, &f1};
    const double lo = std::max(a.birth, b.birth);
    const double hi = lo + 3.0;
    auto x = curve_intersection(a, b, lo, hi);
    if (x) {
      // Locate the sign change independently with a dense sweep.
      const int n = 100000;
      double found = -1.0;
      double prev = a.eval(lo) - b.eval(lo);
      for (int s = 1; s <= n; ++s) {
        const double eps = lo + (hi - lo) * s / n;
        const double cur = a.eval(eps) - b.eval(eps);
        if (prev > 0.0 && cur <= 0.0) {
          found = eps;
          break;
        }
        prev = cur;
      }
      REQUIRE(found >= 0.0);
      CHECK(*x == doctest::Approx(found).epsilon(1e-6));
    }
  }
}

TEST_CASE("frechet_euclidean") {
  SUBCASE("parallel unit-separated segments") {
    PolygonalCurve a(fixtures::parallel_a()), b(fixtures::parallel_b());
    auto r = frechet_euclidean(a, b);
    CHECK(r.epsilon_star == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.resolving_kind == 'a');
  }
  SUBCASE("point against a segment") {
    PolygonalCurve a({{0, 0}});
    PolygonalCurve b({{-1, 1}, {1, 1}});
    auto r = frechet_euclidean(a, b);
    CHECK(r.epsilon_star == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  }
  SUBCASE("random instances match the bisection oracle") {
    SplitMix64 rng(333);
    for (int it = 0; it < 12; ++it) {
      auto inst = random_instance(rng, true, 14, 6, it % 2 == 0);
      EuclideanBoundaryField field(*inst->a, *inst->b);
      const double hi =
          std::max(field.start_corner_distance(), field.end_corner_distance()) + 5.0;
      const double expected = bisect_frechet(field, hi);
      auto r = frechet_euclidean(*inst->a, *inst->b, {.seed = 99u + static_cast<unsigned>(it)});
      CHECK(r.epsilon_star == doctest::Approx(expected).epsilon(1e-9));
    }
  }
}

TEST_CASE("frechet_geodesic") {
  SUBCASE("parallel segments in a convex polygon") {
    auto inst = make_instance(fixtures::big_square());
    PolygonalCurve a(fixtures::parallel_a()), b(fixtures::parallel_b());
    auto r = frechet_geodesic(inst->engine, a, b);
    CHECK(r.epsilon_star == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("convex polygons degenerate to the euclidean result") {
    SplitMix64 rng(444);
    for (int it = 0; it < 6; ++it) {
      auto inst = random_instance(rng, true, 14, 6, it % 2 == 0);
      auto geo = frechet_geodesic(inst->engine, *inst->a, *inst->b, {.seed = 5});
      auto euc = frechet_euclidean(*inst->a, *inst->b, {.seed = 5});
      CHECK(geo.epsilon_star == doctest::Approx(euc.epsilon_star).epsilon(1e-9));
    }
  }
  SUBCASE("u-notch instance matches the bisection oracle") {
    auto inst = make_instance(fixtures::u_shape());
    PolygonalCurve a(fixtures::u_curve_a()), b(fixtures::u_curve_b());
    GeodesicBoundaryField field(inst->engine, a, b);
    const double expected = bisect_frechet(field, 12.0);
    auto r = frechet_geodesic(inst->engine, a, b, {.seed = 3});
    CHECK(std::fabs(r.epsilon_star - expected) <= 1e-7);
  }
  SUBCASE("pinched nonconvex instances match the bisection oracle") {
    SplitMix64 rng(555);
    for (int it = 0; it < 8; ++it) {
      auto inst = random_instance(rng, false, 16, 5, true);
      GeodesicBoundaryField field(inst->engine, *inst->a, *inst->b);
      const double hi =
          std::max(field.start_corner_distance(), field.end_corner_distance()) + 6.0;
      const double expected = bisect_frechet(field, hi);
      auto r = frechet_geodesic(inst->engine, *inst->a, *inst->b, {.seed = 1000u + static_cast<unsigned>(it)});
      CHECK(std::fabs(r.epsilon_star - expected) <= 1e-7);
    }
  }
  SUBCASE("curve outside the polygon is rejected") {
    auto inst = make_instance(fixtures::unit_square());
    PolygonalCurve a({{0.5, 0.5}, {3.0, 0.5}});
    PolygonalCurve b({{0.5, 0.6}, {0.6, 0.6}});
    CHECK_THROWS_AS(frechet_geodesic(inst->engine, a, b), PointOutsidePolygon);
  }
}

TEST_CASE("seed determinism of the full result") {
  SplitMix64 rng(666);
  auto inst = random_instance(rng, false, 14, 5, true);
  auto r1 = frechet_geodesic(inst->engine, *inst->a, *inst->b, {.seed = 12345});
  auto r2 = frechet_geodesic(inst->engine, *inst->a, *inst->b, {.seed = 12345});
  CHECK(r1.epsilon_star == r2.epsilon_star);
  CHECK(r1.resolving_kind == r2.resolving_kind);
  CHECK(r1.iterations == r2.iterations);
  CHECK(r1.decision_calls == r2.decision_calls);

  auto r3 = frechet_geodesic(inst->engine, *inst->a, *inst->b, {.seed = 54321});
  CHECK(r1.epsilon_star == doctest::Approx(r3.epsilon_star).epsilon(1e-9));
}

TEST_CASE("optimization invariants") {
  SplitMix64 rng(777);
  for (int it = 0; it < 6; ++it) {
    auto inst = random_instance(rng, it % 2 == 0, 14, 5, true);
    std::vector<IterationTrace> trace;
    OptimizeOptions options;
    options.seed = 42u + static_cast<unsigned>(it);
    options.trace = &trace;
    auto r = frechet_geodesic(inst->engine, *inst->a, *inst->b, options);

    GeodesicBoundaryField field(inst->engine, *inst->a, *inst->b);

    // Sandwich: at least the endpoint distances, at least the directed
    // Hausdorff distances of dense samples (minus sampling slack).
    auto ta = type_a_values(field);
    CHECK(r.epsilon_star >= ta[0] - 1e-12);
    CHECK(r.epsilon_star >= ta[1] - 1e-12);

    auto sa = oracles::refine_curve(inst->a->vertices(), 20);
    auto sb = oracles::refine_curve(inst->b->vertices(), 20);
    double spacing = 0.0;
    for (std::size_t i = 0; i + 1 < sa.size(); ++i) {
      spacing = std::max(spacing, dist(sa[i], sa[i + 1]));
    }
    for (std::size_t i = 0; i + 1 < sb.size(); ++i) {
      spacing = std::max(spacing, dist(sb[i], sb[i + 1]));
    }
    PointSet psa{sa}, psb{sb};
    const double dh = std::max(directed_hausdorff(inst->engine, psa, psb),
                               directed_hausdorff(inst->engine, psb, psa));
    CHECK(dh <= r.epsilon_star + spacing + 1e-9);

    // Decision soundness around the reported optimum.
    CHECK(decide(field, r.epsilon_star + 1e-5));
    CHECK(!decide(field, r.epsilon_star - 1e-5));

    // Pool discipline: values stay inside the slab and at least half of the
    // pool resolves per iteration.
    for (const auto& t : trace) {
      if (t.pool_after > 0) {
        CHECK(t.pool_lo > t.alpha);
        CHECK(t.pool_hi < t.beta);
      }
      CHECK(t.pool_after <= t.pool_before / 2 + 1);
      CHECK(t.alpha < t.beta);
    }
  }
}
