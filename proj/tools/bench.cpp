// Benchmark: parallel kernels against their serial counterparts on a
// synthetic instance (star polygon, random inside walks).

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "geofrechet/freespace.hpp"
#include "geofrechet/hausdorff.hpp"
#include "geofrechet/optimize.hpp"
#include "geofrechet/synthetic.hpp"

using namespace geofrechet;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <typename Fn>
double time_call(Fn&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  return seconds_since(t0);
}

void set_threads(int n) {
#ifdef _OPENMP
  omp_set_num_threads(n);
#else
  (void)n;
#endif
}

}  // namespace

int main(int argc, char** argv) {
  int k = 128;
  int n = 64;
  if (argc > 1) k = std::stoi(argv[1]);
  if (argc > 2) n = std::stoi(argv[2]);

  SplitMix64 rng(4242);
  SimplePolygon polygon(synthetic::star_polygon(rng, k, 4.0, 10.0));
  Triangulation tri = triangulate(polygon);
  ShortestPathEngine engine(polygon, tri);
  PolygonalCurve a(synthetic::random_curve_inside(rng, polygon, tri, n));
  PolygonalCurve b(synthetic::random_curve_inside(rng, polygon, tri, n));
  GeodesicBoundaryField field(engine, a, b);

  int max_threads = 1;
#ifdef _OPENMP
  max_threads = omp_get_max_threads();
#endif
  std::printf("instance: k=%d polygon vertices, N=%d segments per curve, %d threads\n", k, n,
              max_threads);

  const double eps = 0.5 * (field.start_corner_distance() + field.end_corner_distance()) + 1.0;

  bool ref_result = false, par_result = false;
  const double t_ref = time_call([&] { ref_result = decide_reference(field, eps); });
  const double t_par = time_call([&] { par_result = decide(field, eps); });
  std::printf("decide(eps=%.3f): reference %.3fs, parallel %.3fs (speedup %.2fx), agree=%s\n", eps,
              t_ref, t_par, t_ref / t_par, ref_result == par_result ? "yes" : "NO");

  set_threads(1);
  const double t_cache1 = time_call([&] { CachedBoundaryField c(field); });
  set_threads(max_threads);
  const double t_cachep = time_call([&] { CachedBoundaryField c(field); });
  std::printf("boundary cache build: 1 thread %.3fs, %d threads %.3fs (speedup %.2fx)\n", t_cache1,
              max_threads, t_cachep, t_cache1 / t_cachep);

  std::vector<Point> pa, pb;
  for (int i = 0; i < 160; ++i) {
    pa.push_back(synthetic::random_point_inside(rng, polygon, tri));
    pb.push_back(synthetic::random_point_inside(rng, polygon, tri));
  }
  PointSet sa = PointSet::inside(engine, pa);
  PointSet sb = PointSet::inside(engine, pb);
  set_threads(1);
  double h1 = 0.0, hp = 0.0;
  const double t_h1 = time_call([&] { h1 = hausdorff(engine, sa, sb); });
  set_threads(max_threads);
  const double t_hp = time_call([&] { hp = hausdorff(engine, sa, sb); });
  std::printf("hausdorff(160 x 160): 1 thread %.3fs, %d threads %.3fs (speedup %.2fx), agree=%s\n",
              t_h1, max_threads, t_hp, t_h1 / t_hp, h1 == hp ? "yes" : "NO");

  FrechetResult r{};
  const double t_opt = time_call([&] { r = frechet_geodesic(engine, a, b, {.seed = 7}); });
  std::printf("frechet_geodesic: %.3fs (eps*=%.9g, %d iterations, %d decision calls)\n", t_opt,
              r.epsilon_star, r.iterations, r.decision_calls);
  return 0;
}
