#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "geofrechet/freespace.hpp"
#include "geofrechet/redblue.hpp"

namespace geofrechet {

// One endpoint of a boundary's free interval as a function of epsilon.
// The lower endpoint is nonincreasing, the upper nondecreasing; both are
// extended by constants below birth and past saturation.
struct BoundaryCurve {
  enum class End { lower, upper };

  End end = End::lower;
  bool on_vertical = true;  // vertical boundaries form the row families
  std::size_t i = 0;
  std::size_t j = 0;
  double birth = 0.0;    // minimum value of the boundary function
  double birth_t = 0.0;  // interval position at birth
  const BoundaryDistanceFunction* fn = nullptr;

  double eval(double eps) const {
    if (eps <= birth) return birth_t;
    auto c = fn->eps_crossings(eps);
    if (!c) return birth_t;
    return end == End::lower ? c->first : c->second;
  }
};

// Smallest value whose cumulative weight reaches half the total.
// Throws EmptyInput.
double weighted_median(std::span<const double> values, std::span<const double> weights);

// Unique root of lower.eval(eps) - upper.eval(eps) in [lo, hi] by monotone
// bisection (upper end of the final bracket), or nullopt when the difference
// keeps one sign.
std::optional<double> curve_intersection(const BoundaryCurve& lower, const BoundaryCurve& upper,
                                         double lo, double hi, double tol = 1e-12);

struct SlabResolution {
  double alpha = 0.0;
  double beta = 0.0;
  bool immediate = false;  // decide() held at the smallest candidate
  int decide_calls = 0;
};

// Binary search over sorted candidate values: decide(alpha)=false,
// decide(beta)=true with beta the smallest satisfying candidate. The largest
// candidate must satisfy decide().
SlabResolution resolve_sorted_values(std::vector<double> values,
                                     const std::function<bool(double)>& decide_fn);

struct FrechetResult {
  double epsilon_star = 0.0;
  char resolving_kind = 'a';  // critical value type that fixed the result
  int iterations = 0;
  int decision_calls = 0;
};

struct IterationTrace {
  int phase = 0;  // 0 rows, 1 columns
  double alpha = 0.0;
  double beta = 0.0;
  long long kappa_total = 0;
  std::size_t pool_before = 0;  // after insertions, before probes
  std::size_t pool_after = 0;
  double pool_lo = 0.0;
  double pool_hi = 0.0;
};

struct OptimizeOptions {
  std::uint64_t seed = 0;
  double tol = 1e-12;
  std::vector<IterationTrace>* trace = nullptr;
};

FrechetResult frechet_geodesic(const ShortestPathEngine& engine, const PolygonalCurve& a,
                               const PolygonalCurve& b, const OptimizeOptions& options = {});
FrechetResult frechet_euclidean(const PolygonalCurve& a, const PolygonalCurve& b,
                                const OptimizeOptions& options = {});

// Distances between the curves' start points and end points.
std::array<double, 2> type_a_values(const BoundaryField& field);
// Minimum of every cell-boundary distance function (interval births).
std::vector<double> type_b_values(const CachedBoundaryField& field);

}  // namespace geofrechet
