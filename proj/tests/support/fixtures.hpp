#pragma once

// Named instances shared by the unit and acceptance suites.

#include <vector>

#include "geofrechet/geometry.hpp"

namespace geofrechet::fixtures {

inline std::vector<Point> unit_square() {
  return {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
}

inline std::vector<Point> big_square() {
  return {{-1, -1}, {2, -1}, {2, 2}, {-1, 2}};
}

// Square minus the x>1, y>1 quadrant; reflex corner at (1,1).
inline std::vector<Point> l_shape() {
  return {{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}};
}

// Two towers joined by a bottom slab; notch between (1,1) and (4,1) forces
// leashes across the top to dip through the slab.
inline std::vector<Point> u_shape() {
  return {{0, 0}, {5, 0}, {5, 3}, {4, 3}, {4, 1}, {1, 1}, {1, 3}, {0, 3}};
}

// Parallel unit-separated segments inside a convex square.
inline std::vector<Point> parallel_a() {
  return {{0, 0}, {1, 0}};
}
inline std::vector<Point> parallel_b() {
  return {{0, 1}, {1, 1}};
}

// Curves on the two towers of the U; the leash must wrap the notch.
inline std::vector<Point> u_curve_a() {
  return {{0.5, 2.5}, {0.5, 0.5}, {2.5, 0.5}};
}
inline std::vector<Point> u_curve_b() {
  return {{4.5, 2.5}, {4.5, 0.5}, {2.5, 0.7}};
}

}  // namespace geofrechet::fixtures
