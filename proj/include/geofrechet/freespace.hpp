#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "geofrechet/geodesic.hpp"

namespace geofrechet {

struct Interval {
  double lo = 0.0;
  double hi = -1.0;

  bool empty() const { return !(lo <= hi); }
  bool contains(double t) const { return !empty() && lo <= t && t <= hi; }
  static Interval none() { return {}; }
  static Interval of(double lo, double hi) {
    Interval iv{lo, hi};
    return iv.empty() ? none() : iv;
  }
};

inline bool operator==(const Interval& a, const Interval& b) {
  if (a.empty() || b.empty()) return a.empty() && b.empty();
  return a.lo == b.lo && a.hi == b.hi;
}

enum class CellSide { left, right, bottom, top };

struct CellBoundaryInterval {
  std::size_t i = 0;
  std::size_t j = 0;
  CellSide side = CellSide::left;
  Interval interval;
};

// Supplies the distance function of every free-space cell boundary.
// Vertical boundary (i, j): curve-A vertex i against segment j of B.
// Horizontal boundary (i, j): curve-B vertex j against segment i of A.
class BoundaryField {
 public:
  virtual ~BoundaryField() = default;
  virtual std::size_t columns() const = 0;  // segments of A
  virtual std::size_t rows() const = 0;     // segments of B
  virtual BoundaryDistanceFunction vertical(std::size_t i, std::size_t j) const = 0;
  virtual BoundaryDistanceFunction horizontal(std::size_t i, std::size_t j) const = 0;
  virtual double start_corner_distance() const = 0;  // d(A(0), B(0))
  virtual double end_corner_distance() const = 0;    // d(A(1), B(1))
};

class GeodesicBoundaryField final : public BoundaryField {
 public:
  GeodesicBoundaryField(const ShortestPathEngine& engine, const PolygonalCurve& a,
                        const PolygonalCurve& b)
      : engine_(&engine), a_(&a), b_(&b) {}

  std::size_t columns() const override { return a_->segments(); }
  std::size_t rows() const override { return b_->segments(); }
  BoundaryDistanceFunction vertical(std::size_t i, std::size_t j) const override;
  BoundaryDistanceFunction horizontal(std::size_t i, std::size_t j) const override;
  double start_corner_distance() const override {
    return engine_->distance(a_->front(), b_->front());
  }
  double end_corner_distance() const override { return engine_->distance(a_->back(), b_->back()); }

 private:
  const ShortestPathEngine* engine_;
  const PolygonalCurve* a_;
  const PolygonalCurve* b_;
};

class EuclideanBoundaryField final : public BoundaryField {
 public:
  EuclideanBoundaryField(const PolygonalCurve& a, const PolygonalCurve& b) : a_(&a), b_(&b) {}

  std::size_t columns() const override { return a_->segments(); }
  std::size_t rows() const override { return b_->segments(); }
  BoundaryDistanceFunction vertical(std::size_t i, std::size_t j) const override;
  BoundaryDistanceFunction horizontal(std::size_t i, std::size_t j) const override;
  double start_corner_distance() const override { return dist(a_->front(), b_->front()); }
  double end_corner_distance() const override { return dist(a_->back(), b_->back()); }

 private:
  const PolygonalCurve* a_;
  const PolygonalCurve* b_;
};

// Precomputes every boundary function once (parallel); adjacent cells share
// the stored object. Read-only afterwards, safe for concurrent queries.
class CachedBoundaryField final : public BoundaryField {
 public:
  explicit CachedBoundaryField(const BoundaryField& base);

  std::size_t columns() const override { return columns_; }
  std::size_t rows() const override { return rows_; }
  BoundaryDistanceFunction vertical(std::size_t i, std::size_t j) const override {
    return vertical_ref(i, j);
  }
  BoundaryDistanceFunction horizontal(std::size_t i, std::size_t j) const override {
    return horizontal_ref(i, j);
  }
  const BoundaryDistanceFunction& vertical_ref(std::size_t i, std::size_t j) const {
    return vertical_[i + (columns_ + 1) * j];
  }
  const BoundaryDistanceFunction& horizontal_ref(std::size_t i, std::size_t j) const {
    return horizontal_[i + columns_ * j];
  }
  double start_corner_distance() const override { return start_corner_; }
  double end_corner_distance() const override { return end_corner_; }

 private:
  std::size_t columns_ = 0;
  std::size_t rows_ = 0;
  std::vector<BoundaryDistanceFunction> vertical_;    // (columns+1) * rows
  std::vector<BoundaryDistanceFunction> horizontal_;  // columns * (rows+1)
  double start_corner_ = 0.0;
  double end_corner_ = 0.0;
};

struct FreeSpaceBoundaries {
  std::size_t columns = 0;
  std::size_t rows = 0;
  std::vector<Interval> vertical;    // (columns+1) * rows
  std::vector<Interval> horizontal;  // columns * (rows+1)

  Interval& vertical_at(std::size_t i, std::size_t j) { return vertical[i + (columns + 1) * j]; }
  const Interval& vertical_at(std::size_t i, std::size_t j) const {
    return vertical[i + (columns + 1) * j];
  }
  Interval& horizontal_at(std::size_t i, std::size_t j) { return horizontal[i + columns * j]; }
  const Interval& horizontal_at(std::size_t i, std::size_t j) const {
    return horizontal[i + columns * j];
  }
  const Interval& side(std::size_t i, std::size_t j, CellSide s) const;
  std::vector<CellBoundaryInterval> cell_view() const;
};

// Free space on every cell boundary at the given epsilon.
FreeSpaceBoundaries cell_boundaries(const BoundaryField& field, double eps);

// Monotone reachability propagation through one cell. A right-boundary point
// is reachable iff it is free and at or above the lowest admissible entry;
// symmetric for the top boundary.
std::pair<Interval, Interval> propagate_cell(const Interval& left_reach,
                                             const Interval& bottom_reach,
                                             const Interval& free_left,
                                             const Interval& free_bottom,
                                             const Interval& free_right, const Interval& free_top);

// Monotone-path decision, two live rows of the diagram.
bool decide(const BoundaryField& field, double eps);
// Serial reference that stores the full diagram; kept for tests/benchmarks.
bool decide_reference(const BoundaryField& field, double eps);

bool decide(const ShortestPathEngine& engine, const PolygonalCurve& a, const PolygonalCurve& b,
            double eps);
bool decide_euclidean(const PolygonalCurve& a, const PolygonalCurve& b, double eps);

}  // namespace geofrechet
