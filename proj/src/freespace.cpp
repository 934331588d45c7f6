#include "geofrechet/freespace.hpp"

#include <algorithm>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace geofrechet {

namespace {

constexpr double kParamTol = 1e-12;

Interval crossings_to_interval(const BoundaryDistanceFunction& f, double eps) {
  auto c = f.eps_crossings(eps);
  if (!c) return Interval::none();
  return Interval::of(c->first, c->second);
}

bool reaches_top(const Interval& iv) { return !iv.empty() && iv.hi >= 1.0 - kParamTol; }
bool starts_at_bottom(const Interval& iv) { return !iv.empty() && iv.lo <= kParamTol; }

}  // namespace

BoundaryDistanceFunction GeodesicBoundaryField::vertical(std::size_t i, std::size_t j) const {
  const Point& p = a_->vertices()[i];
  return BoundaryDistanceFunction::from_funnel(
      build_funnel(*engine_, p, b_->vertices()[j], b_->vertices()[j + 1]));
}

BoundaryDistanceFunction GeodesicBoundaryField::horizontal(std::size_t i, std::size_t j) const {
  const Point& p = b_->vertices()[j];
  return BoundaryDistanceFunction::from_funnel(
      build_funnel(*engine_, p, a_->vertices()[i], a_->vertices()[i + 1]));
}

BoundaryDistanceFunction EuclideanBoundaryField::vertical(std::size_t i, std::size_t j) const {
  return BoundaryDistanceFunction::point_to_segment(a_->vertices()[i], b_->vertices()[j],
                                                    b_->vertices()[j + 1]);
}

BoundaryDistanceFunction EuclideanBoundaryField::horizontal(std::size_t i, std::size_t j) const {
  return BoundaryDistanceFunction::point_to_segment(b_->vertices()[j], a_->vertices()[i],
                                                    a_->vertices()[i + 1]);
}

CachedBoundaryField::CachedBoundaryField(const BoundaryField& base)
    : columns_(base.columns()),
      rows_(base.rows()),
      start_corner_(base.start_corner_distance()),
      end_corner_(base.end_corner_distance()) {
  vertical_.resize((columns_ + 1) * rows_);
  horizontal_.resize(columns_ * (rows_ + 1));
  const std::int64_t nv = static_cast<std::int64_t>(vertical_.size());
  const std::int64_t nh = static_cast<std::int64_t>(horizontal_.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t idx = 0; idx < nv; ++idx) {
    const std::size_t i = idx % (columns_ + 1);
    const std::size_t j = idx / (columns_ + 1);
    vertical_[idx] = base.vertical(i, j);
  }
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t idx = 0; idx < nh; ++idx) {
    const std::size_t i = idx % columns_;
    const std::size_t j = idx / columns_;
    horizontal_[idx] = base.horizontal(i, j);
  }
}

const Interval& FreeSpaceBoundaries::side(std::size_t i, std::size_t j, CellSide s) const {
  switch (s) {
    case CellSide::left:
      return vertical_at(i, j);
    case CellSide::right:
      return vertical_at(i + 1, j);
    case CellSide::bottom:
      return horizontal_at(i, j);
    case CellSide::top:
    default:
      return horizontal_at(i, j + 1);
  }
}

std::vector<CellBoundaryInterval> FreeSpaceBoundaries::cell_view() const {
  std::vector<CellBoundaryInterval> out;
  out.reserve(4 * columns * rows);
  for (std::size_t j = 0; j < rows; ++j) {
    for (std::size_t i = 0; i < columns; ++i) {
      for (CellSide s : {CellSide::left, CellSide::right, CellSide::bottom, CellSide::top}) {
        out.push_back({i, j, s, side(i, j, s)});
      }
    }
  }
  return out;
}

FreeSpaceBoundaries cell_boundaries(const BoundaryField& field, double eps) {
  if (eps < 0.0) throw NegativeEpsilon("epsilon must be nonnegative");
  FreeSpaceBoundaries out;
  out.columns = field.columns();
  out.rows = field.rows();
  out.vertical.resize((out.columns + 1) * out.rows);
  out.horizontal.resize(out.columns * (out.rows + 1));
  const std::int64_t nv = static_cast<std::int64_t>(out.vertical.size());
  const std::int64_t nh = static_cast<std::int64_t>(out.horizontal.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t idx = 0; idx < nv; ++idx) {
    const std::size_t i = idx % (out.columns + 1);
    const std::size_t j = idx / (out.columns + 1);
    out.vertical[idx] = crossings_to_interval(field.vertical(i, j), eps);
  }
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t idx = 0; idx < nh; ++idx) {
    const std::size_t i = idx % out.columns;
    const std::size_t j = idx / out.columns;
    out.horizontal[idx] = crossings_to_interval(field.horizontal(i, j), eps);
  }
  return out;
}

std::pair<Interval, Interval> propagate_cell(const Interval& left_reach,
                                             const Interval& bottom_reach,
                                             const Interval& /*free_left*/,
                                             const Interval& /*free_bottom*/,
                                             const Interval& free_right,
                                             const Interval& free_top) {
  Interval right = Interval::none();
  Interval top = Interval::none();
  if (!bottom_reach.empty()) {
    right = free_right;
  } else if (!left_reach.empty()) {
    right = Interval::of(std::max(free_right.lo, left_reach.lo), free_right.hi);
    if (free_right.empty()) right = Interval::none();
  }
  if (!left_reach.empty()) {
    top = free_top;
  } else if (!bottom_reach.empty()) {
    top = Interval::of(std::max(free_top.lo, bottom_reach.lo), free_top.hi);
    if (free_top.empty()) top = Interval::none();
  }
  return {right, top};
}

namespace {

// Degenerate curves (a single vertex on one side) have no cells; the decision
// reduces to whole-boundary freeness along the remaining axis.
bool decide_degenerate(const BoundaryField& field, double eps) {
  const std::size_t na = field.columns();
  const std::size_t nb = field.rows();
  if (na == 0 && nb == 0) return true;  // corner distances already checked
  if (na == 0) {
    for (std::size_t j = 0; j < nb; ++j) {
      auto c = field.vertical(0, j).eps_crossings(eps);
      if (!c || c->first > kParamTol || c->second < 1.0 - kParamTol) return false;
    }
    return true;
  }
  for (std::size_t i = 0; i < na; ++i) {
    auto c = field.horizontal(i, 0).eps_crossings(eps);
    if (!c || c->first > kParamTol || c->second < 1.0 - kParamTol) return false;
  }
  return true;
}

}  // namespace

bool decide(const BoundaryField& field, double eps) {
  if (eps < 0.0) throw NegativeEpsilon("epsilon must be nonnegative");
  if (field.start_corner_distance() > eps) return false;
  if (field.end_corner_distance() > eps) return false;

  const std::size_t na = field.columns();
  const std::size_t nb = field.rows();
  if (na == 0 || nb == 0) return decide_degenerate(field, eps);

  const std::int64_t cols = static_cast<std::int64_t>(na);

  // Two live rows: free intervals for the current row, reach intervals for
  // the current bottoms plus the growing left-edge chain.
  std::vector<Interval> bottom_free(na), top_free(na), vert_free(na + 1);
  std::vector<Interval> bottom_reach(na), top_reach(na);

#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t i = 0; i < cols; ++i) {
    bottom_free[i] = crossings_to_interval(field.horizontal(i, 0), eps);
  }
  bottom_reach[0] = starts_at_bottom(bottom_free[0]) ? bottom_free[0] : Interval::none();
  for (std::size_t i = 1; i < na; ++i) {
    bottom_reach[i] = (reaches_top(bottom_reach[i - 1]) && starts_at_bottom(bottom_free[i]))
                          ? bottom_free[i]
                          : Interval::none();
  }

  bool left_chain_alive = true;
  Interval last_right = Interval::none();
  for (std::size_t j = 0; j < nb; ++j) {
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t i = 0; i <= cols; ++i) {
      vert_free[i] = crossings_to_interval(field.vertical(i, j), eps);
    }
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t i = 0; i < cols; ++i) {
      top_free[i] = crossings_to_interval(field.horizontal(i, j + 1), eps);
    }

    Interval left_reach =
        (left_chain_alive && starts_at_bottom(vert_free[0])) ? vert_free[0] : Interval::none();
    left_chain_alive = reaches_top(left_reach);

    for (std::size_t i = 0; i < na; ++i) {
      auto [right, top] = propagate_cell(left_reach, bottom_reach[i], vert_free[i], bottom_free[i],
                                         vert_free[i + 1], top_free[i]);
      top_reach[i] = top;
      left_reach = right;
    }
    last_right = left_reach;
    bottom_reach.swap(top_reach);
    bottom_free.swap(top_free);
  }
  return reaches_top(last_right) || reaches_top(bottom_reach[na - 1]);
}

bool decide_reference(const BoundaryField& field, double eps) {
  if (eps < 0.0) throw NegativeEpsilon("epsilon must be nonnegative");
  if (field.start_corner_distance() > eps) return false;
  if (field.end_corner_distance() > eps) return false;

  const std::size_t na = field.columns();
  const std::size_t nb = field.rows();
  if (na == 0 || nb == 0) return decide_degenerate(field, eps);

  FreeSpaceBoundaries fs;
  fs.columns = na;
  fs.rows = nb;
  fs.vertical.resize((na + 1) * nb);
  fs.horizontal.resize(na * (nb + 1));
  for (std::size_t j = 0; j < nb; ++j) {
    for (std::size_t i = 0; i <= na; ++i) {
      fs.vertical_at(i, j) = crossings_to_interval(field.vertical(i, j), eps);
    }
  }
  for (std::size_t j = 0; j <= nb; ++j) {
    for (std::size_t i = 0; i < na; ++i) {
      fs.horizontal_at(i, j) = crossings_to_interval(field.horizontal(i, j), eps);
    }
  }

  std::vector<Interval> reach_v((na + 1) * nb), reach_h(na * (nb + 1));
  auto rv = [&](std::size_t i, std::size_t j) -> Interval& { return reach_v[i + (na + 1) * j]; };
  auto rh = [&](std::size_t i, std::size_t j) -> Interval& { return reach_h[i + na * j]; };

  rh(0, 0) = starts_at_bottom(fs.horizontal_at(0, 0)) ? fs.horizontal_at(0, 0) : Interval::none();
  for (std::size_t i = 1; i < na; ++i) {
    rh(i, 0) = (reaches_top(rh(i - 1, 0)) && starts_at_bottom(fs.horizontal_at(i, 0)))
                   ? fs.horizontal_at(i, 0)
                   : Interval::none();
  }
  rv(0, 0) = starts_at_bottom(fs.vertical_at(0, 0)) ? fs.vertical_at(0, 0) : Interval::none();
  for (std::size_t j = 1; j < nb; ++j) {
    rv(0, j) = (reaches_top(rv(0, j - 1)) && starts_at_bottom(fs.vertical_at(0, j)))
                   ? fs.vertical_at(0, j)
                   : Interval::none();
  }

  for (std::size_t j = 0; j < nb; ++j) {
    for (std::size_t i = 0; i < na; ++i) {
      const Interval& lr = rv(i, j);
      const Interval& br = rh(i, j);
      Interval right = Interval::none();
      Interval top = Interval::none();
      if (!br.empty()) {
        right = fs.vertical_at(i + 1, j);
      } else if (!lr.empty() && !fs.vertical_at(i + 1, j).empty()) {
        right = Interval::of(std::max(fs.vertical_at(i + 1, j).lo, lr.lo),
                             fs.vertical_at(i + 1, j).hi);
      }
      if (!lr.empty()) {
        top = fs.horizontal_at(i, j + 1);
      } else if (!br.empty() && !fs.horizontal_at(i, j + 1).empty()) {
        top = Interval::of(std::max(fs.horizontal_at(i, j + 1).lo, br.lo),
                           fs.horizontal_at(i, j + 1).hi);
      }
      rv(i + 1, j) = right;
      rh(i, j + 1) = top;
    }
  }
  return reaches_top(rv(na, nb - 1)) || reaches_top(rh(na - 1, nb));
}

bool decide(const ShortestPathEngine& engine, const PolygonalCurve& a, const PolygonalCurve& b,
            double eps) {
  GeodesicBoundaryField field(engine, a, b);
  return decide(field, eps);
}

bool decide_euclidean(const PolygonalCurve& a, const PolygonalCurve& b, double eps) {
  EuclideanBoundaryField field(a, b);
  return decide(field, eps);
}

}  // namespace geofrechet
