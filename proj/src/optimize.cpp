#include "geofrechet/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "geofrechet/parallel.hpp"

namespace geofrechet {

double weighted_median(std::span<const double> values, std::span<const double> weights) {
  if (values.empty() || values.size() != weights.size()) {
    throw EmptyInput("weighted median needs matching nonempty inputs");
  }
  for (double w : weights) {
    if (!(w > 0.0)) throw ValidationError("weighted median needs positive weights");
  }
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  double cum = 0.0;
  for (std::size_t idx : order) {
    cum += weights[idx];
    if (cum >= 0.5 * total) return values[idx];
  }
  return values[order.back()];
}

std::optional<double> curve_intersection(const BoundaryCurve& lower, const BoundaryCurve& upper,
                                         double lo, double hi, double tol) {
  auto g = [&](double x) { return lower.eval(x) - upper.eval(x); };
  if (!(g(lo) > 0.0)) return std::nullopt;
  if (g(hi) > 0.0) return std::nullopt;
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (g(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

SlabResolution resolve_sorted_values(std::vector<double> values,
                                     const std::function<bool(double)>& decide_fn) {
  if (values.empty()) throw EmptyInput("no candidate values to resolve");
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  SlabResolution r;
  auto run = [&](double v) {
    ++r.decide_calls;
    return decide_fn(v);
  };
  std::size_t lo = 0, hi = values.size() - 1;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (run(values[mid])) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  r.beta = values[lo];
  if (lo == 0) {
    r.immediate = true;
    r.alpha = values[0];
  } else {
    r.alpha = values[lo - 1];
  }
  return r;
}

std::array<double, 2> type_a_values(const BoundaryField& field) {
  return {field.start_corner_distance(), field.end_corner_distance()};
}

std::vector<double> type_b_values(const CachedBoundaryField& field) {
  std::vector<double> out;
  const std::size_t na = field.columns();
  const std::size_t nb = field.rows();
  out.reserve((na + 1) * nb + na * (nb + 1));
  for (std::size_t j = 0; j < nb; ++j) {
    for (std::size_t i = 0; i <= na; ++i) {
      out.push_back(field.vertical_ref(i, j).minimum().second);
    }
  }
  for (std::size_t j = 0; j <= nb; ++j) {
    for (std::size_t i = 0; i < na; ++i) {
      out.push_back(field.horizontal_ref(i, j).minimum().second);
    }
  }
  return out;
}

namespace {

struct LineFamily {
  std::vector<BoundaryCurve> lowers;  // reds: nonincreasing in eps
  std::vector<BoundaryCurve> uppers;  // blues: nondecreasing in eps
  std::vector<char> deleted;          // per lower curve
};

redblue::MonotoneCurve wrap(const BoundaryCurve& c, int id) {
  redblue::MonotoneCurve m;
  m.id = id;
  m.color = c.end == BoundaryCurve::End::lower ? redblue::Color::red : redblue::Color::blue;
  m.eval = [&c](double eps) { return c.eval(eps); };
  return m;
}

// Steps 2-6 of the randomized search, run once over rows and once over
// columns. Per iteration: count crossings per line in the slab, draw one
// random crossing per nonempty line, move the busiest lower curve's
// crossings into the pool and retire it, then probe the pool median and the
// weighted median of the draws with the decision procedure.
class RandomizedOptimizer {
 public:
  RandomizedOptimizer(const CachedBoundaryField& field, const OptimizeOptions& options)
      : field_(field), options_(options) {}

  FrechetResult run() {
    const std::size_t na = field_.columns();
    const std::size_t nb = field_.rows();

    std::vector<std::pair<double, char>> candidates;
    candidates.push_back({field_.start_corner_distance(), 'a'});
    candidates.push_back({field_.end_corner_distance(), 'a'});
    for (std::size_t j = 0; j < nb; ++j) {
      for (std::size_t i = 0; i <= na; ++i) {
        candidates.push_back({field_.vertical_ref(i, j).minimum().second, 'b'});
      }
    }
    for (std::size_t j = 0; j <= nb; ++j) {
      for (std::size_t i = 0; i < na; ++i) {
        candidates.push_back({field_.horizontal_ref(i, j).minimum().second, 'b'});
      }
    }
    // Saturation bound: the largest vertex-to-vertex distance. decide() holds
    // there, giving the search a guaranteed true upper candidate.
    double ub = 0.0;
    for (std::size_t j = 0; j < nb; ++j) {
      for (std::size_t i = 0; i <= na; ++i) {
        const auto& f = field_.vertical_ref(i, j);
        ub = std::max({ub, f.value(0.0), f.value(1.0)});
      }
    }
    candidates.push_back({ub, 'b'});

    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end(),
                                 [](const auto& x, const auto& y) { return x.first == y.first; }),
                     candidates.end());

    std::size_t lo = 0, hi = candidates.size() - 1;
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      if (run_decide(candidates[mid].first)) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    beta_ = candidates[lo].first;
    beta_kind_ = candidates[lo].second;
    if (lo == 0) {
      return {beta_, beta_kind_, iterations_, decision_calls_};
    }
    alpha_ = candidates[lo - 1].first;

    guard_ = static_cast<long long>(std::max(na, nb)) * static_cast<long long>(na + nb) + 16;
    run_phase(0);
    run_phase(1);
    return {beta_, beta_kind_, iterations_, decision_calls_};
  }

 private:
  bool run_decide(double eps) {
    ++decision_calls_;
    return decide(field_, eps);
  }

  void run_phase(int phase) {
    const std::size_t na = field_.columns();
    const std::size_t nb = field_.rows();
    const std::size_t lines = (phase == 0) ? nb : na;

    // Active curve families; curves born above alpha stay out (their
    // boundary is empty throughout the slab interior).
    std::vector<LineFamily> fams(lines);
    for (std::size_t line = 0; line < lines; ++line) {
      const std::size_t count = (phase == 0) ? na + 1 : nb + 1;
      for (std::size_t k = 0; k < count; ++k) {
        const BoundaryDistanceFunction& f = (phase == 0) ? field_.vertical_ref(k, line)
                                                         : field_.horizontal_ref(line, k);
        auto [bt, bv] = f.minimum();
        if (bv > alpha_) continue;
        BoundaryCurve base{BoundaryCurve::End::lower, phase == 0,
                           phase == 0 ? k : line, phase == 0 ? line : k,
                           bv, bt, &f};
        fams[line].lowers.push_back(base);
        base.end = BoundaryCurve::End::upper;
        fams[line].uppers.push_back(base);
      }
      fams[line].deleted.assign(fams[line].lowers.size(), 0);
    }

    pool_.clear();
    std::vector<double> draws(lines), weights(lines), kappas(lines);
    std::vector<std::vector<double>> pending(lines);

    while (true) {
      if (iterations_ >= guard_) {
        throw NonTermination("randomized optimization exceeded its iteration budget");
      }

      std::fill(kappas.begin(), kappas.end(), 0.0);
      for (auto& p : pending) p.clear();

      parallel_for(static_cast<std::int64_t>(lines), [&](std::int64_t line) {
        LineFamily& fam = fams[line];
        std::vector<redblue::MonotoneCurve> reds, blues;
        std::vector<std::size_t> active;
        for (std::size_t k = 0; k < fam.lowers.size(); ++k) {
          if (!fam.deleted[k]) {
            reds.push_back(wrap(fam.lowers[k], static_cast<int>(fam.lowers[k].on_vertical
                                                                    ? fam.lowers[k].i
                                                                    : fam.lowers[k].j)));
            active.push_back(k);
          }
        }
        for (const auto& u : fam.uppers) {
          blues.push_back(wrap(u, static_cast<int>(u.on_vertical ? u.i : u.j)));
        }
        if (reds.empty() || blues.empty()) return;

        auto counter = redblue::RedBlueCounter::build(reds, blues, alpha_, beta_);
        if (counter.total() == 0) return;
        kappas[line] = static_cast<double>(counter.total());

        SplitMix64 rng(mix_key(mix_key(mix_key(options_.seed, 0x70 + phase),
                                       static_cast<std::uint64_t>(iterations_)),
                               static_cast<std::uint64_t>(line)));
        draws[line] = counter.random_intersection(reds, blues, rng).eps;

        auto busy = counter.crossings_of(counter.max_red_index(), reds, blues);
        for (const auto& c : busy) pending[line].push_back(c.eps);
        fam.deleted[active[counter.max_red_index()]] = 1;
      });

      std::size_t inserted = 0;
      for (const auto& p : pending) {
        for (double v : p) {
          if (v > alpha_ && v < beta_) {
            pool_.push_back(v);
            ++inserted;
          }
        }
      }
      const bool any_kappa =
          std::any_of(kappas.begin(), kappas.end(), [](double k) { return k > 0.0; });
      if (!any_kappa && pool_.empty()) break;

      std::optional<double> xi;
      if (!pool_.empty()) {
        std::vector<double> tmp = pool_;
        auto mid = tmp.begin() + (tmp.size() - 1) / 2;
        std::nth_element(tmp.begin(), mid, tmp.end());
        xi = *mid;
      }
      std::optional<double> psi;
      {
        std::vector<double> dv, wv;
        for (std::size_t line = 0; line < lines; ++line) {
          if (kappas[line] > 0.0) {
            dv.push_back(draws[line]);
            wv.push_back(kappas[line]);
          }
        }
        if (!dv.empty()) psi = weighted_median(dv, wv);
      }

      if (options_.trace) {
        IterationTrace t;
        t.phase = phase;
        t.alpha = alpha_;
        t.beta = beta_;
        t.kappa_total = static_cast<long long>(std::accumulate(kappas.begin(), kappas.end(), 0.0));
        t.pool_before = pool_.size();
        options_.trace->push_back(t);
      }

      std::vector<double> probes;
      if (xi) probes.push_back(*xi);
      if (psi && (!xi || *psi != *xi)) probes.push_back(*psi);
      for (double p : probes) {
        if (run_decide(p)) {
          if (p < beta_) {
            beta_ = p;
            beta_kind_ = 'c';
          }
        } else {
          alpha_ = std::max(alpha_, p);
        }
        std::erase_if(pool_, [&](double v) {
          return v <= alpha_ || v >= beta_ || std::fabs(v - p) <= options_.tol;
        });
      }

      if (options_.trace) {
        auto& t = options_.trace->back();
        t.pool_after = pool_.size();
        if (!pool_.empty()) {
          auto [mn, mx] = std::minmax_element(pool_.begin(), pool_.end());
          t.pool_lo = *mn;
          t.pool_hi = *mx;
        }
      }
      ++iterations_;
    }
  }

  const CachedBoundaryField& field_;
  OptimizeOptions options_;
  double alpha_ = 0.0;
  double beta_ = 0.0;
  char beta_kind_ = 'a';
  int iterations_ = 0;
  int decision_calls_ = 0;
  long long guard_ = 0;
  std::vector<double> pool_;
};

// With no cells on one axis the optimum is the largest point-to-curve
// distance, attained at a curve vertex; resolve the vertex-pair candidates
// directly against the decision procedure.
FrechetResult optimize_degenerate(const PolygonalCurve& a, const PolygonalCurve& b,
                                  const std::function<double(const Point&, const Point&)>& metric,
                                  const BoundaryField& field) {
  std::vector<std::pair<double, char>> candidates;
  const auto& av = a.vertices();
  const auto& bv = b.vertices();
  for (std::size_t u = 0; u < av.size(); ++u) {
    for (std::size_t v = 0; v < bv.size(); ++v) {
      const bool endpoints = (u == 0 && v == 0) || (u + 1 == av.size() && v + 1 == bv.size());
      candidates.push_back({metric(av[u], bv[v]), endpoints ? 'a' : 'b'});
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end(),
                               [](const auto& x, const auto& y) { return x.first == y.first; }),
                   candidates.end());
  int calls = 0;
  std::size_t lo = 0, hi = candidates.size() - 1;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    ++calls;
    if (decide(field, candidates[mid].first)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return {candidates[lo].first, candidates[lo].second, 0, calls};
}

}  // namespace

FrechetResult frechet_geodesic(const ShortestPathEngine& engine, const PolygonalCurve& a,
                               const PolygonalCurve& b, const OptimizeOptions& options) {
  for (const Point& p : a.vertices()) {
    if (!locate(engine.polygon(), engine.triangulation(), p)) {
      throw PointOutsidePolygon("curve vertex lies outside the polygon");
    }
  }
  for (const Point& p : b.vertices()) {
    if (!locate(engine.polygon(), engine.triangulation(), p)) {
      throw PointOutsidePolygon("curve vertex lies outside the polygon");
    }
  }
  GeodesicBoundaryField base(engine, a, b);
  if (a.segments() == 0 || b.segments() == 0) {
    return optimize_degenerate(
        a, b, [&](const Point& p, const Point& q) { return engine.distance(p, q); }, base);
  }
  CachedBoundaryField cached(base);
  return RandomizedOptimizer(cached, options).run();
}

FrechetResult frechet_euclidean(const PolygonalCurve& a, const PolygonalCurve& b,
                                const OptimizeOptions& options) {
  EuclideanBoundaryField base(a, b);
  if (a.segments() == 0 || b.segments() == 0) {
    return optimize_degenerate(
        a, b, [](const Point& p, const Point& q) { return dist(p, q); }, base);
  }
  CachedBoundaryField cached(base);
  return RandomizedOptimizer(cached, options).run();
}

}  // namespace geofrechet
