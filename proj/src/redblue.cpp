#include "geofrechet/redblue.hpp"

#include <algorithm>
#include <cmath>

namespace geofrechet::redblue {

namespace {

constexpr double kMonotoneTol = 1e-12;
constexpr int kMonotoneSamples = 17;

// Chebyshev-spaced sample points over [alpha, beta], ascending.
std::vector<double> sample_points(double alpha, double beta) {
  std::vector<double> xs(kMonotoneSamples);
  const double mid = 0.5 * (alpha + beta);
  const double half = 0.5 * (beta - alpha);
  for (int i = 0; i < kMonotoneSamples; ++i) {
    xs[i] = mid + half * std::cos(M_PI * (2.0 * i + 1.0) / (2.0 * kMonotoneSamples));
  }
  std::sort(xs.begin(), xs.end());
  xs.front() = alpha;
  xs.back() = beta;
  return xs;
}

void check_monotone(const MonotoneCurve& c, const std::vector<double>& xs) {
  const double sign = (c.color == Color::red) ? -1.0 : 1.0;
  double prev = c.eval(xs.front());
  for (std::size_t i = 1; i < xs.size(); ++i) {
    double cur = c.eval(xs[i]);
    const double slack = kMonotoneTol * std::max({1.0, std::fabs(prev), std::fabs(cur)});
    if (sign * (cur - prev) < -slack) {
      throw MonotonicityViolation("curve violates its monotonicity contract");
    }
    prev = cur;
  }
}

}  // namespace

std::optional<double> monotone_crossing(const std::function<double(double)>& red_eval,
                                        const std::function<double(double)>& blue_eval, double lo,
                                        double hi, double tol) {
  auto g = [&](double x) { return red_eval(x) - blue_eval(x); };
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

RedBlueCounter RedBlueCounter::build(std::span<const MonotoneCurve> reds,
                                     std::span<const MonotoneCurve> blues, double alpha,
                                     double beta) {
  RedBlueCounter c;
  c.alpha_ = alpha;
  c.beta_ = beta;

  const auto xs = sample_points(alpha, beta);
  for (const auto& r : reds) check_monotone(r, xs);
  for (const auto& b : blues) check_monotone(b, xs);

  c.red_ids_.reserve(reds.size());
  c.red_alpha_.reserve(reds.size());
  c.red_beta_.reserve(reds.size());
  for (const auto& r : reds) {
    c.red_ids_.push_back(r.id);
    c.red_alpha_.push_back(r.eval(alpha));
    c.red_beta_.push_back(r.eval(beta));
  }
  for (const auto& b : blues) {
    c.blue_ids_.push_back(b.id);
    c.blue_alpha_.push_back(b.eval(alpha));
    c.blue_beta_.push_back(b.eval(beta));
  }

  // Sorted edge lists; strictly-below counts come from binary search.
  std::vector<double> sa = c.blue_alpha_;
  std::vector<double> sb = c.blue_beta_;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());

  c.per_red_.resize(reds.size());
  c.prefix_.resize(reds.size() + 1, 0);
  long long best = -1;
  for (std::size_t i = 0; i < reds.size(); ++i) {
    const long long below_a =
        std::lower_bound(sa.begin(), sa.end(), c.red_alpha_[i]) - sa.begin();
    const long long below_b =
        std::lower_bound(sb.begin(), sb.end(), c.red_beta_[i]) - sb.begin();
    const long long n = below_a - below_b;
    if (n < 0) throw MonotonicityViolation("negative per-red crossing count");
    c.per_red_[i] = n;
    c.prefix_[i + 1] = c.prefix_[i] + n;
    if (n > best || (n == best && c.red_ids_[i] < c.max_red_id_)) {
      best = n;
      c.max_red_id_ = c.red_ids_[i];
      c.max_red_index_ = i;
    }
  }
  c.total_ = reds.empty() ? 0 : c.prefix_.back();
  return c;
}

Crossing RedBlueCounter::make_crossing(std::size_t red_index, std::size_t blue_index,
                                       std::span<const MonotoneCurve> reds,
                                       std::span<const MonotoneCurve> blues) const {
  const MonotoneCurve& r = reds[red_index];
  const MonotoneCurve& b = blues[blue_index];
  std::optional<double> x;
  if (r.intersect) {
    x = r.intersect(b, alpha_, beta_);
  } else if (b.intersect) {
    x = b.intersect(r, alpha_, beta_);
  } else {
    x = monotone_crossing(r.eval, b.eval, alpha_, beta_);
  }
  return {r.id, b.id, x.value_or(beta_)};
}

std::vector<Crossing> RedBlueCounter::report(std::span<const MonotoneCurve> reds,
                                             std::span<const MonotoneCurve> blues) const {
  std::vector<Crossing> out;
  out.reserve(static_cast<std::size_t>(total_));
  for (std::size_t i = 0; i < red_ids_.size(); ++i) {
    if (per_red_[i] == 0) continue;
    for (std::size_t k = 0; k < blue_ids_.size(); ++k) {
      if (pair_crosses(i, k)) out.push_back(make_crossing(i, k, reds, blues));
    }
  }
  return out;
}

std::vector<Crossing> RedBlueCounter::crossings_of(std::size_t red_index,
                                                   std::span<const MonotoneCurve> reds,
                                                   std::span<const MonotoneCurve> blues) const {
  std::vector<Crossing> out;
  for (std::size_t k = 0; k < blue_ids_.size(); ++k) {
    if (pair_crosses(red_index, k)) out.push_back(make_crossing(red_index, k, reds, blues));
  }
  return out;
}

Crossing RedBlueCounter::random_intersection(std::span<const MonotoneCurve> reds,
                                             std::span<const MonotoneCurve> blues,
                                             SplitMix64& rng) const {
  if (total_ == 0) throw EmptySlab("no red-blue intersections in the slab");
  const long long u = 1 + static_cast<long long>(rng.next_below(static_cast<std::uint64_t>(total_)));
  // Prefix sums pick the red curve, then the (u - prefix)-th crossing blue.
  const std::size_t ri =
      std::upper_bound(prefix_.begin(), prefix_.end(), u - 1) - prefix_.begin() - 1;
  long long want = u - prefix_[ri];
  for (std::size_t k = 0; k < blue_ids_.size(); ++k) {
    if (pair_crosses(ri, k) && --want == 0) {
      return make_crossing(ri, k, reds, blues);
    }
  }
  throw std::logic_error("crossing count inconsistent with enumeration");
}

}  // namespace geofrechet::redblue
