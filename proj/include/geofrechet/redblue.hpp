#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "geofrechet/errors.hpp"
#include "geofrechet/rng.hpp"

namespace geofrechet::redblue {

enum class Color { red, blue };

// A curve over the slab, supplied as an evaluation contract. Reds are
// nonincreasing, blues nondecreasing; a red and a blue cross at most once.
struct MonotoneCurve {
  int id = 0;
  Color color = Color::red;
  std::function<double(double)> eval;
  // Optional closed-form crossing with a curve of the opposite color; when
  // absent, queries fall back to monotone bisection.
  std::function<std::optional<double>(const MonotoneCurve& other, double lo, double hi)> intersect;
};

// Root of red(x) - blue(x) in [lo, hi] by bisection; returns the upper end of
// the final bracket, or nullopt when the difference has one sign throughout.
std::optional<double> monotone_crossing(const std::function<double(double)>& red_eval,
                                        const std::function<double(double)>& blue_eval, double lo,
                                        double hi, double tol = 1e-12);

struct Crossing {
  int red_id = 0;
  int blue_id = 0;
  double eps = 0.0;
};

// Slab counting structure: per-red crossing counts from the strict-below
// order at the two slab edges. A blue is below a red at x iff blue(x) <
// red(x); a pair crosses iff it is below at alpha and not below at beta.
class RedBlueCounter {
 public:
  static RedBlueCounter build(std::span<const MonotoneCurve> reds,
                              std::span<const MonotoneCurve> blues, double alpha, double beta);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  long long total() const { return total_; }
  std::size_t red_count() const { return red_ids_.size(); }
  long long per_red(std::size_t red_index) const { return per_red_[red_index]; }
  int red_id(std::size_t red_index) const { return red_ids_[red_index]; }
  // Red id with the most crossings, ties to the smallest id.
  int max_red() const { return max_red_id_; }
  std::size_t max_red_index() const { return max_red_index_; }

  std::vector<Crossing> report(std::span<const MonotoneCurve> reds,
                               std::span<const MonotoneCurve> blues) const;
  std::vector<Crossing> crossings_of(std::size_t red_index, std::span<const MonotoneCurve> reds,
                                     std::span<const MonotoneCurve> blues) const;
  // Uniform over all crossings in the slab. Throws EmptySlab when total()==0.
  Crossing random_intersection(std::span<const MonotoneCurve> reds,
                               std::span<const MonotoneCurve> blues, SplitMix64& rng) const;

 private:
  bool pair_crosses(std::size_t red_index, std::size_t blue_index) const {
    return blue_alpha_[blue_index] < red_alpha_[red_index] &&
           !(blue_beta_[blue_index] < red_beta_[red_index]);
  }
  Crossing make_crossing(std::size_t red_index, std::size_t blue_index,
                         std::span<const MonotoneCurve> reds,
                         std::span<const MonotoneCurve> blues) const;

  double alpha_ = 0.0;
  double beta_ = 0.0;
  std::vector<double> red_alpha_, red_beta_, blue_alpha_, blue_beta_;
  std::vector<int> red_ids_, blue_ids_;
  std::vector<long long> per_red_;
  std::vector<long long> prefix_;
  long long total_ = 0;
  int max_red_id_ = 0;
  std::size_t max_red_index_ = 0;
};

inline RedBlueCounter count(std::span<const MonotoneCurve> reds,
                            std::span<const MonotoneCurve> blues, double alpha, double beta) {
  return RedBlueCounter::build(reds, blues, alpha, beta);
}

}  // namespace geofrechet::redblue
