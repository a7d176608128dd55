#pragma once

// Certified approximation of the maximum density of sets S with
// a*x != b*y and a*x != c*y for x, y in S.
//
// The density splits over component types relative to [n]:
//   complete components   -> closed form, exact;
//   incomplete, height<=d -> finite sum of f(p, r) / (r (r + 1)), exact;
//   incomplete, height>d  -> at most K * sum_{p>=d} p^2 / a^p.
// so [lower, lower + tail(d)] encloses the true density, where
// K = (a-1)(b-1)(c-1)/(abc) is the density of admissible multipliers.

#include "sidon/components.hpp"
#include "sidon/rational.hpp"

#include <string>

namespace sidon {

/// (a-1)(b-1)(c-1) / (abc).
Rational admissible_density(const TripleParams& params);

struct TailParams {
  Rational beta;  // (b-1)(c-1) / (bc)

  static TailParams of(const TripleParams& params);
};

/// (a-1)(b-1) c^3 / (a b (c-1)^2 (c+1)).
Rational delta_complete(const TripleParams& params);

/// Contribution of incomplete height-p components, telescoped over the
/// breakpoints of f(p, .):  K * sum_k f_k (1/v_k - 1/v_{k+1}).
Rational delta_small_height(const TripleParams& params, unsigned height);

/// Sum of delta_small_height over p = 0..cutoff.
Rational delta_small(const TripleParams& params, unsigned cutoff);

/// K * a^(1-d) ((a-1)^2 d^2 + 2(a-1) d + a + 1) / (a-1)^3, the exact value
/// of K * sum_{p>=d} p^2 / a^p.
Rational tail_bound(const TripleParams& params, unsigned cutoff);

/// beta * a^(-d/2) as a double (irrational for odd d), for display.
double simplified_tail_bound(const TripleParams& params, unsigned cutoff);

/// Exact test of tail_bound(d) <= beta * a^(-d/2), done by squaring.
bool tail_within_simplified_bound(const TripleParams& params, unsigned cutoff);

/// max(22, smallest integer d >= 2 log_a(beta / eps)), computed exactly as
/// the least d with a^d eps^2 >= beta^2.
unsigned seed_cutoff(const TripleParams& params, const Rational& eps);

/// Smallest d with tail_bound(d) <= eps. Starts from seed_cutoff and walks
/// down while the exact tail stays within eps (walks up if it does not).
unsigned choose_cutoff(const TripleParams& params, const Rational& eps);

struct DensityInterval {
  TripleParams params;
  Rational epsilon;  // zero when the cutoff was supplied directly
  unsigned cutoff = 0;
  Rational delta_complete;
  Rational delta_small;
  Rational tail_bound;
  Rational lower;  // delta_complete + delta_small
  Rational upper;  // lower + tail_bound

  Rational width() const { return upper - lower; }
  bool contains(const Rational& value) const { return lower <= value && value <= upper; }
};

/// Enclosure at an explicit cutoff.
DensityInterval density_interval(const TripleParams& params, unsigned cutoff);

/// Enclosure of width <= eps. Requires 0 < eps < 1.
DensityInterval approximate_density(const TripleParams& params, const Rational& eps);

struct ConvergenceEstimate {
  std::string decimal;  // truncated to `digits` places
  unsigned digits = 0;
  unsigned cutoff = 0;  // d at which the value settled
  Rational value;       // delta_complete + delta_small(cutoff)
};

/// Raises d until delta_complete + delta_small(d), truncated to digits + 1
/// places, is unchanged between d - 1 and d; reports the value truncated to
/// `digits` places. Heuristic, unlike approximate_density. digits <= 12.
ConvergenceEstimate convergence_estimate(const TripleParams& params, unsigned digits);

}  // namespace sidon
