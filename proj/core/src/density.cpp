#include "sidon/density.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sidon {

namespace {

Rational canonical(Rational value) {
  value.canonicalize();
  return value;
}

// Hard ceiling on the cutoff search; the tail at d = 4096 is far below any
// representable epsilon the CLI accepts.
constexpr unsigned kMaxCutoff = 4096;

}  // namespace

Rational admissible_density(const TripleParams& t) {
  return canonical(Rational(Integer(t.a - 1) * (t.b - 1) * (t.c - 1),
                            Integer(t.a) * t.b * t.c));
}

TailParams TailParams::of(const TripleParams& t) {
  return TailParams{canonical(Rational(Integer(t.b - 1) * (t.c - 1), Integer(t.b) * t.c))};
}

Rational delta_complete(const TripleParams& t) {
  const Integer c(t.c);
  const Integer num = Integer(t.a - 1) * (t.b - 1) * c * c * c;
  const Integer den = Integer(t.a) * t.b * (c - 1) * (c - 1) * (c + 1);
  return canonical(Rational(num, den));
}

Rational delta_small_height(const TripleParams& t, unsigned height) {
  const StepFunction table = f_table(t, height);
  const auto& steps = table.steps();
  Rational sum = 0;
  for (std::size_t k = 0; k + 1 < steps.size(); ++k) {
    sum += Rational(steps[k].alpha) *
           (Rational(Integer(1), steps[k].value) - Rational(Integer(1), steps[k + 1].value));
  }
  return canonical(admissible_density(t) * sum);
}

Rational delta_small(const TripleParams& t, unsigned cutoff) {
  Rational sum = 0;
  for (unsigned p = 0; p <= cutoff; ++p) sum += delta_small_height(t, p);
  return sum;
}

Rational tail_bound(const TripleParams& t, unsigned cutoff) {
  const Integer a(t.a);
  const Integer am1 = a - 1;
  const Integer d(cutoff);
  const Integer poly = am1 * am1 * d * d + 2 * am1 * d + a + 1;
  // a^(1-d) = a / a^d.
  const Rational series = Rational(a * poly, ipow(t.a, cutoff) * am1 * am1 * am1);
  return canonical(admissible_density(t) * canonical(series));
}

double simplified_tail_bound(const TripleParams& t, unsigned cutoff) {
  return to_double(TailParams::of(t).beta) *
         std::pow(static_cast<double>(t.a), -static_cast<double>(cutoff) / 2.0);
}

bool tail_within_simplified_bound(const TripleParams& t, unsigned cutoff) {
  // tail <= beta a^(-d/2)  <=>  tail^2 a^d <= beta^2 (both sides positive).
  const Rational tail = tail_bound(t, cutoff);
  const Rational beta = TailParams::of(t).beta;
  return tail * tail * Rational(ipow(t.a, cutoff)) <= beta * beta;
}

unsigned seed_cutoff(const TripleParams& t, const Rational& eps) {
  if (eps <= 0) throw ParameterError("epsilon must be positive");
  const Rational beta = TailParams::of(t).beta;
  const Rational target = canonical(beta * beta / (eps * eps));
  unsigned d = 0;
  Integer power = 1;
  while (Rational(power) < target) {
    power *= t.a;
    ++d;
  }
  return std::max(d, 22u);
}

unsigned choose_cutoff(const TripleParams& t, const Rational& eps) {
  if (eps <= 0 || eps >= 1) throw ParameterError("epsilon must lie strictly between 0 and 1");
  unsigned d = seed_cutoff(t, eps);
  while (tail_bound(t, d) > eps) {
    if (++d > kMaxCutoff) throw ParameterError("epsilon too small for cutoff search");
  }
  while (d > 0 && tail_bound(t, d - 1) <= eps) --d;
  return d;
}

DensityInterval density_interval(const TripleParams& t, unsigned cutoff) {
  DensityInterval out;
  out.params = t;
  out.epsilon = 0;
  out.cutoff = cutoff;
  out.delta_complete = delta_complete(t);
  out.delta_small = delta_small(t, cutoff);
  out.tail_bound = tail_bound(t, cutoff);
  out.lower = out.delta_complete + out.delta_small;
  out.upper = out.lower + out.tail_bound;
  return out;
}

DensityInterval approximate_density(const TripleParams& t, const Rational& eps) {
  DensityInterval out = density_interval(t, choose_cutoff(t, eps));
  out.epsilon = eps;
  return out;
}

ConvergenceEstimate convergence_estimate(const TripleParams& t, unsigned digits) {
  if (digits < 1 || digits > 12) throw ParameterError("digits must lie in [1, 12]");
  const Rational complete = delta_complete(t);
  Rational value = complete;
  std::string previous;
  for (unsigned d = 0; d <= kMaxCutoff; ++d) {
    value += delta_small_height(t, d);
    std::string guarded = to_decimal(value, digits + 1, Rounding::down);
    if (d > 0 && guarded == previous) {
      return ConvergenceEstimate{to_decimal(value, digits, Rounding::down), digits, d, value};
    }
    previous = std::move(guarded);
  }
  throw VerificationError("convergence_estimate did not settle");
}

}  // namespace sidon
