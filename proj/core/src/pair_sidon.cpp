#include "sidon/pair_sidon.hpp"

#include "wide_int.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace sidon {

PairParams reduce_pair(std::uint64_t a, std::uint64_t b) {
  if (a < 1) throw ParameterError("a must be at least 1");
  if (a >= b) {
    throw ParameterError("require a < b (got a=" + std::to_string(a) +
                         ", b=" + std::to_string(b) + ")");
  }
  const std::uint64_t g = std::gcd(a, b);
  return PairParams{a, b, g, a / g, b / g};
}

SubpowerDecomposition subpower_index(std::uint64_t x, std::uint64_t base) {
  if (x < 1) throw ParameterError("subpower_index requires x >= 1");
  if (base < 2) throw ParameterError("subpower_index requires base >= 2");
  SubpowerDecomposition out{base, 0, x};
  while (out.cofactor % base == 0) {
    out.cofactor /= base;
    ++out.index;
  }
  return out;
}

PathDecomposition build_path_decomposition(const PairParams& params, std::uint64_t n) {
  if (n < 1) throw ParameterError("n must be at least 1");
  const std::uint64_t up = params.b_red;
  const std::uint64_t down = params.a_red;

  PathDecomposition out{n, {}};
  for (std::uint64_t source = 1; source <= n; ++source) {
    if (source % up == 0) continue;  // has a predecessor source * a'/b'
    std::vector<std::uint64_t> path{source};
    for (std::uint64_t v = source; v % down == 0;) {
      const std::uint64_t quotient = v / down;
      if (quotient > n / up) break;
      v = quotient * up;
      if (v > n) break;
      path.push_back(v);
    }
    out.paths.push_back(std::move(path));
  }
  return out;
}

std::uint64_t path_alpha(const PathDecomposition& decomposition) {
  std::uint64_t total = 0;
  for (const auto& path : decomposition.paths) total += (path.size() + 1) / 2;
  return total;
}

ExtremalPairSet construct_extremal_set(const PairParams& params, std::uint64_t n) {
  if (n < 1) throw ParameterError("n must be at least 1");
  const std::uint64_t base = params.b_red;

  std::vector<bool> selected(n + 1, false);
  for (std::uint64_t power = 1;;) {
    const std::uint64_t limit = n / power;
    for (std::uint64_t y = 1; y <= limit; ++y) {
      if (y % base != 0) selected[power * y] = true;
    }
    // Next even power; stop once it exceeds n.
    if (power > n / base || power * base > n / base) break;
    power *= base * base;
  }

  ExtremalPairSet out{n, {}};
  for (std::uint64_t x = 1; x <= n; ++x) {
    if (selected[x]) out.members.push_back(x);
  }
  return out;
}

bool is_pair_multiplicative(std::span<const std::uint64_t> set, std::uint64_t a,
                            std::uint64_t b) {
  std::vector<std::uint64_t> sorted(set.begin(), set.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::uint64_t y : sorted) {
    // a*x == b*y  <=>  x == b*y / a.
    const detail::Wide target = static_cast<detail::Wide>(b) * y;
    if (target % a != 0) continue;
    const detail::Wide x = target / a;
    if (x > UINT64_MAX) continue;
    if (std::binary_search(sorted.begin(), sorted.end(), static_cast<std::uint64_t>(x))) {
      return false;
    }
  }
  return true;
}

Rational pair_density(const PairParams& params) {
  Rational out(Integer(params.b), Integer(params.b + params.g));
  out.canonicalize();
  return out;
}

CardinalityBounds cardinality_bounds(const PairParams& params, std::uint64_t n) {
  if (n < 1) throw ParameterError("n must be at least 1");
  const Integer base(params.b_red);
  const unsigned log_n = floor_log(n, params.b_red);

  Rational main_term(base * n, base + 1);
  main_term.canonicalize();
  CardinalityBounds out{main_term - Rational(log_n + 1, 2),
                        1 + Rational(log_n, 2) + main_term};
  out.lower.canonicalize();
  out.upper.canonicalize();
  return out;
}

Rational coprime_singleton_density(std::span<const std::uint64_t> a_set, std::uint64_t b) {
  if (a_set.empty()) throw ParameterError("A must be nonempty");
  if (b < 2) throw ParameterError("b must be at least 2");
  bool has_smaller = false;
  for (std::uint64_t a : a_set) {
    if (a < 1) throw ParameterError("elements of A must be positive");
    if (std::gcd(a, b) != 1) {
      throw ParameterError("case not covered: gcd(" + std::to_string(a) + ", " +
                           std::to_string(b) + ") != 1");
    }
    has_smaller = has_smaller || a < b;
  }
  if (!has_smaller) throw ParameterError("case not covered: no element of A is below b");
  return Rational(Integer(b), Integer(b + 1));
}

}  // namespace sidon
