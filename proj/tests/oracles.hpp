#pragma once

// Reference computations used only by tests. None of these go through the
// parity argument or the step-function representation they are checking.

#include "sidon/components.hpp"
#include "sidon/oracle.hpp"
#include "sidon/rational.hpp"

#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

namespace sidon::testing {

/// Largest subset of [n] with no a*x == b*y, by enumerating all 2^n subsets.
inline std::uint64_t brute_force_pair_alpha(std::uint64_t a, std::uint64_t b, unsigned n) {
  std::uint64_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (unsigned x = 1; x <= n && ok; ++x) {
      if (!(mask >> (x - 1) & 1)) continue;
      for (unsigned y = 1; y <= n && ok; ++y) {
        if ((mask >> (y - 1) & 1) && a * x == b * y) ok = false;
      }
    }
    if (ok) best = std::max<std::uint64_t>(best, std::popcount(mask));
  }
  return best;
}

inline Rational k_factor(const TripleParams& t) {
  Rational k(Integer(t.a - 1) * (t.b - 1) * (t.c - 1), Integer(t.a) * t.b * t.c);
  k.canonicalize();
  return k;
}

/// K * sum_{i=0}^{last} [ i(i+1)/c^(2i-1) + (i+1)^2/c^(2i) ].
inline Rational delta_complete_partial_series(const TripleParams& t, unsigned last) {
  Rational sum = 0;
  for (unsigned i = 0; i <= last; ++i) {
    if (i > 0) {
      Rational odd(Integer(i) * (i + 1), ipow(t.c, 2 * i - 1));
      odd.canonicalize();
      sum += odd;
    }
    Rational even(Integer(i + 1) * (i + 1), ipow(t.c, 2 * i));
    even.canonicalize();
    sum += even;
  }
  return k_factor(t) * sum;
}

/// Cells of the unit height-p component with value <= cap, found by plain
/// enumeration of exponents.
inline std::vector<GridCoord> cells_up_to(const TripleParams& t, unsigned p, const Integer& cap) {
  std::vector<GridCoord> cells;
  for (unsigned x = 0; x <= p; ++x) {
    for (unsigned y = 0; x + y <= p; ++y) {
      Integer v = 1;
      for (unsigned k = 0; k < p - x - y; ++k) v *= t.a;
      for (unsigned k = 0; k < x; ++k) v *= t.b;
      for (unsigned k = 0; k < y; ++k) v *= t.c;
      if (v <= cap) cells.push_back({x, y});
    }
  }
  return cells;
}

/// The literal double sum over p <= d and every r in [a^p, c^p - 1], with
/// f(p, r) from bipartite matching on the truncated cells.
inline Rational naive_delta_small(const TripleParams& t, unsigned d) {
  Rational sum = 0;
  for (unsigned p = 0; p <= d; ++p) {
    const std::uint64_t lo = ipow(t.a, p).get_ui();
    const std::uint64_t hi = ipow(t.c, p).get_ui();
    for (std::uint64_t r = lo; r < hi; ++r) {
      const auto cells = cells_up_to(t, p, Integer(r));
      const std::uint64_t f = exact_alpha_matching(grid_graph(cells));
      Rational term(Integer(f), Integer(r) * (r + 1));
      term.canonicalize();
      sum += term;
    }
  }
  return k_factor(t) * sum;
}

/// K * sum_{p=d}^{d+terms-1} p^2 / a^p.
inline Rational tail_partial_sum(const TripleParams& t, unsigned d, unsigned terms) {
  Rational sum = 0;
  for (unsigned p = d; p < d + terms; ++p) {
    Rational term(Integer(p) * p, ipow(t.a, p));
    term.canonicalize();
    sum += term;
  }
  return k_factor(t) * sum;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t size) : parent_(size) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t x, std::size_t y) { parent_[find(x)] = find(y); }

 private:
  std::vector<std::size_t> parent_;
};

inline const std::vector<TripleParams>& table_triples() {
  static const std::vector<TripleParams> triples = {
      TripleParams::make(2, 3, 5), TripleParams::make(2, 3, 7), TripleParams::make(2, 5, 7),
      TripleParams::make(2, 5, 9), TripleParams::make(2, 7, 9), TripleParams::make(3, 4, 5),
      TripleParams::make(3, 4, 7), TripleParams::make(3, 5, 7), TripleParams::make(3, 5, 8),
      TripleParams::make(3, 7, 8)};
  return triples;
}

}  // namespace sidon::testing
