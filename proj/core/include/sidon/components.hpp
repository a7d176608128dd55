#pragma once

// Components of the divisibility graph for the constraint a*x != b*y and
// a*x != c*y (a, b, c pairwise coprime, 1 < a < b < c).
//
// Every integer m factors uniquely as a^(p-x-y) * b^x * c^y * q with q
// divisible by none of a, b, c. Edges multiply by b/a or c/a, which keeps
// (p, q) fixed and moves (x, y) one grid step. So each component is a
// triangle {x, y >= 0, x + y <= p} of the quarter grid, scaled by q, and its
// truncation to values <= r is always downward closed (a staircase).
// On a staircase one of the two checkerboard colour classes is a maximum
// independent set.

#include "sidon/rational.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sidon {

struct TripleParams {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t c = 0;

  /// Checks 1 < a < b < c, pairwise coprime, and that a*b*c fits in 64 bits.
  static TripleParams make(std::uint64_t a, std::uint64_t b, std::uint64_t c);

  /// True iff q is divisible by none of a, b, c.
  bool admissible(std::uint64_t q) const { return q % a != 0 && q % b != 0 && q % c != 0; }
};

struct GridCoord {
  unsigned x = 0;
  unsigned y = 0;

  unsigned row() const { return x + y; }
  friend bool operator==(const GridCoord&, const GridCoord&) = default;
  friend auto operator<=>(const GridCoord&, const GridCoord&) = default;
};

inline bool grid_adjacent(GridCoord u, GridCoord v) {
  const unsigned dx = u.x > v.x ? u.x - v.x : v.x - u.x;
  const unsigned dy = u.y > v.y ? u.y - v.y : v.y - u.y;
  return dx + dy == 1;
}

struct ComponentCell {
  GridCoord coord;
  Integer value;
};

/// The component of height p and multiplier q.
class GridComponent {
 public:
  GridComponent(const TripleParams& params, unsigned height, std::uint64_t multiplier = 1);

  const TripleParams& params() const { return params_; }
  unsigned height() const { return height_; }
  std::uint64_t multiplier() const { return multiplier_; }
  std::size_t size() const { return (std::size_t{height_} + 1) * (height_ + 2) / 2; }

  Integer value_at(GridCoord coord) const;
  Integer min_value() const { return value_at({0, 0}); }
  Integer max_value() const { return value_at({0, height_}); }

  /// All cells ordered by increasing value.
  std::vector<ComponentCell> cells_by_value() const;

  /// Plain-text dump, one row (x + y = const) per line, bottom row first.
  std::string render_rows() const;

 private:
  TripleParams params_;
  unsigned height_;
  std::uint64_t multiplier_;
};

/// The unit component of height p truncated to values <= cap.
struct TruncatedComponent {
  GridComponent base;
  Integer cap;
  std::vector<GridCoord> active;  // ascending by value
};

TruncatedComponent truncate(const TripleParams& params, unsigned height, const Integer& cap);

/// Downward closure: (x, y) present implies (x-1, y) and (x, y-1) present.
bool is_staircase(std::span<const GridCoord> cells);

/// max(#even cells, #odd cells). Throws std::domain_error when the cells
/// are not a staircase, because the parity argument no longer applies.
std::uint64_t parity_alpha(std::span<const GridCoord> cells);
std::uint64_t parity_alpha(const TruncatedComponent& component);

/// Independence number of the full height-p triangle:
/// i(i+1) for p = 2i-1 and (i+1)^2 for p = 2i.
std::uint64_t alpha_complete(unsigned height);

struct Breakpoint {
  Integer value;
  std::uint64_t alpha = 0;
};

/// r -> alpha(C_{p,1}[r]) as a step function. The function jumps only at
/// vertex values, so it is stored as (v_k, f_k) pairs with f(r) = f_k on
/// [v_k, v_{k+1}); v_0 = a^p and the final breakpoint is c^p.
class StepFunction {
 public:
  StepFunction(unsigned height, std::vector<Breakpoint> steps);

  unsigned height() const { return height_; }
  const std::vector<Breakpoint>& steps() const { return steps_; }

  /// Zero below a^p.
  std::uint64_t at(const Integer& cap) const;
  std::uint64_t at(std::uint64_t cap) const;

  /// Number of component vertices with value <= cap.
  std::size_t active_count(std::uint64_t cap) const;

 private:
  unsigned height_;
  std::vector<Breakpoint> steps_;
  // steps_ values narrowed to 64 bits (saturated) for fast lookups.
  std::vector<std::uint64_t> narrow_;
};

/// Builds the whole step function in one sweep over the cells in value
/// order, updating both parity counts incrementally.
StepFunction f_table(const TripleParams& params, unsigned height);

/// alpha(C_{p,q} restricted to [n]) = f(p, floor(n / q)).
std::uint64_t q_copy_alpha(const StepFunction& table, std::uint64_t q, std::uint64_t n,
                           const TripleParams& params);
std::uint64_t q_copy_alpha(const TripleParams& params, unsigned height, std::uint64_t q,
                           std::uint64_t n);

/// Number of q in [1, N] divisible by none of a, b, c (inclusion-exclusion).
std::uint64_t admissible_count(const TripleParams& params, std::uint64_t limit);

struct Decomposition {
  unsigned height = 0;
  GridCoord coord;
  std::uint64_t multiplier = 1;
};

/// m = a^(p-x-y) * b^x * c^y * q with q admissible.
Decomposition decompose(std::uint64_t m, const TripleParams& params);

enum class ComponentKind { complete, small, large };

const char* to_string(ComponentKind kind);

struct ComponentId {
  unsigned height = 0;
  std::uint64_t multiplier = 1;
  ComponentKind kind = ComponentKind::complete;
};

/// Classifies C_{p,q} relative to [n] and cutoff d. A component whose
/// largest vertex c^p q is <= n counts as complete. Throws ParameterError
/// when the component misses [n] entirely (a^p q > n).
ComponentKind classify(const TripleParams& params, unsigned height, std::uint64_t q,
                       std::uint64_t n, unsigned cutoff);

}  // namespace sidon
