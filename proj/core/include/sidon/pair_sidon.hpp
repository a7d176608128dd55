#pragma once

// Sets S of positive integers with a*x != b*y for all x, y in S.
//
// Dividing a and b by g = gcd(a, b) does not change the constraint, so all
// constructions work with the reduced coprime pair (a', b'). On [n] the
// relation b'x = a'y links every vertex to at most one successor
// y = x * b'/a' and one predecessor, so the constraint graph is a disjoint
// union of increasing paths. A path starts at every integer not divisible
// by b', and the vertex at distance i from its start is an i-th subpower
// of b' (b'^i times a cofactor prime to b'). Taking every vertex at even
// distance is therefore a maximum solution, and it is exactly the set of
// even subpowers of b'.

#include "sidon/rational.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace sidon {

struct PairParams {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t g = 0;
  std::uint64_t a_red = 0;
  std::uint64_t b_red = 0;
};

/// Validates 1 <= a < b and divides out the gcd.
PairParams reduce_pair(std::uint64_t a, std::uint64_t b);

/// x = base^index * cofactor with cofactor not divisible by base.
struct SubpowerDecomposition {
  std::uint64_t base = 0;
  unsigned index = 0;
  std::uint64_t cofactor = 0;

  bool even() const { return index % 2 == 0; }
};

SubpowerDecomposition subpower_index(std::uint64_t x, std::uint64_t base);

struct PathDecomposition {
  std::uint64_t n = 0;
  // Each path ascends; path.front() is its unique source.
  std::vector<std::vector<std::uint64_t>> paths;
};

PathDecomposition build_path_decomposition(const PairParams& params, std::uint64_t n);

/// Independence number of the path forest: sum of ceil(len / 2).
std::uint64_t path_alpha(const PathDecomposition& decomposition);

struct ExtremalPairSet {
  std::uint64_t n = 0;
  std::vector<std::uint64_t> members;  // ascending

  std::uint64_t cardinality() const { return members.size(); }
};

/// Even subpowers of b' inside [n]. Linear-time sieve over the powers
/// b'^0, b'^2, b'^4, ...
ExtremalPairSet construct_extremal_set(const PairParams& params, std::uint64_t n);

/// True iff no ordered pair (x, y) of members satisfies a*x == b*y.
bool is_pair_multiplicative(std::span<const std::uint64_t> set, std::uint64_t a,
                            std::uint64_t b);

/// Maximum density b / (b + g).
Rational pair_density(const PairParams& params);

struct CardinalityBounds {
  Rational lower;
  Rational upper;

  bool contains(const Rational& value) const { return lower <= value && value <= upper; }
};

/// Bracket on |T_n| for the reduced base B = b':
///   B n / (B + 1) - (L + 1) / 2  <=  |T_n|  <=  1 + L / 2 + B n / (B + 1)
/// where L = floor(log_B n), found by integer search.
CardinalityBounds cardinality_bounds(const PairParams& params, std::uint64_t n);

/// Density b / (b + 1) for A-vs-{b} constraints when b is coprime to every
/// element of A and some element of A is below b. Any other input is outside
/// the solved case and raises ParameterError.
Rational coprime_singleton_density(std::span<const std::uint64_t> a_set, std::uint64_t b);

}  // namespace sidon
