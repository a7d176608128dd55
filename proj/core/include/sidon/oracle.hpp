#pragma once

// Independent checks for the component model: the finite graph G_n built
// explicitly, exact independence numbers that do not rely on the parity
// argument, empirical densities alpha(G_n) / n, and a direct checker for
// the general A-vs-B multiplicative condition.

#include "sidon/components.hpp"
#include "sidon/rational.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace sidon {

struct ComponentGraph {
  std::vector<std::uint64_t> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // indices into vertices
};

struct GnComponent {
  unsigned height = 0;
  std::uint64_t multiplier = 1;
  std::vector<GridCoord> coords;  // parallel to graph.vertices
  ComponentGraph graph;
};

/// Partitions [n] into truncated components (ordered by smallest vertex)
/// with grid-step edges between vertices <= n.
std::vector<GnComponent> build_gn(const TripleParams& params, std::uint64_t n);

/// Grid graph induced on a set of cells; vertex i is cells[i], labelled i.
ComponentGraph grid_graph(std::span<const GridCoord> cells);

/// Whole constraint graph of b*x = a*y on [n], found by direct scanning.
ComponentGraph pair_graph(std::uint64_t a, std::uint64_t b, std::uint64_t n);

/// |V| minus a maximum matching (Hopcroft-Karp). Bipartite input only;
/// an odd cycle raises VerificationError.
std::uint64_t exact_alpha_matching(const ComponentGraph& graph);

inline constexpr std::size_t kExhaustiveLimit = 24;

/// Branch-and-bound maximum independent set. At most 24 vertices.
std::uint64_t exact_alpha_exhaustive(const ComponentGraph& graph);

struct ComponentSummary {
  ComponentId id;
  std::uint64_t vertex_count = 0;
  std::uint64_t alpha = 0;
};

struct FiniteGraphReport {
  std::uint64_t n = 0;
  std::vector<ComponentSummary> components;
  std::uint64_t total_alpha = 0;
  Rational ratio;  // total_alpha / n
};

/// Per-component independence numbers of G_n from the f(p, .) step
/// functions, classified against `cutoff`. Components are listed by
/// multiplier, then height.
FiniteGraphReport analyze_gn(const TripleParams& params, std::uint64_t n, unsigned cutoff);

/// alpha(G_n) / n via the step functions.
Rational empirical_density(const TripleParams& params, std::uint64_t n);

struct OracleAgreement {
  std::uint64_t n = 0;
  std::uint64_t components = 0;
  std::uint64_t exhaustive_checked = 0;  // components small enough for search
  std::uint64_t total_alpha = 0;
};

/// Recomputes every component of G_n by parity count, matching, exhaustive
/// search (when small enough) and the step-function lookup. Any
/// disagreement raises VerificationError.
OracleAgreement verify_gn(const TripleParams& params, std::uint64_t n);

struct MultiplicativeWitness {
  std::uint64_t a = 0;  // from A
  std::uint64_t b = 0;  // from B
  std::uint64_t x = 0;
  std::uint64_t y = 0;  // a*x == b*y
};

/// First (a, b, x, y) with a*x == b*y and (a != b or x != y), if any.
std::optional<MultiplicativeWitness> find_multiplicative_violation(
    std::span<const std::uint64_t> set, std::span<const std::uint64_t> a_set,
    std::span<const std::uint64_t> b_set);

bool is_general_multiplicative(std::span<const std::uint64_t> set,
                               std::span<const std::uint64_t> a_set,
                               std::span<const std::uint64_t> b_set);

/// Uniformly random nonempty downward-closed cell set with at most
/// max_cells cells, drawn as a partition via sequential column heights.
std::vector<GridCoord> random_staircase(std::mt19937_64& rng, unsigned max_cells);

/// max(parity classes) == exhaustive MIS on the grid graph of the cells.
bool staircase_lemma_check(std::span<const GridCoord> cells);

}  // namespace sidon
