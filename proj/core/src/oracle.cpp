#include "sidon/oracle.hpp"

#include "wide_int.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <string>

namespace sidon {

namespace {

std::vector<std::vector<std::size_t>> adjacency(const ComponentGraph& graph) {
  std::vector<std::vector<std::size_t>> adj(graph.vertices.size());
  for (const auto& [u, v] : graph.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

// 0/1 colouring, or nullopt on an odd cycle.
std::optional<std::vector<int>> two_colour(const std::vector<std::vector<std::size_t>>& adj) {
  std::vector<int> colour(adj.size(), -1);
  for (std::size_t start = 0; start < adj.size(); ++start) {
    if (colour[start] != -1) continue;
    colour[start] = 0;
    std::queue<std::size_t> frontier;
    frontier.push(start);
    while (!frontier.empty()) {
      const std::size_t u = frontier.front();
      frontier.pop();
      for (std::size_t v : adj[u]) {
        if (colour[v] == -1) {
          colour[v] = 1 - colour[u];
          frontier.push(v);
        } else if (colour[v] == colour[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

class HopcroftKarp {
 public:
  HopcroftKarp(const std::vector<std::vector<std::size_t>>& adj, const std::vector<int>& colour)
      : adj_(adj), colour_(colour), match_(adj.size(), kNone), dist_(adj.size(), 0) {}

  std::size_t run() {
    std::size_t matching = 0;
    while (bfs()) {
      for (std::size_t u = 0; u < adj_.size(); ++u) {
        if (colour_[u] == 0 && match_[u] == kNone && dfs(u)) ++matching;
      }
    }
    return matching;
  }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  static constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

  bool bfs() {
    std::queue<std::size_t> frontier;
    bool found = false;
    for (std::size_t u = 0; u < adj_.size(); ++u) {
      if (colour_[u] != 0) continue;
      if (match_[u] == kNone) {
        dist_[u] = 0;
        frontier.push(u);
      } else {
        dist_[u] = kInf;
      }
    }
    while (!frontier.empty()) {
      const std::size_t u = frontier.front();
      frontier.pop();
      for (std::size_t v : adj_[u]) {
        const std::size_t w = match_[v];
        if (w == kNone) {
          found = true;
        } else if (dist_[w] == kInf) {
          dist_[w] = dist_[u] + 1;
          frontier.push(w);
        }
      }
    }
    return found;
  }

  bool dfs(std::size_t u) {
    for (std::size_t v : adj_[u]) {
      const std::size_t w = match_[v];
      if (w == kNone || (dist_[w] == dist_[u] + 1 && dfs(w))) {
        match_[u] = v;
        match_[v] = u;
        return true;
      }
    }
    dist_[u] = kInf;
    return false;
  }

  const std::vector<std::vector<std::size_t>>& adj_;
  const std::vector<int>& colour_;
  std::vector<std::size_t> match_;
  std::vector<std::size_t> dist_;
};

using Mask = std::uint32_t;

void branch(Mask candidates, unsigned taken, const std::vector<Mask>& closed_nbhd,
            unsigned& best) {
  if (taken + static_cast<unsigned>(std::popcount(candidates)) <= best) return;
  if (candidates == 0) {
    best = taken;
    return;
  }
  const unsigned v = static_cast<unsigned>(std::countr_zero(candidates));
  const Mask bit = Mask{1} << v;
  // A vertex with no remaining neighbour can always be taken.
  if ((closed_nbhd[v] & candidates) == bit) {
    branch(candidates & ~bit, taken + 1, closed_nbhd, best);
    return;
  }
  branch(candidates & ~closed_nbhd[v], taken + 1, closed_nbhd, best);
  branch(candidates & ~bit, taken, closed_nbhd, best);
}

// partitions[k][m]: partitions of k into parts of size at most m.
std::vector<std::vector<std::uint64_t>> partition_counts(unsigned max_cells) {
  std::vector<std::vector<std::uint64_t>> count(max_cells + 1,
                                                std::vector<std::uint64_t>(max_cells + 1, 0));
  for (unsigned m = 0; m <= max_cells; ++m) count[0][m] = 1;
  for (unsigned k = 1; k <= max_cells; ++k) {
    for (unsigned m = 1; m <= max_cells; ++m) {
      count[k][m] = count[k][m - 1] + (m <= k ? count[k - m][m] : 0);
    }
  }
  return count;
}

}  // namespace

std::vector<GnComponent> build_gn(const TripleParams& params, std::uint64_t n) {
  if (n < 1) throw ParameterError("n must be at least 1");
  std::vector<GnComponent> out;
  std::map<std::pair<std::uint64_t, unsigned>, std::size_t> index;
  for (std::uint64_t m = 1; m <= n; ++m) {
    const Decomposition dec = decompose(m, params);
    auto [it, inserted] = index.try_emplace({dec.multiplier, dec.height}, out.size());
    if (inserted) out.push_back(GnComponent{dec.height, dec.multiplier, {}, {}});
    GnComponent& component = out[it->second];
    component.coords.push_back(dec.coord);
    component.graph.vertices.push_back(m);
  }
  for (auto& component : out) {
    component.graph.edges = grid_graph(component.coords).edges;
  }
  return out;
}

ComponentGraph grid_graph(std::span<const GridCoord> cells) {
  ComponentGraph graph;
  std::map<GridCoord, std::size_t> at;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    at.emplace(cells[i], i);
    graph.vertices.push_back(i);
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (GridCoord next : {GridCoord{cells[i].x + 1, cells[i].y},
                           GridCoord{cells[i].x, cells[i].y + 1}}) {
      if (auto it = at.find(next); it != at.end()) graph.edges.emplace_back(i, it->second);
    }
  }
  return graph;
}

ComponentGraph pair_graph(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  ComponentGraph graph;
  for (std::uint64_t v = 1; v <= n; ++v) graph.vertices.push_back(v);
  for (std::uint64_t x = 1; x <= n; ++x) {
    const detail::Wide bx = static_cast<detail::Wide>(b) * x;
    if (bx % a != 0) continue;
    const detail::Wide y = bx / a;
    if (y <= n) graph.edges.emplace_back(x - 1, static_cast<std::size_t>(y - 1));
  }
  return graph;
}

std::uint64_t exact_alpha_matching(const ComponentGraph& graph) {
  const auto adj = adjacency(graph);
  const auto colour = two_colour(adj);
  if (!colour) throw VerificationError("exact_alpha_matching: graph is not bipartite");
  const std::size_t matching = HopcroftKarp(adj, *colour).run();
  return graph.vertices.size() - matching;
}

std::uint64_t exact_alpha_exhaustive(const ComponentGraph& graph) {
  const std::size_t size = graph.vertices.size();
  if (size > kExhaustiveLimit) {
    throw ParameterError("exact_alpha_exhaustive: " + std::to_string(size) +
                         " vertices exceeds the limit of " + std::to_string(kExhaustiveLimit));
  }
  std::vector<Mask> closed_nbhd(size);
  for (std::size_t v = 0; v < size; ++v) closed_nbhd[v] = Mask{1} << v;
  for (const auto& [u, v] : graph.edges) {
    closed_nbhd[u] |= Mask{1} << v;
    closed_nbhd[v] |= Mask{1} << u;
  }
  const Mask all = size == 32 ? ~Mask{0} : (Mask{1} << size) - 1;
  unsigned best = 0;
  branch(all, 0, closed_nbhd, best);
  return best;
}

FiniteGraphReport analyze_gn(const TripleParams& params, std::uint64_t n, unsigned cutoff) {
  if (n < 1) throw ParameterError("n must be at least 1");
  FiniteGraphReport report{n, {}, 0, 0};
  std::vector<StepFunction> tables;
  for (std::uint64_t q = 1; q <= n; ++q) {
    if (!params.admissible(q)) continue;
    std::uint64_t lowest = q;  // a^p q
    for (unsigned p = 0; lowest <= n; ++p) {
      if (tables.size() <= p) tables.push_back(f_table(params, p));
      const std::uint64_t cap = n / q;
      const StepFunction& table = tables[p];
      const std::uint64_t alpha = table.at(cap);
      report.components.push_back(
          {ComponentId{p, q, classify(params, p, q, n, cutoff)}, table.active_count(cap), alpha});
      report.total_alpha += alpha;
      if (lowest > n / params.a) break;
      lowest *= params.a;
    }
  }
  report.ratio = Rational(Integer(report.total_alpha), Integer(n));
  report.ratio.canonicalize();
  return report;
}

Rational empirical_density(const TripleParams& params, std::uint64_t n) {
  if (n < 1) throw ParameterError("n must be at least 1");
  std::vector<StepFunction> tables;
  std::uint64_t total = 0;
  for (std::uint64_t q = 1; q <= n; ++q) {
    if (!params.admissible(q)) continue;
    const std::uint64_t cap = n / q;
    std::uint64_t lowest = q;
    for (unsigned p = 0; lowest <= n; ++p) {
      if (tables.size() <= p) tables.push_back(f_table(params, p));
      total += tables[p].at(cap);
      if (lowest > n / params.a) break;
      lowest *= params.a;
    }
  }
  Rational out{Integer(total), Integer(n)};
  out.canonicalize();
  return out;
}

OracleAgreement verify_gn(const TripleParams& params, std::uint64_t n) {
  OracleAgreement agreement{n, 0, 0, 0};
  std::vector<StepFunction> tables;
  for (const auto& component : build_gn(params, n)) {
    const std::uint64_t parity = parity_alpha(component.coords);
    const std::uint64_t matching = exact_alpha_matching(component.graph);
    while (tables.size() <= component.height) {
      tables.push_back(f_table(params, static_cast<unsigned>(tables.size())));
    }
    const std::uint64_t lookup = tables[component.height].at(n / component.multiplier);

    auto fail = [&](const char* what, std::uint64_t got) {
      throw VerificationError("oracle disagreement on C(p=" + std::to_string(component.height) +
                              ", q=" + std::to_string(component.multiplier) + "), n=" +
                              std::to_string(n) + ": parity " + std::to_string(parity) + ", " +
                              what + " " + std::to_string(got));
    };
    if (matching != parity) fail("matching", matching);
    if (lookup != parity) fail("step function", lookup);
    if (component.graph.vertices.size() <= kExhaustiveLimit) {
      const std::uint64_t exhaustive = exact_alpha_exhaustive(component.graph);
      if (exhaustive != parity) fail("exhaustive", exhaustive);
      ++agreement.exhaustive_checked;
    }
    ++agreement.components;
    agreement.total_alpha += parity;
  }
  return agreement;
}

std::optional<MultiplicativeWitness> find_multiplicative_violation(
    std::span<const std::uint64_t> set, std::span<const std::uint64_t> a_set,
    std::span<const std::uint64_t> b_set) {
  const std::set<std::uint64_t> members(set.begin(), set.end());
  for (std::uint64_t a : a_set) {
    if (a == 0) throw ParameterError("A must contain positive integers");
    for (std::uint64_t b : b_set) {
      if (b == 0) throw ParameterError("B must contain positive integers");
      for (std::uint64_t y : members) {
        const detail::Wide by = static_cast<detail::Wide>(b) * y;
        if (by % a != 0) continue;
        const detail::Wide x = by / a;
        if (x > std::numeric_limits<std::uint64_t>::max()) continue;
        if (!members.contains(static_cast<std::uint64_t>(x))) continue;
        if (a == b && x == y) continue;
        return MultiplicativeWitness{a, b, static_cast<std::uint64_t>(x), y};
      }
    }
  }
  return std::nullopt;
}

bool is_general_multiplicative(std::span<const std::uint64_t> set,
                               std::span<const std::uint64_t> a_set,
                               std::span<const std::uint64_t> b_set) {
  return !find_multiplicative_violation(set, a_set, b_set).has_value();
}

std::vector<GridCoord> random_staircase(std::mt19937_64& rng, unsigned max_cells) {
  if (max_cells < 1) throw ParameterError("max_cells must be at least 1");
  const auto count = partition_counts(max_cells);

  std::uint64_t total = 0;
  for (unsigned k = 1; k <= max_cells; ++k) total += count[k][k];
  std::uint64_t pick = std::uniform_int_distribution<std::uint64_t>(0, total - 1)(rng);
  unsigned remaining = 1;
  for (; remaining <= max_cells; ++remaining) {
    if (pick < count[remaining][remaining]) break;
    pick -= count[remaining][remaining];
  }

  // Column heights, non-increasing; each drawn with weight equal to the
  // number of ways to finish the partition.
  std::vector<GridCoord> cells;
  unsigned bound = remaining;
  for (unsigned column = 0; remaining > 0; ++column) {
    const std::uint64_t ways = count[remaining][bound];
    std::uint64_t r = std::uniform_int_distribution<std::uint64_t>(0, ways - 1)(rng);
    unsigned height = 1;
    for (; height <= bound; ++height) {
      const std::uint64_t with = height <= remaining ? count[remaining - height][height] : 0;
      if (r < with) break;
      r -= with;
    }
    for (unsigned y = 0; y < height; ++y) cells.push_back({column, y});
    remaining -= height;
    bound = height;
  }
  return cells;
}

bool staircase_lemma_check(std::span<const GridCoord> cells) {
  return parity_alpha(cells) == exact_alpha_exhaustive(grid_graph(cells));
}

}  // namespace sidon
