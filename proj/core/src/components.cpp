#include "sidon/components.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sidon {

TripleParams TripleParams::make(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  if (!(1 < a && a < b && b < c)) {
    throw ParameterError("require 1 < a < b < c (got " + std::to_string(a) + ", " +
                         std::to_string(b) + ", " + std::to_string(c) + ")");
  }
  if (std::gcd(a, b) != 1 || std::gcd(a, c) != 1 || std::gcd(b, c) != 1) {
    throw ParameterError("a, b, c must be pairwise coprime (got " + std::to_string(a) + ", " +
                         std::to_string(b) + ", " + std::to_string(c) + ")");
  }
  std::uint64_t ab = 0;
  std::uint64_t abc = 0;
  if (__builtin_mul_overflow(a, b, &ab) || __builtin_mul_overflow(ab, c, &abc)) {
    throw ParameterError("a*b*c must fit in 64 bits");
  }
  return TripleParams{a, b, c};
}

GridComponent::GridComponent(const TripleParams& params, unsigned height,
                             std::uint64_t multiplier)
    : params_(params), height_(height), multiplier_(multiplier) {
  if (multiplier < 1 || !params.admissible(multiplier)) {
    throw ParameterError("multiplier must be divisible by none of a, b, c");
  }
}

Integer GridComponent::value_at(GridCoord coord) const {
  if (coord.row() > height_) throw ParameterError("coordinate outside component");
  return ipow(params_.a, height_ - coord.row()) * ipow(params_.b, coord.x) *
         ipow(params_.c, coord.y) * Integer(multiplier_);
}

std::vector<ComponentCell> GridComponent::cells_by_value() const {
  std::vector<ComponentCell> cells;
  cells.reserve(size());
  for (unsigned x = 0; x <= height_; ++x) {
    for (unsigned y = 0; x + y <= height_; ++y) {
      cells.push_back({{x, y}, value_at({x, y})});
    }
  }
  std::sort(cells.begin(), cells.end(),
            [](const ComponentCell& l, const ComponentCell& r) { return l.value < r.value; });
  return cells;
}

std::string GridComponent::render_rows() const {
  std::ostringstream out;
  out << "C(p=" << height_ << ", q=" << multiplier_ << ") for (a,b,c)=(" << params_.a << ","
      << params_.b << "," << params_.c << ")\n";
  for (unsigned row = 0; row <= height_; ++row) {
    out << "row " << row << ":";
    for (unsigned x = 0; x <= row; ++x) out << ' ' << value_at({x, row - x}).get_str();
    out << '\n';
  }
  return out.str();
}

TruncatedComponent truncate(const TripleParams& params, unsigned height, const Integer& cap) {
  TruncatedComponent out{GridComponent(params, height, 1), cap, {}};
  for (const auto& cell : out.base.cells_by_value()) {
    if (cell.value > cap) break;
    out.active.push_back(cell.coord);
  }
  return out;
}

bool is_staircase(std::span<const GridCoord> cells) {
  const std::set<GridCoord> present(cells.begin(), cells.end());
  for (const auto& cell : present) {
    if (cell.x > 0 && !present.contains({cell.x - 1, cell.y})) return false;
    if (cell.y > 0 && !present.contains({cell.x, cell.y - 1})) return false;
  }
  return true;
}

std::uint64_t parity_alpha(std::span<const GridCoord> cells) {
  if (!is_staircase(cells)) {
    throw std::domain_error("parity_alpha: cell set is not downward closed");
  }
  std::uint64_t even = 0;
  std::uint64_t odd = 0;
  for (const auto& cell : cells) (cell.row() % 2 == 0 ? even : odd) += 1;
  return std::max(even, odd);
}

std::uint64_t parity_alpha(const TruncatedComponent& component) {
  return parity_alpha(std::span<const GridCoord>(component.active));
}

std::uint64_t alpha_complete(unsigned height) {
  const std::uint64_t i = (height + 1) / 2;
  return height % 2 == 1 ? i * (i + 1) : (i + 1) * (i + 1);
}

StepFunction::StepFunction(unsigned height, std::vector<Breakpoint> steps)
    : height_(height), steps_(std::move(steps)) {
  narrow_.reserve(steps_.size());
  for (std::size_t k = 0; k < steps_.size(); ++k) {
    if (k > 0 && !(steps_[k - 1].value < steps_[k].value)) {
      throw std::logic_error("StepFunction breakpoints must be strictly increasing");
    }
    narrow_.push_back(steps_[k].value.fits_ulong_p()
                          ? steps_[k].value.get_ui()
                          : std::numeric_limits<std::uint64_t>::max());
  }
}

std::uint64_t StepFunction::at(const Integer& cap) const {
  auto it = std::upper_bound(steps_.begin(), steps_.end(), cap,
                             [](const Integer& v, const Breakpoint& bp) { return v < bp.value; });
  return it == steps_.begin() ? 0 : std::prev(it)->alpha;
}

std::uint64_t StepFunction::at(std::uint64_t cap) const {
  if (cap == std::numeric_limits<std::uint64_t>::max()) return at(Integer(cap));
  const std::size_t k = active_count(cap);
  return k == 0 ? 0 : steps_[k - 1].alpha;
}

std::size_t StepFunction::active_count(std::uint64_t cap) const {
  if (cap == std::numeric_limits<std::uint64_t>::max()) {
    const Integer big(cap);
    return static_cast<std::size_t>(
        std::upper_bound(steps_.begin(), steps_.end(), big,
                         [](const Integer& v, const Breakpoint& bp) { return v < bp.value; }) -
        steps_.begin());
  }
  return static_cast<std::size_t>(std::upper_bound(narrow_.begin(), narrow_.end(), cap) -
                                  narrow_.begin());
}

StepFunction f_table(const TripleParams& params, unsigned height) {
  const GridComponent component(params, height, 1);
  std::vector<Breakpoint> steps;
  steps.reserve(component.size());
  std::uint64_t even = 0;
  std::uint64_t odd = 0;
  for (auto& cell : component.cells_by_value()) {
    (cell.coord.row() % 2 == 0 ? even : odd) += 1;
    steps.push_back({std::move(cell.value), std::max(even, odd)});
  }
  return StepFunction(height, std::move(steps));
}

std::uint64_t q_copy_alpha(const StepFunction& table, std::uint64_t q, std::uint64_t n,
                           const TripleParams& params) {
  if (q < 1 || !params.admissible(q)) {
    throw ParameterError("q must be divisible by none of a, b, c");
  }
  if (ipow(params.a, table.height()) * Integer(q) > Integer(n)) {
    throw ParameterError("component C(p=" + std::to_string(table.height()) +
                         ", q=" + std::to_string(q) + ") does not meet [1, n]");
  }
  return table.at(n / q);
}

std::uint64_t q_copy_alpha(const TripleParams& params, unsigned height, std::uint64_t q,
                           std::uint64_t n) {
  return q_copy_alpha(f_table(params, height), q, n, params);
}

std::uint64_t admissible_count(const TripleParams& params, std::uint64_t limit) {
  const std::uint64_t a = params.a;
  const std::uint64_t b = params.b;
  const std::uint64_t c = params.c;
  const std::uint64_t divisible = limit / a + limit / b + limit / c - limit / (a * b) -
                                  limit / (a * c) - limit / (b * c) + limit / (a * b * c);
  return limit - divisible;
}

Decomposition decompose(std::uint64_t m, const TripleParams& params) {
  if (m < 1) throw ParameterError("decompose requires m >= 1");
  auto strip = [&m](std::uint64_t base) {
    unsigned exponent = 0;
    while (m % base == 0) {
      m /= base;
      ++exponent;
    }
    return exponent;
  };
  const unsigned ea = strip(params.a);
  const unsigned eb = strip(params.b);
  const unsigned ec = strip(params.c);
  return Decomposition{ea + eb + ec, {eb, ec}, m};
}

const char* to_string(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::complete:
      return "complete";
    case ComponentKind::small:
      return "small";
    case ComponentKind::large:
      return "large";
  }
  return "?";
}

ComponentKind classify(const TripleParams& params, unsigned height, std::uint64_t q,
                       std::uint64_t n, unsigned cutoff) {
  const Integer bound(n);
  if (ipow(params.a, height) * Integer(q) > bound) {
    throw ParameterError("component does not meet [1, n]");
  }
  if (ipow(params.c, height) * Integer(q) <= bound) return ComponentKind::complete;
  return height <= cutoff ? ComponentKind::small : ComponentKind::large;
}

}  // namespace sidon
