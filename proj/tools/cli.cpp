#include "cli.hpp"

#include "sidon/components.hpp"
#include "sidon/density.hpp"
#include "sidon/oracle.hpp"
#include "sidon/pair_sidon.hpp"
#include "sidon/rational.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <fstream>
#include <future>
#include <optional>
#include <ostream>
#include <sstream>

namespace sidon::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr unsigned kDecimalDigits = 12;

enum class Format { json, csv, plain };

Json decimal(const Rational& value, Rounding rounding, unsigned digits = kDecimalDigits) {
  return Json{{"text", to_decimal(value, digits, rounding)},
              {"digits", digits},
              {"rounding", rounding == Rounding::down ? "down" : "up"}};
}

std::string scalar_text(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_null()) return "";
  return value.dump();
}

// Nested objects become dotted keys; arrays are space separated.
void flatten(const Json& object, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& fields) {
  for (const auto& [key, value] : object.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      flatten(value, name, fields);
    } else if (value.is_array()) {
      std::string joined;
      for (const auto& item : value) {
        if (!joined.empty()) joined += ' ';
        joined += scalar_text(item);
      }
      fields.emplace_back(name, joined);
    } else {
      fields.emplace_back(name, scalar_text(value));
    }
  }
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char ch : field) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + '"';
}

void emit_rows(const std::vector<Json>& rows, Format format, std::ostream& out) {
  if (format == Format::json) {
    out << (rows.size() == 1 ? rows.front() : Json(rows)).dump(2) << '\n';
    return;
  }
  std::vector<std::vector<std::pair<std::string, std::string>>> flat;
  for (const auto& row : rows) {
    flat.emplace_back();
    flatten(row, "", flat.back());
  }
  if (format == Format::csv) {
    if (flat.empty()) return;
    for (std::size_t i = 0; i < flat.front().size(); ++i) {
      out << (i ? "," : "") << csv_escape(flat.front()[i].first);
    }
    out << '\n';
    for (const auto& fields : flat) {
      for (std::size_t i = 0; i < fields.size(); ++i) {
        out << (i ? "," : "") << csv_escape(fields[i].second);
      }
      out << '\n';
    }
    return;
  }
  for (std::size_t r = 0; r < flat.size(); ++r) {
    if (r) out << '\n';
    for (const auto& [key, value] : flat[r]) out << key << ": " << value << '\n';
  }
}

void emit(const Json& object, Format format, std::ostream& out) {
  emit_rows({object}, format, out);
}

std::vector<std::uint64_t> parse_list(const std::string& text, const char* what) {
  std::vector<std::uint64_t> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    const Rational value = parse_fraction(item);
    if (value.get_den() != 1 || value <= 0 || !value.get_num().fits_ulong_p()) {
      throw ParameterError(std::string(what) + " must list positive integers, got '" + item + "'");
    }
    values.push_back(value.get_num().get_ui());
  }
  if (values.empty()) throw ParameterError(std::string(what) + " must be nonempty");
  return values;
}

std::vector<std::uint64_t> read_set_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw ParameterError("cannot open set file '" + path + "'");
  std::vector<std::uint64_t> values;
  std::string line;
  for (std::size_t number = 1; std::getline(file, line); ++number) {
    line.erase(0, line.find_first_not_of(" \t\r"));
    line.erase(line.find_last_not_of(" \t\r") + 1);
    if (line.empty()) continue;
    const bool digits_only = std::all_of(line.begin(), line.end(),
                                         [](char ch) { return ch >= '0' && ch <= '9'; });
    const Integer value = digits_only ? Integer(line, 10) : Integer(0);
    if (!digits_only || value <= 0 || !value.fits_ulong_p()) {
      throw ParameterError(path + ":" + std::to_string(number) +
                           ": expected a positive integer, got '" + line + "'");
    }
    values.push_back(value.get_ui());
  }
  return values;
}

Json interval_json(const DensityInterval& interval) {
  const TripleParams& t = interval.params;
  Json out{{"a", t.a}, {"b", t.b}, {"c", t.c}, {"mode", "certified"}};
  out["epsilon"] = interval.epsilon > 0 ? Json(to_fraction_string(interval.epsilon)) : Json();
  out["cutoff"] = interval.cutoff;
  out["delta_complete"] = to_fraction_string(interval.delta_complete);
  out["delta_small"] = to_fraction_string(interval.delta_small);
  out["tail_bound"] = to_fraction_string(interval.tail_bound);
  out["lower"] = to_fraction_string(interval.lower);
  out["upper"] = to_fraction_string(interval.upper);
  out["delta_complete_decimal"] = decimal(interval.delta_complete, Rounding::down);
  out["delta_small_decimal"] = decimal(interval.delta_small, Rounding::down);
  out["tail_bound_decimal"] = decimal(interval.tail_bound, Rounding::up);
  out["lower_decimal"] = decimal(interval.lower, Rounding::down);
  out["upper_decimal"] = decimal(interval.upper, Rounding::up);
  return out;
}

Json convergence_json(const TripleParams& t, const ConvergenceEstimate& estimate) {
  return Json{{"a", t.a},
              {"b", t.b},
              {"c", t.c},
              {"mode", "converge"},
              {"digits", estimate.digits},
              {"estimate", estimate.decimal},
              {"estimate_rounding", "down"},
              {"cutoff", estimate.cutoff},
              {"value", to_fraction_string(estimate.value)}};
}

constexpr std::array<std::array<std::uint64_t, 3>, 10> kTableTriples{{
    {2, 3, 5}, {2, 3, 7}, {2, 5, 7}, {2, 5, 9}, {2, 7, 9},
    {3, 4, 5}, {3, 4, 7}, {3, 5, 7}, {3, 5, 8}, {3, 7, 8},
}};

Format parse_format(const std::string& name, Format fallback) {
  if (name.empty()) return fallback;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  return Format::plain;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extremal densities of multiplicative Sidon-type sets"};
  app.name("sidon");
  app.require_subcommand(1);
  app.fallthrough();  // --format may follow the subcommand

  std::string format_name;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"json", "csv", "plain"}));

  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t c = 0;
  std::uint64_t n = 0;
  std::string eps_text;
  std::string mode = "certified";
  std::optional<unsigned> cutoff;
  unsigned digits = 4;
  bool verify = false;
  std::optional<std::uint64_t> verify_upto;
  unsigned height = 0;
  std::uint64_t multiplier = 1;
  std::string a_list;
  std::string b_list;
  std::string set_file;

  auto* pair_density_cmd = app.add_subcommand("pair-density", "Maximum density b/(b+gcd(a,b))");
  pair_density_cmd->add_option("--a", a)->required();
  pair_density_cmd->add_option("--b", b)->required();

  auto* pair_construct_cmd =
      app.add_subcommand("pair-construct", "Maximum set in [n] with a*x != b*y");
  pair_construct_cmd->add_option("--a", a)->required();
  pair_construct_cmd->add_option("--b", b)->required();
  pair_construct_cmd->add_option("--n", n)->required();
  pair_construct_cmd->add_flag("--verify", verify, "Check against the path decomposition");

  auto* triple_density_cmd =
      app.add_subcommand("triple-density", "Density enclosure for a*x != b*y, a*x != c*y");
  triple_density_cmd->add_option("--a", a)->required();
  triple_density_cmd->add_option("--b", b)->required();
  triple_density_cmd->add_option("--c", c)->required();
  triple_density_cmd->add_option("--eps", eps_text, "Target width, e.g. 5e-5 or 1/20000");
  triple_density_cmd->add_option("--mode", mode)->check(CLI::IsMember({"certified", "converge"}));
  triple_density_cmd->add_option("--d", cutoff, "Explicit cutoff height");
  triple_density_cmd->add_option("--digits", digits, "Digits for converge mode");

  auto* table_cmd = app.add_subcommand("triple-table", "Reference table of ten triples");
  table_cmd->add_option("--digits", digits, "Digits for the converged estimate");
  table_cmd->add_option("--eps", eps_text, "Width of the certified interval (default 5e-5)");

  auto* empirical_cmd = app.add_subcommand("empirical", "alpha(G_n)/n for the triple graph");
  empirical_cmd->add_option("--a", a)->required();
  empirical_cmd->add_option("--b", b)->required();
  empirical_cmd->add_option("--c", c)->required();
  empirical_cmd->add_option("--n", n)->required();
  empirical_cmd->add_option("--d", cutoff, "Cutoff used to split small/large (default 22)");
  empirical_cmd->add_option("--verify-upto", verify_upto,
                            "Cross-check every component of G_min(n,V) with all oracles");

  auto* check_cmd = app.add_subcommand("check-set", "Check the A-vs-B multiplicative condition");
  check_cmd->add_option("--A", a_list, "Comma-separated A")->required();
  check_cmd->add_option("--B", b_list, "Comma-separated B")->required();
  check_cmd->add_option("--set-file", set_file, "Newline-delimited integers")->required();

  auto* component_cmd = app.add_subcommand("component", "Dump a component row by row");
  component_cmd->add_option("--a", a)->required();
  component_cmd->add_option("--b", b)->required();
  component_cmd->add_option("--c", c)->required();
  component_cmd->add_option("--p", height)->required();
  component_cmd->add_option("--q", multiplier);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (pair_density_cmd->parsed()) {
      const PairParams p = reduce_pair(a, b);
      const Rational density = pair_density(p);
      emit(Json{{"a", p.a},
                {"b", p.b},
                {"g", p.g},
                {"density", to_fraction_string(density)},
                {"density_decimal", decimal(density, Rounding::down)}},
           parse_format(format_name, Format::json), out);
      return kSuccess;
    }

    if (pair_construct_cmd->parsed()) {
      if (n < 1) throw ParameterError("--n must be at least 1");
      const PairParams p = reduce_pair(a, b);
      const ExtremalPairSet set = construct_extremal_set(p, n);
      const Format format = parse_format(format_name, Format::json);

      Json result{{"a", p.a}, {"b", p.b}, {"g", p.g}, {"n", n},
                  {"cardinality", set.cardinality()}};
      std::optional<std::string> failure;
      if (verify) {
        const std::uint64_t alpha = path_alpha(build_path_decomposition(p, n));
        const bool multiplicative = is_pair_multiplicative(set.members, p.a, p.b);
        const bool bounded = cardinality_bounds(p, n).contains(Rational(set.cardinality()));
        result["path_alpha"] = alpha;
        result["multiplicative"] = multiplicative;
        result["within_bounds"] = bounded;
        result["verified"] = alpha == set.cardinality() && multiplicative && bounded;
        if (!result["verified"].get<bool>()) {
          failure = "verification failed: |T_n|=" + std::to_string(set.cardinality()) +
                    ", path alpha=" + std::to_string(alpha);
        }
      }

      if (format == Format::plain) {
        out << set.cardinality() << '\n';
      } else if (format == Format::csv) {
        out << "member\n";
        for (std::uint64_t m : set.members) out << m << '\n';
      } else {
        result["members"] = set.members;
        out << result.dump(2) << '\n';
      }
      if (failure) {
        err << "error: " << *failure << '\n';
        return kVerification;
      }
      return kSuccess;
    }

    if (triple_density_cmd->parsed()) {
      const TripleParams t = TripleParams::make(a, b, c);
      const Format format = parse_format(format_name, Format::json);
      if (mode == "converge") {
        emit(convergence_json(t, convergence_estimate(t, digits)), format, out);
        return kSuccess;
      }
      if (cutoff) {
        DensityInterval interval = density_interval(t, *cutoff);
        if (!eps_text.empty()) interval.epsilon = parse_decimal(eps_text);
        emit(interval_json(interval), format, out);
        return kSuccess;
      }
      if (eps_text.empty()) throw ParameterError("certified mode needs --eps or --d");
      emit(interval_json(approximate_density(t, parse_decimal(eps_text))), format, out);
      return kSuccess;
    }

    if (table_cmd->parsed()) {
      const Rational eps = parse_decimal(eps_text.empty() ? "5e-5" : eps_text);
      std::vector<std::future<Json>> jobs;
      for (const auto& triple : kTableTriples) {
        jobs.push_back(std::async(std::launch::async, [triple, eps, digits] {
          const TripleParams t = TripleParams::make(triple[0], triple[1], triple[2]);
          const ConvergenceEstimate estimate = convergence_estimate(t, digits);
          const DensityInterval interval = approximate_density(t, eps);
          return Json{{"a", t.a},
                      {"b", t.b},
                      {"c", t.c},
                      {"estimate", estimate.decimal},
                      {"estimate_digits", estimate.digits},
                      {"estimate_rounding", "down"},
                      {"estimate_cutoff", estimate.cutoff},
                      {"epsilon", to_fraction_string(eps)},
                      {"cutoff", interval.cutoff},
                      {"lower", to_fraction_string(interval.lower)},
                      {"upper", to_fraction_string(interval.upper)},
                      {"lower_decimal", decimal(interval.lower, Rounding::down)},
                      {"upper_decimal", decimal(interval.upper, Rounding::up)}};
        }));
      }
      std::vector<Json> rows;
      for (auto& job : jobs) rows.push_back(job.get());
      emit_rows(rows, parse_format(format_name, Format::csv), out);
      return kSuccess;
    }

    if (empirical_cmd->parsed()) {
      if (n < 1) throw ParameterError("--n must be at least 1");
      const TripleParams t = TripleParams::make(a, b, c);
      const FiniteGraphReport report = analyze_gn(t, n, cutoff.value_or(22));
      std::uint64_t by_kind[3] = {0, 0, 0};
      std::uint64_t counts[3] = {0, 0, 0};
      for (const auto& component : report.components) {
        by_kind[static_cast<int>(component.id.kind)] += component.alpha;
        counts[static_cast<int>(component.id.kind)] += 1;
      }
      Json result{{"a", t.a},
                  {"b", t.b},
                  {"c", t.c},
                  {"n", n},
                  {"alpha", report.total_alpha},
                  {"ratio", to_fraction_string(report.ratio)},
                  {"ratio_decimal", decimal(report.ratio, Rounding::down)},
                  {"cutoff", cutoff.value_or(22)},
                  {"components", Json{{"complete", counts[0]},
                                      {"small", counts[1]},
                                      {"large", counts[2]}}},
                  {"alpha_by_kind", Json{{"complete", by_kind[0]},
                                         {"small", by_kind[1]},
                                         {"large", by_kind[2]}}}};
      if (verify_upto) {
        const std::uint64_t checked_n = std::min(n, std::max<std::uint64_t>(*verify_upto, 1));
        const OracleAgreement agreement = verify_gn(t, checked_n);
        if (checked_n == n && agreement.total_alpha != report.total_alpha) {
          throw VerificationError("explicit G_n total " + std::to_string(agreement.total_alpha) +
                                  " differs from step-function total " +
                                  std::to_string(report.total_alpha));
        }
        result["verification"] = Json{{"n", agreement.n},
                                      {"components", agreement.components},
                                      {"exhaustive_checked", agreement.exhaustive_checked},
                                      {"total_alpha", agreement.total_alpha},
                                      {"agree", true}};
      }
      emit(result, parse_format(format_name, Format::json), out);
      return kSuccess;
    }

    if (check_cmd->parsed()) {
      const auto a_set = parse_list(a_list, "--A");
      const auto b_set = parse_list(b_list, "--B");
      const auto set = read_set_file(set_file);
      const auto witness = find_multiplicative_violation(set, a_set, b_set);
      Json result{{"A", a_set}, {"B", b_set}, {"size", set.size()},
                  {"multiplicative", !witness.has_value()}};
      result["witness"] = witness ? Json{{"a", witness->a},
                                         {"b", witness->b},
                                         {"x", witness->x},
                                         {"y", witness->y}}
                                  : Json();
      emit(result, parse_format(format_name, Format::json), out);
      return kSuccess;
    }

    if (component_cmd->parsed()) {
      const TripleParams t = TripleParams::make(a, b, c);
      const GridComponent component(t, height, multiplier);
      const Format format = parse_format(format_name, Format::plain);
      if (format == Format::plain) {
        out << component.render_rows();
        return kSuccess;
      }
      Json rows = Json::array();
      for (unsigned row = 0; row <= height; ++row) {
        Json values = Json::array();
        for (unsigned x = 0; x <= row; ++x) values.push_back(component.value_at({x, row - x}).get_str());
        rows.push_back(values);
      }
      emit(Json{{"a", t.a}, {"b", t.b}, {"c", t.c}, {"p", height}, {"q", multiplier},
                {"rows", rows}},
           format, out);
      return kSuccess;
    }
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const VerificationError& e) {
    err << "verification failure: " << e.what() << '\n';
    return kVerification;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << '\n';
    return kVerification;
  }
  return kUsage;
}

}  // namespace sidon::cli
