#include "bajra/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "bajra/convexity.hpp"
#include "bajra/equality.hpp"
#include "bajra/error.hpp"
#include "bajra/means.hpp"
#include "bajra/properties.hpp"
#include "bajra/registry.hpp"
#include "bajra/selective.hpp"
#include "bajra/synergy.hpp"

namespace bajra::cli {

using nlohmann::json;

std::optional<Subcommand> parse_subcommand(std::string_view name) noexcept {
  if (name == "mean") return Subcommand::Mean;
  if (name == "effort") return Subcommand::Effort;
  if (name == "synergy") return Subcommand::Synergy;
  if (name == "select") return Subcommand::Select;
  if (name == "coalition") return Subcommand::Coalition;
  if (name == "hull") return Subcommand::Hull;
  if (name == "equality") return Subcommand::Equality;
  if (name == "check") return Subcommand::Check;
  return std::nullopt;
}

std::optional<OutputFormat> parse_format(std::string_view name) noexcept {
  if (name == "plain") return OutputFormat::Plain;
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  return std::nullopt;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("BAJRA_SEED"); env != nullptr && *env != '\0') {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(Errc::BadArguments, "BAJRA_SEED is not an unsigned integer");
    }
  }
  return 42;
}

namespace {

std::string num(double v) { return fmt::format("{:.15g}", v); }

std::string point_text(const Point& x) {
  std::string s;
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? ", " : "") + num(x[i]);
  return x.size() == 1 ? s : "(" + s + ")";
}

json point_json(const Point& x) { return x.size() == 1 ? json(x[0]) : json(x); }

json load_input(const RunConfig& c) {
  if (c.input.empty()) throw Error(Errc::BadArguments, "--input is required");
  const auto first = c.input.find_first_not_of(" \t\r\n");
  std::string text;
  if (first != std::string::npos && (c.input[first] == '{' || c.input[first] == '[')) {
    text = c.input;
  } else {
    std::ifstream in(c.input);
    if (!in) throw Error(Errc::BadArguments, "cannot read input file " + c.input);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("input JSON: ") + e.what());
  }
}

MapPtr require_map(const std::string& spec) {
  if (spec.empty()) throw Error(Errc::BadArguments, "--map is required");
  return make_map(spec);
}

std::string csv_field(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return num(v.get<double>());
  if (v.is_primitive()) return v.dump();
  std::string text = v.dump();
  std::string quoted = "\"";
  for (char ch : text) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return quoted + '"';
}

// One header row of keys, one row of values; nested values are quoted JSON.
void emit(std::ostream& out, OutputFormat format, const json& j, const std::string& plain) {
  if (format == OutputFormat::Json) {
    out << j.dump() << '\n';
  } else if (format == OutputFormat::Csv) {
    std::string header, row;
    for (const auto& [key, value] : j.items()) {
      header += (header.empty() ? "" : ",") + key;
      row += (row.empty() ? "" : ",") + csv_field(value);
    }
    out << header << '\n' << row << '\n';
  } else {
    out << plain;
  }
}

int run_aggregate(const RunConfig& c, std::ostream& out) {
  const MapPtr map = require_map(c.map_spec);
  const AggregationOutcome o = aggregate(*map, profile_from_json(load_input(c)));
  const json j = {{"map", map->name()}, {"decision", point_json(o.decision)}, {"effort", o.effort}};
  const std::string plain = c.subcommand == Subcommand::Effort
                                ? fmt::format("effort: {}\ndecision: {}\n", num(o.effort), point_text(o.decision))
                                : fmt::format("decision: {}\neffort: {}\n", point_text(o.decision), num(o.effort));
  if (c.format == OutputFormat::Csv) {
    out << "decision,effort\n\"" << point_text(o.decision) << "\"," << num(o.effort) << '\n';
  } else {
    emit(out, c.format, j, plain);
  }
  return kExitOk;
}

int run_synergy(const RunConfig& c, std::ostream& out) {
  const MapPtr map = require_map(c.map_spec);
  const DecisionProfile p = profile_from_json(load_input(c));
  const double e = effort(*map, p);
  const double s = e - p.total_weight();
  const json j = {{"map", map->name()}, {"synergy", s}, {"effort", e}, {"arithmetic_effort", p.total_weight()}};
  emit(out, c.format, j,
       fmt::format("synergy: {}\neffort: {}\narithmetic_effort: {}\n", num(s), num(e),
                   num(p.total_weight())));
  return kExitOk;
}

int run_select(const RunConfig& c, std::ostream& out) {
  const auto rule = parse_selective_rule(c.rule);
  if (!rule) throw Error(Errc::BadArguments, "--rule must be one of pe, re, fdd, fd");
  const DecisionProfile p = profile_from_json(load_input(c));
  const Point x = select(*rule, p);
  const json j = {{"rule", to_string(*rule)}, {"decision", point_json(x)}, {"effort", arithmetic_effort(p)}};
  emit(out, c.format, j,
       fmt::format("decision: {}\neffort: {}\n", point_text(x), num(arithmetic_effort(p))));
  return kExitOk;
}

int run_coalition(const RunConfig& c, std::ostream& out) {
  if (c.weights.empty()) throw Error(Errc::BadArguments, "--weights is required");
  const CoalitionGame game = make_game(c.weights, c.quota, c.total);
  const auto table = coalition_table(game);
  if (c.format == OutputFormat::Csv) {
    out << coalition_csv(table);
    return kExitOk;
  }
  std::optional<StabilityReport> stability;
  if (game.party_weights.size() >= 3) stability = stable_coalitions(game, c.strict_preference);
  const auto labels = [](const std::vector<Coalition>& cs) {
    std::vector<std::string> v;
    for (const auto& x : cs) v.push_back(coalition_label(x));
    return v;
  };
  if (c.format == OutputFormat::Json) {
    json rows = json::array();
    for (const auto& r : table) {
      rows.push_back({{"coalition", coalition_label(r.coalition)},
                      {"threshold_effort", r.threshold_effort},
                      {"sum_individual", r.sum_individual},
                      {"synergy", r.synergy}});
    }
    json j = {{"table", rows}};
    if (stability) {
      j["stable"] = labels(stability->stable);
      j["irrelevant"] = labels(stability->irrelevant);
    }
    out << j.dump() << '\n';
    return kExitOk;
  }
  out << coalition_csv(table);
  if (stability) {
    const auto join = [](const std::vector<std::string>& v) {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i];
      return v.empty() ? std::string("none") : s;
    };
    out << fmt::format("stable ({}): {}\n", c.strict_preference ? "strict" : "weak",
                       join(labels(stability->stable)));
    out << fmt::format("irrelevant (zero synergy): {}\n", join(labels(stability->irrelevant)));
  }
  return kExitOk;
}

int run_hull(const RunConfig& c, std::ostream& out) {
  const MapPtr map = require_map(c.map_spec);
  const json in = load_input(c);
  if (!in.is_object() || !in.contains("generators") || !in.contains("query")) {
    throw Error(Errc::ParseError, "hull input needs \"generators\" and \"query\"");
  }
  HullQuery q;
  for (const auto& g : in.at("generators")) q.generators.push_back(point_from_json(g));
  q.query = point_from_json(in.at("query"));
  const HullMembership h = hull_membership(*map, q, c.tol.value_or(kHullTol));
  json j = {{"map", map->name()}, {"member", h.member}, {"residual", h.residual}};
  if (h.member) j["weights"] = h.weights;
  emit(out, c.format, j,
       fmt::format("member: {}\nresidual: {}\n", h.member ? "true" : "false", num(h.residual)));
  return kExitOk;
}

int run_equality(const RunConfig& c, std::ostream& out) {
  const MapPtr f = require_map(c.map_spec);
  if (c.other_map_spec.empty()) throw Error(Errc::BadArguments, "--with is required");
  const MapPtr g = make_map(c.other_map_spec);
  Rng rng(resolve_seed(c.seed));
  std::vector<Point> samples;
  for (int i = 0; i < 32; ++i) samples.push_back(f->domain().sample(rng));
  std::vector<DecisionProfile> probes;
  std::uniform_int_distribution<std::size_t> size(1, 5);
  for (std::size_t i = 0; i < c.trials.value_or(1000); ++i) {
    probes.push_back(random_profile(f->domain(), size(rng), rng));
  }
  EqualityTolerances tol;
  if (c.tol) tol = {*c.tol, *c.tol, *c.tol};
  const EqualityVerdict v = test_mean_equality(*f, *g, samples, probes, tol);

  const std::string verdict = v.equal ? "consistent with equality on probes" : "not equal";
  json j = {{"f", f->name()},
            {"g", g->name()},
            {"equal", v.equal},
            {"verdict", verdict},
            {"rank", v.rank},
            {"linear_map", *v.linear_map},
            {"max_fit_residual", v.max_fit_residual},
            {"max_mean_discrepancy", v.max_mean_discrepancy},
            {"max_effort_discrepancy", v.max_effort_discrepancy}};
  if (!v.equal && v.worst_probe) j["witness"] = to_json(*v.worst_probe);

  std::string plain = fmt::format("verdict: {}\nrank: {}\nA:\n", verdict, v.rank);
  for (const auto& row : *v.linear_map) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) line += (i ? " " : "  ") + num(row[i]);
    plain += line + '\n';
  }
  plain += fmt::format("max_fit_residual: {}\nmax_mean_discrepancy: {}\nmax_effort_discrepancy: {}\n",
                       num(v.max_fit_residual), num(v.max_mean_discrepancy),
                       num(v.max_effort_discrepancy));
  if (!v.equal && v.worst_probe) {
    plain += fmt::format("witness: {}\nmeans: {} vs {}\n", to_json(*v.worst_probe).dump(),
                         point_text(mean(*f, *v.worst_probe)), point_text(mean(*g, *v.worst_probe)));
  }
  emit(out, c.format, j, plain);
  return kExitOk;
}

int run_check(const RunConfig& c, std::ostream& out) {
  const MapPtr map = require_map(c.map_spec);
  Rng rng(resolve_seed(c.seed));
  const PropertyReport r = run_property_suite(*map, c.trials.value_or(200), rng);
  if (c.format == OutputFormat::Json) {
    json rows = json::array();
    for (const auto& t : r.tallies) {
      rows.push_back({{"property", t.name}, {"passed", t.passed}, {"failed", t.failed}});
    }
    out << json{{"map", map->name()}, {"properties", rows}, {"ok", r.all_passed()}}.dump() << '\n';
  } else {
    if (c.format == OutputFormat::Csv) out << "property,passed,failed\n";
    for (const auto& t : r.tallies) {
      if (c.format == OutputFormat::Csv) {
        out << fmt::format("{},{},{}\n", t.name, t.passed, t.failed);
      } else {
        out << fmt::format("{:<22} {:>5} passed {:>5} failed{}\n", t.name, t.passed, t.failed,
                           t.failed ? "  (" + t.first_failure + ")" : "");
      }
    }
  }
  return r.all_passed() ? kExitOk : kExitPropertyFailure;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.subcommand) {
      case Subcommand::Mean:
      case Subcommand::Effort: return run_aggregate(config, out);
      case Subcommand::Synergy: return run_synergy(config, out);
      case Subcommand::Select: return run_select(config, out);
      case Subcommand::Coalition: return run_coalition(config, out);
      case Subcommand::Hull: return run_hull(config, out);
      case Subcommand::Equality: return run_equality(config, out);
      case Subcommand::Check: return run_check(config, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_numeric_failure(e.code()) ? kExitNumeric : kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitInvalid;
}

}  // namespace bajra::cli
