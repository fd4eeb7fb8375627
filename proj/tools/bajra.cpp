// Command-line front end: bajra <subcommand> [options]

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bajra/cli.hpp"

int main(int argc, char** argv) {
  using bajra::cli::RunConfig;

  CLI::App app{"Generalized Bajraktarevic means, efforts and synergy"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "plain";
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  double tol = 0.0;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--map", config.map_spec, "map spec: gini:p,q | power:p | hyperboloid | quasi:<expr>[,a,b] | ratio:<e1>,<e2>,<a>,<b>");
    sub->add_option("--input", config.input, "inline JSON or path to a JSON file");
    sub->add_option("--seed", seed, "random seed (default $BAJRA_SEED or 42)");
    sub->add_option("--trials", trials, "number of random trials / probes");
    sub->add_option("--tol", tol, "tolerance override");
    sub->add_option("--format", format, "plain | json | csv")
        ->check(CLI::IsMember({"plain", "json", "csv"}));
  };

  const struct {
    const char* name;
    const char* help;
  } commands[] = {
      {"mean", "aggregate a profile: B_f and beta_f"},
      {"effort", "aggregate a profile, effort first"},
      {"synergy", "synergy beta_f - sum of weights"},
      {"select", "apply a selective rule (pe, re, fdd, fd)"},
      {"coalition", "threshold-effort coalition table and stable pairs"},
      {"hull", "f-convex hull membership"},
      {"equality", "test B_f = B_g by fitting g = A f"},
      {"check", "run the axiom and property suite for a map"},
  };
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    add_common(sub);
    const std::string name = c.name;
    if (name == "select") sub->add_option("--rule", config.rule, "pe | re | fdd | fd")->required();
    if (name == "coalition") {
      sub->add_option("--weights", config.weights, "party votes")->delimiter(',')->required();
      sub->add_option("--quota", config.quota, "votes needed for a majority (default 51)");
      sub->add_option("--total", config.total, "votes in the house (default 100)");
      sub->add_flag("--strict-preference", config.strict_preference,
                    "require strict preference for stability");
    }
    if (name == "equality") sub->add_option("--with", config.other_map_spec, "second map spec")->required();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : bajra::cli::kExitInvalid;
  }

  CLI::App* chosen = app.get_subcommands().front();
  config.subcommand = *bajra::cli::parse_subcommand(chosen->get_name());
  config.format = *bajra::cli::parse_format(format);
  if (chosen->count("--seed") > 0) config.seed = seed;
  if (chosen->count("--trials") > 0) config.trials = trials;
  if (chosen->count("--tol") > 0) config.tol = tol;

  return bajra::cli::run(config, std::cout, std::cerr);
}
