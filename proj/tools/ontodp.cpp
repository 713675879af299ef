// Command-line front end: saturate graphs, compute sensitivities, release
// noisy answers, check well-suitedness, and run the identification game.
//
// Exit codes are stable API:
//   0 ok / spaces equal       1 mismatch verdict    2 parse or input error
//   3 enumeration budget      4 database not saturated
//   5 invalid epsilon         6 degenerate game

#include <cmath>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "ontodp/adversary.hpp"
#include "ontodp/errors.hpp"
#include "ontodp/io.hpp"
#include "ontodp/laplace.hpp"
#include "ontodp/sensitivity.hpp"
#include "ontodp/spaces.hpp"

namespace {

using nlohmann::json;
using namespace ontodp;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;
constexpr int kExitNotSaturated = 4;
constexpr int kExitBadEpsilon = 5;
constexpr int kExitDegenerate = 6;

struct Options {
  std::string data_path;
  std::string rules_path;
  std::string schema_path;
  std::string query_path;
  std::string prior_path;
  double epsilon = 1.0;
  std::uint64_t seed = 0;
  std::string semantics = "classical";
  std::uint64_t trials = 10000;
  std::size_t antecedent_cap = kDefaultAntecedentCap;
  bool verbose = false;
  std::string format = "text";

  bool json_output() const { return format == "json"; }
};

std::string format_double(double value) {
  std::ostringstream out;
  out << std::setprecision(12) << value;
  return out.str();
}

json graph_to_json(const Graph& g) {
  json lines = json::array();
  for (const Triple& t : g.triples()) lines.push_back(to_string(t));
  return lines;
}

void print_graph_block(std::ostream& out, const Graph& g, const std::string& indent) {
  for (const Triple& t : g.triples()) out << indent << to_string(t) << "\n";
}

// Loads and cross-checks everything a subcommand asked for before any
// computation starts.
struct Inputs {
  std::optional<Graph> data;
  std::optional<Graph> prior;
  std::optional<Schema> schema;
  std::optional<RuleSet> rules;
  std::optional<CountQuery> query;

  SpaceConfig space_config() const {
    SpaceConfig cfg;
    if (schema) cfg.schema = *schema;
    if (rules) cfg.rules = *rules;
    cfg.restrict_to_valid = true;
    return cfg;
  }
};

Inputs load_inputs(const Options& opt, bool need_data, bool need_rules, bool need_schema,
                   bool need_query, bool need_prior) {
  Inputs in;
  if (need_data) in.data = load_triples(opt.data_path);
  if (need_rules) in.rules = load_rules(opt.rules_path);
  if (need_schema) in.schema = load_schema(opt.schema_path);
  if (need_query) in.query = load_query(opt.query_path);
  if (need_prior) in.prior = load_triples(opt.prior_path);
  return in;
}

int cmd_saturate(const Options& opt) {
  const Inputs in = load_inputs(opt, true, true, false, false, false);
  const Graph saturated = saturate(*in.data, *in.rules);
  if (opt.json_output()) {
    json out;
    out["triples"] = graph_to_json(saturated);
    out["size"] = saturated.size();
    std::cout << out.dump(2) << "\n";
  } else {
    write_canonical(std::cout, saturated);
  }
  return kExitOk;
}

int cmd_sensitivity(const Options& opt) {
  const Inputs in = load_inputs(opt, true, true, true, true, false);
  const SpaceConfig cfg = in.space_config();
  const Semantics semantics = parse_semantics(opt.semantics);

  SensitivityResult result;
  switch (semantics) {
    case Semantics::classical:
      result = classical_sensitivity(*in.query, *in.data, cfg);
      break;
    case Semantics::onto:
      result = onto_sensitivity(*in.query, *in.data, cfg, opt.antecedent_cap);
      break;
    case Semantics::perceived:
      result = perceived_sensitivity(*in.query, *in.data, cfg, opt.antecedent_cap);
      break;
  }

  if (opt.json_output()) {
    json out;
    out["sensitivity"] = result.value;
    out["semantics"] = to_string(semantics);
    out["empty_neighborhood"] = result.empty_neighborhood;
    if (opt.verbose && result.witness) {
      out["witness_a"] = graph_to_json(result.witness->first);
      out["witness_b"] = graph_to_json(result.witness->second);
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "sensitivity " << result.value << "\n";
    std::cout << "semantics " << to_string(semantics) << "\n";
    if (opt.verbose) {
      std::cout << "empty_neighborhood " << (result.empty_neighborhood ? "true" : "false")
                << "\n";
      if (result.witness) {
        std::cout << "witness_a\n";
        print_graph_block(std::cout, result.witness->first, "  ");
        std::cout << "witness_b\n";
        print_graph_block(std::cout, result.witness->second, "  ");
      }
    }
  }
  return kExitOk;
}

int cmd_release(const Options& opt) {
  const Inputs in = load_inputs(opt, true, true, true, true, false);
  const SpaceConfig cfg = in.space_config();
  const Semantics semantics = parse_semantics(opt.semantics);
  if (!std::isfinite(opt.epsilon) || opt.epsilon <= 0.0)
    throw InvalidEpsilon("epsilon must be a positive finite value");

  SensitivityResult sens;
  switch (semantics) {
    case Semantics::classical:
      sens = classical_sensitivity(*in.query, *in.data, cfg);
      break;
    case Semantics::onto:
      sens = onto_sensitivity(*in.query, *in.data, cfg, opt.antecedent_cap);
      break;
    case Semantics::perceived:
      sens = perceived_sensitivity(*in.query, *in.data, cfg, opt.antecedent_cap);
      break;
  }

  ReleaseSpec spec{opt.epsilon, sens.value, opt.seed};
  const ReleaseRecord record = release(*in.query, *in.data, spec, semantics);

  if (opt.json_output()) {
    json out;
    out["noisy_value"] = record.noisy_value;
    out["epsilon"] = record.epsilon;
    out["sensitivity"] = record.sensitivity;
    out["sensitivity_semantics"] = to_string(record.semantics);
    out["seed"] = record.seed;
    out["scale"] = record.scale;
    out["rng_algorithm"] = record.rng_algorithm;
    json warnings = json::array();
    if (record.raw_release) warnings.push_back("SENSITIVITY_ZERO_RAW_RELEASE");
    out["warnings"] = warnings;
    if (opt.verbose) out["true_answer"] = evaluate(*in.query, *in.data);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "noisy_value " << format_double(record.noisy_value) << "\n";
    std::cout << "epsilon " << format_double(record.epsilon) << "\n";
    std::cout << "sensitivity " << record.sensitivity << "\n";
    std::cout << "sensitivity_semantics " << to_string(record.semantics) << "\n";
    std::cout << "seed " << record.seed << "\n";
    std::cout << "scale " << format_double(record.scale) << "\n";
    std::cout << "rng_algorithm " << record.rng_algorithm << "\n";
    if (record.raw_release) std::cout << "warning SENSITIVITY_ZERO_RAW_RELEASE\n";
    if (opt.verbose) std::cout << "true_answer " << evaluate(*in.query, *in.data) << "\n";
  }
  return kExitOk;
}

int cmd_check_well_suited(const Options& opt) {
  const Inputs in = load_inputs(opt, true, true, true, false, false);
  const SpaceConfig cfg = in.space_config();
  const Semantics semantics = parse_semantics(opt.semantics);

  const WellSuitedReport report =
      check_well_suited(*in.data, cfg, semantics, opt.antecedent_cap);

  if (opt.json_output()) {
    json out;
    out["verdict"] = report.equal ? "WELL_SUITED" : "MISMATCH";
    out["semantics"] = to_string(semantics);
    out["defense_size"] = report.defense.size();
    out["attack_union_size"] = report.attack_union.size();
    json leaks = json::array();
    for (const Graph& g : report.leakage_witnesses) leaks.push_back(graph_to_json(g));
    json over = json::array();
    for (const Graph& g : report.overprotection_witnesses) over.push_back(graph_to_json(g));
    out["leakage_witnesses"] = leaks;
    out["overprotection_witnesses"] = over;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << (report.equal ? "WELL_SUITED" : "MISMATCH") << "\n";
    std::cout << "semantics " << to_string(semantics) << "\n";
    std::cout << "defense_size " << report.defense.size() << "\n";
    std::cout << "attack_union_size " << report.attack_union.size() << "\n";
    std::cout << "leakage_witnesses " << report.leakage_witnesses.size() << "\n";
    std::cout << "overprotection_witnesses " << report.overprotection_witnesses.size()
              << "\n";
    if (opt.verbose) {
      std::size_t i = 0;
      for (const Graph& g : report.leakage_witnesses) {
        std::cout << "leakage_witness " << i++ << "\n";
        print_graph_block(std::cout, g, "  ");
      }
      i = 0;
      for (const Graph& g : report.overprotection_witnesses) {
        std::cout << "overprotection_witness " << i++ << "\n";
        print_graph_block(std::cout, g, "  ");
      }
    }
  }
  return report.equal ? kExitOk : kExitMismatch;
}

json game_to_json(const GameReport& report, Semantics semantics) {
  json out;
  out["semantics"] = to_string(semantics);
  out["success_rate"] = report.success_rate;
  out["baseline"] = report.baseline;
  out["sensitivity_used"] = report.sensitivity_used;
  out["attack_space_size"] = report.attack_space_size;
  out["trials"] = report.trials;
  return out;
}

void print_game_block(std::ostream& out, const GameReport& report, Semantics semantics) {
  out << "semantics " << to_string(semantics) << "\n";
  out << "  sensitivity_used " << report.sensitivity_used << "\n";
  out << "  success_rate " << format_double(report.success_rate) << "\n";
  out << "  baseline " << format_double(report.baseline) << "\n";
  out << "  attack_space_size " << report.attack_space_size << "\n";
  out << "  trials " << report.trials << "\n";
}

int cmd_attack_demo(const Options& opt) {
  const Inputs in = load_inputs(opt, true, true, true, true, true);
  const SpaceConfig cfg = in.space_config();
  if (!std::isfinite(opt.epsilon) || opt.epsilon <= 0.0)
    throw InvalidEpsilon("epsilon must be a positive finite value");

  GameConfig game;
  game.true_db = *in.data;
  game.prior = *in.prior;
  game.query = *in.query;
  game.epsilon = opt.epsilon;
  game.trials = opt.trials;
  game.seed = opt.seed;
  game.record_trials = opt.verbose;

  game.semantics = Semantics::classical;
  const GameReport classical = run_game(game, cfg, opt.antecedent_cap);
  game.semantics = Semantics::onto;
  const GameReport onto = run_game(game, cfg, opt.antecedent_cap);

  if (opt.json_output()) {
    json out;
    out["classical"] = game_to_json(classical, Semantics::classical);
    out["onto"] = game_to_json(onto, Semantics::onto);
    out["classical_sensitivity"] = classical.classical_value;
    out["perceived_sensitivity"] = classical.perceived_value;
    out["epsilon"] = opt.epsilon;
    out["seed"] = opt.seed;
    std::cout << out.dump(2) << "\n";
  } else {
    print_game_block(std::cout, classical, Semantics::classical);
    print_game_block(std::cout, onto, Semantics::onto);
    std::cout << "classical_sensitivity " << classical.classical_value << "\n";
    std::cout << "perceived_sensitivity " << classical.perceived_value << "\n";
    std::cout << "epsilon " << format_double(opt.epsilon) << "\n";
    std::cout << "seed " << opt.seed << "\n";
    if (opt.verbose) {
      std::cout << "trial,noisy_value,guess,correct\n";
      for (const TrialRow& row : onto.rows)
        std::cout << row.index << "," << format_double(row.noisy_value) << "," << row.guess
                  << "," << (row.correct ? 1 : 0) << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ontology-aware differential privacy toolkit"};
  app.require_subcommand(1);

  Options opt;

  auto add_common = [&](CLI::App* cmd, bool with_data, bool with_rules, bool with_schema,
                        bool with_query, bool with_prior) {
    if (with_data) cmd->add_option("--data", opt.data_path, "triple file")->required();
    if (with_rules) cmd->add_option("--rules", opt.rules_path, "rule file")->required();
    if (with_schema)
      cmd->add_option("--schema", opt.schema_path, "schema file")->required();
    if (with_query) cmd->add_option("--query", opt.query_path, "query file")->required();
    if (with_prior)
      cmd->add_option("--prior", opt.prior_path, "attacker prior triple file")->required();
    cmd->add_option("--antecedent-cap", opt.antecedent_cap,
                    "max removable triples for antecedent enumeration");
    cmd->add_flag("--verbose", opt.verbose, "print witnesses / per-trial rows");
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* saturate_cmd = app.add_subcommand("saturate", "print the saturated database");
  add_common(saturate_cmd, true, true, false, false, false);

  CLI::App* sensitivity_cmd =
      app.add_subcommand("sensitivity", "compute a query sensitivity");
  add_common(sensitivity_cmd, true, true, true, true, false);
  sensitivity_cmd->add_option("--semantics", opt.semantics, "sensitivity semantics")
      ->check(CLI::IsMember({"classical", "onto", "perceived"}));

  CLI::App* release_cmd = app.add_subcommand("release", "release a noisy query answer");
  add_common(release_cmd, true, true, true, true, false);
  release_cmd->add_option("--semantics", opt.semantics, "sensitivity semantics")
      ->check(CLI::IsMember({"classical", "onto", "perceived"}));
  release_cmd->add_option("--epsilon", opt.epsilon, "privacy budget");
  release_cmd->add_option("--seed", opt.seed, "PRNG seed");

  CLI::App* check_cmd =
      app.add_subcommand("check-well-suited", "compare defense space to attacker union");
  add_common(check_cmd, true, true, true, false, false);
  check_cmd->add_option("--semantics", opt.semantics, "defense semantics")
      ->check(CLI::IsMember({"classical", "onto"}));

  CLI::App* demo_cmd =
      app.add_subcommand("attack-demo", "run the identification game under both semantics");
  add_common(demo_cmd, true, true, true, true, true);
  demo_cmd->add_option("--epsilon", opt.epsilon, "privacy budget");
  demo_cmd->add_option("--seed", opt.seed, "PRNG seed");
  demo_cmd->add_option("--trials", opt.trials, "number of game trials");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (saturate_cmd->parsed()) return cmd_saturate(opt);
    if (sensitivity_cmd->parsed()) return cmd_sensitivity(opt);
    if (release_cmd->parsed()) return cmd_release(opt);
    if (check_cmd->parsed()) return cmd_check_well_suited(opt);
    if (demo_cmd->parsed()) return cmd_attack_demo(opt);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const SchemaViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const FixpointBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const AntecedentBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const NotSaturated& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotSaturated;
  } catch (const InvalidEpsilon& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadEpsilon;
  } catch (const DegenerateGame& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitOk;
}
