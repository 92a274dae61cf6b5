#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "campedelli/fields.hpp"
#include "campedelli/involution_invariants.hpp"
#include "campedelli/scenario.hpp"

namespace {

using namespace campedelli;
using nlohmann::json;

scenario::Scenario load(const std::string& name_or_path) {
  try {
    return scenario::builtin_scenario(name_or_path);
  } catch (const std::out_of_range&) {
  }
  std::ifstream in(name_or_path);
  if (!in) throw std::runtime_error("'" + name_or_path + "' is neither a built-in scenario nor a readable file");
  std::stringstream buf;
  buf << in.rdbuf();
  return scenario::parse_scenario(buf.str());
}

std::vector<std::uint64_t> parse_primes(const std::string& list) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoull(item));
  if (out.empty()) throw CLI::ValidationError("--field", "fp: needs at least one prime");
  for (const auto p : out) {
    if (!is_prime(p)) throw CLI::ValidationError("--field", std::to_string(p) + " is not prime");
  }
  return out;
}

json grid_json() {
  json cells = json::array();
  for (const auto& c : invariants::invariant_grid()) {
    json j = {{"k", c.k}, {"K2_W", c.K2_W}, {"K2_Wprime", c.K2_Wprime}, {"p_a", c.p_a_gamma}, {"valid", c.valid}};
    if (c.valid) {
      j["quotient"] = invariants::to_string(c.quotient->type);
      if (c.numerics.R2) j["R2"] = *c.numerics.R2;
      if (c.numerics.h) j["h"] = *c.numerics.h;
      if (c.numerics.m) j["m"] = *c.numerics.m;
    } else {
      j["violations"] = c.violations;
    }
    cells.push_back(j);
  }
  return cells;
}

void print_grid_text() {
  std::cout << "k  K_W^2  K_W'^2  p_a  result\n";
  for (const auto& c : invariants::invariant_grid()) {
    std::cout << c.k << "  " << c.K2_W << "  " << c.K2_Wprime << "  " << c.p_a_gamma << "  ";
    if (c.valid) {
      std::cout << invariants::to_string(c.quotient->type);
      if (c.numerics.h) std::cout << " (R^2=" << *c.numerics.R2 << ", h=" << *c.numerics.h << ")";
      if (c.numerics.m) std::cout << " (m=" << *c.numerics.m << ")";
    } else {
      std::cout << "invalid:";
      for (const auto& v : c.violations) std::cout << " [" << v << "]";
    }
    std::cout << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification scenarios for involutions of numerical Campedelli surfaces"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "List the built-in scenarios");

  auto* show = app.add_subcommand("show", "Print the source of a built-in scenario");
  std::string show_name;
  show->add_option("name", show_name, "Scenario name")->required();

  auto* verify = app.add_subcommand("verify", "Run a scenario");
  std::string scenario_name;
  std::string field = "modular";
  bool exact = false;
  std::vector<std::string> only;
  long timeout = 900;
  std::string report_format = "text";
  std::uint64_t seed = 1;
  std::string output;
  verify->add_option("--scenario", scenario_name, "Built-in name or scenario file")->required();
  verify->add_option("--field", field, "q, fp:<p1,p2,p3> or both (default: the three built-in primes)");
  verify->add_flag("--exact", exact, "Exact arithmetic only, same as --field q");
  verify->add_option("--check", only, "Run only these check ids")->delimiter(',');
  verify->add_option("--timeout", timeout, "Per-check budget in seconds")->check(CLI::PositiveNumber);
  verify->add_option("--report", report_format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--seed", seed, "Seed for randomized constructions");
  verify->add_option("--output", output, "Write the report to this file instead of stdout");

  auto* grid = app.add_subcommand("grid", "Tabulate the invariant grid");
  std::string grid_format = "text";
  grid->add_option("--format", grid_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (list->parsed()) {
      for (const auto& e : scenario::list_builtin()) {
        std::cout << e.name << "\n  " << e.description << "\n  cites:";
        for (const auto& c : e.cites) std::cout << " " << c;
        std::cout << "\n";
      }
      return 0;
    }
    if (show->parsed()) {
      std::cout << scenario::builtin_source(show_name);
      return 0;
    }
    if (grid->parsed()) {
      if (grid_format == "json") {
        std::cout << grid_json().dump(2) << "\n";
      } else {
        print_grid_text();
      }
      return 0;
    }

    scenario::RunOptions options;
    options.seed = seed;
    options.timeout = std::chrono::seconds(timeout);
    if (!only.empty()) options.only = std::set<std::string>(only.begin(), only.end());
    if (exact || field == "q") {
      options.policy = scenario::FieldPolicy::exact;
    } else if (field == "both") {
      options.policy = scenario::FieldPolicy::both;
    } else if (field.rfind("fp:", 0) == 0) {
      options.primes = parse_primes(field.substr(3));
    } else if (field != "modular") {
      std::cerr << "--field must be q, fp:<primes> or both\n";
      return 2;
    }
    const auto s = load(scenario_name);
    if (options.only) {
      for (const auto& id : *options.only) {
        if (std::none_of(s.checks.begin(), s.checks.end(), [&](const auto& c) { return c.id == id; })) {
          std::cerr << "no check '" << id << "' in " << s.name << "\n";
          return 2;
        }
      }
    }
    const auto report = scenario::run_scenario(s, options);
    const std::string text = report_format == "json" ? report.to_json().dump(2) + "\n" : report.to_text();
    if (output.empty()) {
      std::cout << text;
    } else {
      std::ofstream(output) << text;
    }
    return report.all_passed() ? 0 : 1;
  } catch (const scenario::ScenarioParseError& e) {
    std::cerr << "scenario error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
