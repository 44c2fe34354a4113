#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "novikov/commands.hpp"
#include "novikov/errors.hpp"

namespace {

// "--xi a/b,c,..." -> one rational character per flag occurrence.
std::vector<novikov::Character> parse_xi_flags(
    const std::vector<std::string>& specs) {
  std::vector<novikov::Character> out;
  for (const std::string& spec : specs) {
    novikov::Character xi;
    std::stringstream stream(spec);
    std::string token;
    while (std::getline(stream, token, ','))
      xi.coords.push_back(novikov::Domain::rationals().parse_element(token));
    if (xi.coords.empty())
      throw novikov::parse_error("empty --xi value");
    out.push_back(std::move(xi));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Vanishing of rational-Novikov homology for based chain complexes "
      "over Laurent polynomial rings"};
  app.require_subcommand(1);

  std::string input;
  std::uint64_t tau_cap = 1'000'000;
  int jobs = 1;
  std::vector<std::string> xi_specs;

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"vanish", "emit the vanishing set as a union of integral cones"},
      {"check", "compare cone-set membership with the chain-scanning oracle "
                "at each query point"},
      {"betti", "Betti numbers over the fraction field"},
      {"euler", "Euler characteristic of the complex"},
      {"positive", "decide vanishing over the meridian-positive cone "
                   "(Vanishes or an integral Witness)"},
      {"fox", "expand a presentation payload into its chain complex"},
      {"torus", "expand a mapping-torus payload into its chain complex"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--input", input, "problem document (JSON)")->required();
    sub->add_option("--xi", xi_specs,
                    "extra query point \"a/b,c,...\" (repeatable)");
    sub->add_option("--tau-cap", tau_cap,
                    "refuse complexes with more matrix chains than this");
    sub->add_option("--jobs", jobs, "worker threads for the chain scan");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    std::ifstream in(input);
    if (!in) {
      std::cerr << "error: cannot read " << input << "\n";
      return 2;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();

    novikov::ProblemDocument doc = novikov::parse_document(buffer.str());
    novikov::CommandOptions options;
    options.tau_chain_cap = tau_cap;
    options.jobs = jobs;
    options.extra_points = parse_xi_flags(xi_specs);
    std::cout << novikov::execute_command(command, doc, options);
    return 0;
  } catch (const novikov::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const novikov::resource_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const novikov::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
