#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lefcon/commands.hpp"
#include "lefcon/control.hpp"

using namespace lefcon;

namespace {

std::string commands_help() {
  std::string out = "one of:";
  for (const auto& c : command_names()) out += " " + c;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Lefschetz-coincidence certificates for discrete control systems", "lefcon"};
  std::string command, workspace, format = "json";
  CommandOptions options;
  app.add_option("command", command, commands_help())->required();
  app.add_option("--workspace", workspace, "Workspace file (.lef)");
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--oracle", options.oracle, "Run the exact oracle cross-check");
  app.add_option("--z", options.z, "Homology class selector: k:j or fundamental (repeatable)")
      ->allow_extra_args(false);
  const std::vector<std::pair<std::string, std::string>> valued = {
      {"pair", "Pair or complex name"},
      {"map", "Map name"},
      {"f", "First map of a coincidence problem"},
      {"g", "Second map of a coincidence problem"},
      {"identification", "PL identification of a subdivided source"},
      {"system", "System name"},
      {"from", "Start subcomplex for controllability"},
      {"max-steps", "Step bound for controllability"},
      {"steps", "Step bound for reachability"},
      {"F-homology", "Comma-separated Betti numbers of F"},
      {"n", "State dimension"},
      {"m", "Dimension of F"},
      {"local-map", "Map between local pairs for removability"},
      {"orientation", "Orientation seed name"},
      {"source-orientation", "Orientation seed for the source"},
      {"target-orientation", "Orientation seed for the target"},
  };
  std::map<std::string, std::string> raw;
  for (const auto& [name, help] : valued) app.add_option("--" + name, raw[name], help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }
  for (const auto& [name, help] : valued)
    if (app.get_option("--" + name)->count() > 0) options.values[name] = raw[name];

  try {
    std::optional<Workspace> ws;
    if (!workspace.empty()) {
      std::ifstream in(workspace);
      if (!in) {
        std::cerr << "lefcon: cannot read workspace '" << workspace << "'\n";
        return kInputError;
      }
      std::stringstream text;
      text << in.rdbuf();
      options.workspace = workspace;
      try {
        ws = Workspace::parse(text.str());
      } catch (const ParseError& e) {
        std::cerr << workspace << ":" << e.what() << "\n";
        return kInputError;
      }
    } else if (command != "removability") {
      std::cerr << "lefcon: --workspace is required for '" << command << "'\n";
      return kInputError;
    }
    CommandResult r = run_command(ws ? &*ws : nullptr, command, options);
    std::cout << (format == "text" ? render_text(r) : render_json(r));
    if (r.exit_code == kSoundnessViolation)
      std::cerr << "lefcon: soundness violation: certificate nonzero but the oracle disagrees\n";
    return r.exit_code;
  } catch (const InapplicableError& e) {
    std::cerr << "lefcon: certificate inapplicable: " << e.what() << "\n";
  } catch (const TopologyError& e) {
    std::cerr << "lefcon: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "lefcon: " << e.what() << "\n";
  } catch (const std::logic_error& e) {
    std::cerr << "lefcon: internal error: " << e.what() << "\n";
    return kSoundnessViolation;
  } catch (const std::runtime_error& e) {
    std::cerr << "lefcon: " << e.what() << "\n";
  }
  return kInputError;
}
