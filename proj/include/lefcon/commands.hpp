#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "lefcon/workspace.hpp"

namespace lefcon {

enum ExitCode : int { kCertified = 0, kNotCertified = 1, kInputError = 2, kSoundnessViolation = 3 };

/// Bad or missing command-line flags.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CommandOptions {
  /// Flag values keyed by long name without dashes, e.g. "pair", "max-steps".
  std::map<std::string, std::string> values;
  /// Repeated --z selections: "k:j" (basis class j in degree k) or "fundamental".
  std::vector<std::string> z;
  bool oracle = false;
  /// Echoed in the report as given.
  std::string workspace;
};

struct CommandResult {
  nlohmann::ordered_json report;
  int exit_code = kCertified;
};

const std::vector<std::string>& command_names();

/// Runs one command. `ws` may be null only for commands that do not read a
/// workspace (removability). Throws UsageError, LookupError, TopologyError,
/// InapplicableError or MalformedDeclaration on input problems.
CommandResult run_command(const Workspace* ws, const std::string& command,
                          const CommandOptions& options);

/// Pretty JSON with a trailing newline.
std::string render_json(const CommandResult& r);
/// Short human-readable summary.
std::string render_text(const CommandResult& r);

}  // namespace lefcon
