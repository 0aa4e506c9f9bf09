#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "lefcon/commands.hpp"
#include "lefcon/workspace.hpp"

namespace testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(LEFCON_FIXTURE_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

inline lefcon::Workspace load(const std::string& name) {
  return lefcon::Workspace::parse(read_file(fixture_path(name)));
}

inline lefcon::CommandResult run(const lefcon::Workspace& ws, const std::string& command,
                                 std::map<std::string, std::string> values, bool oracle = false,
                                 std::vector<std::string> z = {}) {
  lefcon::CommandOptions o;
  o.values = std::move(values);
  o.oracle = oracle;
  o.z = std::move(z);
  return lefcon::run_command(&ws, command, o);
}

}  // namespace testing
