#pragma once

// Small popen wrapper for driving the genuslab binary from tests. The binary
// path arrives via the GENUSLAB_CLI_PATH compile definition.

#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>
#include <sys/wait.h>

namespace testutil {

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

inline CommandResult run_command(const std::string& command) {
  CommandResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) {
    throw std::runtime_error("popen failed for: " + command);
  }
  char buffer[4096];
  while (std::fgets(buffer, sizeof(buffer), pipe) != nullptr) {
    result.output += buffer;
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

inline CommandResult run_cli(const std::string& args, bool merge_stderr = false) {
  const std::string redirect = merge_stderr ? " 2>&1" : " 2>/dev/null";
  return run_command(std::string(GENUSLAB_CLI_PATH) + " " + args + redirect);
}

inline std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string::size_type start = 0;
  while (start < text.size()) {
    const auto end = text.find('\n', start);
    if (end == std::string::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

}  // namespace testutil
