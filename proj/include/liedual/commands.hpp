#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "liedual/document.hpp"
#include "liedual/error.hpp"

namespace liedual {

struct CommandOptions {
  bool json = false;
  bool skew = false;
  std::optional<std::string> form_file;
  std::optional<std::string> derivation_file;
  bool numeric = false;
  double tol = 1e-9;
  std::size_t max_dim = default_max_dim;
};

struct CommandResult {
  int status = 0;
  std::string out;  // stdout
  std::string err;  // stderr
};

/// Returns the contents of a named file; throws Error(IoError) on failure.
using FileReader = std::function<std::string(const std::string&)>;

std::string read_file(const std::string& path);

std::vector<std::string> command_names();

/// Runs one command. Never throws: failures become a nonzero status with an
/// error record on `err`.
CommandResult run_command(const std::string& name, const std::vector<std::string>& args, const CommandOptions& opts,
                          const FileReader& reader = read_file);

/// "error[Code] at loc: message", or {"error": {...}} when json is set.
std::string format_error(const Error& e, bool json);

}  // namespace liedual
