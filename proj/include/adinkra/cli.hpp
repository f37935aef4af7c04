#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "adinkra/error.hpp"
#include "adinkra/gf2.hpp"

namespace adinkra::cli {

enum class Format { json, text, dot };

struct CliConfig {
  std::string subcommand;
  std::optional<std::string> code_file;
  std::optional<std::string> gens;
  std::optional<std::string> from_report;
  std::optional<std::vector<int>> rainbow;
  std::optional<Format> format;
  std::optional<std::string> out;
  int n = 0;
  int nmax = 5;
  std::optional<int> kmax;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitViolation = 2;

int exit_code_for(const Error& e);

// Code from --code or --gens.
gf2::LinearCode load_code(const CliConfig& config);

int run_analyze(const CliConfig& config, std::ostream& out, std::ostream& err);
int run_enumerate(const CliConfig& config, std::ostream& out, std::ostream& err);
int run_verify(const CliConfig& config, std::ostream& out, std::ostream& err);
int run_export(const CliConfig& config, std::ostream& out, std::ostream& err);

// Dispatch on config.subcommand.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

// Parses argv (subcommand first) and runs it.
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace adinkra::cli
