#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <vector>

#include "bmoll/report.hpp"
#include "bmoll/verify.hpp"

namespace bmoll {

enum class Command { Row, Verify, Scan, Table, Bessel, Integral };

/// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or input error.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

struct CliConfig {
  Command command = Command::Verify;
  long m = 8;
  long m_min = 2;
  long m_max = 100;
  long n_max = 50;
  long n_offset = 4;
  std::vector<CheckId> checks;
  Format format = Format::Text;
  int float_digits = 6;
  std::optional<std::filesystem::path> cache_path;
  std::optional<std::filesystem::path> write_cache_path;
  bool closed_form = false;
  std::vector<double> a_values{0.0, 0.5, 1.0, 2.0};
  double tolerance = 1e-8;
  bool strict_integral = false;
  bool timing = true;
};

/// `config` is empty when parsing itself ends the run (help or a usage
/// error); `exit_code` is then the code to return.
struct ParseOutcome {
  std::optional<CliConfig> config;
  int exit_code = kExitPass;
};
ParseOutcome parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Throws UsageError when the config breaks a range or digit constraint.
void validate(const CliConfig& config);

int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run with the exit-code contract applied.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bmoll
