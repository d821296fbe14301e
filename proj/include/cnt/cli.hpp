#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cnt::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kInvalidInput = 2,
  kNumericalFailure = 3,
};

enum class Format { Csv, Json };

/// Shared physical and numerical settings. Defaults: gamma = 1, epsilon = 0,
/// graphene bond 1.44 angstrom.
struct RunConfig {
  double gamma = 1.0;
  double epsilon = 0.0;
  double bond_length = 1.44;
  int resolution = 4096;
  double tolerance = 1e-8;
  std::optional<double> beta;
  std::optional<Format> format;  // unset: JSON for reports, CSV for tables
  std::string out;               // empty: stdout

  /// Throws cnt::Error(InvalidArgument) on gamma <= 0, bond <= 0, resolution < 64, tol <= 0.
  void validate() const;
  double scale() const;  // a = bond * sqrt(6) / 2
};

/// Reads a flat JSON object whose keys match RunConfig fields
/// (gamma, epsilon, bond_length, resolution, tolerance, beta, format, out).
RunConfig load_config(const std::string& path);

/// Runs one command line; args excludes the program name. Output goes to `out` unless --out names a file.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace cnt::cli
