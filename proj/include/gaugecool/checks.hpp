#pragma once

// Named invariant suites behind the `check` command.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gaugecool {

enum class Bound { Below, Above, Equal };

struct CheckResult {
  std::string suite;
  std::string name;
  double measured = 0.0;
  double threshold = 0.0;
  Bound bound = Bound::Below;
  bool passed = false;
  std::string detail;
};

struct CheckOptions {
  /// Replaces the built-in binary octahedral set in the tdesign suite.
  std::optional<std::string> design_file;
  std::uint64_t seed = 1;
};

struct CheckReport {
  std::vector<CheckResult> results;
  bool passed() const;
  /// One line per check, then a summary line.
  std::string text() const;
};

/// hamiltonian, tdesign, qft, detection
const std::vector<std::string>& check_suite_names();

/// Runs one suite or "all". Throws InputError for an unknown name or an
/// unreadable design file.
CheckReport run_check_suite(const std::string& suite, const CheckOptions& options = {});

}  // namespace gaugecool
