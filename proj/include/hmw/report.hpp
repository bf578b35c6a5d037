#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "hmw/splitting_profile.hpp"

namespace hmw::cli {

inline constexpr const char* kSchemaVersion = "1.0";

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kInvariant = 3,
  kCheckFailed = 4,
};

struct RunResult {
  std::string out;
  std::string err;
  int exit_code = kOk;
};

/// Parses argv (argv[0] is the program name), dispatches, and renders the
/// report. Never throws; errors land in `err` with the matching exit code.
RunResult run(const std::vector<std::string>& argv);

struct SelftestOptions {
  std::uint64_t seed = 0;
  /// Debug hook: build h_τ0 with the multiplier term negated.
  bool inject_bad_hasse_sign = false;
  bool empty_panel = false;
};

struct SelftestResult {
  nlohmann::ordered_json payload;
  bool all_pass = true;
  std::vector<std::string> warnings;
};

/// The fixed profile panel exercised by selftest.
std::vector<SplittingProfile> selftest_panel();

SelftestResult selftest(const SelftestOptions& options);

}  // namespace hmw::cli
