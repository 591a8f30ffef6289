#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace suites {

struct Options {
  std::uint64_t seed = 12345;
  int trials = 200;
  int steps = 0;       // 0 = suite default
  int radius = 0;      // 0 = suite default
  std::optional<std::string> csvOut;  // weak-limit report target
};

// Each runner prints one summary line per sub-check and returns 0 on pass,
// 1 on failure (with the failing coin/position printed).
int runTable1(const Options& opt, std::ostream& os);
int runThm31(const Options& opt, std::ostream& os);
int runThm41(const Options& opt, std::ostream& os);
int runThm51(const Options& opt, std::ostream& os);
int runUd(const Options& opt, std::ostream& os);
int runWeakLimit(const Options& opt, std::ostream& os);

/// Dispatch by suite name: table1, thm3-1, thm4-1, thm5-1, ud, weak-limit, all.
int runSuite(const std::string& name, const Options& opt, std::ostream& os);

}  // namespace suites
