#pragma once

// Randomized property suites with deterministic per-trial streams.
//
// Every trial of every property draws from its own Sampler keyed by
// (seed, property name, trial index), so a report depends only on the
// configuration and never on execution order.

#include "jetcalc/numeric.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace jetcalc::verify {

/// Invalid suite name or dimensions.
class ConfigError : public Error {
 public:
  using Error::Error;
};

struct Config {
  int m = 2;
  int n = 4;
  std::size_t trials = 1000;
  std::uint64_t seed = 42;
  double tol = kDefaultTol;
};

struct PropertyReport {
  std::string name;
  std::string suite;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::size_t skipped = 0;
  double max_error = 0.0;
  std::string first_failure;  ///< empty when the property passed
};

struct Report {
  std::string suite;
  Config config;
  std::size_t trials = 0;
  std::size_t failures = 0;
  double max_error = 0.0;
  std::vector<PropertyReport> properties;

  bool ok() const { return failures == 0; }
};

/// The runnable suite names, ending with "all".
const std::vector<std::string>& suite_names();

/// Names of the properties in a suite, in execution order.
std::vector<std::string> property_names(std::string_view suite);

/// Runs a suite. Throws ConfigError on an unknown suite or bad configuration.
Report run_suite(std::string_view suite, const Config& config);

nlohmann::json to_json(const Report& report);

/// One line per property plus a totals line.
std::string summary(const Report& report);

}  // namespace jetcalc::verify
