#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace polybern::verify {

struct Failure {
  std::string point;
  std::string expected;
  std::string got;
};

struct Check {
  std::string name;
  std::size_t points = 0;
  std::vector<Failure> failures;

  bool ok() const { return failures.empty(); }
};

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<Check> checks;  // sorted by name

  bool ok() const;
  std::size_t total_points() const;
  std::size_t total_failures() const;
  std::string to_json() const;
};

// Individual suites; "all" runs every one of them.
const std::vector<std::string>& suite_names();

// Runs the named suite deterministically for the given seed. Throws
// errc::invalid_argument for an unknown suite name.
Report run_suite(const std::string& suite, std::uint64_t seed);

}  // namespace polybern::verify
