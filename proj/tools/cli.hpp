#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "io.hpp"

namespace transvect::cli {

struct JobConfig {
  std::string command;  // analyze | classify | certify | diameter | gen | decompose
  std::string input;    // generator file
  std::string output;   // empty: stdout
  std::string format = "json";
  Budgets budgets;
  std::uint64_t seed = 1;
  bool reproducible = false;

  // analyze
  bool forms = false;
  // certify
  std::size_t post_checks = 100;
  // diameter
  std::string profile = "full";
  std::string witness;  // JSON matrix
  // gen / decompose
  std::string kind;
  std::string field;
  std::size_t dim = 2;
  std::uint32_t a = 3;
  std::size_t m = 5;
  std::string matrix;  // decompose: JSON matrix
  std::string vector;  // decompose: JSON vector
};

// Runs one job and returns the result payload (without the report envelope).
io::json run(const JobConfig& job);

// Full command line entry point. Exit codes: 0 ok, 1 input error, 2 budget exhausted.
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace transvect::cli
