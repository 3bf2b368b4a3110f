#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sbraid/bench.hpp"

namespace sbraid {

struct Query {
  std::string command;  // eq, nf, eta, perm, britton, bench
  std::optional<int> strands;  // inferred from the words when absent
  std::vector<std::string> words;
  bool json = false;
  BenchParams bench;
};

/// Exit status: 0 equal / success, 1 unequal, 2 error.
int run_command(const Query& q, std::istream& in, std::ostream& out,
                std::ostream& err);

/// Parses argv and dispatches to run_command.
int run_cli(int argc, const char* const* argv, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace sbraid
