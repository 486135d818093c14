#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace deltamat::acceptance {

struct Options {
  int max_n = 5;                        // exhaustive main-theorem search bound
  int sample_n = 6;                     // sampled search beyond the exhaustive bound
  std::uint64_t sample_trials = 100000;
  std::uint64_t sample_seed = 42;
  std::uint64_t property_cases = 1000;  // per property suite
  std::uint64_t property_seed = 20240601;
  int workers = 1;
};

struct Result {
  int number = 0;
  std::string key;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double time_limit = 0;  // 0 = no limit
};

/// Runs every criterion in order, calling on_result as each finishes.
std::vector<Result> run_all(const Options& options,
                            const std::function<void(const Result&)>& on_result = {});

std::string format_line(const Result& r);

}  // namespace deltamat::acceptance
