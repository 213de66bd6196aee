#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "extremal/constructions.hpp"

namespace extremal {

/// The brute-force oracle is not timed above this size.
inline constexpr std::size_t kOracleBenchLimit = 30;

struct BenchSample {
  std::size_t n = 0;
  double fast_seconds = 0;  // best of the repeats
  std::optional<double> oracle_seconds;
  std::uint64_t count = 0;
  Rational min_volume;
  std::uint64_t planes_visited = 0;
};

struct BenchResult {
  std::vector<BenchSample> samples;
  std::optional<double> slope;  // least-squares slope of log(time) on log(n)
  std::vector<std::string> warnings;
};

struct BenchOptions {
  Family family = Family::Prism3d;
  unsigned repeat = 1;
  unsigned threads = 1;
  bool oracle = false;
  std::uint64_t seed = 1;
};

BenchResult run_scaling_benchmark(std::span<const std::size_t> sizes, const BenchOptions& options);

double loglog_slope(std::span<const double> x, std::span<const double> y);

}  // namespace extremal
