#include "extremal/bench.hpp"

#include <chrono>
#include <cmath>

#include "extremal/minvol.hpp"
#include "extremal/oracles.hpp"

namespace extremal {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

PointSet bench_input(const BenchOptions& options, std::size_t n) {
  switch (options.family) {
    case Family::Prism3d: return gen_min_tetra_prism(n).points;
    case Family::RandomRational:
      return gen_random_rational(n, 3, options.seed + n, static_cast<std::int64_t>(n));
    default:
      throw GeometryError(ErrorKind::InvalidArgument, "bench supports the prism3d and random families");
  }
}

}  // namespace

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  const std::size_t m = x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = static_cast<double>(m) * sxx - sx * sx;
  return (static_cast<double>(m) * sxy - sx * sy) / denom;
}

BenchResult run_scaling_benchmark(std::span<const std::size_t> sizes, const BenchOptions& options) {
  if (sizes.empty()) throw GeometryError(ErrorKind::InvalidArgument, "bench needs at least one size");
  BenchResult result;
  ReporterOptions fast;
  fast.retain_witnesses = false;
  fast.retain_contributing = false;
  fast.threads = options.threads;
  const unsigned repeat = std::max(1u, options.repeat);

  for (std::size_t n : sizes) {
    const PointSet ps = bench_input(options, n);
    BenchSample sample;
    sample.n = n;
    for (unsigned r = 0; r < repeat; ++r) {
      const auto start = Clock::now();
      const MinVolumeReport report = report_min_volume_tetrahedra(ps, fast);
      const double t = seconds_since(start);
      if (r == 0 || t < sample.fast_seconds) sample.fast_seconds = t;
      sample.count = report.count;
      sample.min_volume = report.min_volume;
      sample.planes_visited = report.planes_visited;
    }
    if (options.oracle) {
      if (n > kOracleBenchLimit) {
        result.warnings.push_back("oracle skipped for n=" + std::to_string(n) + " (limit " +
                                  std::to_string(kOracleBenchLimit) + ")");
      } else {
        OracleOptions quiet;
        quiet.collect_witnesses = false;
        const auto start = Clock::now();
        oracle_min_simplices(ps, 3, quiet);
        sample.oracle_seconds = seconds_since(start);
      }
    }
    result.samples.push_back(sample);
  }
  if (result.samples.size() >= 2) {
    std::vector<double> xs, ys;
    for (const auto& s : result.samples) {
      xs.push_back(static_cast<double>(s.n));
      ys.push_back(std::max(s.fast_seconds, 1e-9));
    }
    result.slope = loglog_slope(xs, ys);
  }
  return result;
}

}  // namespace extremal
