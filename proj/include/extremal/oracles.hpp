#pragma once

// Brute-force reference scans. Every function here enumerates subsets
// exhaustively; none of them shares code with the fast reporters.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "extremal/geometry.hpp"

namespace extremal {

struct MinSimplexResult {
  Rational min_squared_volume;  // strictly positive
  std::uint64_t count = 0;      // always exact, even when witnesses are capped
  std::vector<IndexSimplex> witnesses;  // lexicographic order
};

struct CountReport {
  Rational target;
  std::uint64_t count = 0;
  std::vector<IndexSimplex> witnesses;
};

struct DistinctVolumeReport {
  std::vector<Rational> distinct_values;  // ascending, positive
  std::size_t count = 0;
};

struct RichLine {
  LineKey key;
  std::vector<std::size_t> incident;  // ascending
};

struct RichLineReport {
  std::size_t threshold = 2;
  std::vector<RichLine> lines;  // sorted by key
};

struct SpannedPlane {
  HyperplaneKey key;
  std::vector<std::size_t> incident;  // ascending
};

struct OracleOptions {
  std::optional<std::size_t> witness_limit;
  bool collect_witnesses = true;
};

/// Minimum positive squared k-volume over all (k+1)-subsets and every
/// subset attaining it. Throws Degenerate when no subset has positive volume.
MinSimplexResult oracle_min_simplices(const PointSet& ps, std::size_t k,
                                      const OracleOptions& options = {});

/// k == d: counts simplices with |volume| == target. k < d: counts
/// simplices with squared volume == target.
CountReport oracle_count_volume(const PointSet& ps, const Rational& target, std::size_t k,
                                const OracleOptions& options = {});

/// Distinct positive volumes |det|/d! of full-dimensional simplices.
DistinctVolumeReport oracle_distinct_volumes(const PointSet& ps);

RichLineReport enumerate_rich_lines(const PointSet& ps, std::size_t k);

/// Planes spanned by noncollinear triples of a 3D set, sorted by key.
std::vector<SpannedPlane> enumerate_spanned_planes(const PointSet& ps);

/// Calls visit(indices) for every strictly increasing m-subset of {0..n-1}.
template <class Visit>
void for_each_subset(std::size_t n, std::size_t m, Visit&& visit) {
  if (m == 0 || m > n) return;
  std::vector<std::size_t> idx(m);
  for (std::size_t i = 0; i < m; ++i) idx[i] = i;
  while (true) {
    visit(static_cast<const std::vector<std::size_t>&>(idx));
    std::size_t i = m;
    while (i > 0 && idx[i - 1] == n - m + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace extremal
