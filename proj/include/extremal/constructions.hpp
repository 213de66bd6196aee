#pragma once

// Extremal point configurations with exactly known statistics.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "extremal/geometry.hpp"

namespace extremal {

enum class Family { Prism3d, KLines, DLinesDistinct, Lattice2d, LatticeSlab3d, RandomRational };

std::string to_string(Family family);
/// Accepts "prism3d", "klines", "dlines", "lattice2d", "lattice_slab3d", "random".
Family parse_family(const std::string& name);

struct ConstructionSpec {
  Family family = Family::Prism3d;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t d = 0;
  std::optional<Rational> epsilon;
  std::uint64_t seed = 0;
  std::int64_t bound = 10;
};

struct ExpectedStatistics {
  std::optional<Rational> min_volume;          // full-dimensional families
  std::optional<Rational> min_squared_volume;  // k-simplices
  std::optional<std::uint64_t> count;          // number of minimum simplices
  std::optional<std::size_t> distinct;         // distinct full-dimensional volumes
};

struct ConstructionOutput {
  PointSet points;
  ExpectedStatistics expected;
};

/// Four vertical lines over the rhombus (-1,0), (1,0), (0,1), (0,-1); the
/// line over (0,-1) starts at height 3 so the base tetrahedron has volume 1.
/// n/4 points per line at vertical spacing epsilon (default 1/n^2). n = 4
/// gives the base tetrahedron alone.
ConstructionOutput gen_min_tetra_prism(std::size_t n, std::optional<Rational> epsilon = {});

/// k parallel lines along e_k through 0, e_1, ..., e_(k-1) in R^d with n/k
/// points each, spaced epsilon.
ConstructionOutput gen_min_ksimplex_lines(std::size_t n, std::size_t k, std::size_t d,
                                          const Rational& epsilon = 1);

/// The k = d line geometry filled round-robin, so the fullest line holds
/// ceil(n/d) points and there are floor((n-1)/d) distinct volumes.
ConstructionOutput gen_distinct_volume_lines(std::size_t n, std::size_t d, const Rational& epsilon = 1);

/// sqrt(n) x sqrt(n) integer grid; n must be a perfect square.
PointSet gen_lattice2d(std::size_t n);
/// Two n/2-point grids in the planes z = 0 and z = 3.
PointSet gen_lattice_slab3d(std::size_t n);

/// n distinct points with integer coordinates uniform in [-bound, bound]^d.
PointSet gen_random_rational(std::size_t n, std::size_t d, std::uint64_t seed, std::int64_t bound);

ConstructionOutput generate(const ConstructionSpec& spec);

}  // namespace extremal
