#pragma once

// Reporting all minimum-nonzero-volume tetrahedra of a 3D point set, and
// all minimum-nonzero-area triangles of a planar one.
//
// Every minimum-volume tetrahedron abcd has a minimum-area triangle abc
// inside the plane h it spans, and d is a point of S closest to h on its
// side (the open slab between h and d is empty). The reporter visits every
// spanned plane once, computes its minimum-area triangles from the shortest
// segments on each spanned line, scans both sides for the nearest points,
// and keeps the (plane, side) pairs with the smallest product. Each
// tetrahedron is found once per face, so the face-incidence sum is four
// times the count.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "extremal/geometry.hpp"

namespace extremal {

/// Side of a canonical hyperplane key: Above means normal·p > offset.
enum class Side { Above, Below };

const char* to_string(Side side);

struct SegmentSummary {
  Rational min_length_sq;
  std::uint64_t count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (lower index, higher index)
};

struct PlaneSummary {
  HyperplaneKey key;  // empty normal for a planar (2D) input
  std::vector<std::size_t> incident;
  std::size_t point_count = 0;  // n_h
  std::size_t line_count = 0;   // spanned lines inside the plane
  Rational min_area_sq;
  std::uint64_t min_area_count = 0;  // M_h
  std::vector<IndexSimplex> min_area_witnesses;
};

struct SlabRecord {
  HyperplaneKey plane;
  Side side = Side::Above;
  Rational dist_sq;
  std::vector<std::size_t> nearest;  // all points at dist_sq on this side

  std::size_t count() const noexcept { return nearest.size(); }
};

struct SlabPair {
  std::optional<SlabRecord> above;
  std::optional<SlabRecord> below;
};

struct Contribution {
  PlaneSummary plane;
  SlabRecord slab;
};

struct MinVolumeReport {
  Rational min_volume;
  std::uint64_t count = 0;
  std::vector<IndexSimplex> witnesses;  // ascending, deduplicated
  std::vector<Contribution> contributing;
  std::uint64_t face_incidences = 0;  // sum of M_h * N over contributing pairs
  std::uint64_t planes_visited = 0;
};

struct MinAreaReport {
  Rational min_area;
  std::uint64_t count = 0;
  std::vector<IndexSimplex> witnesses;
  std::uint64_t side_incidences = 0;  // three per triangle
  std::size_t line_count = 0;
};

struct ReporterOptions {
  bool retain_witnesses = true;
  bool retain_contributing = true;
  unsigned threads = 1;
  /// Run on arbitrary-precision integers even when machine words suffice.
  bool force_big_integers = false;
};

/// Minimum squared gap between consecutive points of a collinear subset.
SegmentSummary shortest_segments_on_line(const PointSet& ps, std::span<const std::size_t> indices);

/// Minimum-area triangles among coplanar points (3D) or a planar set (2D).
PlaneSummary min_area_triangles_in_plane(const PointSet& ps, std::span<const std::size_t> incident);

SlabPair empty_slabs(const PointSet& ps, const HyperplaneKey& plane);

MinVolumeReport report_min_volume_tetrahedra(const PointSet& ps, const ReporterOptions& options = {});

MinAreaReport report_min_area_triangles_2d(const PointSet& ps, const ReporterOptions& options = {});

}  // namespace extremal
