#pragma once

// Distinct volumes through a common face: orthogonal projection along a
// spanned flat, distinct triangle areas seen from one point, and the
// common-face search built from them.

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "extremal/geometry.hpp"

namespace extremal {

struct ProjectedSet {
  PointSet points;                  // 2D; duplicates allowed
  std::vector<std::size_t> source;  // original index of each projected point
  std::vector<std::vector<BigInt>> directions;  // projected-out directions, primitive
  std::array<std::vector<Rational>, 2> basis;   // orthogonal, not normalized
  /// area^2 in R^d = area^2 in projected coordinates * area_scale_sq.
  Rational area_scale_sq;
};

/// Orthogonal projection of ps[subset] (all points when subset is empty)
/// onto the complement of the given directions; dim - #directions must be 2.
ProjectedSet project_orthogonal(const PointSet& ps, std::span<const std::vector<Rational>> directions,
                                std::span<const std::size_t> subset = {});

struct DistinctAreasResult {
  std::size_t best_partner = 0;  // p2
  std::size_t distinct_count = 0;
  bool hypothesis_holds = true;  // no line p1-q carries a third point
  std::vector<std::size_t> violations;  // q whose line through p1 has another point
};

DistinctAreasResult distinct_areas_from_point(const PointSet& plane_points, std::size_t p1);

struct CommonFaceResult {
  IndexSimplex face;  // (d-1)-simplex
  std::size_t distinct_count = 0;
  std::vector<Rational> volumes;  // ascending
};

enum class CommonFaceMode { Exhaustive, Heuristic };

inline constexpr std::size_t kExhaustiveFaceBudget = 1'000'000;

CommonFaceResult best_common_face(const PointSet& ps, CommonFaceMode mode);

/// Distinct positive volumes of face + {q} over every q of the set.
CommonFaceResult volumes_through_face(const PointSet& ps, const IndexSimplex& face);

/// vol(p0 p1 p2 q)^2 == area(projected p1 p2 q)^2 * |p0 p1|^2 / 9 for the
/// projection along p0p1.
bool check_projection_volume_identity(const PointSet& ps, std::size_t p0, std::size_t p1, std::size_t p2,
                                      std::size_t q);

}  // namespace extremal
