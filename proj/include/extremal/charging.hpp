#pragma once

// Charging of tetrahedra to faces: a tetrahedron goes to the largest face
// among those containing a longest edge. Among minimum-volume tetrahedra
// each (face, side) receives at most two charges, each face at most four.

#include <cstddef>
#include <utility>
#include <vector>

#include "extremal/geometry.hpp"
#include "extremal/minvol.hpp"

namespace extremal {

struct ChargeRecord {
  IndexSimplex tetra;
  IndexSimplex face;  // triangle
  Side side = Side::Above;  // side of face's canonical plane holding the fourth vertex
  std::pair<std::size_t, std::size_t> diameter;
  Rational diameter_sq;  // x_0^2, the longest edge
  Rational height_sq;    // y_0^2, apex of the face above the diameter
  Rational slab_height_sq;  // z_0^2, fourth vertex above the face
};

struct ChargingSummary {
  std::size_t charges = 0;
  std::size_t max_per_face = 0;
  std::size_t max_per_face_side = 0;

  bool within_bounds() const noexcept { return max_per_face <= 4 && max_per_face_side <= 2; }
};

ChargeRecord charge_tetrahedron(const PointSet& ps, const IndexSimplex& tetra);

ChargingSummary verify_charging(const PointSet& ps, const std::vector<IndexSimplex>& tetrahedra);
/// Charges every minimum-volume tetrahedron found by the brute-force oracle.
ChargingSummary verify_charging(const PointSet& ps);

}  // namespace extremal
