#include "extremal/charging.hpp"

#include <array>
#include <map>

#include "extremal/oracles.hpp"

namespace extremal {

ChargeRecord charge_tetrahedron(const PointSet& ps, const IndexSimplex& tetra) {
  if (ps.dim() != 3 || tetra.size() != 4) {
    throw GeometryError(ErrorKind::DimensionMismatch, "charging needs a tetrahedron in R^3");
  }
  if (signed_volume_full(ps, tetra) == 0) {
    throw GeometryError(ErrorKind::Degenerate, "tetrahedron is degenerate");
  }
  const auto& v = tetra.indices();

  // Longest edge length; every edge attaining it is a diameter.
  Rational longest = -1;
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = a + 1; b < 4; ++b) {
      Rational len = squared_length(ps[v[a]], ps[v[b]]);
      if (len > longest) longest = std::move(len);
    }
  }
  auto is_diameter = [&](std::size_t a, std::size_t b) {
    return squared_length(ps[a], ps[b]) == longest;
  };

  // Faces are visited in lexicographic order, so strict improvement keeps
  // the smallest tuple among equal areas.
  bool have_face = false;
  Rational best_area;
  std::size_t face_slot = 0;
  std::array<std::array<std::size_t, 3>, 4> faces{{{v[0], v[1], v[2]},
                                                   {v[0], v[1], v[3]},
                                                   {v[0], v[2], v[3]},
                                                   {v[1], v[2], v[3]}}};
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const auto& t = faces[f];
    if (!is_diameter(t[0], t[1]) && !is_diameter(t[0], t[2]) && !is_diameter(t[1], t[2])) continue;
    Rational area = squared_volume(ps, IndexSimplex{t[0], t[1], t[2]});
    if (!have_face || area > best_area) {
      have_face = true;
      best_area = std::move(area);
      face_slot = f;
    }
  }

  const auto& face = faces[face_slot];
  ChargeRecord record;
  record.tetra = tetra;
  record.face = IndexSimplex{face[0], face[1], face[2]};
  const std::pair<std::size_t, std::size_t> edges[] = {
      {face[0], face[1]}, {face[0], face[2]}, {face[1], face[2]}};
  for (const auto& e : edges) {
    if (is_diameter(e.first, e.second)) {
      record.diameter = e;
      break;
    }
  }
  std::size_t apex = 0;
  for (std::size_t x : v) {
    if (x != face[0] && x != face[1] && x != face[2]) apex = x;
  }
  const HyperplaneKey plane = plane_key(ps, face[0], face[1], face[2]);
  record.side = plane.evaluate(ps[apex]) > 0 ? Side::Above : Side::Below;
  record.diameter_sq = longest;
  record.height_sq = 4 * best_area / longest;
  record.slab_height_sq = squared_distance_point_plane(ps[apex], plane);
  return record;
}

ChargingSummary verify_charging(const PointSet& ps, const std::vector<IndexSimplex>& tetrahedra) {
  std::map<IndexSimplex, std::size_t> per_face;
  std::map<std::pair<IndexSimplex, Side>, std::size_t> per_side;
  ChargingSummary summary;
  for (const auto& t : tetrahedra) {
    const ChargeRecord r = charge_tetrahedron(ps, t);
    ++summary.charges;
    summary.max_per_face = std::max(summary.max_per_face, ++per_face[r.face]);
    summary.max_per_face_side = std::max(summary.max_per_face_side, ++per_side[{r.face, r.side}]);
  }
  return summary;
}

ChargingSummary verify_charging(const PointSet& ps) {
  return verify_charging(ps, oracle_min_simplices(ps, 3).witnesses);
}

}  // namespace extremal
