#include "extremal/duality.hpp"

namespace extremal {

namespace {

void require_3d(const Point& p) {
  if (p.dim() != 3) throw GeometryError(ErrorKind::DimensionMismatch, "duality is defined in R^3");
}

}  // namespace

DualPlane dual_transform_point(const Point& p) {
  require_3d(p);
  return {p[0], p[1], p[2]};
}

// z = a x + b y - c is the plane written z = a x + b y + c' with c' = -c,
// whose dual point is (a, b, -c') = (a, b, c).
Point dual_transform_plane(const DualPlane& h) { return Point{h.a, h.b, h.c}; }

DualPlane dual_plane_from_key(const HyperplaneKey& key) {
  if (key.normal.size() != 3) throw GeometryError(ErrorKind::DimensionMismatch, "duality is defined in R^3");
  if (key.normal[2] == 0) throw GeometryError(ErrorKind::Degenerate, "vertical plane has no dual point");
  const Rational nz(key.normal[2]);
  return {Rational(-key.normal[0]) / nz, Rational(-key.normal[1]) / nz, Rational(-key.offset) / nz};
}

Rational vertical_offset(const Point& p, const DualPlane& h) {
  require_3d(p);
  return p[2] - (h.a * p[0] + h.b * p[1] - h.c);
}

}  // namespace extremal
