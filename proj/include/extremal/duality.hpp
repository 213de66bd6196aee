#pragma once

// Point-plane duality in R^3: p(a, b, c) <-> p*: z = a x + b y - c.

#include "extremal/geometry.hpp"

namespace extremal {

/// The nonvertical plane z = a x + b y - c.
struct DualPlane {
  Rational a, b, c;

  friend bool operator==(const DualPlane&, const DualPlane&) = default;
};

DualPlane dual_transform_point(const Point& p);
Point dual_transform_plane(const DualPlane& h);

/// Throws Degenerate for vertical planes, which have no dual point.
DualPlane dual_plane_from_key(const HyperplaneKey& key);

/// p.z minus the height of h above (p.x, p.y); positive iff p is above h.
Rational vertical_offset(const Point& p, const DualPlane& h);

}  // namespace extremal
