#include "extremal/distinct.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "extremal/oracles.hpp"

namespace extremal {

namespace {

std::vector<Rational> subtract_projection(std::vector<Rational> v, const std::vector<Rational>& onto) {
  const Rational f = dot(v, onto) / dot(onto, onto);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= f * onto[i];
  return v;
}

bool all_zero(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

std::size_t affine_rank(const PointSet& ps) {
  if (ps.empty()) return 0;
  std::vector<std::vector<Rational>> basis;
  for (const auto& p : ps.points()) {
    auto v = difference(p, ps[0]);
    for (const auto& b : basis) v = subtract_projection(std::move(v), b);
    if (!all_zero(v)) basis.push_back(std::move(v));
  }
  return basis.size();
}

void require_spanning(const PointSet& ps) {
  if (affine_rank(ps) < ps.dim()) {
    throw GeometryError(ErrorKind::Degenerate, "point set lies in a hyperplane");
  }
}

double binomial(std::size_t n, std::size_t k) {
  double out = 1;
  for (std::size_t i = 0; i < k; ++i) out = out * static_cast<double>(n - i) / static_cast<double>(i + 1);
  return out;
}

Rational twice_signed_area(const Point& a, const Point& b, const Point& c) {
  return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

}  // namespace

ProjectedSet project_orthogonal(const PointSet& ps, std::span<const std::vector<Rational>> directions,
                                std::span<const std::size_t> subset) {
  const std::size_t d = ps.dim();
  if (directions.size() + 2 != d) {
    throw GeometryError(ErrorKind::DimensionMismatch, "projection must leave exactly two dimensions");
  }
  std::vector<std::vector<Rational>> ortho;  // Gram-Schmidt of the directions
  ProjectedSet out;
  for (const auto& dir : directions) {
    if (dir.size() != d) throw GeometryError(ErrorKind::DimensionMismatch, "direction has wrong dimension");
    auto v = dir;
    for (const auto& o : ortho) v = subtract_projection(std::move(v), o);
    if (all_zero(v)) throw GeometryError(ErrorKind::InvalidArgument, "projection directions are dependent");
    ortho.push_back(std::move(v));
    out.directions.push_back(primitive_direction(dir));
  }
  // Complement basis from the standard basis, orthogonalized and scaled to
  // primitive integer vectors.
  std::size_t found = 0;
  for (std::size_t axis = 0; axis < d && found < 2; ++axis) {
    std::vector<Rational> v(d, Rational(0));
    v[axis] = 1;
    for (const auto& o : ortho) v = subtract_projection(std::move(v), o);
    for (std::size_t b = 0; b < found; ++b) v = subtract_projection(std::move(v), out.basis[b]);
    if (all_zero(v)) continue;
    const auto prim = primitive_direction(v);
    out.basis[found++] = std::vector<Rational>(prim.begin(), prim.end());
  }
  out.area_scale_sq = dot(out.basis[0], out.basis[0]) * dot(out.basis[1], out.basis[1]);

  std::vector<std::size_t> ids(subset.begin(), subset.end());
  if (ids.empty()) {
    ids.resize(ps.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
  }
  std::vector<Point> pts;
  for (std::size_t id : ids) {
    if (id >= ps.size()) throw GeometryError(ErrorKind::InvalidArgument, "point index out of range");
    const auto& p = ps[id].coords;
    pts.push_back(Point{dot(p, out.basis[0]) / dot(out.basis[0], out.basis[0]),
                        dot(p, out.basis[1]) / dot(out.basis[1], out.basis[1])});
  }
  out.points = PointSet(2, std::move(pts), PointSet::Duplicates::Allow);
  out.source = std::move(ids);
  return out;
}

DistinctAreasResult distinct_areas_from_point(const PointSet& plane_points, std::size_t p1) {
  if (plane_points.dim() != 2) throw GeometryError(ErrorKind::DimensionMismatch, "needs a planar point set");
  if (p1 >= plane_points.size()) throw GeometryError(ErrorKind::InvalidArgument, "point index out of range");
  const std::size_t n = plane_points.size();
  const Point& origin = plane_points[p1];
  DistinctAreasResult result;

  // Hypothesis: each line through p1 and another point q holds no third point.
  std::map<std::vector<BigInt>, std::vector<std::size_t>> rays;
  for (std::size_t q = 0; q < n; ++q) {
    if (q == p1) continue;
    const auto v = difference(plane_points[q], origin);
    if (all_zero(v)) {
      result.violations.push_back(q);
      continue;
    }
    rays[primitive_direction(v)].push_back(q);
  }
  for (const auto& [dir, members] : rays) {
    if (members.size() > 1) result.violations.insert(result.violations.end(), members.begin(), members.end());
  }
  std::sort(result.violations.begin(), result.violations.end());
  result.hypothesis_holds = result.violations.empty();

  bool have = false;
  for (std::size_t p2 = 0; p2 < n; ++p2) {
    if (p2 == p1) continue;
    std::set<Rational> areas;
    for (std::size_t q = 0; q < n; ++q) {
      if (q == p1 || q == p2) continue;
      Rational a = abs(twice_signed_area(origin, plane_points[p2], plane_points[q]));
      if (a != 0) areas.insert(std::move(a));
    }
    if (!have || areas.size() > result.distinct_count) {
      have = true;
      result.best_partner = p2;
      result.distinct_count = areas.size();
    }
  }
  if (!have) throw GeometryError(ErrorKind::InvalidArgument, "needs at least two points");
  return result;
}

CommonFaceResult volumes_through_face(const PointSet& ps, const IndexSimplex& face) {
  if (face.size() != ps.dim()) throw GeometryError(ErrorKind::DimensionMismatch, "face needs d vertices");
  validate_simplex(ps, face);
  std::set<Rational> values;
  for (std::size_t q = 0; q < ps.size(); ++q) {
    if (std::binary_search(face.indices().begin(), face.indices().end(), q)) continue;
    auto idx = face.indices();
    idx.push_back(q);
    Rational v = abs(signed_volume_full(ps, IndexSimplex(std::move(idx))));
    if (v != 0) values.insert(std::move(v));
  }
  CommonFaceResult out;
  out.face = face;
  out.volumes.assign(values.begin(), values.end());
  out.distinct_count = out.volumes.size();
  return out;
}

namespace {

CommonFaceResult exhaustive_face(const PointSet& ps) {
  const std::size_t d = ps.dim();
  if (binomial(ps.size(), d) > static_cast<double>(kExhaustiveFaceBudget)) {
    throw GeometryError(ErrorKind::BudgetExceeded, "too many face candidates for the exhaustive scan");
  }
  CommonFaceResult best;
  bool have = false;
  for_each_subset(ps.size(), d, [&](const std::vector<std::size_t>& idx) {
    const IndexSimplex face(idx);
    if (d > 1 && squared_volume(ps, face) == 0) return;
    CommonFaceResult r = volumes_through_face(ps, face);
    if (!have || r.distinct_count > best.distinct_count) {
      have = true;
      best = std::move(r);
    }
  });
  return best;
}

// The (d-1)-tuple through the most distinct spanned hyperplanes, one
// representative per hyperplane projected along the tuple's flat, and the
// best partner from the distinct-area lemma at the flat's image.
CommonFaceResult heuristic_face(const PointSet& ps) {
  const std::size_t d = ps.dim();
  const std::size_t n = ps.size();
  std::vector<std::size_t> best_tuple;
  std::map<HyperplaneKey, std::size_t> best_reps;
  for_each_subset(n, d - 1, [&](const std::vector<std::size_t>& tuple) {
    if (tuple.size() > 1 && squared_volume(ps, IndexSimplex(tuple)) == 0) return;
    std::map<HyperplaneKey, std::size_t> reps;  // smallest-index point per hyperplane
    for (std::size_t q = 0; q < n; ++q) {
      if (std::binary_search(tuple.begin(), tuple.end(), q)) continue;
      auto idx = tuple;
      idx.push_back(q);
      if (d > 1 && squared_volume(ps, IndexSimplex(idx)) == 0) continue;
      reps.emplace(hyperplane_key(ps, idx), q);
    }
    if (reps.size() > best_reps.size()) {
      best_tuple = tuple;
      best_reps = std::move(reps);
    }
  });
  if (best_reps.size() < 2) throw GeometryError(ErrorKind::Degenerate, "point set lies in a hyperplane");

  std::vector<std::vector<Rational>> directions;
  for (std::size_t i = 1; i < best_tuple.size(); ++i) {
    directions.push_back(difference(ps[best_tuple[i]], ps[best_tuple[0]]));
  }
  std::vector<std::size_t> subset{best_tuple[0]};
  std::vector<std::size_t> reps;
  for (const auto& [key, q] : best_reps) reps.push_back(q);
  std::sort(reps.begin(), reps.end());
  subset.insert(subset.end(), reps.begin(), reps.end());
  const ProjectedSet projected = project_orthogonal(ps, directions, subset);
  const DistinctAreasResult lemma = distinct_areas_from_point(projected.points, 0);

  auto face = best_tuple;
  face.push_back(projected.source[lemma.best_partner]);
  return volumes_through_face(ps, IndexSimplex(std::move(face)));
}

}  // namespace

CommonFaceResult best_common_face(const PointSet& ps, CommonFaceMode mode) {
  if (ps.dim() < 2) throw GeometryError(ErrorKind::DimensionMismatch, "common faces need d >= 2");
  require_spanning(ps);
  return mode == CommonFaceMode::Exhaustive ? exhaustive_face(ps) : heuristic_face(ps);
}

bool check_projection_volume_identity(const PointSet& ps, std::size_t p0, std::size_t p1, std::size_t p2,
                                      std::size_t q) {
  if (ps.dim() != 3) throw GeometryError(ErrorKind::DimensionMismatch, "identity is stated in R^3");
  for (std::size_t i : {p0, p1, p2, q}) {
    if (i >= ps.size()) throw GeometryError(ErrorKind::InvalidArgument, "point index out of range");
  }
  if (ps[p0] == ps[p1]) throw GeometryError(ErrorKind::Degenerate, "p0 and p1 coincide");
  const std::vector<std::vector<Rational>> dir{difference(ps[p1], ps[p0])};
  const std::size_t subset[] = {p1, p2, q};
  const ProjectedSet proj = project_orthogonal(ps, dir, subset);
  const Rational twice_area = twice_signed_area(proj.points[0], proj.points[1], proj.points[2]);
  const Rational area_sq = twice_area * twice_area / 4 * proj.area_scale_sq;

  // Volume from the determinant; duplicate vertices give zero.
  const Rational det = determinant({difference(ps[p1], ps[p0]), difference(ps[p2], ps[p0]),
                                    difference(ps[q], ps[p0])});
  const Rational vol_sq = det * det / 36;
  return vol_sq == area_sq * squared_length(ps[p0], ps[p1]) / 9;
}

}  // namespace extremal
