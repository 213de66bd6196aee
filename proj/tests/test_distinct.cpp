#include <doctest.h>

#include <random>
#include <set>

#include "extremal/constructions.hpp"
#include "extremal/distinct.hpp"
#include "extremal/oracles.hpp"
#include "support.hpp"

using namespace extremal;
namespace ts = testing_support;

namespace {

std::size_t brute_best_partner_count(const PointSet& ps, std::size_t p1) {
  std::size_t best = 0;
  for (std::size_t p2 = 0; p2 < ps.size(); ++p2) {
    if (p2 == p1) continue;
    std::set<Rational> areas;
    for (std::size_t q = 0; q < ps.size(); ++q) {
      if (q == p1 || q == p2) continue;
      const Rational a = abs(ts::cross2(ps[p1], ps[p2], ps[q]));
      if (a != 0) areas.insert(a);
    }
    best = std::max(best, areas.size());
  }
  return best;
}

}  // namespace

TEST_CASE("orthogonal projection") {
  const PointSet ps = ts::points3({{1, 2, 7}, {0, 0, 0}, {1, 2, -3}});
  const std::vector<std::vector<Rational>> z{{0, 0, 1}};
  const ProjectedSet p = project_orthogonal(ps, z);
  CHECK(p.points[0] == Point{1, 2});
  CHECK(p.points[2] == Point{1, 2});  // same vertical line, same image
  CHECK(p.area_scale_sq == 1);
  CHECK(p.source == std::vector<std::size_t>{0, 1, 2});
  CHECK(p.points.allows_duplicates());

  const std::vector<std::vector<Rational>> tilt{{1, 1, 0}};
  const ProjectedSet q = project_orthogonal(ps, tilt);
  CHECK(dot(q.basis[0], tilt[0]) == 0);
  CHECK(dot(q.basis[1], tilt[0]) == 0);
  CHECK(dot(q.basis[0], q.basis[1]) == 0);

  const std::vector<std::vector<Rational>> two{{1, 0, 0}, {0, 1, 0}};
  CHECK_THROWS_AS(project_orthogonal(ps, two), GeometryError);
  const std::vector<std::vector<Rational>> zero{{0, 0, 0}};
  CHECK_THROWS_AS(project_orthogonal(ps, zero), GeometryError);

  const PointSet four(4, {Point{1, 2, 3, 4}, Point{0, 1, 0, 1}});
  const std::vector<std::vector<Rational>> dep{{1, 1, 0, 0}, {2, 2, 0, 0}};
  CHECK_THROWS_AS(project_orthogonal(four, dep), GeometryError);
  const std::vector<std::vector<Rational>> ind{{1, 1, 0, 0}, {0, 0, 1, 2}};
  const ProjectedSet f = project_orthogonal(four, ind);
  CHECK(f.points.dim() == 2);
}

TEST_CASE("projected areas scale by the recorded factor") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 200; ++t) {
    const PointSet ps = ts::random_points(rng, 4, 3, 6, 3);
    std::vector<Rational> dir = difference(ps[1], ps[0]);
    // Points 0 and 1 project to one image; triangle (1, 2, 3) keeps its volume relation.
    const std::vector<std::vector<Rational>> dirs{dir};
    const ProjectedSet p = project_orthogonal(ps, dirs);
    CHECK(p.points[0] == p.points[1]);
    CHECK(check_projection_volume_identity(ps, 0, 1, 2, 3));
  }
}

TEST_CASE("projection volume identity") {
  const PointSet ps = ts::points3({{0, 0, 0}, {0, 0, 2}, {1, 0, 0}, {0, 1, 1}});
  CHECK(abs(signed_volume_full(ps, IndexSimplex{0, 1, 2, 3})) == Rational(1, 3));
  CHECK(check_projection_volume_identity(ps, 0, 1, 2, 3));

  // q projecting onto the line through p1~ and p2~: both sides vanish.
  const PointSet flat = ts::points3({{0, 0, 0}, {0, 0, 1}, {1, 0, 0}, {2, 0, 5}});
  CHECK(signed_volume_full(flat, IndexSimplex{0, 1, 2, 3}) == 0);
  CHECK(check_projection_volume_identity(flat, 0, 1, 2, 3));

  const PointSet dup(3, {Point{1, 1, 1}, Point{1, 1, 1}, Point{0, 0, 0}, Point{2, 0, 0}},
                     PointSet::Duplicates::Allow);
  try {
    check_projection_volume_identity(dup, 0, 1, 2, 3);
    FAIL("expected a degenerate error");
  } catch (const GeometryError& e) {
    CHECK(e.kind() == ErrorKind::Degenerate);
  }
}

TEST_CASE("distinct areas from a point") {
  const PointSet square = ts::points2({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  const auto s = distinct_areas_from_point(square, 0);
  CHECK(s.distinct_count == 1);
  CHECK(s.hypothesis_holds);

  const PointSet star = ts::points2({{0, 0}, {1, 0}, {0, 1}, {2, 3}, {3, 1}});
  const auto r = distinct_areas_from_point(star, 0);
  CHECK(r.distinct_count == brute_best_partner_count(star, 0));
  CHECK(r.hypothesis_holds);
  // Lexicographic tie-break: the smallest p2 reaching the maximum.
  for (std::size_t p2 = 1; p2 < r.best_partner; ++p2) {
    std::set<Rational> areas;
    for (std::size_t q = 1; q < star.size(); ++q) {
      if (q == p2) continue;
      const Rational a = abs(ts::cross2(star[0], star[p2], star[q]));
      if (a != 0) areas.insert(a);
    }
    CHECK(areas.size() < r.distinct_count);
  }

  const PointSet tri = ts::points2({{0, 0}, {4, 1}, {1, 5}});
  CHECK(distinct_areas_from_point(tri, 0).distinct_count == 1);

  const PointSet bad = ts::points2({{0, 0}, {1, 1}, {2, 2}, {0, 3}});
  const auto b = distinct_areas_from_point(bad, 0);
  CHECK_FALSE(b.hypothesis_holds);
  CHECK(b.violations == std::vector<std::size_t>{1, 2});
  CHECK(b.distinct_count == brute_best_partner_count(bad, 0));
  CHECK_THROWS_AS(distinct_areas_from_point(bad, 9), GeometryError);
}

TEST_CASE("distinct areas are invariant under area-preserving maps") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 100; ++t) {
    const PointSet ps = ts::random_points(rng, 3 + t % 10, 2, 5, 2);
    std::vector<Point> mapped;
    for (const auto& p : ps.points()) mapped.push_back(Point{2 * p[0] + 3 * p[1] - 1, p[0] + 2 * p[1] + Rational(1, 3)});
    const PointSet qs(2, mapped);
    const auto a = distinct_areas_from_point(ps, 0);
    const auto b = distinct_areas_from_point(qs, 0);
    CHECK(a.distinct_count == b.distinct_count);
    CHECK(a.best_partner == b.best_partner);
    CHECK(a.distinct_count == brute_best_partner_count(ps, 0));
    CHECK(a.violations == b.violations);
  }
}

TEST_CASE("common face search") {
  const auto lines = gen_distinct_volume_lines(7, 3);
  const auto ex = best_common_face(lines.points, CommonFaceMode::Exhaustive);
  const auto he = best_common_face(lines.points, CommonFaceMode::Heuristic);
  CHECK(ex.distinct_count == 2);
  CHECK(he.distinct_count >= 1);
  CHECK(he.distinct_count <= ex.distinct_count);
  CHECK(ex.face.size() == 3);

  const PointSet simplex = ts::points3({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(best_common_face(simplex, CommonFaceMode::Exhaustive).distinct_count == 1);
  CHECK(best_common_face(simplex, CommonFaceMode::Heuristic).distinct_count == 1);

  const PointSet flat = ts::points3({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}});
  for (auto mode : {CommonFaceMode::Exhaustive, CommonFaceMode::Heuristic}) {
    try {
      best_common_face(flat, mode);
      FAIL("expected a degenerate error");
    } catch (const GeometryError& e) {
      CHECK(e.kind() == ErrorKind::Degenerate);
    }
  }

  try {
    best_common_face(gen_random_rational(400, 3, 1, 50), CommonFaceMode::Exhaustive);
    FAIL("expected a budget error");
  } catch (const GeometryError& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }
}

TEST_CASE("common faces: exhaustive dominates heuristic, values are realized") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 40; ++t) {
    const std::size_t d = 2 + t % 2;
    PointSet ps = ts::random_points(rng, d + 2 + t % 7, d, 3);
    if (d == 3) ps = ts::random_noncoplanar(rng, 5 + t % 7, 3);
    else if (ts::reference_min_triangles(ps).witnesses.empty()) continue;
    const auto ex = best_common_face(ps, CommonFaceMode::Exhaustive);
    const auto he = best_common_face(ps, CommonFaceMode::Heuristic);
    CHECK(ex.distinct_count >= he.distinct_count);
    CHECK(he.distinct_count >= 1);
    for (const auto* r : {&ex, &he}) {
      CHECK(r->face.size() == d);
      const auto again = volumes_through_face(ps, r->face);
      CHECK(again.volumes == r->volumes);
      CHECK(r->distinct_count == r->volumes.size());
      for (std::size_t i = 1; i < r->volumes.size(); ++i) CHECK(r->volumes[i - 1] < r->volumes[i]);
    }
    CHECK(ex.distinct_count <= oracle_distinct_volumes(ps).count);
  }
  for (std::size_t d : {2u, 3u}) {
    for (std::size_t n = d + 1; n <= 10; ++n) {
      const PointSet ps = gen_distinct_volume_lines(n, d).points;
      CHECK(best_common_face(ps, CommonFaceMode::Exhaustive).distinct_count == oracle_distinct_volumes(ps).count);
    }
  }
}
