#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "extremal/oracles.hpp"
#include "support.hpp"

using namespace extremal;
namespace ts = testing_support;

namespace {

PointSet grid3x3() {
  return ts::points2({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 1}, {0, 2}, {1, 2}, {2, 2}});
}

std::vector<std::size_t> shuffled_order(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace

TEST_CASE("minimum simplices: spec examples") {
  const PointSet square = ts::points2({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  const auto sq = oracle_min_simplices(square, 2);
  CHECK(sq.min_squared_volume == Rational(1, 4));
  CHECK(sq.count == 4);
  CHECK(sq.witnesses.size() == 4);

  const PointSet generic = ts::points3({{0, 0, 0}, {3, 1, 0}, {1, 4, 1}, {2, 2, 5}});
  const auto g = oracle_min_simplices(generic, 3);
  CHECK(g.count == 1);
  CHECK(g.witnesses == std::vector<IndexSimplex>{IndexSimplex{0, 1, 2, 3}});
}

TEST_CASE("minimum simplices: degenerate input and witness caps") {
  const PointSet line = ts::points2({{0, 0}, {1, 1}, {2, 2}, {5, 5}});
  try {
    oracle_min_simplices(line, 2);
    FAIL("expected a degenerate error");
  } catch (const GeometryError& e) {
    CHECK(e.kind() == ErrorKind::Degenerate);
  }
  CHECK_THROWS_AS(oracle_min_simplices(line, 0), GeometryError);
  CHECK_THROWS_AS(oracle_min_simplices(line, 3), GeometryError);

  OracleOptions capped;
  capped.witness_limit = 2;
  const auto r = oracle_min_simplices(grid3x3(), 2, capped);
  CHECK(r.witnesses.size() == 2);
  CHECK(r.count == oracle_min_simplices(grid3x3(), 2).count);
  OracleOptions none;
  none.collect_witnesses = false;
  CHECK(oracle_min_simplices(grid3x3(), 2, none).witnesses.empty());
}

TEST_CASE("minimum simplices agree with the closed-form reference scan") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 60; ++t) {
    const PointSet ps = ts::random_noncoplanar(rng, 5 + t % 9, 3, 2);
    const auto ref = ts::reference_min_tetrahedra(ps);
    const auto r = oracle_min_simplices(ps, 3);
    CHECK(r.min_squared_volume == ref.value * ref.value);
    CHECK(r.count == ref.witnesses.size());
    CHECK(ts::as_set(r.witnesses) == ref.witnesses);
    CHECK(std::is_sorted(r.witnesses.begin(), r.witnesses.end()));
  }
  for (int t = 0; t < 60; ++t) {
    const PointSet ps = ts::random_noncollinear(rng, 4 + t % 12, 3, 3);
    const auto ref = ts::reference_min_triangles(ps);
    const auto r = oracle_min_simplices(ps, 2);
    CHECK(r.min_squared_volume == ref.value * ref.value);
    CHECK(ts::as_set(r.witnesses) == ref.witnesses);
  }
}

TEST_CASE("minimum simplices are permutation invariant") {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 40; ++t) {
    const PointSet ps = ts::random_noncoplanar(rng, 6 + t % 7, 4, 1);
    const auto perm = shuffled_order(ps.size(), rng);
    const PointSet shuffled = ts::permuted(ps, perm);
    const auto a = oracle_min_simplices(ps, 3);
    const auto b = oracle_min_simplices(shuffled, 3);
    CHECK(a.min_squared_volume == b.min_squared_volume);
    CHECK(ts::map_simplices(ts::as_set(a.witnesses), perm) == ts::as_set(b.witnesses));
    for (std::size_t k = 1; k <= 2; ++k) {
      const auto c = oracle_min_simplices(ps, k);
      const auto d = oracle_min_simplices(shuffled, k);
      CHECK(c.min_squared_volume == d.min_squared_volume);
      CHECK(ts::map_simplices(ts::as_set(c.witnesses), perm) == ts::as_set(d.witnesses));
    }
  }
}

TEST_CASE("no scanned subset beats a reported witness") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 20; ++t) {
    const PointSet ps = ts::random_noncoplanar(rng, 8, 3, 3);
    const auto r = oracle_min_simplices(ps, 2);
    for_each_subset(ps.size(), 3, [&](const std::vector<std::size_t>& idx) {
      const Rational v = squared_volume(ps, IndexSimplex(idx));
      if (v != 0) CHECK(v >= r.min_squared_volume);
    });
  }
}

TEST_CASE("volume counting") {
  const PointSet ps = ts::points3({{0, 0, 0}, {1, 0, 0}, {0, 2, 0}, {0, 0, 3}});
  CHECK(oracle_count_volume(ps, 1, 3).count == 1);
  CHECK(oracle_count_volume(ps, 2, 3).count == 0);
  CHECK(oracle_count_volume(ps, 1000, 3).count == 0);
  CHECK_THROWS_AS(oracle_count_volume(ps, 0, 3), GeometryError);
  CHECK_THROWS_AS(oracle_count_volume(ps, -1, 3), GeometryError);

  // Squared-area target 1/4 on the 3x3 grid (embedded in R^3 so that k < d),
  // checked against a shuffled re-scan and a closed-form count.
  std::mt19937_64 rng(24);
  const PointSet g = grid3x3();
  std::vector<Point> lifted;
  for (const auto& p : g.points()) lifted.push_back(Point{p[0], p[1], 0});
  const PointSet g3(3, lifted);
  const auto direct = oracle_count_volume(g3, Rational(1, 4), 2);
  const auto perm = shuffled_order(g3.size(), rng);
  const auto again = oracle_count_volume(ts::permuted(g3, perm), Rational(1, 4), 2);
  CHECK(direct.count == again.count);
  CHECK(ts::map_simplices(ts::as_set(direct.witnesses), perm) == ts::as_set(again.witnesses));
  std::size_t half = 0;
  for_each_subset(g.size(), 3, [&](const std::vector<std::size_t>& idx) {
    if (abs(ts::cross2(g[idx[0]], g[idx[1]], g[idx[2]])) == 1) ++half;
  });
  CHECK(half == 32);
  CHECK(direct.count == half);
  // In the plane itself k = d, so the target is the area.
  CHECK(oracle_count_volume(g, Rational(1, 2), 2).count == half);
}

TEST_CASE("distinct volumes") {
  const PointSet simplex_centroid =
      PointSet(3, {Point{0, 0, 0}, Point{1, 0, 0}, Point{0, 1, 0}, Point{0, 0, 1},
                   Point{Rational(1, 4), Rational(1, 4), Rational(1, 4)}});
  const auto r = oracle_distinct_volumes(simplex_centroid);
  CHECK(r.count == 2);
  CHECK(r.distinct_values == std::vector<Rational>{Rational(1, 24), Rational(1, 6)});

  const PointSet independent = ts::points3({{0, 0, 0}, {2, 0, 0}, {0, 5, 0}, {1, 1, 7}});
  CHECK(oracle_distinct_volumes(independent).count == 1);

  const PointSet flat = ts::points3({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {3, 3, 0}});
  try {
    oracle_distinct_volumes(flat);
    FAIL("expected a degenerate error");
  } catch (const GeometryError& e) {
    CHECK(e.kind() == ErrorKind::Degenerate);
  }
}

TEST_CASE("distinct volumes: affine volume-preserving maps and scaling") {
  std::mt19937_64 rng(25);
  for (int t = 0; t < 30; ++t) {
    const PointSet ps = ts::random_noncoplanar(rng, 7, 3, 2);
    const auto base = oracle_distinct_volumes(ps);
    // Shear (x, y, z) -> (x + 2y - z/3, y + z, z) + (1/2, -1, 4) has determinant 1.
    std::vector<Point> sheared, scaled;
    const Rational lambda(3, 2);
    for (const auto& p : ps.points()) {
      sheared.push_back(Point{p[0] + 2 * p[1] - p[2] / 3 + Rational(1, 2), p[1] + p[2] - 1, p[2] + 4});
      scaled.push_back(Point{p[0] * lambda, p[1] * lambda, p[2] * lambda});
    }
    CHECK(oracle_distinct_volumes(PointSet(3, sheared)).distinct_values == base.distinct_values);
    const auto s = oracle_distinct_volumes(PointSet(3, scaled));
    REQUIRE(s.count == base.count);
    for (std::size_t i = 0; i < s.count; ++i) CHECK(s.distinct_values[i] == base.distinct_values[i] * lambda * lambda * lambda);
  }
}

TEST_CASE("rich lines") {
  const auto grid = enumerate_rich_lines(grid3x3(), 3);
  CHECK(grid.lines.size() == 8);
  for (const auto& l : grid.lines) CHECK(l.incident.size() == 3);

  const PointSet generic = ts::points2({{0, 0}, {1, 3}, {4, 1}, {2, 7}, {-3, 5}});
  CHECK(enumerate_rich_lines(generic, 3).lines.empty());

  const PointSet col = ts::points3({{0, 0, 0}, {1, 2, 3}, {-2, -4, -6}, {5, 10, 15}, {3, 6, 9}});
  const auto one = enumerate_rich_lines(col, 2);
  REQUIRE(one.lines.size() == 1);
  CHECK(one.lines[0].incident == std::vector<std::size_t>{0, 1, 2, 3, 4});
  CHECK_THROWS_AS(enumerate_rich_lines(col, 1), GeometryError);
}

TEST_CASE("every pair lies on exactly one spanned line") {
  std::mt19937_64 rng(26);
  for (int t = 0; t < 40; ++t) {
    const std::size_t d = 2 + t % 2;
    const PointSet ps = ts::random_points(rng, 6 + t % 10, d, 2);
    const auto lines = enumerate_rich_lines(ps, 2);
    std::size_t pairs = 0;
    for (const auto& l : lines.lines) pairs += l.incident.size() * (l.incident.size() - 1) / 2;
    CHECK(pairs == ps.size() * (ps.size() - 1) / 2);
    // Every k-rich line appears in the 2-rich list with the same incidences.
    const auto rich3 = enumerate_rich_lines(ps, 3);
    std::map<LineKey, std::vector<std::size_t>> all;
    for (const auto& l : lines.lines) all[l.key] = l.incident;
    for (const auto& l : rich3.lines) CHECK(all.at(l.key) == l.incident);
    CHECK(std::is_sorted(lines.lines.begin(), lines.lines.end(),
                         [](const RichLine& a, const RichLine& b) { return a.key < b.key; }));
  }
}

TEST_CASE("spanned planes") {
  const auto generic = enumerate_spanned_planes(ts::points3({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(generic.size() == 4);
  for (const auto& p : generic) CHECK(p.incident.size() == 3);

  const auto four = enumerate_spanned_planes(ts::points3({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}}));
  std::size_t big = 0, small = 0;
  for (const auto& p : four) (p.incident.size() == 4 ? big : small) += 1;
  CHECK(big == 1);
  CHECK(small == 6);
  CHECK(four.size() == 7);

  CHECK(enumerate_spanned_planes(ts::points3({{0, 0, 0}, {1, 1, 1}, {2, 2, 2}, {7, 7, 7}})).empty());
  CHECK_THROWS_AS(enumerate_spanned_planes(grid3x3()), GeometryError);
}

TEST_CASE("spanned planes agree with closed-form incidence") {
  std::mt19937_64 rng(27);
  for (int t = 0; t < 20; ++t) {
    const PointSet ps = ts::random_points(rng, 9, 3, 1);
    const auto planes = enumerate_spanned_planes(ps);
    std::size_t triples = 0;
    for (const auto& p : planes) {
      for (std::size_t i = 0; i < ps.size(); ++i) {
        const bool on = std::binary_search(p.incident.begin(), p.incident.end(), i);
        CHECK(p.key.contains(ps[i]) == on);
      }
    }
    // Each noncollinear triple lies in exactly one plane.
    std::size_t hits = 0;
    for_each_subset(ps.size(), 3, [&](const std::vector<std::size_t>& idx) {
      if (collinear(ps, idx[0], idx[1], idx[2])) return;
      ++triples;
      for (const auto& p : planes) {
        if (std::includes(p.incident.begin(), p.incident.end(), idx.begin(), idx.end())) ++hits;
      }
    });
    CHECK(hits == triples);
  }
}
