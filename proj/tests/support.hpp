#pragma once

// Test-side reference computations. These use closed-form determinants and
// plain loops, sharing nothing with the library kernels beyond the point
// container.

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "extremal/geometry.hpp"

namespace testing_support {

using extremal::IndexSimplex;
using extremal::Point;
using extremal::PointSet;
using extremal::Rational;

inline Rational det3(const Point& a, const Point& b, const Point& c, const Point& d) {
  const Rational u0 = b[0] - a[0], u1 = b[1] - a[1], u2 = b[2] - a[2];
  const Rational v0 = c[0] - a[0], v1 = c[1] - a[1], v2 = c[2] - a[2];
  const Rational w0 = d[0] - a[0], w1 = d[1] - a[1], w2 = d[2] - a[2];
  return u0 * (v1 * w2 - v2 * w1) - u1 * (v0 * w2 - v2 * w0) + u2 * (v0 * w1 - v1 * w0);
}

inline Rational cross2(const Point& a, const Point& b, const Point& c) {
  return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

struct Minimum {
  Rational value;  // volume (3D) or area (2D); zero when nothing is positive
  std::set<IndexSimplex> witnesses;
};

inline void offer(Minimum& m, const Rational& v, IndexSimplex s) {
  if (v == 0) return;
  if (m.witnesses.empty() || v < m.value) {
    m.value = v;
    m.witnesses.clear();
  } else if (v != m.value) {
    return;
  }
  m.witnesses.insert(std::move(s));
}

inline Minimum reference_min_tetrahedra(const PointSet& ps) {
  Minimum m;
  const std::size_t n = ps.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d)
          offer(m, abs(det3(ps[a], ps[b], ps[c], ps[d])) / 6, IndexSimplex{a, b, c, d});
  return m;
}

inline Minimum reference_min_triangles(const PointSet& ps) {
  Minimum m;
  const std::size_t n = ps.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        offer(m, abs(cross2(ps[a], ps[b], ps[c])) / 2, IndexSimplex{a, b, c});
  return m;
}

inline std::set<IndexSimplex> as_set(const std::vector<IndexSimplex>& v) { return {v.begin(), v.end()}; }

/// Distinct points with coordinates num/den, |num| <= bound, 1 <= den <= max_den.
inline PointSet random_points(std::mt19937_64& rng, std::size_t n, std::size_t d, long bound, long max_den = 1) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, max_den);
  std::set<std::vector<Rational>> seen;
  std::vector<Point> pts;
  while (pts.size() < n) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < d; ++i) {
      Rational q(num(rng), den(rng));
      q.canonicalize();
      c.push_back(q);
    }
    if (seen.insert(c).second) pts.emplace_back(std::move(c));
  }
  return PointSet(d, std::move(pts));
}

/// Random points until the set is not contained in a single hyperplane (3D).
inline PointSet random_noncoplanar(std::mt19937_64& rng, std::size_t n, long bound, long max_den = 1) {
  while (true) {
    PointSet ps = random_points(rng, n, 3, bound, max_den);
    for (std::size_t i = 3; i < n; ++i) {
      if (det3(ps[0], ps[1], ps[2], ps[i]) != 0) return ps;
    }
    // The first three may be collinear; fall back to a full scan.
    if (!reference_min_tetrahedra(ps).witnesses.empty()) return ps;
  }
}

inline PointSet random_noncollinear(std::mt19937_64& rng, std::size_t n, long bound, long max_den = 1) {
  while (true) {
    PointSet ps = random_points(rng, n, 2, bound, max_den);
    if (!reference_min_triangles(ps).witnesses.empty()) return ps;
  }
}

inline PointSet permuted(const PointSet& ps, const std::vector<std::size_t>& perm) {
  std::vector<Point> pts;
  for (std::size_t i : perm) pts.push_back(ps[i]);
  return PointSet(ps.dim(), std::move(pts), ps.allows_duplicates() ? PointSet::Duplicates::Allow : PointSet::Duplicates::Reject);
}

/// Maps simplices of ps into simplices of permuted(ps, perm).
inline std::set<IndexSimplex> map_simplices(const std::set<IndexSimplex>& s, const std::vector<std::size_t>& perm) {
  std::vector<std::size_t> inverse(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inverse[perm[i]] = i;
  std::set<IndexSimplex> out;
  for (const auto& x : s) {
    std::vector<std::size_t> v;
    for (std::size_t i : x.indices()) v.push_back(inverse[i]);
    out.insert(IndexSimplex(v));
  }
  return out;
}

inline PointSet points3(std::initializer_list<std::array<long, 3>> coords) {
  std::vector<Point> pts;
  for (const auto& c : coords) pts.push_back(Point{Rational(c[0]), Rational(c[1]), Rational(c[2])});
  return PointSet(3, std::move(pts));
}

inline PointSet points2(std::initializer_list<std::array<long, 2>> coords) {
  std::vector<Point> pts;
  for (const auto& c : coords) pts.push_back(Point{Rational(c[0]), Rational(c[1])});
  return PointSet(2, std::move(pts));
}

}  // namespace testing_support
