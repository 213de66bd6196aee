#include "extremal/geometry.hpp"

#include <algorithm>
#include <set>

namespace extremal {

PointSet::PointSet(std::size_t dim, std::vector<Point> points, Duplicates duplicates)
    : dim_(dim), points_(std::move(points)), allow_duplicates_(duplicates == Duplicates::Allow) {
  if (dim_ == 0) throw GeometryError(ErrorKind::InvalidArgument, "point set dimension must be positive");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].dim() != dim_) {
      throw GeometryError(ErrorKind::DimensionMismatch,
                          "point " + std::to_string(i) + " has " + std::to_string(points_[i].dim()) +
                              " coordinates, expected " + std::to_string(dim_));
    }
  }
  if (!allow_duplicates_) {
    std::vector<std::size_t> order(points_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return points_[a] < points_[b]; });
    for (std::size_t i = 1; i < order.size(); ++i) {
      if (points_[order[i]] == points_[order[i - 1]]) {
        const auto [lo, hi] = std::minmax(order[i], order[i - 1]);
        throw GeometryError(ErrorKind::DuplicatePoint, "points " + std::to_string(lo) + " and " +
                                                           std::to_string(hi) + " coincide");
      }
    }
  }
}

IndexSimplex::IndexSimplex(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  if (indices_.size() < 2) {
    throw GeometryError(ErrorKind::InvalidArgument, "a simplex needs at least two vertices");
  }
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
    throw GeometryError(ErrorKind::InvalidArgument, "simplex has a repeated vertex index");
  }
}

std::vector<Rational> difference(const Point& a, const Point& b) {
  std::vector<Rational> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a[i] - b[i];
  return out;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  Rational out = 0;
  for (std::size_t i = 0; i < a.size(); ++i) out += a[i] * b[i];
  return out;
}

Rational squared_length(const Point& a, const Point& b) {
  Rational out = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const Rational t = a[i] - b[i];
    out += t * t;
  }
  return out;
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

void validate_simplex(const PointSet& ps, const IndexSimplex& s) {
  if (s.k() > ps.dim()) {
    throw GeometryError(ErrorKind::DimensionMismatch,
                        std::to_string(s.k()) + "-simplex in dimension " + std::to_string(ps.dim()));
  }
  if (s.indices().back() >= ps.size()) {
    throw GeometryError(ErrorKind::InvalidArgument, "simplex index out of range");
  }
}

namespace {

std::vector<std::vector<Rational>> edge_vectors(const PointSet& ps, const IndexSimplex& s) {
  std::vector<std::vector<Rational>> edges;
  edges.reserve(s.k());
  const Point& base = ps[s[0]];
  for (std::size_t i = 1; i < s.size(); ++i) edges.push_back(difference(ps[s[i]], base));
  return edges;
}

}  // namespace

Rational signed_volume_full(const PointSet& ps, const IndexSimplex& s) {
  validate_simplex(ps, s);
  if (s.k() != ps.dim()) {
    throw GeometryError(ErrorKind::DimensionMismatch, "full-dimensional volume needs d+1 vertices");
  }
  Rational v = determinant(edge_vectors(ps, s));
  v /= Rational(factorial(static_cast<unsigned>(ps.dim())));
  return v;
}

Rational squared_volume(const PointSet& ps, const IndexSimplex& s) {
  validate_simplex(ps, s);
  const auto edges = edge_vectors(ps, s);
  const std::size_t k = edges.size();
  std::vector<std::vector<Rational>> gram(k, std::vector<Rational>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      gram[i][j] = dot(edges[i], edges[j]);
      gram[j][i] = gram[i][j];
    }
  }
  const BigInt kf = factorial(static_cast<unsigned>(k));
  Rational v = determinant(std::move(gram));
  v /= Rational(kf * kf);
  return v;
}

bool affinely_independent(const PointSet& ps, const IndexSimplex& s) {
  return squared_volume(ps, s) != 0;
}

bool collinear(const PointSet& ps, std::size_t a, std::size_t b, std::size_t c) {
  return squared_volume(ps, IndexSimplex{a, b, c}) == 0;
}

std::vector<BigInt> primitive_direction(std::span<const Rational> v) {
  BigInt lcm = 1;
  for (const auto& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  std::vector<BigInt> out(v.size());
  BigInt g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = v[i].get_num() * (lcm / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  if (g == 0) throw GeometryError(ErrorKind::Degenerate, "zero vector has no direction");
  const auto first = std::find_if(out.begin(), out.end(), [](const BigInt& x) { return x != 0; });
  if (*first < 0) g = -g;
  for (auto& x : out) x /= g;
  return out;
}

HyperplaneKey HyperplaneKey::canonical(std::vector<Rational> normal, Rational offset) {
  std::vector<Rational> all = std::move(normal);
  all.push_back(std::move(offset));
  BigInt lcm = 1;
  for (const auto& x : all) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  std::vector<BigInt> ints(all.size());
  BigInt g = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    ints[i] = all[i].get_num() * (lcm / all[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  const auto first = std::find_if(ints.begin(), ints.end() - 1, [](const BigInt& x) { return x != 0; });
  if (first == ints.end() - 1) {
    throw GeometryError(ErrorKind::Degenerate, "hyperplane normal is zero");
  }
  if (*first < 0) g = -g;
  for (auto& x : ints) x /= g;
  HyperplaneKey key;
  key.offset = ints.back();
  ints.pop_back();
  key.normal = std::move(ints);
  return key;
}

Rational HyperplaneKey::evaluate(const Point& p) const {
  Rational out = -Rational(offset);
  for (std::size_t i = 0; i < normal.size(); ++i) out += Rational(normal[i]) * p[i];
  return out;
}

HyperplaneKey hyperplane_key(const PointSet& ps, std::span<const std::size_t> indices) {
  const std::size_t d = ps.dim();
  if (indices.size() != d) {
    throw GeometryError(ErrorKind::DimensionMismatch, "a hyperplane in R^d needs d points");
  }
  for (auto i : indices) {
    if (i >= ps.size()) throw GeometryError(ErrorKind::InvalidArgument, "point index out of range");
  }
  const Point& base = ps[indices[0]];
  std::vector<std::vector<Rational>> edges;
  for (std::size_t i = 1; i < d; ++i) edges.push_back(difference(ps[indices[i]], base));
  // Generalized cross product: signed maximal minors of the (d-1) x d edge matrix.
  std::vector<Rational> normal(d);
  for (std::size_t col = 0; col < d; ++col) {
    std::vector<std::vector<Rational>> minor;
    for (const auto& e : edges) {
      std::vector<Rational> row;
      for (std::size_t c = 0; c < d; ++c) {
        if (c != col) row.push_back(e[c]);
      }
      minor.push_back(std::move(row));
    }
    normal[col] = determinant(std::move(minor));
    if (col % 2 == 1) normal[col] = -normal[col];
  }
  if (std::all_of(normal.begin(), normal.end(), [](const Rational& x) { return x == 0; })) {
    throw GeometryError(ErrorKind::Degenerate, "points are affinely dependent");
  }
  Rational offset = dot(normal, base.coords);
  return HyperplaneKey::canonical(std::move(normal), std::move(offset));
}

HyperplaneKey plane_key(const PointSet& ps, std::size_t a, std::size_t b, std::size_t c) {
  if (ps.dim() != 3) throw GeometryError(ErrorKind::DimensionMismatch, "plane_key needs a 3D point set");
  const std::size_t idx[] = {a, b, c};
  return hyperplane_key(ps, idx);
}

LineKey line_key(const PointSet& ps, std::size_t a, std::size_t b) {
  if (a >= ps.size() || b >= ps.size()) {
    throw GeometryError(ErrorKind::InvalidArgument, "point index out of range");
  }
  const auto diff = difference(ps[b], ps[a]);
  if (std::all_of(diff.begin(), diff.end(), [](const Rational& x) { return x == 0; })) {
    throw GeometryError(ErrorKind::Degenerate, "a line needs two distinct points");
  }
  LineKey key;
  key.direction = primitive_direction(diff);
  std::vector<Rational> u(key.direction.begin(), key.direction.end());
  const Point& p = ps[a];
  const Rational t = dot(p.coords, u) / dot(u, u);
  key.anchor.resize(ps.dim());
  for (std::size_t i = 0; i < ps.dim(); ++i) key.anchor[i] = p[i] - t * u[i];
  return key;
}

Rational squared_distance_point_plane(const Point& p, const HyperplaneKey& h) {
  const Rational v = h.evaluate(p);
  BigInt norm2 = 0;
  for (const auto& x : h.normal) norm2 += x * x;
  return v * v / Rational(norm2);
}

}  // namespace extremal
