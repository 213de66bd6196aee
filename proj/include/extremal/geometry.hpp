#pragma once

// Exact geometric kernel: points, point sets, index simplices, canonical
// line/hyperplane keys and the volume/distance measures built on them.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "extremal/rational.hpp"

namespace extremal {

enum class ErrorKind {
  InvalidArgument,
  DimensionMismatch,
  DuplicatePoint,
  Degenerate,  // collinear / coplanar / all-degenerate inputs
  BudgetExceeded,
};

class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct Point {
  std::vector<Rational> coords;

  Point() = default;
  explicit Point(std::vector<Rational> c) : coords(std::move(c)) {}
  Point(std::initializer_list<Rational> c) : coords(c) {}

  std::size_t dim() const noexcept { return coords.size(); }
  const Rational& operator[](std::size_t i) const { return coords[i]; }
  Rational& operator[](std::size_t i) { return coords[i]; }

  friend bool operator==(const Point& a, const Point& b) { return a.coords == b.coords; }
  friend bool operator<(const Point& a, const Point& b) { return a.coords < b.coords; }
};

/// Immutable ordered list of points sharing one ambient dimension.
class PointSet {
 public:
  enum class Duplicates { Reject, Allow };

  PointSet() = default;
  PointSet(std::size_t dim, std::vector<Point> points,
           Duplicates duplicates = Duplicates::Reject);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  bool allows_duplicates() const noexcept { return allow_duplicates_; }

  const Point& operator[](std::size_t i) const { return points_[i]; }
  std::span<const Point> points() const noexcept { return points_; }

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return a.dim_ == b.dim_ && a.points_ == b.points_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<Point> points_;
  bool allow_duplicates_ = false;
};

/// A k-simplex named by the sorted indices of its k+1 vertices.
class IndexSimplex {
 public:
  IndexSimplex() = default;
  /// Sorts the indices; throws on fewer than two or repeated indices.
  explicit IndexSimplex(std::vector<std::size_t> indices);
  IndexSimplex(std::initializer_list<std::size_t> indices)
      : IndexSimplex(std::vector<std::size_t>(indices)) {}

  std::size_t k() const noexcept { return indices_.size() - 1; }
  std::size_t size() const noexcept { return indices_.size(); }
  const std::vector<std::size_t>& indices() const noexcept { return indices_; }
  std::size_t operator[](std::size_t i) const { return indices_[i]; }

  auto operator<=>(const IndexSimplex&) const = default;

 private:
  std::vector<std::size_t> indices_;
};

/// Canonical hyperplane normal·x = offset: integer entries, gcd 1 over
/// (normal, offset), first nonzero normal entry positive.
struct HyperplaneKey {
  std::vector<BigInt> normal;
  BigInt offset;

  /// Normalizes an arbitrary rational equation normal·x = offset.
  static HyperplaneKey canonical(std::vector<Rational> normal, Rational offset);

  /// normal·p - offset; zero iff p is on the plane.
  Rational evaluate(const Point& p) const;
  bool contains(const Point& p) const { return evaluate(p) == 0; }

  friend bool operator==(const HyperplaneKey&, const HyperplaneKey&) = default;
  friend bool operator<(const HyperplaneKey& a, const HyperplaneKey& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.offset < b.offset;
  }
};

/// Canonical line: primitive integer direction with first nonzero entry
/// positive, anchored at the point of the line closest to the origin.
struct LineKey {
  std::vector<BigInt> direction;
  std::vector<Rational> anchor;

  friend bool operator==(const LineKey&, const LineKey&) = default;
  friend bool operator<(const LineKey& a, const LineKey& b) {
    if (a.direction != b.direction) return a.direction < b.direction;
    return a.anchor < b.anchor;
  }
};

// Vector helpers on exact coordinates.
std::vector<Rational> difference(const Point& a, const Point& b);  // a - b
Rational dot(std::span<const Rational> a, std::span<const Rational> b);
Rational squared_length(const Point& a, const Point& b);

/// Determinant by Gaussian elimination over the rationals.
Rational determinant(std::vector<std::vector<Rational>> rows);

/// Throws unless s names valid, distinct indices of ps with k <= dim.
void validate_simplex(const PointSet& ps, const IndexSimplex& s);

/// det[p1-p0, ..., pd-p0] / d!; requires k == d.
Rational signed_volume_full(const PointSet& ps, const IndexSimplex& s);

/// Squared k-volume from the Gram determinant of the edge vectors, / (k!)^2.
Rational squared_volume(const PointSet& ps, const IndexSimplex& s);

bool affinely_independent(const PointSet& ps, const IndexSimplex& s);
bool collinear(const PointSet& ps, std::size_t a, std::size_t b, std::size_t c);

/// Plane through three noncollinear points of a 3D set.
HyperplaneKey plane_key(const PointSet& ps, std::size_t a, std::size_t b, std::size_t c);
/// Hyperplane through d affinely independent points of a d-dimensional set.
HyperplaneKey hyperplane_key(const PointSet& ps, std::span<const std::size_t> indices);

LineKey line_key(const PointSet& ps, std::size_t a, std::size_t b);

Rational squared_distance_point_plane(const Point& p, const HyperplaneKey& h);

/// Primitive integer vector parallel to a nonzero rational vector, with its
/// first nonzero entry positive.
std::vector<BigInt> primitive_direction(std::span<const Rational> v);

}  // namespace extremal
