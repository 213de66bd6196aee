#pragma once

// Integer arithmetic shared by the reporters. Coordinates are scaled by the
// LCM of their denominators; the same templated code runs on machine words
// (int64 coordinates and normals, __int128 products) or on mpz_class.

#include <array>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "extremal/geometry.hpp"

namespace extremal::detail {

using i128 = __int128;

struct WordArithmetic {
  using Int = std::int64_t;
  using Wide = i128;
};

struct BigArithmetic {
  using Int = BigInt;
  using Wide = BigInt;
};

// Largest scaled coordinate magnitude for which every quantity the
// reporters form fits: normals below 2^47, dot products below 2^72, and
// area-height products below 2^120.
inline constexpr std::int64_t kWordCoordinateLimit = std::int64_t{1} << 22;

inline std::int64_t int_gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
inline BigInt int_gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline i128 widen(std::int64_t a) { return a; }
inline const BigInt& widen(const BigInt& a) { return a; }

template <class T>
T abs_value(const T& x) {
  return x < 0 ? T(-x) : x;
}

inline BigInt to_big(const BigInt& x) { return x; }
inline BigInt to_big(std::int64_t x) { return BigInt(static_cast<long>(x)); }
inline BigInt to_big(i128 x) {
  const bool negative = x < 0;
  unsigned __int128 u = negative ? static_cast<unsigned __int128>(-(x + 1)) + 1
                                 : static_cast<unsigned __int128>(x);
  const auto hi = static_cast<unsigned long>(u >> 64);
  const auto lo = static_cast<unsigned long>(u & ~0ULL);
  BigInt out(hi);
  out <<= 64;
  out += BigInt(lo);
  return negative ? BigInt(-out) : out;
}

inline std::int64_t from_big(const BigInt& x, std::int64_t) { return x.get_si(); }
inline BigInt from_big(const BigInt& x, const BigInt&) { return x; }

template <class Int>
using Vec3 = std::array<Int, 3>;

template <class Int>
Vec3<Int> sub(const Vec3<Int>& a, const Vec3<Int>& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

template <class Int>
Vec3<Int> cross(const Vec3<Int>& a, const Vec3<Int>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

template <class Int>
bool is_zero(const Vec3<Int>& v) {
  return v[0] == 0 && v[1] == 0 && v[2] == 0;
}

/// Divides v by the gcd of its entries and makes the first nonzero entry
/// positive; returns the signed factor removed (v_in = factor * v_out).
template <class Int>
Int make_primitive(Vec3<Int>& v) {
  Int g = int_gcd(int_gcd(v[0], v[1]), v[2]);
  if (v[0] < 0 || (v[0] == 0 && (v[1] < 0 || (v[1] == 0 && v[2] < 0)))) g = -g;
  for (auto& x : v) x /= g;
  return g;
}

template <class A, class Int = typename A::Int, class Wide = typename A::Wide>
Wide dot_wide(const Vec3<Int>& a, const Vec3<Int>& b) {
  return Wide(widen(a[0]) * widen(b[0])) + Wide(widen(a[1]) * widen(b[1])) +
         Wide(widen(a[2]) * widen(b[2]));
}

/// Integer coordinates scale * p for every point, embedded in 3D.
struct ScaledPoints {
  BigInt scale;  // LCM of denominators
  std::vector<std::array<BigInt, 3>> coords;
  BigInt max_abs;
};

ScaledPoints scale_to_integers(const PointSet& ps, std::span<const std::size_t> subset);
ScaledPoints scale_to_integers(const PointSet& ps);

template <class Int>
std::vector<Vec3<Int>> convert(const ScaledPoints& sp) {
  std::vector<Vec3<Int>> out(sp.coords.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (int c = 0; c < 3; ++c) out[i][c] = from_big(sp.coords[i][c], Int{});
  }
  return out;
}

inline bool fits_words(const ScaledPoints& sp) { return sp.max_abs <= kWordCoordinateLimit; }

}  // namespace extremal::detail
