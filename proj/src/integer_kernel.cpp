#include "integer_kernel.hpp"

namespace extremal::detail {

ScaledPoints scale_to_integers(const PointSet& ps, std::span<const std::size_t> subset) {
  if (ps.dim() > 3) {
    throw GeometryError(ErrorKind::DimensionMismatch, "integer kernel handles at most three dimensions");
  }
  ScaledPoints out;
  out.scale = 1;
  for (std::size_t i : subset) {
    for (const auto& x : ps[i].coords) {
      mpz_lcm(out.scale.get_mpz_t(), out.scale.get_mpz_t(), x.get_den_mpz_t());
    }
  }
  out.max_abs = 0;
  out.coords.resize(subset.size());
  for (std::size_t s = 0; s < subset.size(); ++s) {
    const Point& p = ps[subset[s]];
    for (std::size_t c = 0; c < 3; ++c) {
      BigInt v = 0;
      if (c < p.dim()) v = p[c].get_num() * (out.scale / p[c].get_den());
      if (abs(v) > out.max_abs) out.max_abs = abs(v);
      out.coords[s][c] = std::move(v);
    }
  }
  return out;
}

ScaledPoints scale_to_integers(const PointSet& ps) {
  std::vector<std::size_t> all(ps.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return scale_to_integers(ps, all);
}

}  // namespace extremal::detail
