#pragma once

// Minimum-area triangles among coplanar integer points. For every spanned
// line L the candidates are (shortest segment on L) x (closest point to L
// on either side); each minimum triangle shows up once per side.

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "integer_kernel.hpp"

namespace extremal::detail {

template <class A>
struct InPlaneResult {
  using Wide = typename A::Wide;

  bool found = false;
  // With P_b - P_a = g u (u primitive) and u x (q - P_a) = w n, a triangle
  // on base (a, b) and apex q has cross product g w n; t_min is the
  // smallest |g w|, so the minimum area is t_min |n| / 2.
  Wide t_min{};
  std::uint64_t side_incidences = 0;
  std::size_t line_count = 0;
  std::vector<std::array<std::size_t, 3>> witnesses;  // global ids, sorted, deduplicated

  std::uint64_t count() const noexcept { return side_incidences / 3; }
};

template <class A>
class InPlaneMinArea {
 public:
  using Int = typename A::Int;
  using Wide = typename A::Wide;

  /// points[i] carries global id ids[i]; all points lie in the plane with
  /// primitive normal `normal`.
  InPlaneResult<A> run(std::span<const Vec3<Int>> points, std::span<const std::size_t> ids,
                       const Vec3<Int>& normal, bool retain_witnesses) {
    const std::size_t m = points.size();
    int axis = 0;
    for (int c = 1; c < 3; ++c) {
      if (abs_value(normal[c]) > abs_value(normal[axis])) axis = c;
    }
    InPlaneResult<A> out;
    on_line_.assign(m, 0);
    for (std::size_t a = 0; a < m; ++a) {
      rays_.clear();
      for (std::size_t b = 0; b < m; ++b) {
        if (b == a) continue;
        Vec3<Int> d = sub(points[b], points[a]);
        Int g = make_primitive(d);
        rays_.push_back({d, g, b});
      }
      std::sort(rays_.begin(), rays_.end(), [](const Ray& x, const Ray& y) {
        if (x.dir != y.dir) return x.dir < y.dir;
        return x.pos < y.pos;
      });
      for (std::size_t lo = 0; lo < rays_.size();) {
        std::size_t hi = lo + 1;
        while (hi < rays_.size() && rays_[hi].dir == rays_[lo].dir) ++hi;
        // Each line is handled from its smallest member.
        if (rays_[lo].pos > a) scan_line(points, ids, normal, axis, a, lo, hi, retain_witnesses, out);
        lo = hi;
      }
    }
    if (retain_witnesses) {
      std::sort(out.witnesses.begin(), out.witnesses.end());
      out.witnesses.erase(std::unique(out.witnesses.begin(), out.witnesses.end()), out.witnesses.end());
    }
    return out;
  }

 private:
  struct Ray {
    Vec3<Int> dir;
    Int param;  // P_pos = P_a + param * dir
    std::size_t pos;
  };

  void scan_line(std::span<const Vec3<Int>> points, std::span<const std::size_t> ids,
                 const Vec3<Int>& normal, int axis, std::size_t a, std::size_t lo, std::size_t hi,
                 bool retain, InPlaneResult<A>& out) {
    ++out.line_count;
    const Vec3<Int>& dir = rays_[lo].dir;
    params_.clear();
    params_.push_back({Int(0), a});
    for (std::size_t r = lo; r < hi; ++r) params_.push_back({rays_[r].param, rays_[r].pos});
    std::sort(params_.begin(), params_.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& p : params_) on_line_[p.second] = 1;

    Int gap{};
    shortest_.clear();
    for (std::size_t s = 1; s < params_.size(); ++s) {
      Int g = params_[s].first - params_[s - 1].first;
      if (shortest_.empty() || g < gap) {
        gap = g;
        shortest_.clear();
      } else if (g != gap) {
        continue;
      }
      shortest_.push_back({params_[s - 1].second, params_[s].second});
    }

    std::array<Int, 2> nearest_w{};
    std::array<std::vector<std::size_t>, 2> nearest;
    for (std::size_t q = 0; q < points.size(); ++q) {
      if (on_line_[q]) continue;
      const Vec3<Int> cr = cross(dir, sub(points[q], points[a]));
      Int w = cr[axis] / normal[axis];
      const int side = w > 0 ? 0 : 1;
      if (side == 1) w = -w;
      if (nearest[side].empty() || w < nearest_w[side]) {
        nearest_w[side] = w;
        nearest[side].clear();
      } else if (w != nearest_w[side]) {
        continue;
      }
      nearest[side].push_back(q);
    }
    for (const auto& p : params_) on_line_[p.second] = 0;

    for (int side = 0; side < 2; ++side) {
      if (nearest[side].empty()) continue;
      const Wide t = Wide(widen(gap) * widen(nearest_w[side]));
      if (!out.found || t < out.t_min) {
        out.found = true;
        out.t_min = t;
        out.side_incidences = 0;
        out.witnesses.clear();
      } else if (t != out.t_min) {
        continue;
      }
      out.side_incidences += static_cast<std::uint64_t>(shortest_.size()) * nearest[side].size();
      if (!retain) continue;
      for (const auto& [p0, p1] : shortest_) {
        for (std::size_t q : nearest[side]) {
          std::array<std::size_t, 3> tri{ids[p0], ids[p1], ids[q]};
          std::sort(tri.begin(), tri.end());
          out.witnesses.push_back(tri);
        }
      }
    }
  }

  std::vector<Ray> rays_;
  std::vector<std::pair<Int, std::size_t>> params_;
  std::vector<std::pair<std::size_t, std::size_t>> shortest_;
  std::vector<char> on_line_;
};

}  // namespace extremal::detail
