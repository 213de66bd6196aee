#include "extremal/minvol.hpp"

#include <algorithm>
#include <cstdint>
#include <exception>
#include <numeric>
#include <set>
#include <thread>
#include <type_traits>

#include "integer_kernel.hpp"
#include "planar_core.hpp"

namespace extremal {

const char* to_string(Side side) { return side == Side::Above ? "above" : "below"; }

namespace {

using detail::Vec3;
using detail::i128;

BigInt squared_norm(const std::vector<BigInt>& v) {
  BigInt out = 0;
  for (const auto& x : v) out += x * x;
  return out;
}

std::vector<BigInt> to_big_vector(const auto& v) {
  std::vector<BigInt> out;
  for (const auto& x : v) out.push_back(detail::to_big(x));
  return out;
}

HyperplaneKey key_from_scaled(const std::vector<BigInt>& normal, const BigInt& scaled_offset,
                              const BigInt& scale) {
  std::vector<Rational> n(normal.begin(), normal.end());
  return HyperplaneKey::canonical(std::move(n), ratio(scaled_offset, scale));
}

// Everything recorded for one (plane, side) pair attaining the current best.
template <class A>
struct Hit {
  std::vector<std::size_t> incident;
  Vec3<typename A::Int> normal;
  typename A::Wide offset;
  typename A::Wide t_min;
  std::uint64_t triangles = 0;  // M_h
  std::size_t line_count = 0;
  std::vector<std::array<std::size_t, 3>> min_triangles;
  Side side = Side::Above;
  typename A::Wide height;  // |normal·p - offset| of the nearest points
  std::vector<std::size_t> nearest;
};

template <class A>
struct Accumulator {
  bool found = false;
  typename A::Wide best{};  // t_min * height; volume = best / (6 scale^3)
  std::uint64_t face_incidences = 0;
  std::uint64_t planes_visited = 0;
  std::vector<Hit<A>> hits;
};

template <class A>
class SpaceScanner {
 public:
  using Int = typename A::Int;
  using Wide = typename A::Wide;

  SpaceScanner(const std::vector<Vec3<Int>>& points, const ReporterOptions& options)
      : pts_(points), keep_hits_(options.retain_witnesses || options.retain_contributing),
        keep_triangles_(options.retain_witnesses || options.retain_contributing) {
    if constexpr (std::is_same_v<Int, std::int64_t>) {
      order_.resize(pts_.size());
      std::iota(order_.begin(), order_.end(), std::size_t{0});
      if (!pts_.empty()) build_leaves(0, pts_.size());
      leaf_of_.resize(pts_.size());
      for (std::size_t l = 0; l < leaves_.size(); ++l) {
        for (std::size_t q = leaves_[l].begin; q < leaves_[l].end; ++q) leaf_of_[order_[q]] = l;
      }
      for (std::size_t id : order_) {
        const auto& p = pts_[id];
        xs_.push_back(p[0]);
        ys_.push_back(p[1]);
        zs_.push_back(p[2]);
        coord_max_ = std::max({coord_max_, i128(detail::abs_value(p[0])), i128(detail::abs_value(p[1])),
                               i128(detail::abs_value(p[2]))});
      }
    }
  }

  void scan_pairs_from(std::size_t i, Accumulator<A>& acc) {
    const std::size_t n = pts_.size();
    for (std::size_t j = i + 1; j < n; ++j) scan_pair(i, j, acc);
  }

 private:
  struct Entry {
    Vec3<Int> normal;
    Int factor;  // raw cross product = factor * normal
    std::size_t k;
  };

  // Emits every plane whose two smallest incident indices are i < j.
  void scan_pair(std::size_t i, std::size_t j, Accumulator<A>& acc) {
    const std::size_t n = pts_.size();
    const Vec3<Int> u = detail::sub(pts_[j], pts_[i]);
    entries_.clear();
    on_line_.clear();
    for (std::size_t k = 0; k < n; ++k) {
      if (k == i || k == j) continue;
      Vec3<Int> cr = detail::cross(u, detail::sub(pts_[k], pts_[i]));
      if (detail::is_zero(cr)) {
        if (k < j) return;  // some plane point precedes j
        on_line_.push_back(k);
        continue;
      }
      Int f = detail::make_primitive(cr);
      entries_.push_back({cr, f, k});
    }
    std::sort(entries_.begin(), entries_.end(), [](const Entry& x, const Entry& y) {
      if (x.normal != y.normal) return x.normal < y.normal;
      return x.k < y.k;
    });
    for (std::size_t lo = 0; lo < entries_.size();) {
      std::size_t hi = lo + 1;
      while (hi < entries_.size() && entries_[hi].normal == entries_[lo].normal) ++hi;
      if (entries_[lo].k > j) visit_plane(i, j, lo, hi, acc);
      lo = hi;
    }
  }

  void visit_plane(std::size_t i, std::size_t j, std::size_t lo, std::size_t hi, Accumulator<A>& acc) {
    ++acc.planes_visited;
    const Vec3<Int>& normal = entries_[lo].normal;
    incident_.clear();
    incident_.push_back(i);
    incident_.push_back(j);
    {
      std::size_t a = 0, b = lo;
      while (a < on_line_.size() || b < hi) {
        if (b == hi || (a < on_line_.size() && on_line_[a] < entries_[b].k)) {
          incident_.push_back(on_line_[a++]);
        } else {
          incident_.push_back(entries_[b++].k);
        }
      }
    }

    Wide t_min;
    std::uint64_t triangles = 1;
    std::size_t line_count = 3;
    triangles_.clear();
    if (incident_.size() == 3) {
      t_min = detail::abs_value(Wide(detail::widen(entries_[lo].factor)));
      if (keep_triangles_) triangles_.push_back({incident_[0], incident_[1], incident_[2]});
    } else {
      plane_pts_.clear();
      for (std::size_t id : incident_) plane_pts_.push_back(pts_[id]);
      auto r = planar_.run(plane_pts_, incident_, normal, keep_triangles_);
      t_min = r.t_min;
      triangles = r.count();
      line_count = r.line_count;
      triangles_ = std::move(r.witnesses);
    }

    // Heights are positive integers, so t_min alone bounds the volume from below.
    if (acc.found && t_min > acc.best) return;

    // Nearest points strictly on each side of the plane.
    const Wide offset = detail::dot_wide<A>(normal, pts_[i]);
    bool seen[2] = {false, false};
    Wide height[2] = {Wide{}, Wide{}};
    nearest_[0].clear();
    nearest_[1].clear();
    if (!narrow_slab(normal, i, t_min, acc, seen, height)) {
      for (std::size_t q = 0; q < pts_.size(); ++q) {
        Wide s = detail::dot_wide<A>(normal, pts_[q]) - offset;
        if (s == 0) continue;
        const int side = s > 0 ? 0 : 1;
        if (side == 1) s = -s;
        if (!seen[side] || s < height[side]) {
          seen[side] = true;
          height[side] = s;
          nearest_[side].clear();
        } else if (s != height[side]) {
          continue;
        }
        nearest_[side].push_back(q);
      }
    }

    for (int side = 0; side < 2; ++side) {
      if (!seen[side]) continue;
      Wide volume = t_min * height[side];
      if (!acc.found || volume < acc.best) {
        acc.found = true;
        acc.best = volume;
        acc.face_incidences = 0;
        acc.hits.clear();
      } else if (volume != acc.best) {
        continue;
      }
      acc.face_incidences += triangles * nearest_[side].size();
      if (!keep_hits_) continue;
      Hit<A> hit;
      hit.incident = incident_;
      hit.normal = normal;
      hit.offset = offset;
      hit.t_min = t_min;
      hit.triangles = triangles;
      hit.line_count = line_count;
      hit.min_triangles = triangles_;
      hit.side = side == 0 ? Side::Above : Side::Below;
      hit.height = height[side];
      hit.nearest = nearest_[side];
      acc.hits.push_back(std::move(hit));
    }
  }

  // Same scan on int64 columns when every signed distance provably fits.
  // Points are grouped into kd leaves; a leaf is read only if its bounding
  // box can hold a point nearer than the best found so far on some side.
  bool narrow_slab(const Vec3<Int>& normal, std::size_t i, const Wide& t_min, const Accumulator<A>& acc,
                   bool seen[2], Wide height[2]) {
    if constexpr (!std::is_same_v<Int, std::int64_t>) {
      return false;
    } else {
      const std::int64_t nmax =
          std::max({detail::abs_value(normal[0]), detail::abs_value(normal[1]), detail::abs_value(normal[2])});
      if (i128(nmax) * coord_max_ >= kNarrowLimit) return false;
      const std::int64_t a = normal[0], b = normal[1], c = normal[2];
      const std::int64_t off = a * pts_[i][0] + b * pts_[i][1] + c * pts_[i][2];

      // Heights above the cap cannot reach the current best.
      std::int64_t cap = INT64_MAX - 1;
      if (acc.found) {
        const i128 q = acc.best / t_min;
        if (q < cap) cap = static_cast<std::int64_t>(q);
      }
      std::int64_t up = cap + 1, down = cap + 1;
      auto range = [&](const Leaf& leaf, std::int64_t& lo, std::int64_t& hi) {
        const std::int64_t w[3] = {a, b, c};
        lo = hi = -off;
        for (int t = 0; t < 3; ++t) {
          const std::int64_t u = w[t] * leaf.lo[t], v = w[t] * leaf.hi[t];
          lo += std::min(u, v);
          hi += std::max(u, v);
        }
      };
      auto scan = [&](const Leaf& leaf) {
        for (std::size_t q = leaf.begin; q < leaf.end; ++q) {
          const std::int64_t s = a * xs_[q] + b * ys_[q] + c * zs_[q] - off;
          up = (s > 0 && s < up) ? s : up;
          down = (s < 0 && -s < down) ? -s : down;
        }
      };
      const std::size_t home = leaf_of_[i];
      scan(leaves_[home]);
      for (std::size_t l = 0; l < leaves_.size(); ++l) {
        if (l == home) continue;
        std::int64_t lo, hi;
        range(leaves_[l], lo, hi);
        if ((hi > 0 && std::max<std::int64_t>(lo, 1) < up) || (lo < 0 && std::max<std::int64_t>(-hi, 1) < down)) {
          scan(leaves_[l]);
        }
      }
      seen[0] = up <= cap;
      seen[1] = down <= cap;
      if (!seen[0] && !seen[1]) return true;
      height[0] = up;
      height[1] = down;
      for (const Leaf& leaf : leaves_) {
        std::int64_t lo, hi;
        range(leaf, lo, hi);
        const bool hit_up = seen[0] && lo <= up && up <= hi;
        const bool hit_down = seen[1] && lo <= -down && -down <= hi;
        if (!hit_up && !hit_down) continue;
        for (std::size_t q = leaf.begin; q < leaf.end; ++q) {
          const std::int64_t s = a * xs_[q] + b * ys_[q] + c * zs_[q] - off;
          if (hit_up && s == up) nearest_[0].push_back(order_[q]);
          if (hit_down && s == -down) nearest_[1].push_back(order_[q]);
        }
      }
      std::sort(nearest_[0].begin(), nearest_[0].end());
      std::sort(nearest_[1].begin(), nearest_[1].end());
      return true;
    }
  }

  struct Leaf {
    std::size_t begin, end;
    std::array<std::int64_t, 3> lo, hi;
  };

  void build_leaves(std::size_t begin, std::size_t end) {
    Leaf leaf{begin, end, {INT64_MAX, INT64_MAX, INT64_MAX}, {INT64_MIN, INT64_MIN, INT64_MIN}};
    for (std::size_t q = begin; q < end; ++q) {
      for (int t = 0; t < 3; ++t) {
        leaf.lo[t] = std::min(leaf.lo[t], std::int64_t(pts_[order_[q]][t]));
        leaf.hi[t] = std::max(leaf.hi[t], std::int64_t(pts_[order_[q]][t]));
      }
    }
    if (end - begin <= kLeafSize) {
      leaves_.push_back(leaf);
      return;
    }
    int axis = 0;
    for (int t = 1; t < 3; ++t) {
      if (leaf.hi[t] - leaf.lo[t] > leaf.hi[axis] - leaf.lo[axis]) axis = t;
    }
    const std::size_t mid = begin + (end - begin) / 2;
    std::nth_element(order_.begin() + begin, order_.begin() + mid, order_.begin() + end,
                     [&](std::size_t x, std::size_t y) {
                       if (pts_[x][axis] != pts_[y][axis]) return pts_[x][axis] < pts_[y][axis];
                       return x < y;
                     });
    build_leaves(begin, mid);
    build_leaves(mid, end);
  }

  static constexpr std::size_t kLeafSize = 16;
  static constexpr i128 kNarrowLimit = i128(1) << 59;

  const std::vector<Vec3<Int>>& pts_;
  bool keep_hits_;
  bool keep_triangles_;
  std::vector<Entry> entries_;
  std::vector<std::size_t> on_line_;
  std::vector<std::size_t> incident_;
  std::vector<Vec3<Int>> plane_pts_;
  std::vector<std::array<std::size_t, 3>> triangles_;
  std::vector<std::size_t> nearest_[2];
  detail::InPlaneMinArea<A> planar_;
  std::vector<std::int64_t> xs_, ys_, zs_;
  std::vector<std::size_t> order_, leaf_of_;
  std::vector<Leaf> leaves_;
  i128 coord_max_ = 0;
};

unsigned effective_threads(unsigned requested, std::size_t work) {
  unsigned t = std::max(1u, requested);
  return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(1, work)));
}

template <class A>
MinVolumeReport run_space_reporter(const detail::ScaledPoints& sp, const ReporterOptions& options) {
  const auto pts = detail::convert<typename A::Int>(sp);
  const std::size_t n = pts.size();
  const unsigned threads = effective_threads(options.threads, n);
  std::vector<Accumulator<A>> accs(threads);

  auto work = [&](unsigned tid) {
    SpaceScanner<A> scanner(pts, options);
    for (std::size_t i = tid; i < n; i += threads) scanner.scan_pairs_from(i, accs[tid]);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          work(t);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  // Deterministic reduction: minimum value, then hits in (incident, side) order.
  Accumulator<A> total;
  for (auto& acc : accs) {
    total.planes_visited += acc.planes_visited;
    if (!acc.found) continue;
    if (!total.found || acc.best < total.best) {
      total.found = true;
      total.best = acc.best;
      total.face_incidences = 0;
      total.hits.clear();
    } else if (acc.best != total.best) {
      continue;
    }
    total.face_incidences += acc.face_incidences;
    for (auto& h : acc.hits) total.hits.push_back(std::move(h));
  }
  if (!total.found) {
    throw GeometryError(ErrorKind::Degenerate, "point set is coplanar: no tetrahedron has positive volume");
  }
  std::sort(total.hits.begin(), total.hits.end(), [](const Hit<A>& x, const Hit<A>& y) {
    if (x.incident != y.incident) return x.incident < y.incident;
    return x.side < y.side;
  });

  const BigInt& scale = sp.scale;
  const BigInt scale2 = scale * scale;
  MinVolumeReport report;
  report.min_volume = ratio(detail::to_big(total.best), BigInt(6 * scale2 * scale));
  report.face_incidences = total.face_incidences;
  report.planes_visited = total.planes_visited;
  if (total.face_incidences % 4 != 0) {
    throw std::logic_error("face incidence sum is not a multiple of four");
  }
  report.count = total.face_incidences / 4;

  if (options.retain_witnesses) {
    std::vector<std::array<std::size_t, 4>> tetra;
    for (const auto& h : total.hits) {
      for (const auto& tri : h.min_triangles) {
        for (std::size_t q : h.nearest) {
          std::array<std::size_t, 4> t{tri[0], tri[1], tri[2], q};
          std::sort(t.begin(), t.end());
          tetra.push_back(t);
        }
      }
    }
    std::sort(tetra.begin(), tetra.end());
    tetra.erase(std::unique(tetra.begin(), tetra.end()), tetra.end());
    report.witnesses.reserve(tetra.size());
    for (const auto& t : tetra) report.witnesses.emplace_back(std::vector<std::size_t>(t.begin(), t.end()));
  }

  if (options.retain_contributing) {
    for (const auto& h : total.hits) {
      const auto normal = to_big_vector(h.normal);
      const BigInt norm2 = squared_norm(normal);
      const HyperplaneKey key = key_from_scaled(normal, detail::to_big(h.offset), scale);
      Contribution c;
      c.plane.key = key;
      c.plane.incident = h.incident;
      c.plane.point_count = h.incident.size();
      c.plane.line_count = h.line_count;
      const BigInt t = detail::to_big(h.t_min);
      c.plane.min_area_sq = ratio(BigInt(t * t * norm2), BigInt(4 * scale2 * scale2));
      c.plane.min_area_count = h.triangles;
      for (const auto& tri : h.min_triangles) c.plane.min_area_witnesses.push_back(IndexSimplex{tri[0], tri[1], tri[2]});
      c.slab.plane = key;
      c.slab.side = h.side;
      const BigInt s = detail::to_big(h.height);
      c.slab.dist_sq = ratio(BigInt(s * s), BigInt(norm2 * scale2));
      c.slab.nearest = h.nearest;
      report.contributing.push_back(std::move(c));
    }
  }
  return report;
}

template <class A>
MinAreaReport run_planar_reporter(const detail::ScaledPoints& sp, const ReporterOptions& options) {
  const auto pts = detail::convert<typename A::Int>(sp);
  std::vector<std::size_t> ids(pts.size());
  std::iota(ids.begin(), ids.end(), std::size_t{0});
  const detail::Vec3<typename A::Int> normal{0, 0, 1};
  detail::InPlaneMinArea<A> core;
  auto r = core.run(pts, ids, normal, options.retain_witnesses);
  if (!r.found) throw GeometryError(ErrorKind::Degenerate, "points are collinear: no triangle has positive area");
  MinAreaReport report;
  report.min_area = ratio(detail::to_big(r.t_min), BigInt(2 * sp.scale * sp.scale));
  report.side_incidences = r.side_incidences;
  if (r.side_incidences % 3 != 0) throw std::logic_error("side incidence sum is not a multiple of three");
  report.count = r.count();
  report.line_count = r.line_count;
  for (const auto& tri : r.witnesses) report.witnesses.push_back(IndexSimplex{tri[0], tri[1], tri[2]});
  return report;
}

}  // namespace

SegmentSummary shortest_segments_on_line(const PointSet& ps, std::span<const std::size_t> indices) {
  if (indices.size() < 2) {
    throw GeometryError(ErrorKind::InvalidArgument, "shortest segments need at least two points");
  }
  const Point& origin = ps[indices[0]];
  std::size_t far = indices.size();
  for (std::size_t s = 1; s < indices.size(); ++s) {
    if (!(ps[indices[s]] == origin)) {
      far = s;
      break;
    }
  }
  if (far == indices.size()) {
    throw GeometryError(ErrorKind::Degenerate, "points coincide; no segment has positive length");
  }
  const auto dir = difference(ps[indices[far]], origin);
  const Rational dir2 = dot(dir, dir);
  std::vector<std::pair<Rational, std::size_t>> params;
  for (std::size_t id : indices) {
    const auto v = difference(ps[id], origin);
    const Rational t = dot(v, dir) / dir2;
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (v[c] != t * dir[c]) throw GeometryError(ErrorKind::InvalidArgument, "points are not collinear");
    }
    params.emplace_back(t, id);
  }
  std::sort(params.begin(), params.end());
  SegmentSummary out;
  bool found = false;
  for (std::size_t s = 1; s < params.size(); ++s) {
    const Rational gap = params[s].first - params[s - 1].first;
    if (gap == 0) continue;
    const Rational len2 = gap * gap * dir2;
    if (!found || len2 < out.min_length_sq) {
      found = true;
      out.min_length_sq = len2;
      out.pairs.clear();
    } else if (len2 != out.min_length_sq) {
      continue;
    }
    out.pairs.push_back(std::minmax(params[s - 1].second, params[s].second));
  }
  out.count = out.pairs.size();
  return out;
}

PlaneSummary min_area_triangles_in_plane(const PointSet& ps, std::span<const std::size_t> incident) {
  if (ps.dim() != 2 && ps.dim() != 3) {
    throw GeometryError(ErrorKind::DimensionMismatch, "plane analysis needs a 2D or 3D point set");
  }
  for (std::size_t id : incident) {
    if (id >= ps.size()) throw GeometryError(ErrorKind::InvalidArgument, "point index out of range");
  }
  std::vector<std::size_t> ids(incident.begin(), incident.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

  PlaneSummary summary;
  summary.incident = ids;
  summary.point_count = ids.size();
  const auto sp = detail::scale_to_integers(ps, ids);
  const auto pts = detail::convert<BigInt>(sp);

  // Normal of the plane: any noncollinear triple.
  Vec3<BigInt> normal{0, 0, 1};
  if (ps.dim() == 3) {
    bool found = false;
    for (std::size_t b = 1; b < pts.size() && !found; ++b) {
      for (std::size_t c = b + 1; c < pts.size() && !found; ++c) {
        Vec3<BigInt> cr = detail::cross(detail::sub(pts[b], pts[0]), detail::sub(pts[c], pts[0]));
        if (!detail::is_zero(cr)) {
          detail::make_primitive(cr);
          normal = cr;
          found = true;
        }
      }
    }
    if (!found) throw GeometryError(ErrorKind::Degenerate, "incident points are collinear");
    for (const auto& p : pts) {
      if (detail::dot_wide<detail::BigArithmetic>(normal, detail::sub(p, pts[0])) != 0) {
        throw GeometryError(ErrorKind::InvalidArgument, "incident points are not coplanar");
      }
    }
    std::vector<BigInt> nv(normal.begin(), normal.end());
    summary.key = key_from_scaled(nv, detail::dot_wide<detail::BigArithmetic>(normal, pts[0]), sp.scale);
  }

  detail::InPlaneMinArea<detail::BigArithmetic> core;
  auto r = core.run(pts, ids, normal, true);
  if (!r.found) throw GeometryError(ErrorKind::Degenerate, "incident points are collinear");
  const BigInt norm2 = normal[0] * normal[0] + normal[1] * normal[1] + normal[2] * normal[2];
  const BigInt scale2 = sp.scale * sp.scale;
  summary.line_count = r.line_count;
  summary.min_area_sq = ratio(BigInt(r.t_min * r.t_min * norm2), BigInt(4 * scale2 * scale2));
  summary.min_area_count = r.count();
  for (const auto& tri : r.witnesses) summary.min_area_witnesses.push_back(IndexSimplex{tri[0], tri[1], tri[2]});
  return summary;
}

SlabPair empty_slabs(const PointSet& ps, const HyperplaneKey& plane) {
  if (ps.dim() != 3 || plane.normal.size() != 3) {
    throw GeometryError(ErrorKind::DimensionMismatch, "slabs are defined for planes in 3D");
  }
  SlabPair out;
  for (std::size_t q = 0; q < ps.size(); ++q) {
    const Rational v = plane.evaluate(ps[q]);
    if (v == 0) continue;
    auto& slot = v > 0 ? out.above : out.below;
    Rational d2 = squared_distance_point_plane(ps[q], plane);
    if (!slot || d2 < slot->dist_sq) {
      slot = SlabRecord{plane, v > 0 ? Side::Above : Side::Below, std::move(d2), {}};
    } else if (d2 != slot->dist_sq) {
      continue;
    }
    slot->nearest.push_back(q);
  }
  return out;
}

namespace {

// Points with repeated coordinates collapse to one representative; results
// are expanded back over every label.
struct Collapsed {
  PointSet unique;
  std::vector<std::vector<std::size_t>> labels;  // per representative, ascending
};

std::optional<Collapsed> collapse_duplicates(const PointSet& ps) {
  if (!ps.allows_duplicates()) return std::nullopt;
  std::vector<std::size_t> order(ps.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return ps[a] < ps[b]; });
  bool any = false;
  for (std::size_t i = 1; i < order.size(); ++i) any = any || ps[order[i]] == ps[order[i - 1]];
  if (!any) return std::nullopt;
  // Representatives in order of their first label.
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i == 0 || !(ps[order[i]] == ps[order[i - 1]])) groups.emplace_back();
    groups.back().push_back(order[i]);
  }
  for (auto& g : groups) std::sort(g.begin(), g.end());
  std::sort(groups.begin(), groups.end());
  Collapsed out;
  std::vector<Point> pts;
  for (const auto& g : groups) pts.push_back(ps[g.front()]);
  out.unique = PointSet(ps.dim(), std::move(pts));
  out.labels = std::move(groups);
  return out;
}

std::vector<IndexSimplex> expand_simplex(const IndexSimplex& s, const Collapsed& c) {
  std::vector<std::vector<std::size_t>> partial{{}};
  for (std::size_t u : s.indices()) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& prefix : partial) {
      for (std::size_t label : c.labels[u]) {
        auto v = prefix;
        v.push_back(label);
        next.push_back(std::move(v));
      }
    }
    partial = std::move(next);
  }
  std::vector<IndexSimplex> out;
  for (auto& v : partial) out.emplace_back(std::move(v));
  return out;
}

std::vector<std::size_t> expand_indices(const std::vector<std::size_t>& ids, const Collapsed& c) {
  std::vector<std::size_t> out;
  for (std::size_t u : ids) out.insert(out.end(), c.labels[u].begin(), c.labels[u].end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IndexSimplex> expand_all(const std::vector<IndexSimplex>& simplices, const Collapsed& c) {
  std::vector<IndexSimplex> out;
  for (const auto& s : simplices) {
    auto e = expand_simplex(s, c);
    out.insert(out.end(), e.begin(), e.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

MinVolumeReport space_report(const PointSet& ps, const ReporterOptions& options) {
  const auto sp = detail::scale_to_integers(ps);
  if (!options.force_big_integers && detail::fits_words(sp)) {
    return run_space_reporter<detail::WordArithmetic>(sp, options);
  }
  return run_space_reporter<detail::BigArithmetic>(sp, options);
}

MinAreaReport planar_report(const PointSet& ps, const ReporterOptions& options) {
  const auto sp = detail::scale_to_integers(ps);
  if (!options.force_big_integers && detail::fits_words(sp)) {
    return run_planar_reporter<detail::WordArithmetic>(sp, options);
  }
  return run_planar_reporter<detail::BigArithmetic>(sp, options);
}

}  // namespace

MinVolumeReport report_min_volume_tetrahedra(const PointSet& ps, const ReporterOptions& options) {
  if (ps.dim() != 3) {
    throw GeometryError(ErrorKind::DimensionMismatch, "minimum-volume reporting needs a 3D point set");
  }
  const auto collapsed = collapse_duplicates(ps);
  if (!collapsed) return space_report(ps, options);

  ReporterOptions full = options;
  full.retain_witnesses = true;
  full.retain_contributing = true;
  MinVolumeReport report = space_report(collapsed->unique, full);
  report.witnesses = expand_all(report.witnesses, *collapsed);
  report.count = report.witnesses.size();
  report.face_incidences = 0;
  for (auto& c : report.contributing) {
    c.plane.incident = expand_indices(c.plane.incident, *collapsed);
    c.plane.point_count = c.plane.incident.size();
    c.plane.min_area_witnesses = expand_all(c.plane.min_area_witnesses, *collapsed);
    c.plane.min_area_count = c.plane.min_area_witnesses.size();
    c.slab.nearest = expand_indices(c.slab.nearest, *collapsed);
    report.face_incidences += c.plane.min_area_count * c.slab.count();
  }
  if (!options.retain_witnesses) report.witnesses.clear();
  if (!options.retain_contributing) report.contributing.clear();
  return report;
}

MinAreaReport report_min_area_triangles_2d(const PointSet& ps, const ReporterOptions& options) {
  if (ps.dim() != 2) {
    throw GeometryError(ErrorKind::DimensionMismatch, "minimum-area reporting needs a 2D point set");
  }
  const auto collapsed = collapse_duplicates(ps);
  if (!collapsed) return planar_report(ps, options);

  ReporterOptions full = options;
  full.retain_witnesses = true;
  MinAreaReport report = planar_report(collapsed->unique, full);
  report.witnesses = expand_all(report.witnesses, *collapsed);
  report.count = report.witnesses.size();
  report.side_incidences = 3 * report.count;
  if (!options.retain_witnesses) report.witnesses.clear();
  return report;
}

}  // namespace extremal
