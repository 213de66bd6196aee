#include "extremal/oracles.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace extremal {

namespace {

void check_k(const PointSet& ps, std::size_t k) {
  if (k < 1 || k > ps.dim()) {
    throw GeometryError(ErrorKind::InvalidArgument,
                        "simplex dimension k=" + std::to_string(k) + " outside [1, " +
                            std::to_string(ps.dim()) + "]");
  }
}

// Squared k-volume; the full-dimensional case goes through the determinant.
Rational measure_squared(const PointSet& ps, const IndexSimplex& s) {
  if (s.k() == ps.dim()) {
    Rational v = signed_volume_full(ps, s);
    return v * v;
  }
  return squared_volume(ps, s);
}

bool keep_witness(const OracleOptions& options, std::size_t held) {
  return options.collect_witnesses && (!options.witness_limit || held < *options.witness_limit);
}

}  // namespace

MinSimplexResult oracle_min_simplices(const PointSet& ps, std::size_t k, const OracleOptions& options) {
  check_k(ps, k);
  MinSimplexResult result;
  bool found = false;
  for_each_subset(ps.size(), k + 1, [&](const std::vector<std::size_t>& idx) {
    const IndexSimplex s(idx);
    Rational v = measure_squared(ps, s);
    if (v == 0) return;
    if (!found || v < result.min_squared_volume) {
      found = true;
      result.min_squared_volume = std::move(v);
      result.count = 0;
      result.witnesses.clear();
    } else if (v != result.min_squared_volume) {
      return;
    }
    ++result.count;
    if (keep_witness(options, result.witnesses.size())) result.witnesses.push_back(s);
  });
  if (!found) {
    throw GeometryError(ErrorKind::Degenerate,
                        "every " + std::to_string(k) + "-simplex of the set is degenerate");
  }
  return result;
}

CountReport oracle_count_volume(const PointSet& ps, const Rational& target, std::size_t k,
                                const OracleOptions& options) {
  check_k(ps, k);
  if (target <= 0) throw GeometryError(ErrorKind::InvalidArgument, "target volume must be positive");
  CountReport report;
  report.target = target;
  const bool full = k == ps.dim();
  for_each_subset(ps.size(), k + 1, [&](const std::vector<std::size_t>& idx) {
    const IndexSimplex s(idx);
    const Rational v = full ? Rational(abs(signed_volume_full(ps, s))) : squared_volume(ps, s);
    if (v != target) return;
    ++report.count;
    if (keep_witness(options, report.witnesses.size())) report.witnesses.push_back(s);
  });
  return report;
}

DistinctVolumeReport oracle_distinct_volumes(const PointSet& ps) {
  std::set<Rational> values;
  for_each_subset(ps.size(), ps.dim() + 1, [&](const std::vector<std::size_t>& idx) {
    Rational v = abs(signed_volume_full(ps, IndexSimplex(idx)));
    if (v != 0) values.insert(std::move(v));
  });
  if (values.empty()) {
    throw GeometryError(ErrorKind::Degenerate, "point set lies in a hyperplane");
  }
  DistinctVolumeReport report;
  report.distinct_values.assign(values.begin(), values.end());
  report.count = report.distinct_values.size();
  return report;
}

RichLineReport enumerate_rich_lines(const PointSet& ps, std::size_t k) {
  if (k < 2) throw GeometryError(ErrorKind::InvalidArgument, "richness threshold must be at least 2");
  std::map<LineKey, std::set<std::size_t>> lines;
  for (std::size_t a = 0; a < ps.size(); ++a) {
    for (std::size_t b = a + 1; b < ps.size(); ++b) {
      if (ps[a] == ps[b]) continue;
      auto& incident = lines[line_key(ps, a, b)];
      incident.insert(a);
      incident.insert(b);
    }
  }
  RichLineReport report;
  report.threshold = k;
  for (auto& [key, incident] : lines) {
    if (incident.size() >= k) {
      report.lines.push_back({key, std::vector<std::size_t>(incident.begin(), incident.end())});
    }
  }
  return report;
}

std::vector<SpannedPlane> enumerate_spanned_planes(const PointSet& ps) {
  if (ps.dim() != 3) {
    throw GeometryError(ErrorKind::DimensionMismatch, "spanned planes need a 3D point set");
  }
  std::map<HyperplaneKey, std::set<std::size_t>> planes;
  for_each_subset(ps.size(), 3, [&](const std::vector<std::size_t>& idx) {
    if (collinear(ps, idx[0], idx[1], idx[2])) return;
    auto& incident = planes[plane_key(ps, idx[0], idx[1], idx[2])];
    incident.insert(idx.begin(), idx.end());
  });
  std::vector<SpannedPlane> out;
  out.reserve(planes.size());
  for (auto& [key, incident] : planes) {
    out.push_back({key, std::vector<std::size_t>(incident.begin(), incident.end())});
  }
  return out;
}

}  // namespace extremal
