#pragma once

// Point file format:
//
//   # comment lines anywhere
//   dim <d>
//   <x_1> ... <x_d>      one point per line, each value "int" or "int/int"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "extremal/geometry.hpp"

namespace extremal {

struct PointFile {
  PointSet points;
  std::vector<std::string> comments;  // without the leading '#', trimmed
};

PointFile parse_point_file(std::string_view text,
                           PointSet::Duplicates duplicates = PointSet::Duplicates::Reject);
PointFile read_point_file(const std::filesystem::path& path,
                          PointSet::Duplicates duplicates = PointSet::Duplicates::Reject);

/// Canonical text: comments first, then the header and one point per line
/// with single spaces.
std::string serialize_point_file(const PointSet& ps, const std::vector<std::string>& comments = {});
void write_point_file(const std::filesystem::path& path, const PointSet& ps,
                      const std::vector<std::string>& comments = {});

/// "sha256:<hex>" of the comment-free canonical serialization.
std::string input_digest(const PointSet& ps);

}  // namespace extremal
