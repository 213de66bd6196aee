#include "extremal/pointfile.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <sstream>

namespace extremal {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw GeometryError(ErrorKind::InvalidArgument, "line " + std::to_string(line) + ": " + what);
}

}  // namespace

PointFile parse_point_file(std::string_view text, PointSet::Duplicates duplicates) {
  PointFile file;
  std::size_t dim = 0;
  std::vector<Point> points;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    const std::string_view raw = text.substr(pos, end == std::string_view::npos ? text.size() - pos : end - pos);
    pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      file.comments.emplace_back(trim(line.substr(1)));
      continue;
    }
    const auto fields = split_ws(line);
    if (dim == 0) {
      if (fields.size() != 2 || fields[0] != "dim") parse_error(line_no, "expected header 'dim <d>'");
      std::size_t d = 0;
      try {
        d = std::stoul(std::string(fields[1]));
      } catch (const std::exception&) {
        parse_error(line_no, "bad dimension");
      }
      if (d == 0) parse_error(line_no, "dimension must be positive");
      dim = d;
      continue;
    }
    if (fields.size() != dim) {
      parse_error(line_no, "expected " + std::to_string(dim) + " coordinates, got " + std::to_string(fields.size()));
    }
    std::vector<Rational> coords;
    for (auto f : fields) {
      try {
        coords.push_back(parse_rational(f));
      } catch (const std::invalid_argument& e) {
        parse_error(line_no, e.what());
      }
    }
    points.emplace_back(std::move(coords));
  }
  if (dim == 0) throw GeometryError(ErrorKind::InvalidArgument, "missing 'dim <d>' header");
  file.points = PointSet(dim, std::move(points), duplicates);
  return file;
}

PointFile read_point_file(const std::filesystem::path& path, PointSet::Duplicates duplicates) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GeometryError(ErrorKind::InvalidArgument, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_point_file(buf.str(), duplicates);
}

std::string serialize_point_file(const PointSet& ps, const std::vector<std::string>& comments) {
  std::string out;
  for (const auto& c : comments) out += "# " + c + "\n";
  out += "dim " + std::to_string(ps.dim()) + "\n";
  for (const auto& p : ps.points()) {
    for (std::size_t i = 0; i < p.dim(); ++i) {
      if (i > 0) out += ' ';
      out += to_string(p[i]);
    }
    out += '\n';
  }
  return out;
}

void write_point_file(const std::filesystem::path& path, const PointSet& ps,
                      const std::vector<std::string>& comments) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw GeometryError(ErrorKind::InvalidArgument, "cannot write " + path.string());
  out << serialize_point_file(ps, comments);
}

std::string input_digest(const PointSet& ps) {
  const std::string text = serialize_point_file(ps);
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out = "sha256:";
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 0xf];
  }
  return out;
}

}  // namespace extremal
