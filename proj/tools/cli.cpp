#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <thread>

#include "extremal/bench.hpp"
#include "extremal/charging.hpp"
#include "extremal/constructions.hpp"
#include "extremal/distinct.hpp"
#include "extremal/minvol.hpp"
#include "extremal/oracles.hpp"
#include "extremal/pointfile.hpp"

namespace extremal::cli {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string exact(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Json exact_list(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(exact(v));
  return out;
}

Json simplex_list(const std::vector<IndexSimplex>& simplices) {
  Json out = Json::array();
  for (const auto& s : simplices) out.push_back(s.indices());
  return out;
}

Json key_json(const HyperplaneKey& key) {
  Json normal = Json::array();
  for (const auto& x : key.normal) normal.push_back(x.get_str());
  return {{"normal", normal}, {"offset", key.offset.get_str()}};
}

unsigned default_threads() {
  if (const char* env = std::getenv(kThreadsEnv)) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Shared state of every command that reads a point file.
struct InputOptions {
  std::string path;
  std::string output;
  bool allow_duplicates = false;
  bool timing = false;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("input", in.path, "point file")->required();
  cmd->add_option("-o,--output", in.output, "write the report here instead of stdout");
  cmd->add_flag("--allow-duplicates", in.allow_duplicates, "accept repeated points");
  cmd->add_flag("--timing", in.timing, "include wall-clock timings");
}

PointSet load(const InputOptions& in) {
  return read_point_file(in.path, in.allow_duplicates ? PointSet::Duplicates::Allow : PointSet::Duplicates::Reject)
      .points;
}

Json document(const std::string& command, const PointSet& ps, const InputOptions& in) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = command;
  doc["input"] = {{"path", in.path}, {"digest", input_digest(ps)}, {"n", ps.size()}, {"dim", ps.dim()}};
  doc["parameters"] = Json::object();
  doc["results"] = Json::object();
  return doc;
}

void emit(const Json& doc, const std::string& output, std::ostream& out) {
  const std::string text = doc.dump(2) + "\n";
  if (output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(output, std::ios::binary);
  if (!f) throw UsageError("cannot write " + output);
  f << text;
}

// ---- gen --------------------------------------------------------------

struct GenOptions {
  std::string family;
  std::vector<std::string> params;
  std::string output;
};

ConstructionSpec parse_gen_spec(const GenOptions& g) {
  ConstructionSpec spec;
  try {
    spec.family = parse_family(g.family);
  } catch (const GeometryError& e) {
    throw UsageError(e.what());
  }
  spec.d = spec.family == Family::Lattice2d ? 2 : 3;
  for (const auto& p : g.params) {
    const auto eq = p.find('=');
    if (eq == std::string::npos) throw UsageError("expected key=value, got '" + p + "'");
    const std::string key = p.substr(0, eq);
    const std::string value = p.substr(eq + 1);
    try {
      if (key == "n") spec.n = std::stoul(value);
      else if (key == "k") spec.k = std::stoul(value);
      else if (key == "d") spec.d = std::stoul(value);
      else if (key == "eps") spec.epsilon = parse_rational(value);
      else if (key == "seed") spec.seed = std::stoull(value);
      else if (key == "bound") spec.bound = std::stoll(value);
      else throw UsageError("unknown parameter '" + key + "'");
    } catch (const std::invalid_argument&) {
      throw UsageError("bad value for " + key + ": '" + value + "'");
    } catch (const std::out_of_range&) {
      throw UsageError("value out of range for " + key + ": '" + value + "'");
    }
  }
  if (spec.family == Family::KLines && spec.k == 0) spec.k = spec.d;
  return spec;
}

int cmd_gen(const GenOptions& g, std::ostream& out) {
  const ConstructionSpec spec = parse_gen_spec(g);
  const ConstructionOutput built = generate(spec);
  std::vector<std::string> comments;
  comments.push_back("family " + to_string(spec.family));
  comments.push_back("n " + std::to_string(built.points.size()));
  comments.push_back("dim " + std::to_string(built.points.dim()));
  if (spec.family == Family::KLines) comments.push_back("k " + std::to_string(spec.k));
  if (spec.epsilon) comments.push_back("eps " + to_string(*spec.epsilon));
  if (spec.family == Family::RandomRational) {
    comments.push_back("seed " + std::to_string(spec.seed));
    comments.push_back("bound " + std::to_string(spec.bound));
  }
  const auto& e = built.expected;
  if (e.min_volume) comments.push_back("expected_min_volume " + to_string(*e.min_volume));
  if (e.min_squared_volume) comments.push_back("expected_min_squared_volume " + to_string(*e.min_squared_volume));
  if (e.count) comments.push_back("expected_count " + std::to_string(*e.count));
  if (e.distinct) comments.push_back("expected_distinct " + std::to_string(*e.distinct));
  const std::string text = serialize_point_file(built.points, comments);
  if (g.output.empty()) {
    out << text;
  } else {
    std::ofstream f(g.output, std::ios::binary);
    if (!f) throw UsageError("cannot write " + g.output);
    f << text;
  }
  return kSuccess;
}

// ---- minvol / minarea ---------------------------------------------------

struct ReportOptions {
  InputOptions in;
  bool oracle = false;
  bool witnesses = false;
  bool charging = false;
  bool force_big = false;
  unsigned threads = 0;
};

std::set<IndexSimplex> as_set(const std::vector<IndexSimplex>& v) { return {v.begin(), v.end()}; }

int cmd_minvol(const ReportOptions& o, std::ostream& out) {
  const PointSet ps = load(o.in);
  Json doc = document("minvol", ps, o.in);
  doc["parameters"] = {{"oracle", o.oracle},
                       {"report_witnesses", o.witnesses},
                       {"check_charging", o.charging},
                       {"allow_duplicates", o.in.allow_duplicates}};

  ReporterOptions ro;
  ro.retain_witnesses = o.witnesses || o.oracle || o.charging;
  ro.retain_contributing = o.witnesses;
  ro.threads = o.threads;
  ro.force_big_integers = o.force_big;
  auto start = Clock::now();
  const MinVolumeReport r = report_min_volume_tetrahedra(ps, ro);
  const double fast_time = seconds_since(start);

  Json& res = doc["results"];
  res["min_volume"] = exact(r.min_volume);
  res["count"] = r.count;
  res["face_incidences"] = r.face_incidences;
  res["planes_visited"] = r.planes_visited;

  int code = kSuccess;
  Json timing = {{"fast_seconds", fast_time}};
  if (o.oracle) {
    start = Clock::now();
    const MinSimplexResult oracle = oracle_min_simplices(ps, 3);
    timing["oracle_seconds"] = seconds_since(start);
    const bool value = oracle.min_squared_volume == r.min_volume * r.min_volume;
    const bool count = oracle.count == r.count;
    const bool wits = as_set(oracle.witnesses) == as_set(r.witnesses);
    const bool match = value && count && wits;
    res["oracle"] = {{"min_squared_volume", exact(oracle.min_squared_volume)},
                     {"count", oracle.count},
                     {"value_match", value},
                     {"count_match", count},
                     {"witness_match", wits},
                     {"match", match}};
    if (!match) code = kOracleMismatch;
  }
  if (o.charging) {
    const ChargingSummary c = verify_charging(ps, r.witnesses);
    res["charging"] = {{"charges", c.charges},
                       {"max_per_face", c.max_per_face},
                       {"max_per_face_side", c.max_per_face_side},
                       {"within_bounds", c.within_bounds()}};
  }
  if (o.witnesses) {
    doc["witnesses"] = simplex_list(r.witnesses);
    Json contributing = Json::array();
    for (const auto& c : r.contributing) {
      contributing.push_back({{"plane", key_json(c.plane.key)},
                              {"incident", c.plane.incident},
                              {"line_count", c.plane.line_count},
                              {"min_area_sq", exact(c.plane.min_area_sq)},
                              {"min_area_count", c.plane.min_area_count},
                              {"side", to_string(c.slab.side)},
                              {"dist_sq", exact(c.slab.dist_sq)},
                              {"nearest", c.slab.nearest}});
    }
    doc["contributing"] = contributing;
  }
  if (o.in.timing) doc["timing"] = timing;
  emit(doc, o.in.output, out);
  return code;
}

int cmd_minarea(const ReportOptions& o, std::ostream& out) {
  const PointSet ps = load(o.in);
  Json doc = document("minarea", ps, o.in);
  doc["parameters"] = {{"oracle", o.oracle},
                       {"report_witnesses", o.witnesses},
                       {"allow_duplicates", o.in.allow_duplicates}};

  ReporterOptions ro;
  ro.retain_witnesses = o.witnesses || o.oracle;
  ro.threads = o.threads;
  ro.force_big_integers = o.force_big;
  auto start = Clock::now();
  const MinAreaReport r = report_min_area_triangles_2d(ps, ro);
  const double fast_time = seconds_since(start);

  Json& res = doc["results"];
  res["min_area"] = exact(r.min_area);
  res["count"] = r.count;
  res["side_incidences"] = r.side_incidences;
  res["line_count"] = r.line_count;

  int code = kSuccess;
  Json timing = {{"fast_seconds", fast_time}};
  if (o.oracle) {
    start = Clock::now();
    const MinSimplexResult oracle = oracle_min_simplices(ps, 2);
    timing["oracle_seconds"] = seconds_since(start);
    const bool value = oracle.min_squared_volume == r.min_area * r.min_area;
    const bool count = oracle.count == r.count;
    const bool wits = as_set(oracle.witnesses) == as_set(r.witnesses);
    const bool match = value && count && wits;
    res["oracle"] = {{"min_squared_area", exact(oracle.min_squared_volume)},
                     {"count", oracle.count},
                     {"value_match", value},
                     {"count_match", count},
                     {"witness_match", wits},
                     {"match", match}};
    if (!match) code = kOracleMismatch;
  }
  if (o.witnesses) doc["witnesses"] = simplex_list(r.witnesses);
  if (o.in.timing) doc["timing"] = timing;
  emit(doc, o.in.output, out);
  return code;
}

// ---- distinct -------------------------------------------------------------

struct DistinctOptions {
  InputOptions in;
  std::string common_face;
};

int cmd_distinct(const DistinctOptions& o, std::ostream& out) {
  const PointSet ps = load(o.in);
  Json doc = document("distinct", ps, o.in);
  doc["parameters"] = {{"common_face", o.common_face.empty() ? Json(nullptr) : Json(o.common_face)}};

  auto start = Clock::now();
  const DistinctVolumeReport r = oracle_distinct_volumes(ps);
  Json timing = {{"distinct_seconds", seconds_since(start)}};
  Json& res = doc["results"];
  res["distinct"] = r.count;
  res["volumes"] = exact_list(r.distinct_values);
  res["conjectured_minimum"] = ps.empty() ? 0 : (ps.size() - 1) / ps.dim();

  if (!o.common_face.empty()) {
    const CommonFaceMode mode = o.common_face == "exhaustive" ? CommonFaceMode::Exhaustive : CommonFaceMode::Heuristic;
    start = Clock::now();
    const CommonFaceResult f = best_common_face(ps, mode);
    timing["common_face_seconds"] = seconds_since(start);
    res["common_face"] = {{"mode", o.common_face},
                          {"face", f.face.indices()},
                          {"distinct", f.distinct_count},
                          {"volumes", exact_list(f.volumes)}};
  }
  if (o.in.timing) doc["timing"] = timing;
  emit(doc, o.in.output, out);
  return kSuccess;
}

// ---- count ------------------------------------------------------------------

struct CountOptions {
  InputOptions in;
  std::string volume;
  std::string squared_volume;
  std::optional<std::size_t> k;
  bool witnesses = false;
};

int cmd_count(const CountOptions& o, std::ostream& out) {
  const PointSet ps = load(o.in);
  const std::size_t k = o.k.value_or(ps.dim());
  if (k < 1 || k > ps.dim()) {
    throw UsageError("k must lie in [1, " + std::to_string(ps.dim()) + "], got " + std::to_string(k));
  }
  if (o.volume.empty() == o.squared_volume.empty()) {
    throw UsageError("give exactly one of --volume and --squared-volume");
  }
  Rational target;
  try {
    target = parse_rational(o.volume.empty() ? o.squared_volume : o.volume);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (target <= 0) throw UsageError("target volume must be positive");
  const bool squared = !o.squared_volume.empty();
  if (k == ps.dim() && squared) {
    throw UsageError("--squared-volume applies only when k is below the dimension");
  }
  const Rational oracle_target = (k < ps.dim() && !squared) ? target * target : target;

  Json doc = document("count", ps, o.in);
  doc["parameters"] = {{"k", k},
                       {squared ? "squared_volume" : "volume", exact(target)},
                       {"report_witnesses", o.witnesses}};
  OracleOptions oo;
  oo.collect_witnesses = o.witnesses;
  const auto start = Clock::now();
  const CountReport r = oracle_count_volume(ps, oracle_target, k, oo);
  const double t = seconds_since(start);
  doc["results"] = {{"count", r.count}};
  if (o.witnesses) doc["witnesses"] = simplex_list(r.witnesses);
  if (o.in.timing) doc["timing"] = {{"count_seconds", t}};
  emit(doc, o.in.output, out);
  return kSuccess;
}

// ---- bench ------------------------------------------------------------------

struct BenchCliOptions {
  std::string family = "prism3d";
  std::vector<std::size_t> sizes;
  unsigned repeat = 1;
  unsigned threads = 0;
  bool oracle = false;
  std::uint64_t seed = 1;
  std::string output;
};

int cmd_bench(const BenchCliOptions& o, std::ostream& out) {
  if (o.sizes.empty()) throw UsageError("--sizes needs at least one size");
  BenchOptions bo;
  try {
    bo.family = parse_family(o.family);
  } catch (const GeometryError& e) {
    throw UsageError(e.what());
  }
  bo.repeat = o.repeat;
  bo.threads = o.threads;
  bo.oracle = o.oracle;
  bo.seed = o.seed;
  const BenchResult r = run_scaling_benchmark(o.sizes, bo);

  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = "bench";
  doc["input"] = nullptr;
  doc["parameters"] = {{"family", o.family}, {"sizes", o.sizes}, {"repeat", bo.repeat},
                       {"threads", bo.threads}, {"oracle", o.oracle}, {"seed", o.seed}};
  Json samples = Json::array();
  Json timing = Json::array();
  for (const auto& s : r.samples) {
    samples.push_back({{"n", s.n}, {"count", s.count}, {"min_volume", exact(s.min_volume)},
                       {"planes_visited", s.planes_visited}});
    Json t = {{"n", s.n}, {"fast_seconds", s.fast_seconds}};
    t["oracle_seconds"] = s.oracle_seconds ? Json(*s.oracle_seconds) : Json(nullptr);
    timing.push_back(t);
  }
  doc["results"] = {{"samples", samples},
                    {"loglog_slope", r.slope ? Json(*r.slope) : Json(nullptr)},
                    {"warnings", r.warnings}};
  doc["timing"] = timing;
  emit(doc, o.output, out);
  return kSuccess;
}

int exit_code_for(const GeometryError& e) {
  return e.kind() == ErrorKind::Degenerate ? kDegenerateInput : kUsageError;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact minimum-volume simplices, distinct volumes and extremal constructions", "extremal"};
  app.require_subcommand(1);
  const unsigned threads_default = default_threads();

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "write a construction as a point file");
  gen_cmd->add_option("family", gen.family, "prism3d | klines | dlines | lattice2d | lattice_slab3d | random")
      ->required();
  gen_cmd->add_option("params", gen.params, "key=value pairs: n, k, d, eps, seed, bound");
  gen_cmd->add_option("-o,--output", gen.output, "output path (stdout by default)");

  ReportOptions minvol;
  minvol.threads = threads_default;
  auto* minvol_cmd = app.add_subcommand("minvol", "report all minimum-volume tetrahedra of a 3D set");
  add_input_options(minvol_cmd, minvol.in);
  minvol_cmd->add_flag("--oracle", minvol.oracle, "compare against the brute-force scan");
  minvol_cmd->add_flag("--report-witnesses", minvol.witnesses, "list witnesses and contributing planes");
  minvol_cmd->add_flag("--check-charging", minvol.charging, "charge witnesses to faces and report the maxima");
  minvol_cmd->add_flag("--big-integers", minvol.force_big, "skip the machine-word path");
  minvol_cmd->add_option("--threads", minvol.threads, "worker cap")->check(CLI::PositiveNumber);

  ReportOptions minarea;
  minarea.threads = threads_default;
  auto* minarea_cmd = app.add_subcommand("minarea", "report all minimum-area triangles of a 2D set");
  add_input_options(minarea_cmd, minarea.in);
  minarea_cmd->add_flag("--oracle", minarea.oracle, "compare against the brute-force scan");
  minarea_cmd->add_flag("--report-witnesses", minarea.witnesses, "list witnesses");
  minarea_cmd->add_flag("--big-integers", minarea.force_big, "skip the machine-word path");
  minarea_cmd->add_option("--threads", minarea.threads, "worker cap")->check(CLI::PositiveNumber);

  DistinctOptions distinct;
  auto* distinct_cmd = app.add_subcommand("distinct", "count distinct full-dimensional simplex volumes");
  add_input_options(distinct_cmd, distinct.in);
  distinct_cmd->add_option("--common-face", distinct.common_face, "also search a common face")
      ->check(CLI::IsMember({"exhaustive", "heuristic"}));

  CountOptions count;
  auto* count_cmd = app.add_subcommand("count", "count simplices of a given volume");
  add_input_options(count_cmd, count.in);
  count_cmd->add_option("--volume", count.volume, "target k-volume, int or int/int");
  count_cmd->add_option("--squared-volume", count.squared_volume, "target squared k-volume (k below dim)");
  count_cmd->add_option("--k", count.k, "simplex dimension (default: ambient dimension)");
  count_cmd->add_flag("--report-witnesses", count.witnesses, "list witnesses");

  BenchCliOptions bench;
  bench.threads = threads_default;
  auto* bench_cmd = app.add_subcommand("bench", "time the reporter over a range of sizes");
  bench_cmd->add_option("--family", bench.family, "prism3d | random")->capture_default_str();
  bench_cmd->add_option("--sizes", bench.sizes, "comma-separated sizes")->delimiter(',');
  bench_cmd->add_option("--repeat", bench.repeat, "runs per size, best kept")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--threads", bench.threads, "worker cap")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench.seed, "seed for the random family");
  bench_cmd->add_flag("--oracle", bench.oracle, "also time the brute-force scan on small sizes");
  bench_cmd->add_option("-o,--output", bench.output, "write the report here instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen, out);
    if (*minvol_cmd) return cmd_minvol(minvol, out);
    if (*minarea_cmd) return cmd_minarea(minarea, out);
    if (*distinct_cmd) return cmd_distinct(distinct, out);
    if (*count_cmd) return cmd_count(count, out);
    if (*bench_cmd) return cmd_bench(bench, out);
  } catch (const GeometryError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace extremal::cli
