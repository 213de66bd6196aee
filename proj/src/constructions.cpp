#include "extremal/constructions.hpp"

#include <cmath>
#include <random>
#include <set>

namespace extremal {

namespace {

[[noreturn]] void constraint(const std::string& what) {
  throw GeometryError(ErrorKind::InvalidArgument, what);
}

std::size_t exact_sqrt(std::size_t n) {
  auto r = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::uint64_t upow(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) out *= base;
  return out;
}

// Points base_m + s * epsilon * e_k for the k-line geometry, where base_0
// is the origin and base_m = e_m. per_line[m] points go on line m.
PointSet parallel_lines(std::size_t k, std::size_t d, const std::vector<std::size_t>& per_line,
                        const Rational& epsilon, bool round_robin) {
  std::vector<Point> pts;
  auto make = [&](std::size_t line, std::size_t slot) {
    Point p(std::vector<Rational>(d, Rational(0)));
    if (line > 0) p[line - 1] = 1;
    p[k - 1] += epsilon * static_cast<long>(slot);
    return p;
  };
  if (round_robin) {
    std::size_t total = 0;
    for (auto c : per_line) total += c;
    for (std::size_t t = 0; t < total; ++t) pts.push_back(make(t % k, t / k));
  } else {
    for (std::size_t line = 0; line < k; ++line) {
      for (std::size_t slot = 0; slot < per_line[line]; ++slot) pts.push_back(make(line, slot));
    }
  }
  return PointSet(d, std::move(pts));
}

}  // namespace

std::string to_string(Family family) {
  switch (family) {
    case Family::Prism3d: return "prism3d";
    case Family::KLines: return "klines";
    case Family::DLinesDistinct: return "dlines";
    case Family::Lattice2d: return "lattice2d";
    case Family::LatticeSlab3d: return "lattice_slab3d";
    case Family::RandomRational: return "random";
  }
  return "unknown";
}

Family parse_family(const std::string& name) {
  for (Family f : {Family::Prism3d, Family::KLines, Family::DLinesDistinct, Family::Lattice2d,
                   Family::LatticeSlab3d, Family::RandomRational}) {
    if (to_string(f) == name) return f;
  }
  if (name == "dlines_distinct") return Family::DLinesDistinct;
  if (name == "random_rational") return Family::RandomRational;
  constraint("unknown construction family '" + name + "'");
}

ConstructionOutput gen_min_tetra_prism(std::size_t n, std::optional<Rational> epsilon) {
  if (n < 4 || n % 4 != 0) constraint("prism3d needs n divisible by 4 and n >= 4");
  const Rational eps_max(1, static_cast<unsigned long>(n * n));
  const Rational eps = epsilon.value_or(eps_max);
  if (eps <= 0) constraint("epsilon must be positive");
  if (eps > eps_max) constraint("prism3d needs epsilon <= 1/n^2");

  const std::size_t m = n / 4;
  const std::array<std::array<long, 3>, 4> base{{{-1, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, -1, 3}}};
  std::vector<Point> pts;
  for (const auto& b : base) {
    for (std::size_t s = 0; s < m; ++s) {
      pts.push_back(Point{Rational(b[0]), Rational(b[1]), Rational(b[2]) + eps * static_cast<long>(s)});
    }
  }
  ConstructionOutput out{PointSet(3, std::move(pts)), {}};
  if (m == 1) {
    out.expected.min_volume = Rational(1);
    out.expected.count = 1;
  } else {
    out.expected.min_volume = eps / 3;
    out.expected.count = 12 * (m - 1) * m * m;
  }
  out.expected.min_squared_volume = *out.expected.min_volume * *out.expected.min_volume;
  return out;
}

ConstructionOutput gen_min_ksimplex_lines(std::size_t n, std::size_t k, std::size_t d, const Rational& epsilon) {
  if (k < 1 || k > d) constraint("klines needs 1 <= k <= d");
  if (n == 0 || n % k != 0) constraint("klines needs n divisible by k");
  if (n / k < 2) constraint("klines needs at least two points per line");
  if (epsilon <= 0) constraint("epsilon must be positive");
  const std::size_t m = n / k;
  ConstructionOutput out{parallel_lines(k, d, std::vector<std::size_t>(k, m), epsilon, false), {}};
  const Rational vol = epsilon / Rational(factorial(static_cast<unsigned>(k)));
  out.expected.min_squared_volume = vol * vol;
  if (k == d) out.expected.min_volume = vol;
  out.expected.count = k * (m - 1) * upow(m, k - 1);
  return out;
}

ConstructionOutput gen_distinct_volume_lines(std::size_t n, std::size_t d, const Rational& epsilon) {
  if (d < 1) constraint("dlines needs d >= 1");
  if (n < d + 1) constraint("dlines needs n >= d + 1");
  if (epsilon <= 0) constraint("epsilon must be positive");
  std::vector<std::size_t> per_line(d, n / d);
  for (std::size_t t = 0; t < n % d; ++t) ++per_line[t];
  ConstructionOutput out{parallel_lines(d, d, per_line, epsilon, true), {}};
  const std::size_t fullest = (n + d - 1) / d;
  out.expected.distinct = fullest - 1;
  const Rational vol = epsilon / Rational(factorial(static_cast<unsigned>(d)));
  out.expected.min_volume = vol;
  out.expected.min_squared_volume = vol * vol;
  return out;
}

PointSet gen_lattice2d(std::size_t n) {
  const std::size_t side = exact_sqrt(n);
  if (n == 0 || side * side != n) constraint("lattice2d needs a positive perfect square n");
  std::vector<Point> pts;
  for (std::size_t y = 0; y < side; ++y) {
    for (std::size_t x = 0; x < side; ++x) pts.push_back(Point{Rational(static_cast<long>(x)), Rational(static_cast<long>(y))});
  }
  return PointSet(2, std::move(pts));
}

PointSet gen_lattice_slab3d(std::size_t n) {
  if (n == 0 || n % 2 != 0) constraint("lattice_slab3d needs an even n");
  const PointSet layer = gen_lattice2d(n / 2);
  std::vector<Point> pts;
  for (long z : {0L, 3L}) {
    for (const auto& p : layer.points()) pts.push_back(Point{p[0], p[1], Rational(z)});
  }
  return PointSet(3, std::move(pts));
}

PointSet gen_random_rational(std::size_t n, std::size_t d, std::uint64_t seed, std::int64_t bound) {
  if (d < 1) constraint("random needs d >= 1");
  if (bound < 1) constraint("random needs bound >= 1");
  const double cells = std::pow(2.0 * static_cast<double>(bound) + 1.0, static_cast<double>(d));
  if (static_cast<double>(n) > cells) constraint("random: n exceeds the number of lattice points in the box");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coord(-bound, bound);
  std::set<std::vector<long>> seen;
  std::vector<Point> pts;
  while (pts.size() < n) {
    std::vector<long> c(d);
    for (auto& x : c) x = static_cast<long>(coord(rng));
    if (!seen.insert(c).second) continue;
    std::vector<Rational> coords;
    for (long x : c) coords.emplace_back(x);
    pts.emplace_back(std::move(coords));
  }
  return PointSet(d, std::move(pts));
}

ConstructionOutput generate(const ConstructionSpec& spec) {
  switch (spec.family) {
    case Family::Prism3d: return gen_min_tetra_prism(spec.n, spec.epsilon);
    case Family::KLines: return gen_min_ksimplex_lines(spec.n, spec.k, spec.d, spec.epsilon.value_or(1));
    case Family::DLinesDistinct: return gen_distinct_volume_lines(spec.n, spec.d, spec.epsilon.value_or(1));
    case Family::Lattice2d: return {gen_lattice2d(spec.n), {}};
    case Family::LatticeSlab3d: return {gen_lattice_slab3d(spec.n), {}};
    case Family::RandomRational: return {gen_random_rational(spec.n, spec.d, spec.seed, spec.bound), {}};
  }
  constraint("unknown construction family");
}

}  // namespace extremal
