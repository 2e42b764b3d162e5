#include "lightspan/generate.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "lightspan/rng.hpp"

namespace lightspan {

GeneratorSpec GeneratorSpec::uniform(std::size_t n, std::size_t m, double w_min, double w_max) {
  GeneratorSpec s;
  s.model = GraphModel::UniformRandom;
  s.n = n;
  s.m = m;
  s.w_min = w_min;
  s.w_max = w_max;
  return s;
}

GeneratorSpec GeneratorSpec::geometric(std::size_t n, double radius) {
  GeneratorSpec s;
  s.model = GraphModel::GeometricRandom;
  s.n = n;
  s.radius = radius;
  return s;
}

GeneratorSpec GeneratorSpec::grid(std::size_t rows, std::size_t cols, double jitter) {
  GeneratorSpec s;
  s.model = GraphModel::Grid;
  s.rows = rows;
  s.cols = cols;
  s.jitter = jitter;
  return s;
}

namespace {

std::vector<double> parse_args(std::string_view text, std::size_t expected) {
  auto open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')')
    throw std::invalid_argument("generator spec must look like name(arg,...)");
  std::vector<double> args;
  std::string_view body = text.substr(open + 1, text.size() - open - 2);
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t comma = body.find(',', start);
    std::string_view tok = body.substr(start, comma == std::string_view::npos
                                                  ? std::string_view::npos
                                                  : comma - start);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (tok.empty()) throw std::invalid_argument("empty generator argument");
    double value = 0.0;
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
      throw std::invalid_argument("malformed generator argument '" + std::string(tok) + "'");
    args.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (args.size() != expected)
    throw std::invalid_argument("generator expects " + std::to_string(expected) + " arguments");
  return args;
}

std::size_t to_count(double v, const char* what) {
  if (!(v >= 0) || v != std::floor(v) || v > 1e12)
    throw std::invalid_argument(std::string(what) + " must be a nonnegative integer");
  return static_cast<std::size_t>(v);
}

// Random spanning tree over a shuffled vertex order: vertex perm[i] attaches
// to a uniformly chosen earlier vertex.
std::vector<std::pair<VertexId, VertexId>> random_tree(std::size_t n, Rng& rng) {
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
  std::vector<std::pair<VertexId, VertexId>> tree;
  tree.reserve(n > 0 ? n - 1 : 0);
  for (std::size_t i = 1; i < n; ++i)
    tree.emplace_back(perm[rng.below(i)], perm[i]);
  return tree;
}

WeightedGraph generate_uniform(const GeneratorSpec& s, Rng& rng) {
  if (s.n == 0) throw std::invalid_argument("uniform: n must be positive");
  if (s.m + 1 < s.n)
    throw std::invalid_argument("uniform: m < n-1 cannot be connected");
  if (!(s.w_min > 0.0) || !(s.w_max >= s.w_min))
    throw std::invalid_argument("uniform: need 0 < w_min <= w_max");

  std::vector<Edge> edges;
  edges.reserve(s.m);
  for (auto [u, v] : random_tree(s.n, rng))
    edges.push_back({u, v, rng.uniform(s.w_min, s.w_max)});
  while (edges.size() < s.m) {
    VertexId u = static_cast<VertexId>(rng.below(s.n));
    VertexId v = static_cast<VertexId>(rng.below(s.n));
    if (u == v) continue;
    edges.push_back({u, v, rng.uniform(s.w_min, s.w_max)});
  }
  return WeightedGraph(s.n, std::move(edges));
}

WeightedGraph generate_geometric(const GeneratorSpec& s, Rng& rng) {
  if (s.n == 0) throw std::invalid_argument("geometric: n must be positive");
  if (!(s.radius > 0.0)) throw std::invalid_argument("geometric: radius must be positive");

  std::vector<std::pair<double, double>> pts(s.n);
  for (auto& p : pts) {
    p.first = rng.next_unit();
    p.second = rng.next_unit();
  }
  auto dist = [&](VertexId a, VertexId b) {
    double dx = pts[a].first - pts[b].first;
    double dy = pts[a].second - pts[b].second;
    // Coincident points would give weight 0; clamp (practically unreachable).
    return std::max(std::sqrt(dx * dx + dy * dy), 1e-12);
  };

  std::vector<Edge> edges;
  std::set<std::pair<VertexId, VertexId>> tree_pairs;
  for (auto [u, v] : random_tree(s.n, rng)) {
    edges.push_back({u, v, dist(u, v)});
    auto key = std::minmax(u, v);
    tree_pairs.insert({key.first, key.second});
  }
  for (VertexId u = 0; u < s.n; ++u)
    for (VertexId v = u + 1; v < s.n; ++v) {
      if (tree_pairs.count({u, v})) continue;
      double d = dist(u, v);
      if (d <= s.radius) edges.push_back({u, v, d});
    }
  return WeightedGraph(s.n, std::move(edges));
}

WeightedGraph generate_grid(const GeneratorSpec& s, Rng& rng) {
  if (s.rows == 0 || s.cols == 0)
    throw std::invalid_argument("grid: rows and cols must be positive");
  if (s.jitter < 0.0) throw std::invalid_argument("grid: jitter must be nonnegative");

  auto id = [&](std::size_t r, std::size_t c) {
    return static_cast<VertexId>(r * s.cols + c);
  };
  std::vector<Edge> edges;
  for (std::size_t r = 0; r < s.rows; ++r)
    for (std::size_t c = 0; c < s.cols; ++c) {
      if (c + 1 < s.cols) edges.push_back({id(r, c), id(r, c + 1), 1.0 + s.jitter * rng.next_unit()});
      if (r + 1 < s.rows) edges.push_back({id(r, c), id(r + 1, c), 1.0 + s.jitter * rng.next_unit()});
    }
  return WeightedGraph(s.rows * s.cols, std::move(edges));
}

}  // namespace

GeneratorSpec GeneratorSpec::parse(std::string_view text) {
  auto open = text.find('(');
  std::string_view name = text.substr(0, open);
  if (name == "uniform") {
    auto a = parse_args(text, 4);
    return uniform(to_count(a[0], "n"), to_count(a[1], "m"), a[2], a[3]);
  }
  if (name == "geometric") {
    auto a = parse_args(text, 2);
    return geometric(to_count(a[0], "n"), a[1]);
  }
  if (name == "grid") {
    auto a = parse_args(text, 3);
    return grid(to_count(a[0], "rows"), to_count(a[1], "cols"), a[2]);
  }
  throw std::invalid_argument("unknown generator model '" + std::string(name) + "'");
}

std::string GeneratorSpec::describe() const {
  switch (model) {
    case GraphModel::UniformRandom:
      return "uniform(" + std::to_string(n) + "," + std::to_string(m) + "," +
             format_weight(w_min) + "," + format_weight(w_max) + ")";
    case GraphModel::GeometricRandom:
      return "geometric(" + std::to_string(n) + "," + format_weight(radius) + ")";
    case GraphModel::Grid:
      return "grid(" + std::to_string(rows) + "," + std::to_string(cols) + "," +
             format_weight(jitter) + ")";
  }
  return "?";
}

WeightedGraph generate(const GeneratorSpec& spec, std::uint64_t seed) {
  Rng rng(derive_seed(seed, static_cast<std::uint64_t>(spec.model) + 1));
  switch (spec.model) {
    case GraphModel::UniformRandom:
      return generate_uniform(spec, rng);
    case GraphModel::GeometricRandom:
      return generate_geometric(spec, rng);
    case GraphModel::Grid:
      return generate_grid(spec, rng);
  }
  throw std::invalid_argument("unknown generator model");
}

}  // namespace lightspan
