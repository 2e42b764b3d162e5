#include "lightspan/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include <sstream>
#include <tuple>

namespace lightspan {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

WeightedGraph::WeightedGraph(std::size_t n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
  for (const Edge& e : edges_) {
    if (e.u >= n_ || e.v >= n_) throw std::invalid_argument("edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("self-loops are not allowed");
    if (!(e.w > 0.0) || !std::isfinite(e.w))
      throw std::invalid_argument("edge weights must be positive and finite");
  }
}

double WeightedGraph::total_weight() const {
  double sum = 0.0;
  for (const Edge& e : edges_) sum += e.w;
  return sum;
}

std::string format_weight(double w) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), w);
  return std::string(buf, res.ptr);
}

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::uint64_t parse_uint(std::string_view tok, std::size_t line, const char* what) {
  std::uint64_t value = 0;
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
    throw ParseError(line, std::string("malformed ") + what + " '" + std::string(tok) + "'");
  return value;
}

double parse_weight(std::string_view tok, std::size_t line) {
  double value = 0.0;
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
    throw ParseError(line, "malformed weight '" + std::string(tok) + "'");
  return value;
}

}  // namespace

WeightedGraph parse_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t n = 0, m = 0;
  std::vector<Edge> edges;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto toks = tokenize(line);
    if (toks.empty() || toks[0][0] == '#') continue;

    if (!have_header) {
      if (toks[0] != "p" || toks.size() != 3)
        throw ParseError(line_no, "expected header 'p <n> <m>'");
      n = parse_uint(toks[1], line_no, "vertex count");
      m = parse_uint(toks[2], line_no, "edge count");
      edges.reserve(m);
      have_header = true;
      continue;
    }

    if (toks[0] != "e")
      throw ParseError(line_no, "expected edge line 'e <u> <v> <w>'");
    if (toks.size() != 4)
      throw ParseError(line_no, "edge line needs exactly three fields");
    std::uint64_t u = parse_uint(toks[1], line_no, "vertex id");
    std::uint64_t v = parse_uint(toks[2], line_no, "vertex id");
    double w = parse_weight(toks[3], line_no);
    if (u >= n || v >= n)
      throw ParseError(line_no, "vertex id out of range (n = " + std::to_string(n) + ")");
    if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    if (!(w > 0.0) || !std::isfinite(w))
      throw ParseError(line_no, "non-positive or non-finite weight");
    if (edges.size() == m) throw ParseError(line_no, "more edges than declared in header");
    edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v), w});
  }

  if (!have_header) throw ParseError(line_no, "missing header 'p <n> <m>'");
  if (edges.size() != m)
    throw ParseError(line_no, "expected " + std::to_string(m) + " edges, got " +
                                  std::to_string(edges.size()));
  return WeightedGraph(n, std::move(edges));
}

WeightedGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

std::string serialize_graph(const WeightedGraph& g) {
  std::string out = "p " + std::to_string(g.vertex_count()) + " " +
                    std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges()) {
    out += "e ";
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += ' ';
    out += format_weight(e.w);
    out += '\n';
  }
  return out;
}

Simplified simplify(const WeightedGraph& g) {
  // Best edge per unordered endpoint pair; ties go to the lowest index.
  std::map<std::pair<VertexId, VertexId>, EdgeIndex> best;
  for (EdgeIndex i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    auto key = std::minmax(e.u, e.v);
    auto [it, inserted] = best.try_emplace({key.first, key.second}, i);
    if (!inserted && g.edge(it->second).w > e.w) it->second = i;
  }
  std::vector<EdgeIndex> keep;
  keep.reserve(best.size());
  for (const auto& [pair, idx] : best) keep.push_back(idx);
  std::sort(keep.begin(), keep.end());

  std::vector<Edge> edges;
  edges.reserve(keep.size());
  for (EdgeIndex i : keep) edges.push_back(g.edge(i));
  return {WeightedGraph(g.vertex_count(), std::move(edges)), std::move(keep)};
}

std::vector<EdgeIndex> match_subgraph(const WeightedGraph& g, const WeightedGraph& h) {
  if (h.vertex_count() > g.vertex_count())
    throw std::runtime_error("subgraph has more vertices than the graph");
  std::map<std::tuple<VertexId, VertexId, double>, std::vector<EdgeIndex>> pool;
  for (EdgeIndex i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    auto key = std::minmax(e.u, e.v);
    pool[{key.first, key.second, e.w}].push_back(i);
  }
  std::vector<EdgeIndex> matched;
  matched.reserve(h.edge_count());
  for (const Edge& e : h.edges()) {
    auto key = std::minmax(e.u, e.v);
    auto it = pool.find({key.first, key.second, e.w});
    if (it == pool.end() || it->second.empty())
      throw std::runtime_error("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                               "," + format_weight(e.w) + ") is not an edge of the graph");
    matched.push_back(it->second.back());
    it->second.pop_back();
  }
  std::sort(matched.begin(), matched.end());
  return matched;
}

bool is_connected(const WeightedGraph& g) {
  if (g.vertex_count() <= 1) return true;
  Csr adj(g);
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (const auto& arc : adj.arcs(v)) {
      if (!seen[arc.to]) {
        seen[arc.to] = 1;
        ++reached;
        stack.push_back(arc.to);
      }
    }
  }
  return reached == g.vertex_count();
}

WeightedGraph subgraph(const WeightedGraph& g, std::span<const EdgeIndex> keep) {
  std::vector<Edge> edges;
  edges.reserve(keep.size());
  for (EdgeIndex i : keep) edges.push_back(g.edge(i));
  return WeightedGraph(g.vertex_count(), std::move(edges));
}

Csr::Csr(const WeightedGraph& g, std::span<const EdgeIndex> subset) {
  offsets_.assign(g.vertex_count() + 1, 0);
  for (EdgeIndex i : subset) {
    const Edge& e = g.edge(i);
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::size_t v = 1; v < offsets_.size(); ++v) offsets_[v] += offsets_[v - 1];
  arcs_.resize(offsets_.back());
  std::vector<std::uint32_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (EdgeIndex i : subset) {
    const Edge& e = g.edge(i);
    arcs_[cursor[e.u]++] = {e.v, i};
    arcs_[cursor[e.v]++] = {e.u, i};
  }
}

Csr::Csr(const WeightedGraph& g) {
  std::vector<EdgeIndex> all(g.edge_count());
  for (EdgeIndex i = 0; i < all.size(); ++i) all[i] = i;
  *this = Csr(g, all);
}

}  // namespace lightspan
