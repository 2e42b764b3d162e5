#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lightspan {

using VertexId = std::uint32_t;
using EdgeIndex = std::uint32_t;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  double w = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Undirected multigraph with positive finite real edge weights.
///
/// Vertices are dense ids 0..n-1. Parallel edges are permitted; self-loops
/// are not. Edge order is preserved from construction, and an EdgeIndex is a
/// stable handle into it. Instances are immutable after construction and safe
/// to share across threads read-only.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  WeightedGraph(std::size_t n, std::vector<Edge> edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const Edge& edge(EdgeIndex i) const { return edges_[i]; }
  std::span<const Edge> edges() const { return edges_; }
  double total_weight() const;

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

// Edge-list text format:
//   p <n> <m>
//   e <u> <v> <w>     (m lines)
// '#' starts a comment line; tokens are whitespace-separated; LF endings.
WeightedGraph parse_graph(std::istream& in);
WeightedGraph parse_graph(std::string_view text);

// Serializes so that parse_graph(serialize_graph(g)) == g edge-for-edge.
// Weights are printed with shortest round-trip precision.
std::string serialize_graph(const WeightedGraph& g);

// Shortest decimal form that parses back to exactly the same double.
std::string format_weight(double w);

struct Simplified {
  WeightedGraph graph;
  // edge_map[i] = index in the source graph of simplified edge i.
  std::vector<EdgeIndex> edge_map;
};

// Keeps the minimum-weight edge of every parallel group (ties broken by
// lowest edge index). Output edges are ordered by their source index.
Simplified simplify(const WeightedGraph& g);

// Matches every edge of h against an unused g edge with identical endpoints
// and weight; returns the matched indices into g (h as a sub-multiset of g).
// Throws std::runtime_error when some h edge has no match left.
std::vector<EdgeIndex> match_subgraph(const WeightedGraph& g, const WeightedGraph& h);

bool is_connected(const WeightedGraph& g);

// Builds the subgraph of g induced by keeping the given edge subset.
WeightedGraph subgraph(const WeightedGraph& g, std::span<const EdgeIndex> keep);

/// Compact adjacency over an edge subset; stores both directions of every
/// edge. Arcs of a vertex appear in subset order.
class Csr {
 public:
  struct Arc {
    VertexId to;
    EdgeIndex edge;
  };

  Csr() = default;
  Csr(const WeightedGraph& g, std::span<const EdgeIndex> subset);
  explicit Csr(const WeightedGraph& g);

  std::span<const Arc> arcs(VertexId v) const {
    return {arcs_.data() + offsets_[v], arcs_.data() + offsets_[v + 1]};
  }

 private:
  std::vector<std::uint32_t> offsets_;
  std::vector<Arc> arcs_;
};

}  // namespace lightspan
