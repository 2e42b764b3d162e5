#pragma once

#include <span>
#include <vector>

#include "lightspan/graph.hpp"

namespace lightspan {

/// MST plus the Hamiltonian path drawn by its preorder traversal.
///
/// `order` is the preorder of the tree rooted at vertex 0, children visited
/// in ascending neighbor id. `pos[v]` is v's position along the path:
/// pos(order[0]) = 0 and pos(order[i+1]) = pos(order[i]) +
/// dist_T(order[i], order[i+1]). `length` is the total path weight L, which
/// always satisfies L <= 2 * tree_weight.
struct Backbone {
  std::vector<EdgeIndex> tree_edges;  // ascending edge index, n-1 entries
  std::vector<VertexId> order;
  std::vector<double> pos;            // indexed by vertex id
  double length = 0.0;
  double tree_weight = 0.0;
};

// Exact MST by sorted greedy edge scan over a union-find; ties broken by
// lowest edge index. Returns edge indices in ascending order. Throws
// std::runtime_error naming two unreachable vertices when g is disconnected.
std::vector<EdgeIndex> build_mst(const WeightedGraph& g);

// Requires tree to be a spanning tree of g (n-1 edges reaching every vertex).
Backbone build_backbone(const WeightedGraph& g, std::span<const EdgeIndex> tree);

}  // namespace lightspan
