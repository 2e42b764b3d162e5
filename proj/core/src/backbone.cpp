#include "lightspan/backbone.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "lightspan/union_find.hpp"

namespace lightspan {

std::vector<EdgeIndex> build_mst(const WeightedGraph& g) {
  std::vector<EdgeIndex> by_weight(g.edge_count());
  std::iota(by_weight.begin(), by_weight.end(), 0);
  std::sort(by_weight.begin(), by_weight.end(), [&](EdgeIndex a, EdgeIndex b) {
    const Edge& ea = g.edge(a);
    const Edge& eb = g.edge(b);
    return ea.w != eb.w ? ea.w < eb.w : a < b;
  });

  UnionFind uf(g.vertex_count());
  std::vector<EdgeIndex> tree;
  tree.reserve(g.vertex_count() > 0 ? g.vertex_count() - 1 : 0);
  for (EdgeIndex i : by_weight) {
    const Edge& e = g.edge(i);
    if (uf.unite(e.u, e.v)) tree.push_back(i);
  }

  if (g.vertex_count() > 0 && tree.size() + 1 != g.vertex_count()) {
    VertexId a = 0;
    VertexId root = uf.find(0);
    for (VertexId v = 1; v < g.vertex_count(); ++v) {
      if (uf.find(v) != root) {
        throw std::runtime_error("graph is disconnected: no path between vertex " +
                                 std::to_string(a) + " and vertex " + std::to_string(v));
      }
    }
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

Backbone build_backbone(const WeightedGraph& g, std::span<const EdgeIndex> tree) {
  const std::size_t n = g.vertex_count();
  Backbone b;
  b.tree_edges.assign(tree.begin(), tree.end());
  std::sort(b.tree_edges.begin(), b.tree_edges.end());
  for (EdgeIndex i : b.tree_edges) b.tree_weight += g.edge(i).w;

  if (n == 0) return b;
  if (b.tree_edges.size() + 1 != n)
    throw std::invalid_argument("tree must have exactly n-1 edges");

  Csr adj(g, b.tree_edges);

  // Iterative preorder from vertex 0; arcs are pre-sorted by neighbor id and
  // pushed in reverse so the smallest id pops first.
  std::vector<std::vector<Csr::Arc>> sorted_arcs(n);
  for (VertexId v = 0; v < n; ++v) {
    auto arcs = adj.arcs(v);
    sorted_arcs[v].assign(arcs.begin(), arcs.end());
    std::sort(sorted_arcs[v].begin(), sorted_arcs[v].end(),
              [](const Csr::Arc& a, const Csr::Arc& c) { return a.to < c.to; });
  }

  std::vector<double> depth(n, 0.0);       // weighted depth from the root
  std::vector<VertexId> parent(n, 0);
  std::vector<char> seen(n, 0);
  b.order.reserve(n);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    b.order.push_back(v);
    const auto& arcs = sorted_arcs[v];
    for (auto it = arcs.rbegin(); it != arcs.rend(); ++it) {
      if (seen[it->to]) continue;
      seen[it->to] = 1;
      parent[it->to] = v;
      depth[it->to] = depth[v] + g.edge(it->edge).w;
      stack.push_back(it->to);
    }
  }
  if (b.order.size() != n)
    throw std::invalid_argument("tree does not span the graph");

  // For consecutive preorder vertices, the previous vertex lies in the
  // subtree of the current vertex's parent, so the tree distance is
  // depth(prev) + depth(cur) - 2 * depth(parent(cur)).
  b.pos.assign(n, 0.0);
  for (std::size_t i = 1; i < n; ++i) {
    VertexId prev = b.order[i - 1];
    VertexId cur = b.order[i];
    double d = depth[prev] + depth[cur] - 2.0 * depth[parent[cur]];
    b.pos[cur] = b.pos[prev] + d;
  }
  b.length = b.pos[b.order.back()];

  // A preorder walk traverses each tree edge at most twice; allow a hair of
  // float slack on the comparison.
  if (b.length > 2.0 * b.tree_weight * (1.0 + 1e-9))
    throw std::logic_error("backbone invariant violated: L > 2 * w(T)");
  return b;
}

}  // namespace lightspan
