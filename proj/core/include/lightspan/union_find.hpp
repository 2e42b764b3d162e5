#pragma once

#include <cstdint>
#include <vector>

#include "lightspan/graph.hpp"

namespace lightspan {

/// Disjoint sets with path compression and union by rank (amortized
/// inverse-Ackermann per operation). Operation and parent-hop counters back
/// the streaming instrumentation.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), rank_(n, 0), components_(n) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<VertexId>(i);
  }

  VertexId find(VertexId x) {
    ++finds_;
    VertexId root = x;
    while (parent_[root] != root) {
      root = parent_[root];
      ++hops_;
    }
    while (parent_[x] != root) {
      VertexId next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }

  // Returns false when a and b were already in the same set.
  bool unite(VertexId a, VertexId b) {
    VertexId ra = find(a), rb = find(b);
    if (ra == rb) return false;
    ++unions_;
    if (rank_[ra] < rank_[rb]) std::swap(ra, rb);
    parent_[rb] = ra;
    if (rank_[ra] == rank_[rb]) ++rank_[ra];
    --components_;
    return true;
  }

  std::size_t size() const { return parent_.size(); }
  std::size_t component_count() const { return components_; }

  std::uint64_t find_ops() const { return finds_; }
  std::uint64_t union_ops() const { return unions_; }
  std::uint64_t parent_hops() const { return hops_; }

 private:
  std::vector<VertexId> parent_;
  std::vector<std::uint8_t> rank_;
  std::size_t components_;
  std::uint64_t finds_ = 0;
  std::uint64_t unions_ = 0;
  std::uint64_t hops_ = 0;
};

// Table-level inverse Ackermann; exact enough for amortized accounting.
inline int inverse_ackermann(std::size_t n) {
  if (n < 8) return 1;
  if (n < 64) return 2;
  if (n < 65536) return 3;
  return 4;
}

}  // namespace lightspan
