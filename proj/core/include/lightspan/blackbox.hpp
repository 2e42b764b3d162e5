#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lightspan/graph.hpp"

namespace lightspan {

enum class BlackBoxKind { Unweighted, WeightedFast, Greedy };

/// Declared guarantees of a pluggable spanner algorithm, for reporting.
/// Stretch is always 2k-1: hop-based for Unweighted, weighted otherwise.
struct SpannerContract {
  BlackBoxKind kind = BlackBoxKind::WeightedFast;
  int k = 1;
  double stretch = 1.0;
  std::string size_class;

  static SpannerContract make(BlackBoxKind kind, int k);
};

// Randomized clustering spanner run with unit weights: every input edge gets
// a path of at most 2k-1 hops in the output. Tolerates parallel edges.
// Expected size O(k * n^{1+1/k}); deterministic for a fixed seed.
std::vector<EdgeIndex> unweighted_spanner(const WeightedGraph& g, int k, std::uint64_t seed);
std::vector<EdgeIndex> unweighted_spanner(const WeightedGraph& g,
                                          std::span<const EdgeIndex> subset, int k,
                                          std::uint64_t seed);

// Randomized clustering spanner (sampled cluster centers with probability
// n^{-1/k}, k-1 growth phases plus a joining phase): weighted stretch 2k-1
// per edge, expected size O(k * n^{1+1/k}), O(k*m) time.
std::vector<EdgeIndex> weighted_spanner(const WeightedGraph& g, int k, std::uint64_t seed);
std::vector<EdgeIndex> weighted_spanner(const WeightedGraph& g,
                                        std::span<const EdgeIndex> subset, int k,
                                        std::uint64_t seed);

// Classical greedy spanner: edges scanned in nondecreasing weight (ties by
// index), kept iff the current spanner distance exceeds t * w. Deterministic;
// size O(n^{1+1/k}) for t = 2k-1, but O(m * n^{1+1/k}) time. Parallel edges
// are reduced to the minimum-weight one first.
std::vector<EdgeIndex> greedy_spanner(const WeightedGraph& g, double t);
std::vector<EdgeIndex> greedy_spanner(const WeightedGraph& g,
                                      std::span<const EdgeIndex> subset, double t);

}  // namespace lightspan
