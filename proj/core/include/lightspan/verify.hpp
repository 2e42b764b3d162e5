#pragma once

#include <span>
#include <vector>

#include "lightspan/graph.hpp"

namespace lightspan {

// Path weights are sums of at most n positive doubles; ratios above the bound
// by no more than this relative guard are reported as borderline, not as
// violations.
inline constexpr double kStretchGuard = 0x1.0p-40;

struct StretchViolation {
  EdgeIndex edge;
  double observed;  // dist ratio; +inf when the endpoints are disconnected
  double bound;
};

struct VerificationReport {
  double max_observed_stretch = 0.0;
  std::vector<StretchViolation> violations;
  std::size_t borderline = 0;  // observed in (bound, bound*(1+guard)]
  std::size_t checked_edges = 0;
  std::size_t edge_count = 0;  // |h| after dedup
  double total_weight = 0.0;   // w(h)
  double lightness = 0.0;      // w(h) / w(MST(g)); NaN when g is disconnected
  double elapsed_s = 0.0;

  bool passed() const { return violations.empty(); }
};

// Exact per-edge stretch check: for every edge e=(u,v) of g, requires
// dist_h(u,v) <= bound * w(e), computed by Dijkstra runs in the subgraph from
// every vertex incident to a checked edge. No floating tolerance beyond the
// borderline guard above. With all_pairs set (n <= 512 only), additionally
// checks dist_h(u,v) <= bound * dist_g(u,v) over all vertex pairs.
VerificationReport verify_stretch(const WeightedGraph& g, std::span<const EdgeIndex> h,
                                  double bound, bool all_pairs = false);

// Hop-based variant: every edge of g must have a path of at most 2k-1 edges
// in the subgraph. Observed values are hop counts.
VerificationReport verify_hop_stretch(const WeightedGraph& g, std::span<const EdgeIndex> h,
                                      int k);

struct Measurement {
  std::size_t edge_count = 0;
  double total_weight = 0.0;
  double lightness = 0.0;
};

// Size, weight, and lightness of the subgraph; lightness is taken against a
// freshly built exact MST of g.
Measurement measure(const WeightedGraph& g, std::span<const EdgeIndex> h);

}  // namespace lightspan
