#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "lightspan/graph.hpp"

namespace lightspan {

enum class GraphModel { UniformRandom, GeometricRandom, Grid };

/// Deterministic test-corpus generators. All models produce connected graphs
/// with positive weights; connectivity is enforced by laying down a random
/// spanning tree before any other edges.
struct GeneratorSpec {
  GraphModel model = GraphModel::UniformRandom;

  // uniform(n, m, w_min, w_max)
  std::size_t n = 0;
  std::size_t m = 0;
  double w_min = 1.0;
  double w_max = 1.0;

  // geometric(n, radius): points in the unit square, Euclidean weights.
  double radius = 0.0;

  // grid(rows, cols, jitter): weights 1 + jitter * U[0,1).
  std::size_t rows = 0;
  std::size_t cols = 0;
  double jitter = 0.0;

  static GeneratorSpec uniform(std::size_t n, std::size_t m, double w_min, double w_max);
  static GeneratorSpec geometric(std::size_t n, double radius);
  static GeneratorSpec grid(std::size_t rows, std::size_t cols, double jitter);

  // Accepts "uniform(n,m,wmin,wmax)", "geometric(n,radius)",
  // "grid(rows,cols,jitter)".
  static GeneratorSpec parse(std::string_view text);
  std::string describe() const;
};

// Deterministic for fixed (spec, seed): equal inputs give byte-identical
// serializations. Throws std::invalid_argument on infeasible parameters.
WeightedGraph generate(const GeneratorSpec& spec, std::uint64_t seed);

}  // namespace lightspan
