#pragma once

#include <cstdint>
#include <random>

#include "turan/graph.hpp"

namespace turan {

/// Seeded random subgraphs of complete multipartite hosts. Only raw
/// mt19937_64 draws are used (its output sequence is fixed by the standard,
/// unlike std distributions), so samples are identical across platforms.
class SubgraphSampler {
 public:
  explicit SubgraphSampler(std::uint64_t seed) : rng_(seed) {}

  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return rng_() % n; }

  /// Draws a density in [0,100]% and keeps each host edge with it.
  MultipartiteGraph random_subgraph(const PartSizes& host);

  /// random_subgraph, then one random edge of the first remaining K_r is
  /// dropped until none is left.
  MultipartiteGraph random_kr_free_subgraph(const PartSizes& host);

 private:
  std::mt19937_64 rng_;
};

}  // namespace turan
