#include "turan/sampling.hpp"

#include "turan/packing.hpp"

namespace turan {

MultipartiteGraph SubgraphSampler::random_subgraph(const PartSizes& host) {
  const auto density = below(101);
  GraphBuilder builder(host.sizes());
  const int n = host.total();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (builder.peek().part_of(a) == builder.peek().part_of(b)) continue;
      if (below(100) < density) builder.add_edge_flat(a, b);
    }
  }
  return std::move(builder).build();
}

MultipartiteGraph SubgraphSampler::random_kr_free_subgraph(const PartSizes& host) {
  auto g = random_subgraph(host);
  while (auto packing = find_packing(g, 1)) {
    const auto& v = packing->cliques.front().vertices;
    const auto pairs = v.size() * (v.size() - 1) / 2;
    auto pick = below(pairs);
    for (std::size_t a = 0; a < v.size(); ++a) {
      for (std::size_t b = a + 1; b < v.size(); ++b) {
        if (pick-- == 0) g = g.without_edge(v[a], v[b]);
      }
    }
  }
  return g;
}

}  // namespace turan
