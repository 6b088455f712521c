#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

/// An r-clique of a multipartite graph; vertices sorted by part, one per part.
/// In an r-partite host every K_r is a transversal.
struct Clique {
  std::vector<VertexId> vertices;

  friend auto operator<=>(const Clique&, const Clique&) = default;
};

using Transversal = Clique;

/// k pairwise vertex-disjoint cliques.
struct CliquePacking {
  std::vector<Clique> cliques;

  friend bool operator==(const CliquePacking&, const CliquePacking&) = default;
};

/// Calls `visit` for every r-clique in lexicographic order; `visit` returns
/// false to stop early. r defaults to the number of parts.
void for_each_clique(const MultipartiteGraph& g, int r, const std::function<bool(const Clique&)>& visit);
void for_each_transversal_clique(const MultipartiteGraph& g, const std::function<bool(const Clique&)>& visit);

[[nodiscard]] std::vector<Clique> enumerate_transversal_cliques(const MultipartiteGraph& g);
[[nodiscard]] std::vector<Clique> enumerate_cliques(const MultipartiteGraph& g, int r);

/// The clique count q. Never short-circuits.
[[nodiscard]] std::uint64_t count_cliques(const MultipartiteGraph& g);
[[nodiscard]] std::uint64_t count_cliques(const MultipartiteGraph& g, int r);

/// k disjoint transversal cliques, or nullopt. Deterministic.
[[nodiscard]] std::optional<CliquePacking> find_packing(const MultipartiteGraph& g, int k);
/// General form: K_r's may span any r of the parts.
[[nodiscard]] std::optional<CliquePacking> find_packing(const MultipartiteGraph& g, int k, int r);

[[nodiscard]] bool contains_packing(const MultipartiteGraph& g, int k);
[[nodiscard]] bool contains_packing(const MultipartiteGraph& g, int k, int r);

/// Independent re-check: k cliques of size r, each complete in g, pairwise
/// disjoint, one vertex per part within a clique.
[[nodiscard]] bool is_valid_packing(const MultipartiteGraph& g, const CliquePacking& packing, int k, int r);

/// One line per clique, vertices as "part:index" separated by spaces.
[[nodiscard]] std::string to_text(const CliquePacking& packing);
[[nodiscard]] CliquePacking parse_packing(std::string_view text);

}  // namespace turan
