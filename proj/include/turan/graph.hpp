#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace turan {

struct VertexId {
  int part = 0;
  int index = 0;

  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

/// Ordered list of positive part cardinalities (n_1, ..., n_r).
///
/// A single part is accepted so that join/union operands can be described;
/// problem instances (HostSpec, Instance) require at least two parts.
class PartSizes {
 public:
  PartSizes() = default;
  explicit PartSizes(std::vector<int> sizes);
  PartSizes(std::initializer_list<int> sizes);

  [[nodiscard]] const std::vector<int>& sizes() const noexcept { return sizes_; }
  [[nodiscard]] int count() const noexcept { return static_cast<int>(sizes_.size()); }
  [[nodiscard]] int operator[](int part) const { return sizes_.at(static_cast<std::size_t>(part)); }
  [[nodiscard]] int total() const noexcept;

  /// Sorted non-decreasing copy.
  [[nodiscard]] PartSizes canonical() const;
  [[nodiscard]] bool is_canonical() const noexcept;

  /// "2,2,3"
  [[nodiscard]] std::string to_string() const;
  static PartSizes parse(std::string_view text);

  friend bool operator==(const PartSizes&, const PartSizes&) = default;

 private:
  std::vector<int> sizes_;
};

/// A Turán problem instance ex(K_{n_1..n_r}, kK_r) where r is the number of parts.
class HostSpec {
 public:
  HostSpec(PartSizes parts, int k);

  [[nodiscard]] const PartSizes& parts() const noexcept { return parts_; }
  [[nodiscard]] int r() const noexcept { return parts_.count(); }
  [[nodiscard]] int k() const noexcept { return k_; }
  [[nodiscard]] HostSpec canonical() const { return HostSpec(parts_.canonical(), k_); }

  friend bool operator==(const HostSpec&, const HostSpec&) = default;

 private:
  PartSizes parts_;
  int k_;
};

/// Forbidding k disjoint K_r inside an l-partite host, 2 <= r <= l.
/// With r == l this is the same problem a HostSpec names.
struct Instance {
  PartSizes parts;
  int r = 0;
  int k = 0;

  Instance() = default;
  Instance(PartSizes parts, int r, int k);
  explicit Instance(const HostSpec& spec) : Instance(spec.parts(), spec.r(), spec.k()) {}

  [[nodiscard]] bool spans_all_parts() const noexcept { return r == parts.count(); }
  [[nodiscard]] Instance canonical() const { return Instance(parts.canonical(), r, k); }
  /// "parts=2,2,2 r=3 k=1"
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Sum over i<j of n_i n_j.
[[nodiscard]] std::int64_t complete_edge_count(std::span<const int> sizes);

/// Immutable r-partite graph. Vertices are (part, index); adjacency is one
/// bit row per vertex over the flat range, flat id = offset(part) + index.
/// Parts may have size 0 after vertex deletion.
class MultipartiteGraph {
 public:
  MultipartiteGraph() = default;

  static MultipartiteGraph edgeless(std::vector<int> part_sizes);

  [[nodiscard]] int part_count() const noexcept { return static_cast<int>(sizes_.size()); }
  [[nodiscard]] int part_size(int part) const { return sizes_.at(static_cast<std::size_t>(part)); }
  [[nodiscard]] const std::vector<int>& part_sizes() const noexcept { return sizes_; }
  [[nodiscard]] int part_offset(int part) const { return offsets_.at(static_cast<std::size_t>(part)); }
  [[nodiscard]] int vertex_count() const noexcept { return static_cast<int>(part_of_.size()); }
  [[nodiscard]] std::int64_t edge_count() const noexcept { return edge_count_; }

  [[nodiscard]] bool contains(VertexId v) const noexcept;
  /// Throws ParameterError for an unknown vertex.
  [[nodiscard]] int flat(VertexId v) const;
  [[nodiscard]] VertexId vertex(int flat_id) const;
  [[nodiscard]] int part_of(int flat_id) const { return part_of_[static_cast<std::size_t>(flat_id)]; }

  [[nodiscard]] bool adjacent(VertexId a, VertexId b) const { return adjacent_flat(flat(a), flat(b)); }
  [[nodiscard]] bool adjacent_flat(int a, int b) const noexcept {
    return (row(a)[static_cast<std::size_t>(b) / 64] >> (static_cast<unsigned>(b) % 64)) & 1U;
  }
  /// Adjacency bit row of a vertex; words_per_row() words.
  [[nodiscard]] std::span<const std::uint64_t> row(int flat_id) const noexcept {
    return {adjacency_.data() + static_cast<std::size_t>(flat_id) * words_, words_};
  }
  [[nodiscard]] std::size_t words_per_row() const noexcept { return words_; }
  [[nodiscard]] int degree(int flat_id) const noexcept;

  /// Every edge once, endpoints ordered, list sorted lexicographically.
  [[nodiscard]] std::vector<std::pair<VertexId, VertexId>> edges() const;

  [[nodiscard]] MultipartiteGraph with_edge(VertexId a, VertexId b) const;
  [[nodiscard]] MultipartiteGraph without_edge(VertexId a, VertexId b) const;

  /// Recomputes every structural invariant (partite, symmetric, irreflexive,
  /// cached count). Used by tests.
  [[nodiscard]] bool check_invariants() const;

  friend bool operator==(const MultipartiteGraph&, const MultipartiteGraph&) = default;

 private:
  friend class GraphBuilder;
  explicit MultipartiteGraph(std::vector<int> part_sizes);

  void set_bit(int a, int b, bool value);

  std::vector<int> sizes_;
  std::vector<int> offsets_;
  std::vector<int> part_of_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> adjacency_;
  std::int64_t edge_count_ = 0;
};

/// Accumulates edges and produces an immutable MultipartiteGraph.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::vector<int> part_sizes);
  explicit GraphBuilder(MultipartiteGraph start);

  /// Throws PartitenessError for a same-part pair, ParameterError for unknown ids.
  GraphBuilder& add_edge(VertexId a, VertexId b);
  GraphBuilder& remove_edge(VertexId a, VertexId b);
  GraphBuilder& add_edge_flat(int a, int b);
  [[nodiscard]] bool has_edge(VertexId a, VertexId b) const { return graph_.adjacent(a, b); }
  [[nodiscard]] const MultipartiteGraph& peek() const noexcept { return graph_; }

  [[nodiscard]] MultipartiteGraph build() && { return std::move(graph_); }
  [[nodiscard]] MultipartiteGraph build() const& { return graph_; }

 private:
  MultipartiteGraph graph_;
};

[[nodiscard]] MultipartiteGraph complete_multipartite(const PartSizes& parts);

/// Parts of g followed by parts of h; adds every g-h pair.
[[nodiscard]] MultipartiteGraph join(const MultipartiteGraph& g, const MultipartiteGraph& h);

/// Target part index for every part of each operand.
struct PartAlignment {
  std::vector<int> first;
  std::vector<int> second;
};

/// Vertex-disjoint union with parts merged per `align`. Within a target part
/// the vertices of g come first (in source part order), then those of h.
[[nodiscard]] MultipartiteGraph disjoint_union(const MultipartiteGraph& g, const MultipartiteGraph& h,
                                               const PartAlignment& align);

/// G \ S. Parts keep their index even when emptied.
[[nodiscard]] MultipartiteGraph delete_vertices(const MultipartiteGraph& g, std::span<const VertexId> removed);

/// G[S]. Parts keep their index; unselected parts become empty.
[[nodiscard]] MultipartiteGraph induced_subgraph(const MultipartiteGraph& g, std::span<const VertexId> kept);

/// Drops empty parts.
[[nodiscard]] MultipartiteGraph compact(const MultipartiteGraph& g);

/// |E(V_i V_j)|. Throws ParameterError when i == j.
[[nodiscard]] std::int64_t pair_edge_count(const MultipartiteGraph& g, int i, int j);

/// True when every edge of g is also an edge of host and the part shapes agree.
[[nodiscard]] bool is_subgraph_of(const MultipartiteGraph& g, const MultipartiteGraph& host);

}  // namespace turan
