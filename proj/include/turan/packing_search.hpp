#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace turan::detail {

/// Flat list of equal-size cliques over vertices 0..vertex_count-1, each vertex
/// tagged with its part. Shared by the packing detector and the oracle.
class CliqueTable {
 public:
  CliqueTable() = default;
  CliqueTable(std::vector<int> vertex_part, int part_count, int clique_size);

  void add(std::span<const int> members);

  [[nodiscard]] std::size_t size() const noexcept { return members_.size() / static_cast<std::size_t>(clique_size_); }
  [[nodiscard]] std::span<const int> members(std::size_t clique) const noexcept {
    return {members_.data() + clique * static_cast<std::size_t>(clique_size_), static_cast<std::size_t>(clique_size_)};
  }
  [[nodiscard]] int clique_size() const noexcept { return clique_size_; }
  [[nodiscard]] int part_count() const noexcept { return part_count_; }
  [[nodiscard]] int vertex_count() const noexcept { return static_cast<int>(vertex_part_.size()); }
  [[nodiscard]] int part_of(int v) const noexcept { return vertex_part_[static_cast<std::size_t>(v)]; }

 private:
  std::vector<int> vertex_part_;
  int part_count_ = 0;
  int clique_size_ = 1;
  std::vector<int> members_;
};

/// Looks for `k` pairwise vertex-disjoint cliques among `candidates` (indices
/// into `table`). Branches on the vertex covered by the fewest candidates:
/// either one of its cliques is taken, or the vertex stays unused. Candidate
/// order is the tie-break everywhere, so the answer is a pure function of the
/// inputs. Returns the chosen indices in the order they were picked.
[[nodiscard]] std::optional<std::vector<std::uint32_t>> find_disjoint_cliques(
    const CliqueTable& table, std::vector<std::uint32_t> candidates, int k);

}  // namespace turan::detail
