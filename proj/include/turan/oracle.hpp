#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "turan/error.hpp"
#include "turan/formulas.hpp"
#include "turan/graph.hpp"

namespace turan {

/// Host edges are tracked in one 64-bit word.
inline constexpr int kMaxOracleEdges = 64;

struct OracleBudget {
  std::uint64_t max_nodes = 10'000'000;
  std::chrono::milliseconds max_time{60'000};
};

struct OracleOptions {
  OracleBudget budget;
  /// Worker threads for the branch-and-bound; 1 runs sequentially.
  int threads = 1;
  /// Skip search nodes whose within-part relabelling was already visited.
  bool symmetry = true;
  std::size_t seen_capacity = std::size_t{1} << 20;
  /// Start from the best known construction instead of an empty incumbent.
  bool seed_incumbent = true;
};

struct ExtremalResult {
  /// Canonical (sorted) instance; the witness lives on this host.
  Instance instance;
  std::int64_t max_edges = 0;
  MultipartiteGraph witness;
  std::uint64_t nodes_explored = 0;
  std::chrono::duration<double, std::milli> elapsed{};
};

/// Raised when the node or time budget runs out. Carries the best feasible
/// edge count found and the upper bound still unrefuted at that point.
class BudgetExhausted : public Error {
 public:
  BudgetExhausted(Instance instance, std::int64_t lower, std::int64_t upper, std::uint64_t nodes);

  [[nodiscard]] const Instance& instance() const noexcept { return instance_; }
  [[nodiscard]] std::int64_t lower_bound() const noexcept { return lower_; }
  [[nodiscard]] std::int64_t upper_bound() const noexcept { return upper_; }
  [[nodiscard]] std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  Instance instance_;
  std::int64_t lower_;
  std::int64_t upper_;
  std::uint64_t nodes_;
};

/// Exact ex(K_{n_1..n_r}, kK_r) by branch-and-bound over edge deletions.
[[nodiscard]] ExtremalResult extremal_number(const HostSpec& spec, const OracleOptions& options = {});

/// Exact ex(K_{n_1..n_l}, kK_r) for r <= l, where a K_r may use any r parts.
[[nodiscard]] ExtremalResult extremal_number_general(const PartSizes& parts, int r, int k,
                                                     const OracleOptions& options = {});

[[nodiscard]] ExtremalResult solve_instance(const Instance& instance, const OracleOptions& options = {});

struct GridRow {
  Instance instance;
  std::optional<FormulaResult> formula;
  std::optional<ExtremalResult> oracle;
  /// Non-empty when the oracle failed (budget, capacity).
  std::string error;
  /// Exact validities need equality, lower-bound-only needs oracle >= value.
  bool match = false;
};

using InstanceSolver = std::function<ExtremalResult(const Instance&)>;

/// Oracle-vs-formula comparison per grid point. Errors are recorded in-row
/// and never abort the sweep. Rows come back in grid order for any `jobs`.
[[nodiscard]] std::vector<GridRow> verify_formula_grid(std::span<const Instance> grid, const InstanceSolver& solve,
                                                       int jobs = 1);
[[nodiscard]] std::vector<GridRow> verify_formula_grid(std::span<const Instance> grid,
                                                       const OracleOptions& options = {}, int jobs = 1);

/// Sorted r-part tuples with parts in [1, max_part] and 1 <= k <= n_1.
[[nodiscard]] std::vector<Instance> theorem_grid(int r, int max_part);
/// Sorted part tuples, r = 2 forbidden matchings, 1 <= k <= n_1.
[[nodiscard]] std::vector<Instance> matching_grid(int part_count, int max_part);

/// Runs fn(i) for i in [0, n) on up to `jobs` threads.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn);

}  // namespace turan
