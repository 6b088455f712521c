#pragma once

#include <cstdint>
#include <vector>

#include "turan/graph.hpp"
#include "turan/packing.hpp"

namespace turan {

/// Transversal enumeration cap per call; beyond it checks raise BudgetError.
inline constexpr std::int64_t kTransversalBudget = 1'000'000;

struct WeightSummary {
  /// Sum of w(S) over every transversal S.
  std::int64_t total_weight = 0;
  std::int64_t clique_count_q = 0;
  /// pair_counts[i][j] = |E(V_i V_j)|, symmetric, zero diagonal.
  std::vector<std::vector<std::int64_t>> pair_counts;
  std::int64_t transversal_count = 0;
};

struct IdentityCheck {
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool equal = false;
};

struct InequalityCheck {
  std::int64_t q = 0;
  std::int64_t bound = 0;
  bool holds = false;
};

/// n_2 = n_3 = ... = n_r (part 0 unconstrained).
[[nodiscard]] bool is_almost_balanced(const std::vector<int>& sizes);

/// w(S) = |E(G[S])|. Throws ParameterError unless s has one vertex per part.
[[nodiscard]] int weight_of(const MultipartiteGraph& g, const Transversal& s);

/// Enumerates every transversal once. q is the number with w(S) = C(r,2).
[[nodiscard]] WeightSummary summarize_weights(const MultipartiteGraph& g);

/// lhs: sum of w(S) by enumeration; rhs: sum_{i<j} |E(V_iV_j)| prod_{l != i,j} n_l.
[[nodiscard]] IdentityCheck weight_identity_check(const MultipartiteGraph& g);

/// lhs: sum of |E(G \ S)| by enumeration;
/// rhs: sum_{i<j} |E(V_iV_j)| (n_i-1)(n_j-1) prod_{l != i,j} n_l.
[[nodiscard]] IdentityCheck deletion_identity_check(const MultipartiteGraph& g);

/// q >= sum_j |E(V_1V_j)| n_2^{r-2} + sum_{i,j != 1} |E(V_iV_j)| n_1 n_2^{r-3}
///      - n_1 n_2^{r-1} (C(r,2) - 1).
/// Requires r >= 3 and an almost-balanced shape, else RegimeError.
[[nodiscard]] InequalityCheck clique_count_lower_bound_check(const MultipartiteGraph& g);

/// sum of w(S) <= (C(r,2) - 1) n_1 n_2^{r-1} for a K_r-free almost-balanced g.
/// Throws PreconditionError if g contains K_r, RegimeError for other shapes.
[[nodiscard]] bool kr_free_weight_bound_check(const MultipartiteGraph& g);

}  // namespace turan
