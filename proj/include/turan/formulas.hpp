#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "turan/graph.hpp"

namespace turan {

enum class Validity {
  exact_theorem,
  exact_trivial_range,
  lower_bound_only,
};

/// "exact-theorem", "exact-trivial-range", "lower-bound-only"
[[nodiscard]] std::string_view to_string(Validity v) noexcept;
[[nodiscard]] bool is_exact(Validity v) noexcept;

struct FormulaResult {
  std::int64_t value = 0;
  Validity validity = Validity::exact_theorem;
  /// The (sorted) instance actually evaluated.
  Instance canonical_spec;
  /// Free-form qualifier, e.g. "bipartite".
  std::string note;
};

/// sum_{i<j} n_i n_j - n_1 n_2 + n_2 (k-1), evaluated on the tuple as given.
/// Throws ArithmeticError on 64-bit overflow.
[[nodiscard]] std::int64_t h_k(const PartSizes& parts, int k);

/// Edge count of K_{n_1..n_r}, overflow-checked.
[[nodiscard]] std::int64_t host_edge_count(const PartSizes& parts);

/// ex(K_{n_1..n_r}, kK_r). Sorts the parts first. Two parts delegate to
/// bipartite_matching_number; k > n_1 yields the whole host.
[[nodiscard]] FormulaResult turan_number(const HostSpec& spec);

/// ex(K_{m,n}, kK_2) = max(m,n)(k-1) for k <= min(m,n).
[[nodiscard]] FormulaResult bipartite_matching_number(int m, int n, int k);

/// ex(K_{n_1..n_l}, kK_2) = (k-1)(n_2 + ... + n_l) for 1 <= k <= n_1.
///
/// Outside that range the result is tagged lower-bound-only, unless k exceeds
/// the host's maximum matching, in which case the whole host is returned.
[[nodiscard]] FormulaResult multipartite_matching_number(const PartSizes& parts, int k);

/// (n_1+n_2+n_3) n_4 + (k-1) n_3, a lower bound for ex(K_{n_1..n_4}, kK_3).
/// Evaluated on the parts as given.
[[nodiscard]] FormulaResult four_partite_triangle_lower_bound(const PartSizes& parts, int k);

/// Best available formula for an instance: turan_number when r spans all
/// parts, the matching formula for r = 2, the 4-partite bound for r = 3 in 4
/// parts. Returns false when no formula covers the instance.
[[nodiscard]] bool formula_for(const Instance& instance, FormulaResult& out);

}  // namespace turan
