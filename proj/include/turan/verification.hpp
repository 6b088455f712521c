#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "turan/graph.hpp"
#include "turan/oracle.hpp"

namespace turan {

/// Deterministic text report of a check run; no timings, so equal seeds give
/// byte-identical text.
struct SuiteReport {
  std::string text;
  std::size_t checks = 0;
  std::size_t failures = 0;
  /// Graph text of every failing instance, in order.
  std::vector<std::string> failing_instances;

  [[nodiscard]] bool passed() const noexcept { return failures == 0; }
};

/// Sorted 3-part hosts up to (4,4,4) and 4-part hosts up to (3,3,3,3).
[[nodiscard]] std::vector<PartSizes> identity_hosts();
/// The subset of identity_hosts() with n_2 = ... = n_r.
[[nodiscard]] std::vector<PartSizes> almost_balanced_hosts();

/// Weight and deletion identities on `samples` random subgraphs (hosts taken
/// round-robin). Two checks per sample.
[[nodiscard]] SuiteReport run_identity_suite(std::uint64_t seed, std::size_t samples);

/// Clique-count lower bound on `samples` random almost-balanced subgraphs
/// and the K_r-free weight bound on `samples` random K_r-free ones.
[[nodiscard]] SuiteReport run_inequality_suite(std::uint64_t seed, std::size_t samples);

/// One line per grid row: instance, formula, oracle, verdict. No timings.
[[nodiscard]] SuiteReport grid_report(const std::vector<GridRow>& rows);

}  // namespace turan
