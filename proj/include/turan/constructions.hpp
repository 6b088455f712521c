#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

/// Hosts up to this many vertices get their freeness checked at construction
/// time; larger ones are checked by verify_freeness on request.
inline constexpr int kEagerFreenessLimit = 40;

struct ConstructionCertificate {
  MultipartiteGraph graph;
  /// Recounted from the graph, never taken from arithmetic alone.
  std::int64_t claimed_edges = 0;
  int k = 1;
  int r = 3;
  /// Set once the detector has run; true means no kK_r was found.
  std::optional<bool> free_verified;
};

/// ((n_1-k+1)K_1 u K_{k-1,n_2}) + K_{n_3..n_r}: V_1V_2 carries only the
/// complete bipartite graph between the first k-1 vertices of V_1 and V_2;
/// every other pair of parts is complete. Parts are sorted first.
/// Throws ParameterError unless r >= 3 and 1 <= k <= n_1.
[[nodiscard]] ConstructionCertificate extremal_construction(const HostSpec& spec);

/// ((n_1+n_2-k+1)K_1 u K_{k-1,n_3}) + n_4K_1 inside K_{n_1,n_2,n_3,n_4}:
/// the first k-1 vertices of V_1 then V_2 are joined to all of V_3, V_4 is
/// joined to everything else. Parts are used as given.
/// Throws ParameterError unless 1 <= k <= n_1+n_2+1.
[[nodiscard]] ConstructionCertificate four_partite_triangle_construction(const PartSizes& parts, int k);

/// Runs the detector if it has not run yet; returns the verdict.
bool verify_freeness(ConstructionCertificate& cert);

struct ProbeEntry {
  VertexId a;
  VertexId b;
  bool creates_packing = false;
};

/// Adds each missing host edge in turn and asks the detector for a kK_r.
[[nodiscard]] std::vector<ProbeEntry> maximality_probe(const ConstructionCertificate& cert);

}  // namespace turan
